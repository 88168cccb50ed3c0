#pragma once

/**
 * @file
 * Dense complex vectors and matrices for the small Hilbert spaces used
 * throughout the library (dimension up to a few dozen).
 *
 * Storage is row-major. Nothing here compares reals against a hidden
 * tolerance; callers pass tolerances explicitly.
 */

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

namespace sicmub {

using Complex = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

class ComplexVector {
  public:
    ComplexVector() = default;
    explicit ComplexVector(std::size_t dim) : entries_(dim) {}
    explicit ComplexVector(std::vector<Complex> entries)
        : entries_(std::move(entries)) {}
    ComplexVector(std::initializer_list<Complex> entries) : entries_(entries) {}

    /// Computational basis vector |k> in dimension dim.
    static ComplexVector basis(std::size_t dim, std::size_t k);

    [[nodiscard]] std::size_t dim() const noexcept { return entries_.size(); }
    [[nodiscard]] Complex &operator[](std::size_t i) { return entries_[i]; }
    [[nodiscard]] const Complex &operator[](std::size_t i) const {
        return entries_[i];
    }
    [[nodiscard]] std::span<const Complex> entries() const noexcept {
        return entries_;
    }
    [[nodiscard]] std::span<Complex> entries() noexcept { return entries_; }

    [[nodiscard]] double norm() const;
    [[nodiscard]] ComplexVector normalized() const;

    ComplexVector &operator+=(const ComplexVector &rhs);
    ComplexVector &operator-=(const ComplexVector &rhs);
    ComplexVector &operator*=(Complex s);

    friend bool operator==(const ComplexVector &, const ComplexVector &) =
        default;

  private:
    std::vector<Complex> entries_;
};

[[nodiscard]] ComplexVector operator+(ComplexVector a, const ComplexVector &b);
[[nodiscard]] ComplexVector operator-(ComplexVector a, const ComplexVector &b);
[[nodiscard]] ComplexVector operator*(Complex s, ComplexVector v);

/// <a|b>, conjugate-linear in the first argument.
[[nodiscard]] Complex inner(const ComplexVector &a, const ComplexVector &b);

/// Entrywise conjugate in the fixed computational basis, |psi*>.
[[nodiscard]] ComplexVector conj_vector(const ComplexVector &v);

/// ||u||_q = (sum |u_j|^q)^(1/q); q = kInf gives max |u_j|. Throws
/// DomainError for q < 1.
[[nodiscard]] double vec_qnorm(std::span<const Complex> u, double q);
[[nodiscard]] double vec_qnorm(const ComplexVector &u, double q);

/// Kronecker product of two vectors, flat index i * b.dim() + j.
[[nodiscard]] ComplexVector kron(const ComplexVector &a, const ComplexVector &b);

class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);
    /// Row-wise initializer: {{a, b}, {c, d}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) {
        return {rows, cols};
    }
    /// Column matrix holding v.
    static ComplexMatrix column(const ComplexVector &v);
    /// |u><v|
    static ComplexMatrix outer(const ComplexVector &u, const ComplexVector &v);
    static ComplexMatrix projector(const ComplexVector &v) { return outer(v, v); }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    [[nodiscard]] Complex &operator()(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }
    [[nodiscard]] const Complex &operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }
    [[nodiscard]] std::span<const Complex> data() const noexcept { return data_; }

    [[nodiscard]] ComplexMatrix adjoint() const;
    [[nodiscard]] ComplexMatrix conjugate() const;
    [[nodiscard]] Complex trace() const;
    [[nodiscard]] ComplexVector column_vector(std::size_t j) const;

    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator-=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(Complex s);

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) =
        default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

[[nodiscard]] ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
[[nodiscard]] ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
[[nodiscard]] ComplexMatrix operator*(Complex s, ComplexMatrix a);
[[nodiscard]] ComplexMatrix operator*(const ComplexMatrix &a,
                                      const ComplexMatrix &b);
[[nodiscard]] ComplexVector operator*(const ComplexMatrix &a,
                                      const ComplexVector &v);

/// Hilbert-Schmidt inner product tr(X^dagger Y).
[[nodiscard]] Complex hs_inner(const ComplexMatrix &x, const ComplexMatrix &y);

/// Kronecker product, row index i_A * rows_B + i_B.
[[nodiscard]] ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// <u|A|v>
[[nodiscard]] Complex expectation(const ComplexVector &u, const ComplexMatrix &a,
                                  const ComplexVector &v);

/// max_ij |a_ij - b_ij|
[[nodiscard]] double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
[[nodiscard]] double max_abs_diff(const ComplexVector &a, const ComplexVector &b);

/// max_ij |a_ij - conj(a_ji)|
[[nodiscard]] double hermiticity_defect(const ComplexMatrix &a);

/// Eigenvalues of the Hermitian part of a, ascending.
[[nodiscard]] std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a);

struct HermitianEigensystem {
    std::vector<double> values;         ///< ascending
    std::vector<ComplexVector> vectors; ///< orthonormal, matching values
};

[[nodiscard]] HermitianEigensystem hermitian_eigensystem(const ComplexMatrix &a);

/// Gram matrix G_ij = <v_i|v_j>.
[[nodiscard]] ComplexMatrix gram_matrix(std::span<const ComplexVector> vectors);

} // namespace sicmub
