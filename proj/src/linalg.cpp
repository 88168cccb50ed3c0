#include "sicmub/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "sicmub/errors.hpp"

namespace sicmub {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char *op) {
    if (a != b) {
        throw DimensionError(std::string(op) + ": dimension mismatch (" +
                             std::to_string(a) + " vs " + std::to_string(b) +
                             ")");
    }
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b,
                        const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape mismatch");
    }
}

Eigen::MatrixXcd to_eigen(const ComplexMatrix &a) {
    Eigen::MatrixXcd m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                a(i, j);
        }
    }
    return m;
}

Eigen::MatrixXcd hermitian_part(const ComplexMatrix &a) {
    if (!a.is_square()) {
        throw DimensionError("hermitian eigensolver: matrix is not square");
    }
    Eigen::MatrixXcd m = to_eigen(a);
    return (m + m.adjoint()) * 0.5;
}

} // namespace

// ---------------------------------------------------------------------------
// ComplexVector

ComplexVector ComplexVector::basis(std::size_t dim, std::size_t k) {
    if (k >= dim) {
        throw DimensionError("basis vector index out of range");
    }
    ComplexVector v(dim);
    v[k] = 1.0;
    return v;
}

double ComplexVector::norm() const {
    double s = 0.0;
    for (const auto &z : entries_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

ComplexVector ComplexVector::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw DomainError("cannot normalize the zero vector");
    }
    ComplexVector out(*this);
    out *= 1.0 / n;
    return out;
}

ComplexVector &ComplexVector::operator+=(const ComplexVector &rhs) {
    require_same_dim(dim(), rhs.dim(), "vector +");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += rhs.entries_[i];
    }
    return *this;
}

ComplexVector &ComplexVector::operator-=(const ComplexVector &rhs) {
    require_same_dim(dim(), rhs.dim(), "vector -");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= rhs.entries_[i];
    }
    return *this;
}

ComplexVector &ComplexVector::operator*=(Complex s) {
    for (auto &z : entries_) {
        z *= s;
    }
    return *this;
}

ComplexVector operator+(ComplexVector a, const ComplexVector &b) {
    a += b;
    return a;
}
ComplexVector operator-(ComplexVector a, const ComplexVector &b) {
    a -= b;
    return a;
}
ComplexVector operator*(Complex s, ComplexVector v) {
    v *= s;
    return v;
}

Complex inner(const ComplexVector &a, const ComplexVector &b) {
    require_same_dim(a.dim(), b.dim(), "inner");
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

ComplexVector conj_vector(const ComplexVector &v) {
    ComplexVector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        out[i] = std::conj(v[i]);
    }
    return out;
}

double vec_qnorm(std::span<const Complex> u, double q) {
    if (!(q >= 1.0)) {
        throw DomainError("vec_qnorm: q must be >= 1, got " + std::to_string(q));
    }
    if (std::isinf(q)) {
        double m = 0.0;
        for (const auto &z : u) {
            m = std::max(m, std::abs(z));
        }
        return m;
    }
    // Scale by the largest modulus so large q does not overflow.
    double scale = 0.0;
    for (const auto &z : u) {
        scale = std::max(scale, std::abs(z));
    }
    if (scale == 0.0) {
        return 0.0;
    }
    double s = 0.0;
    for (const auto &z : u) {
        s += std::pow(std::abs(z) / scale, q);
    }
    return scale * std::pow(s, 1.0 / q);
}

double vec_qnorm(const ComplexVector &u, double q) {
    return vec_qnorm(u.entries(), q);
}

ComplexVector kron(const ComplexVector &a, const ComplexVector &b) {
    ComplexVector out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw DimensionError("ComplexMatrix: entry count != rows * cols");
    }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw DimensionError("ComplexMatrix: ragged initializer");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::column(const ComplexVector &v) {
    return {v.dim(), 1, std::vector<Complex>(v.entries().begin(),
                                             v.entries().end())};
}

ComplexMatrix ComplexMatrix::outer(const ComplexVector &u,
                                   const ComplexVector &v) {
    ComplexMatrix m(u.dim(), v.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
        for (std::size_t j = 0; j < v.dim(); ++j) {
            m(i, j) = u[i] * std::conj(v[j]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(*this);
    for (auto &z : out.data_) {
        z = std::conj(z);
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) {
        throw DimensionError("trace of a non-square matrix");
    }
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) {
        s += (*this)(i, i);
    }
    return s;
}

ComplexVector ComplexMatrix::column_vector(std::size_t j) const {
    ComplexVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        v[i] = (*this)(i, j);
    }
    return v;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs) {
    require_same_shape(*this, rhs, "matrix +");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += rhs.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &rhs) {
    require_same_shape(*this, rhs, "matrix -");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= rhs.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex s) {
    for (auto &z : data_) {
        z *= s;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}
ComplexMatrix operator*(Complex s, ComplexMatrix a) {
    a *= s;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matrix product: inner dimensions differ");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexVector operator*(const ComplexMatrix &a, const ComplexVector &v) {
    require_same_dim(a.cols(), v.dim(), "matrix-vector product");
    ComplexVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex s{0.0, 0.0};
        for (std::size_t j = 0; j < a.cols(); ++j) {
            s += a(i, j) * v[j];
        }
        out[i] = s;
    }
    return out;
}

Complex hs_inner(const ComplexMatrix &x, const ComplexMatrix &y) {
    require_same_shape(x, y, "hs_inner");
    // tr(X^dagger Y) = sum_ij conj(x_ij) y_ij
    Complex s{0.0, 0.0};
    const auto xd = x.data();
    const auto yd = y.data();
    for (std::size_t k = 0; k < xd.size(); ++k) {
        s += std::conj(xd[k]) * yd[k];
    }
    return s;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia) {
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const Complex s = a(ia, ja);
            for (std::size_t ib = 0; ib < b.rows(); ++ib) {
                for (std::size_t jb = 0; jb < b.cols(); ++jb) {
                    out(ia * b.rows() + ib, ja * b.cols() + jb) = s * b(ib, jb);
                }
            }
        }
    }
    return out;
}

Complex expectation(const ComplexVector &u, const ComplexMatrix &a,
                    const ComplexVector &v) {
    return inner(u, a * v);
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) {
        m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
    }
    return m;
}

double max_abs_diff(const ComplexVector &a, const ComplexVector &b) {
    require_same_dim(a.dim(), b.dim(), "max_abs_diff");
    double m = 0.0;
    for (std::size_t k = 0; k < a.dim(); ++k) {
        m = std::max(m, std::abs(a[k] - b[k]));
    }
    return m;
}

double hermiticity_defect(const ComplexMatrix &a) {
    if (!a.is_square()) {
        throw DimensionError("hermiticity_defect: matrix is not square");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i; j < a.cols(); ++j) {
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return m;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        hermitian_part(a), Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix &a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian_part(a));
    HermitianEigensystem out;
    const auto &ev = solver.eigenvalues();
    const auto &vecs = solver.eigenvectors();
    out.values.assign(ev.data(), ev.data() + ev.size());
    for (Eigen::Index k = 0; k < vecs.cols(); ++k) {
        ComplexVector v(static_cast<std::size_t>(vecs.rows()));
        for (Eigen::Index i = 0; i < vecs.rows(); ++i) {
            v[static_cast<std::size_t>(i)] = vecs(i, k);
        }
        out.vectors.push_back(std::move(v));
    }
    return out;
}

ComplexMatrix gram_matrix(std::span<const ComplexVector> vectors) {
    const std::size_t n = vectors.size();
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            g(i, j) = inner(vectors[i], vectors[j]);
        }
    }
    return g;
}

} // namespace sicmub
