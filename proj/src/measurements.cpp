#include "sicmub/measurements.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sicmub/errors.hpp"

namespace sicmub {

namespace {

Complex root_of_unity(std::size_t n, std::size_t power) {
    const double angle = 2.0 * std::numbers::pi *
                         static_cast<double>(power % n) /
                         static_cast<double>(n);
    return std::polar(1.0, angle);
}

void require_dim(std::size_t expected, std::size_t got, const char *what) {
    if (expected != got) {
        throw DimensionError(std::string(what) + ": measurement dimension " +
                             std::to_string(expected) + " vs state dimension " +
                             std::to_string(got));
    }
}

ComplexMatrix sum_of(std::span<const ComplexMatrix> elements) {
    ComplexMatrix s = ComplexMatrix::zeros(elements.front().rows(),
                                           elements.front().cols());
    for (const auto &e : elements) {
        s += e;
    }
    return s;
}

} // namespace

// ---------------------------------------------------------------------------
// ProbDist

ProbDist ProbDist::from_values(std::vector<double> p, double sum_tol,
                               double negative_tol) {
    if (p.empty()) {
        throw DomainError("probability distribution is empty");
    }
    double sum = 0.0;
    for (auto &x : p) {
        if (!std::isfinite(x)) {
            throw DomainError("probability is not finite");
        }
        if (x < 0.0) {
            if (x < -negative_tol) {
                throw DomainError("negative probability " + std::to_string(x));
            }
            x = 0.0;
        }
        sum += x;
    }
    if (std::abs(sum - 1.0) > sum_tol) {
        throw DomainError("probabilities sum to " + std::to_string(sum));
    }
    return ProbDist(std::move(p));
}

double ProbDist::max() const { return *std::max_element(p_.begin(), p_.end()); }

// ---------------------------------------------------------------------------
// Bases and MUB sets

OrthonormalBasis OrthonormalBasis::from_vectors(std::vector<ComplexVector> vectors,
                                                double tol) {
    if (vectors.empty()) {
        throw ConstructionError("basis has no vectors");
    }
    const std::size_t d = vectors.front().dim();
    if (vectors.size() != d) {
        throw ConstructionError("basis must have exactly d vectors");
    }
    for (const auto &v : vectors) {
        if (v.dim() != d) {
            throw DimensionError("basis vectors have inconsistent dimension");
        }
    }
    const double dev =
        max_abs_diff(gram_matrix(vectors), ComplexMatrix::identity(d));
    if (dev > tol) {
        throw ConstructionError("basis is not orthonormal (Gram deviation " +
                                std::to_string(dev) + ")");
    }
    return OrthonormalBasis(std::move(vectors));
}

OrthonormalBasis OrthonormalBasis::from_unitary(const ComplexMatrix &u,
                                                double tol) {
    std::vector<ComplexVector> cols;
    for (std::size_t j = 0; j < u.cols(); ++j) {
        cols.push_back(u.column_vector(j));
    }
    return from_vectors(std::move(cols), tol);
}

OrthonormalBasis OrthonormalBasis::computational(std::size_t d) {
    std::vector<ComplexVector> v;
    for (std::size_t k = 0; k < d; ++k) {
        v.push_back(ComplexVector::basis(d, k));
    }
    return OrthonormalBasis(std::move(v));
}

double mub_deviation(std::span<const OrthonormalBasis> bases) {
    double worst = 0.0;
    for (std::size_t a = 0; a < bases.size(); ++a) {
        const double target = 1.0 / static_cast<double>(bases[a].dim());
        for (std::size_t b = a + 1; b < bases.size(); ++b) {
            for (const auto &u : bases[a].vectors()) {
                for (const auto &v : bases[b].vectors()) {
                    worst = std::max(worst,
                                     std::abs(std::norm(inner(u, v)) - target));
                }
            }
        }
    }
    return worst;
}

MubSet MubSet::from_bases(std::vector<OrthonormalBasis> bases, double tol) {
    if (bases.empty()) {
        throw ConstructionError("MUB set is empty");
    }
    const std::size_t d = bases.front().dim();
    for (const auto &b : bases) {
        if (b.dim() != d) {
            throw DimensionError("MUB set mixes dimensions");
        }
    }
    const double dev = mub_deviation(bases);
    if (dev > tol) {
        throw ConstructionError("bases are not mutually unbiased (deviation " +
                                std::to_string(dev) + ")");
    }
    return MubSet(std::move(bases), d);
}

bool is_prime(std::size_t n) {
    if (n < 2) {
        return false;
    }
    for (std::size_t k = 2; k * k <= n; ++k) {
        if (n % k == 0) {
            return false;
        }
    }
    return true;
}

MubSet mub_construct(std::size_t d, std::size_t count) {
    if (!is_prime(d)) {
        throw UnsupportedDimensionError("unsupported dimension " +
                                        std::to_string(d) +
                                        ": MUBs are built for prime d only");
    }
    if (count < 2 || count > d + 1) {
        throw DomainError("MUB count " + std::to_string(count) +
                          " outside [2, " + std::to_string(d + 1) + "]");
    }
    std::vector<OrthonormalBasis> bases;
    bases.push_back(OrthonormalBasis::computational(d));
    if (d == 2) {
        const double r = 1.0 / std::numbers::sqrt2;
        const Complex i{0.0, 1.0};
        bases.push_back(OrthonormalBasis::from_vectors(
            {ComplexVector{r, r}, ComplexVector{r, -r}}));
        bases.push_back(OrthonormalBasis::from_vectors(
            {ComplexVector{r, r * i}, ComplexVector{r, -r * i}}));
    } else {
        const double norm = 1.0 / std::sqrt(static_cast<double>(d));
        for (std::size_t m = 0; m < d; ++m) {
            std::vector<ComplexVector> vecs;
            for (std::size_t j = 0; j < d; ++j) {
                ComplexVector v(d);
                for (std::size_t k = 0; k < d; ++k) {
                    v[k] = norm * root_of_unity(d, (m * k * k + j * k) % d);
                }
                vecs.push_back(std::move(v));
            }
            bases.push_back(OrthonormalBasis::from_vectors(std::move(vecs)));
        }
    }
    bases.resize(count, OrthonormalBasis::computational(d));
    return MubSet::from_bases(std::move(bases));
}

// ---------------------------------------------------------------------------
// POVMs

Povm Povm::from_elements(std::vector<ComplexMatrix> elements, double tol) {
    if (elements.empty()) {
        throw ConstructionError("POVM has no elements");
    }
    const std::size_t d = elements.front().rows();
    for (const auto &e : elements) {
        if (!e.is_square() || e.rows() != d) {
            throw DimensionError("POVM elements must be d x d");
        }
        if (hermiticity_defect(e) > tol) {
            throw ConstructionError("POVM element is not Hermitian");
        }
        if (hermitian_eigenvalues(e).front() < -tol) {
            throw ConstructionError("POVM element is not positive semidefinite");
        }
    }
    const double dev = max_abs_diff(sum_of(elements), ComplexMatrix::identity(d));
    if (dev > tol) {
        throw ConstructionError("POVM elements do not sum to identity "
                                "(deviation " +
                                std::to_string(dev) + ")");
    }
    return Povm(std::move(elements));
}

SicPovm SicPovm::from_kets(std::vector<ComplexVector> kets, double tol) {
    if (kets.empty()) {
        throw NotASicError("SIC has no kets", 1.0);
    }
    const std::size_t d = kets.front().dim();
    if (kets.size() != d * d) {
        throw NotASicError("SIC needs d^2 kets", 1.0);
    }
    const double target = 1.0 / static_cast<double>(d + 1);
    double worst = 0.0;
    for (std::size_t j = 0; j < kets.size(); ++j) {
        if (kets[j].dim() != d) {
            throw DimensionError("SIC kets have inconsistent dimension");
        }
        worst = std::max(worst, std::abs(std::norm(inner(kets[j], kets[j])) - 1.0));
        for (std::size_t k = j + 1; k < kets.size(); ++k) {
            worst = std::max(worst,
                             std::abs(std::norm(inner(kets[j], kets[k])) - target));
        }
    }
    ComplexMatrix frame = ComplexMatrix::zeros(d, d);
    for (const auto &k : kets) {
        frame += ComplexMatrix::projector(k);
    }
    frame *= 1.0 / static_cast<double>(d);
    worst = std::max(worst, max_abs_diff(frame, ComplexMatrix::identity(d)));
    if (worst > tol) {
        throw NotASicError("not a SIC: worst overlap/completeness deviation " +
                               std::to_string(worst),
                           worst);
    }
    return SicPovm(std::move(kets), d);
}

ComplexMatrix SicPovm::element(std::size_t j) const {
    return (1.0 / static_cast<double>(dim_)) * ComplexMatrix::projector(kets_[j]);
}

Povm SicPovm::as_povm() const {
    std::vector<ComplexMatrix> e;
    e.reserve(kets_.size());
    for (std::size_t j = 0; j < kets_.size(); ++j) {
        e.push_back(element(j));
    }
    return Povm::from_elements(std::move(e), 1e-8);
}

RankOnePovm RankOnePovm::from_povm(const Povm &povm, double tol) {
    std::vector<ComplexVector> vecs;
    for (const auto &e : povm.elements()) {
        const auto sys = hermitian_eigensystem(e);
        const std::size_t n = sys.values.size();
        if (n >= 2 && sys.values[n - 2] > tol) {
            throw PreconditionError("POVM element has rank > 1 (second "
                                    "eigenvalue " +
                                    std::to_string(sys.values[n - 2]) + ")");
        }
        const double top = std::max(sys.values.back(), 0.0);
        vecs.push_back(std::sqrt(top) * sys.vectors.back());
    }
    return RankOnePovm(std::move(vecs));
}

RankOnePovm RankOnePovm::from_basis(const OrthonormalBasis &basis) {
    return RankOnePovm({basis.vectors().begin(), basis.vectors().end()});
}

RankOnePovm RankOnePovm::from_sic(const SicPovm &sic) {
    const double s = 1.0 / std::sqrt(static_cast<double>(sic.dim()));
    std::vector<ComplexVector> vecs;
    for (const auto &k : sic.kets()) {
        vecs.push_back(s * k);
    }
    return RankOnePovm(std::move(vecs));
}

RankOnePovm RankOnePovm::from_vectors(std::vector<ComplexVector> vectors,
                                      double tol) {
    if (vectors.empty()) {
        throw ConstructionError("rank-one POVM has no vectors");
    }
    const std::size_t d = vectors.front().dim();
    ComplexMatrix s = ComplexMatrix::zeros(d, d);
    for (const auto &v : vectors) {
        if (v.dim() != d) {
            throw DimensionError("rank-one POVM vectors differ in dimension");
        }
        s += ComplexMatrix::projector(v);
    }
    const double dev = max_abs_diff(s, ComplexMatrix::identity(d));
    if (dev > tol) {
        throw ConstructionError("rank-one POVM is incomplete (deviation " +
                                std::to_string(dev) + ")");
    }
    return RankOnePovm(std::move(vectors));
}

Povm RankOnePovm::as_povm() const {
    std::vector<ComplexMatrix> e;
    for (const auto &v : vectors_) {
        e.push_back(ComplexMatrix::projector(v));
    }
    return Povm::from_elements(std::move(e));
}

// ---------------------------------------------------------------------------
// Outcome statistics

ProbDist probabilities(const OrthonormalBasis &basis, const DensityMatrix &rho) {
    require_dim(basis.dim(), rho.dim(), "probabilities");
    std::vector<double> p;
    p.reserve(basis.dim());
    for (const auto &b : basis.vectors()) {
        p.push_back(expectation(b, rho.mat(), b).real());
    }
    return ProbDist::from_values(std::move(p));
}

ProbDist probabilities(const Povm &povm, const DensityMatrix &rho) {
    require_dim(povm.dim(), rho.dim(), "probabilities");
    std::vector<double> p;
    p.reserve(povm.size());
    for (const auto &m : povm.elements()) {
        // tr(M rho) = tr(M^dagger rho) for Hermitian M.
        p.push_back(hs_inner(m, rho.mat()).real());
    }
    return ProbDist::from_values(std::move(p));
}

ProbDist probabilities(const SicPovm &sic, const DensityMatrix &rho) {
    require_dim(sic.dim(), rho.dim(), "probabilities");
    const double w = 1.0 / static_cast<double>(sic.dim());
    std::vector<double> p;
    p.reserve(sic.size());
    for (const auto &k : sic.kets()) {
        p.push_back(w * expectation(k, rho.mat(), k).real());
    }
    return ProbDist::from_values(std::move(p));
}

ProbDist probabilities(const RankOnePovm &povm, const DensityMatrix &rho) {
    require_dim(povm.dim(), rho.dim(), "probabilities");
    std::vector<double> p;
    p.reserve(povm.size());
    for (const auto &m : povm.vectors()) {
        p.push_back(expectation(m, rho.mat(), m).real());
    }
    return ProbDist::from_values(std::move(p));
}

// ---------------------------------------------------------------------------
// Weyl-Heisenberg SICs

ComplexMatrix weyl_shift(std::size_t d) {
    ComplexMatrix x(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        x((k + 1) % d, k) = 1.0;
    }
    return x;
}

ComplexMatrix weyl_clock(std::size_t d) {
    ComplexMatrix z(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        z(k, k) = root_of_unity(d, k);
    }
    return z;
}

std::vector<ComplexVector> weyl_heisenberg_orbit(const ComplexVector &fiducial) {
    const std::size_t d = fiducial.dim();
    std::vector<ComplexVector> orbit(d * d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            // (Z^b f)_k = omega^{bk} f_k, then X^a moves entry k to k + a.
            ComplexVector v(d);
            for (std::size_t k = 0; k < d; ++k) {
                v[(k + a) % d] = root_of_unity(d, (b * k) % d) * fiducial[k];
            }
            orbit[a * d + b] = std::move(v);
        }
    }
    return orbit;
}

SicPovm sic_from_fiducial(const ComplexVector &fiducial, double tol) {
    if (fiducial.dim() < 2) {
        throw DomainError("fiducial dimension must be >= 2");
    }
    if (std::abs(fiducial.norm() - 1.0) > 1e-10) {
        throw DomainError("fiducial is not a unit vector (norm " +
                          std::to_string(fiducial.norm()) + ")");
    }
    return SicPovm::from_kets(weyl_heisenberg_orbit(fiducial), tol);
}

bool has_builtin_fiducial(std::size_t d) { return d == 2 || d == 3; }

ComplexVector builtin_fiducial(std::size_t d) {
    if (d == 2) {
        // Bloch vector (1,1,1)/sqrt(3): cos(theta/2), e^{i pi/4} sin(theta/2)
        const double cos_theta = 1.0 / std::sqrt(3.0);
        const double c = std::sqrt((1.0 + cos_theta) / 2.0);
        const double s = std::sqrt((1.0 - cos_theta) / 2.0);
        return ComplexVector{c, std::polar(s, std::numbers::pi / 4.0)};
    }
    if (d == 3) {
        const double r = 1.0 / std::numbers::sqrt2;
        return ComplexVector{0.0, r, -r};
    }
    throw UnsupportedDimensionError("no embedded SIC fiducial for dimension " +
                                    std::to_string(d) +
                                    "; load one with --fiducial");
}

SicPovm builtin_sic(std::size_t d) { return sic_from_fiducial(builtin_fiducial(d)); }

SicConsequencesReport sic_consequences_check(const SicPovm &sic,
                                             const ComplexMatrix &a,
                                             const ComplexVector &psi,
                                             double tol) {
    const std::size_t d = sic.dim();
    if (a.rows() != d || a.cols() != d || psi.dim() != d) {
        throw DimensionError("sic_consequences_check: dimension mismatch");
    }
    const auto kets = sic.kets();
    Complex sum{0.0, 0.0};
    for (const auto &ki : kets) {
        for (const auto &kj : kets) {
            sum += expectation(ki, a, kj) * inner(kj, ki);
        }
    }
    const double dd = static_cast<double>(d);
    sum /= dd * dd;

    ComplexVector recon(d);
    for (const auto &k : kets) {
        recon += inner(k, psi) * k;
    }
    recon *= 1.0 / dd;

    SicConsequencesReport r{};
    r.double_sum = sum;
    r.trace_deviation = std::abs(sum - a.trace());
    r.reconstruction_deviation = max_abs_diff(recon, psi);
    r.passed = r.trace_deviation <= tol && r.reconstruction_deviation <= tol;
    return r;
}

std::vector<ComplexVector> sic_design_basis(const SicPovm &sic) {
    const std::size_t d = sic.dim();
    const std::size_t n = d * d;
    const double dd = static_cast<double>(d);

    std::vector<ComplexVector> products;
    products.reserve(n);
    for (const auto &k : sic.kets()) {
        products.push_back(kron(k, conj_vector(k)));
    }

    std::vector<ComplexVector> out;
    out.reserve(n);
    const double phi_norm = 1.0 / std::pow(dd, 1.5);
    const double psi_norm = std::sqrt(dd + 1.0) / std::pow(dd, 1.5);
    for (std::size_t k = 0; k < n; ++k) {
        ComplexVector v(n);
        for (std::size_t j = 0; j < n; ++j) {
            v += root_of_unity(n, (k * j) % n) * products[j];
        }
        v *= (k == 0) ? phi_norm : psi_norm;
        out.push_back(std::move(v));
    }

    const double dev = max_abs_diff(gram_matrix(out), ComplexMatrix::identity(n));
    if (dev > 1e-8) {
        throw ConstructionError("SIC design vectors are not orthonormal "
                                "(Gram deviation " +
                                std::to_string(dev) + ")");
    }
    return out;
}

ProbDist distort(const ProbDist &p, double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw DomainError("detector efficiency must lie in [0, 1]");
    }
    std::vector<double> out;
    out.reserve(p.size() + 1);
    for (const double x : p.values()) {
        out.push_back(eta * x);
    }
    out.push_back(1.0 - eta);
    return ProbDist::from_values(std::move(out));
}

} // namespace sicmub
