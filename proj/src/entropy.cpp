#include "sicmub/entropy.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "sicmub/errors.hpp"

namespace sicmub {

namespace {

constexpr double kGuardBand = 1e-6;

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return {buf, res.ptr};
}

/// ln_alpha(x) written through L = ln x and eps = 1 - alpha:
/// (e^{eps L} - 1)/eps.
double deformed_log(double log_x, double eps) {
    if (std::abs(eps) < kGuardBand) {
        const double t = eps * log_x;
        return log_x * (1.0 + t / 2.0 + t * t / 6.0);
    }
    return std::expm1(eps * log_x) / eps;
}

} // namespace

EntropyOrder::EntropyOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0)) {
        throw DomainError("entropic order must be > 0, got " +
                          format_double(alpha));
    }
}

EntropyOrder EntropyOrder::parse(std::string_view text) {
    if (text == "inf" || text == "Inf" || text == "infinity") {
        return infinity();
    }
    double value = 0.0;
    const auto *end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, value);
    if (res.ec != std::errc{} || res.ptr != end) {
        throw DomainError("cannot parse entropic order '" + std::string(text) +
                          "'");
    }
    return EntropyOrder(value);
}

bool EntropyOrder::is_infinite() const noexcept { return std::isinf(alpha_); }

std::string EntropyOrder::to_string() const {
    return is_infinite() ? std::string("inf") : format_double(alpha_);
}

SymOrderPair::SymOrderPair(double s) : s_(s) {
    if (!(s >= 0.0 && s < 1.0)) {
        throw DomainError("symmetrization parameter s must lie in [0, 1)");
    }
}

std::string_view to_string(EntropyKind kind) {
    return kind == EntropyKind::renyi ? "renyi" : "tsallis";
}

EntropyKind parse_entropy_kind(std::string_view text) {
    if (text == "renyi") {
        return EntropyKind::renyi;
    }
    if (text == "tsallis") {
        return EntropyKind::tsallis;
    }
    throw DomainError("unknown entropy kind '" + std::string(text) + "'");
}

double shannon(const ProbDist &p) {
    double h = 0.0;
    for (const double x : p.values()) {
        if (x > 0.0) {
            h -= x * std::log(x);
        }
    }
    return h;
}

double alpha_log(double x, EntropyOrder alpha) {
    if (!(x > 0.0)) {
        throw DomainError("alpha_log: argument must be > 0");
    }
    if (alpha.is_infinite()) {
        if (x > 1.0) {
            return 0.0;
        }
        return x == 1.0 ? 0.0 : -kInf;
    }
    if (alpha.is_shannon()) {
        return std::log(x);
    }
    return deformed_log(std::log(x), 1.0 - alpha.value());
}

double tsallis(const ProbDist &p, EntropyOrder alpha) {
    if (alpha.is_shannon()) {
        return shannon(p);
    }
    if (alpha.is_infinite()) {
        return 0.0;
    }
    // sum_j p_j ln_alpha(1/p_j), equal to the defining quotient because
    // sum_j p_j = 1, and free of cancellation near alpha = 1.
    const double eps = 1.0 - alpha.value();
    double h = 0.0;
    for (const double x : p.values()) {
        if (x > 0.0) {
            h += x * deformed_log(-std::log(x), eps);
        }
    }
    return h;
}

double renyi(const ProbDist &p, EntropyOrder alpha) {
    if (alpha.is_shannon()) {
        return shannon(p);
    }
    const double pmax = p.max();
    if (alpha.is_infinite()) {
        return -std::log(pmax);
    }
    const double a = alpha.value();
    const double eps = 1.0 - a;
    if (std::abs(eps) < kGuardBand) {
        // ln(1 + eps H)/eps with H the Tsallis entropy of the same order.
        const double h = tsallis(p, alpha);
        const double t = eps * h;
        return h * (1.0 - t / 2.0 + t * t / 3.0);
    }
    if (std::abs(eps) < 1.0) {
        // Same identity in closed form; the power sum cancels badly here.
        return std::log1p(eps * tsallis(p, alpha)) / eps;
    }
    // ln sum p^a = a ln pmax + ln sum (p/pmax)^a keeps large orders finite.
    double s = 0.0;
    for (const double x : p.values()) {
        if (x > 0.0) {
            s += std::pow(x / pmax, a);
        }
    }
    return (a * std::log(pmax) + std::log(s)) / eps;
}

double entropy(const ProbDist &p, EntropyOrder alpha, EntropyKind kind) {
    return kind == EntropyKind::renyi ? renyi(p, alpha) : tsallis(p, alpha);
}

double binary_tsallis(double eta, EntropyOrder alpha) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw DomainError("binary_tsallis: eta must lie in [0, 1]");
    }
    if (alpha.is_infinite()) {
        return 0.0;
    }
    const double a = alpha.value();
    double h = 0.0;
    for (const double x : {eta, 1.0 - eta}) {
        if (x > 0.0) {
            h -= std::pow(x, a) * alpha_log(x, alpha);
        }
    }
    return h;
}

double symmetrized(const ProbDist &p, const SymOrderPair &orders,
                   EntropyKind kind) {
    return 0.5 * (entropy(p, orders.alpha(), kind) +
                  entropy(p, orders.beta(), kind));
}

double index_of_coincidence(const ProbDist &p) {
    double c = 0.0;
    for (const double x : p.values()) {
        c += x * x;
    }
    return c;
}

double max_prob_bound(std::size_t n, double b2) {
    if (n == 0) {
        throw DomainError("max_prob_bound: n must be positive");
    }
    const double nn = static_cast<double>(n);
    constexpr double slack = 1e-12;
    if (!(b2 >= 1.0 / nn - slack && b2 <= 1.0 + slack)) {
        throw DomainError("max_prob_bound: b2 = " + format_double(b2) +
                          " outside [1/n, 1]");
    }
    const double radicand = std::max(nn * b2 - 1.0, 0.0);
    return (1.0 + std::sqrt(nn - 1.0) * std::sqrt(radicand)) / nn;
}

} // namespace sicmub
