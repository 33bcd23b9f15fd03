#include "symdet/strategies.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace symdet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFeasTol = 1e-12;

void check_m(std::size_t M, const char *what) {
    if (M < 2) {
        throw std::invalid_argument(std::string(what) + ": M must be at least 2");
    }
    if (M > kMaxEnsembleM) {
        throw std::invalid_argument(std::string(what) + ": M exceeds the supported maximum");
    }
}

} // namespace

std::optional<W3Weights> general_w_weights(double phi_a, double phi_b) {
    const double sa = std::sin(phi_a);
    const double sb = std::sin(phi_b);
    const double sab = std::sin(phi_a - phi_b);
    double a2 = std::cos(phi_b) / (sa * sab);
    double b2 = std::cos(phi_a) / (sb * -sab);
    if (!std::isfinite(a2) || !std::isfinite(b2)) {
        return std::nullopt;
    }
    if (a2 < -kFeasTol || b2 < -kFeasTol) {
        return std::nullopt;
    }
    a2 = std::max(0.0, a2);
    b2 = std::max(0.0, b2);
    if (a2 + b2 > 2.0 + kFeasTol) {
        return std::nullopt;
    }
    return W3Weights{a2, b2, std::max(0.0, 2.0 - a2 - b2)};
}

W3Params w3_params(std::size_t M, std::size_t m, std::size_t n) {
    check_m(M, "w3_params");
    if (M <= 2) {
        throw std::invalid_argument("w3_params: M must exceed 2");
    }
    if (m < 1 || n < 1) {
        throw std::invalid_argument("w3_params: m and n must be positive");
    }
    // analytic zeros of the weight-formula denominators; floating point would
    // turn the 0/0 at m + n = M into a finite value
    if (m % M == 0 || n % M == 0 || (m + n) % M == 0) {
        throw std::invalid_argument("w3_params: degenerate denominator (sin(mπ/M), sin(nπ/M) or "
                                    "sin((m+n)π/M) vanishes)");
    }
    const double Md = static_cast<double>(M);
    const double sm = std::sin(static_cast<double>(m) * kPi / Md);
    const double sn = std::sin(static_cast<double>(n) * kPi / Md);
    const double smn = std::sin(static_cast<double>(m + n) * kPi / Md);
    double a2 = std::cos(static_cast<double>(n) * kPi / Md) / (sm * smn);
    double b2 = std::cos(static_cast<double>(m) * kPi / Md) / (sn * smn);
    if (!std::isfinite(a2) || !std::isfinite(b2)) {
        throw std::invalid_argument("w3_params: degenerate denominator (sin(mπ/M), sin(nπ/M) or "
                                    "sin((m+n)π/M) vanishes)");
    }
    if (a2 < -kFeasTol) {
        throw std::invalid_argument("w3_params: a² = " + std::to_string(a2) +
                                    " violates a² ≥ 0");
    }
    if (b2 < -kFeasTol) {
        throw std::invalid_argument("w3_params: b² = " + std::to_string(b2) +
                                    " violates b² ≥ 0");
    }
    a2 = std::max(0.0, a2);
    b2 = std::max(0.0, b2);
    if (a2 + b2 > 2.0 + kFeasTol) {
        throw std::invalid_argument("w3_params: a² + b² = " + std::to_string(a2 + b2) +
                                    " violates a² + b² ≤ 2");
    }
    return W3Params{M, m, n, a2, b2, std::max(0.0, 2.0 - a2 - b2)};
}

std::vector<W3Params> feasible_w_params(std::size_t M) {
    check_m(M, "feasible_w_params");
    std::vector<W3Params> out;
    for (std::size_t m = 1; m < M; ++m) {
        for (std::size_t n = 1; n < M; ++n) {
            try {
                out.push_back(w3_params(M, m, n));
            } catch (const std::invalid_argument &) {
                // outside the feasible region
            }
        }
    }
    return out;
}

Povm covariant_am(std::size_t M) {
    check_m(M, "covariant_am");
    Povm p;
    p.dim = 2;
    const double scale = 2.0 / static_cast<double>(M);
    for (std::size_t j = 0; j < M; ++j) {
        const double angle = kPi / 2.0 + static_cast<double>(j) * kPi / static_cast<double>(M);
        p.elements.push_back(scale * direction_projector(angle));
    }
    return p;
}

Povm theorem2_w(std::size_t M, std::size_t m, std::size_t n) {
    const W3Params w = w3_params(M, m, n);
    const double Md = static_cast<double>(M);
    const CVec omega0{0.0, std::sqrt(w.c2)};
    const CVec omega1 = cplx(std::sqrt(w.a2), 0.0) *
                        CVec{-std::sin(static_cast<double>(m) * kPi / Md),
                             std::cos(static_cast<double>(m) * kPi / Md)};
    const CVec omega2 = cplx(std::sqrt(w.b2), 0.0) *
                        CVec{std::sin(static_cast<double>(n) * kPi / Md),
                             std::cos(static_cast<double>(n) * kPi / Md)};
    Povm p;
    p.dim = 2;
    for (const CVec &v : {omega0, omega1, omega2}) {
        CMat el = outer(v, v);
        if (trace(el).real() > kTraceTol) {
            p.elements.push_back(std::move(el));
        }
    }
    return p;
}

Povm subgroup_povm(std::size_t M, std::size_t k, std::size_t l) {
    check_m(M, "subgroup_povm");
    if (k < 2) {
        throw std::invalid_argument("subgroup_povm: k must be at least 2");
    }
    if (M % k != 0) {
        throw std::invalid_argument("subgroup_povm: k = " + std::to_string(k) +
                                    " does not divide M = " + std::to_string(M));
    }
    const std::size_t stride = M / k;
    if (l >= stride) {
        throw std::invalid_argument("subgroup_povm: coset index l must satisfy 0 ≤ l < M/k");
    }
    Povm p;
    p.dim = 2;
    const double scale = 2.0 / static_cast<double>(k);
    for (std::size_t j = 0; j < k; ++j) {
        const double angle = kPi / 2.0 + static_cast<double>(l + j * stride) * kPi /
                                             static_cast<double>(M);
        p.elements.push_back(scale * direction_projector(angle));
    }
    return p;
}

bool lemma7_check(std::size_t M, const Rank1Real &r, double tol) {
    check_m(M, "lemma7_check");
    const double step = kPi / static_cast<double>(M);
    for (const double angle : r.angles) {
        // distance (mod π/M) from π/2; mod-π wraps are multiples of π/M
        const double d = std::remainder(angle - kPi / 2.0, step);
        if (std::abs(d) > tol) {
            return false;
        }
    }
    return true;
}

Povm mu4_povm(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument("mu4_povm: lambda must lie in [0, 1]");
    }
    const Povm w = theorem2_w(5, 2, 2);
    const Povm shifted = shift(w, rotation_gen(5), 2);
    return convex_combine({{1.0 - lambda, w}, {lambda, shifted}});
}

Povm covariant_from_w(std::size_t M, std::size_t m, std::size_t n) {
    const Povm w = theorem2_w(M, m, n);
    const RotationGen g = rotation_gen(M);
    std::vector<std::pair<double, Povm>> terms;
    terms.reserve(M);
    const double weight = 1.0 / static_cast<double>(M);
    for (std::size_t l = 0; l < M; ++l) {
        terms.emplace_back(weight, shift(w, g, static_cast<long>(l)));
    }
    return convex_combine(terms);
}

Povm state_direction_povm(std::size_t M) {
    check_m(M, "state_direction_povm");
    Povm p;
    p.dim = 2;
    const double scale = 2.0 / static_cast<double>(M);
    for (std::size_t k = 0; k < M; ++k) {
        const CVec psi = em_state_vector(M, k);
        p.elements.push_back(scale * outer(psi, psi));
    }
    return p;
}

} // namespace symdet
