#include "symdet/ensembles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace symdet {

namespace {

constexpr double kPi = std::numbers::pi;

void check_m(std::size_t M, const char *what) {
    if (M < 2) {
        throw std::invalid_argument(std::string(what) + ": M must be at least 2");
    }
    if (M > kMaxEnsembleM) {
        throw std::invalid_argument(std::string(what) + ": M exceeds the supported maximum " +
                                    std::to_string(kMaxEnsembleM));
    }
}

} // namespace

RotationGen rotation_gen(std::size_t M) {
    check_m(M, "rotation_gen");
    const double a = kPi / static_cast<double>(M);
    CMat v(2, 2, {std::cos(a), -std::sin(a), std::sin(a), std::cos(a)});
    return RotationGen{M, v};
}

CVec em_state_vector(std::size_t M, std::size_t k) {
    const double a = static_cast<double>(k) * kPi / static_cast<double>(M);
    return CVec{std::cos(a), std::sin(a)};
}

Ensemble make_em(std::size_t M) {
    check_m(M, "make_em");
    Ensemble e;
    e.dim = 2;
    const double prior = 1.0 / static_cast<double>(M);
    for (std::size_t k = 0; k < M; ++k) {
        CVec psi = em_state_vector(M, k);
        e.states.push_back(outer(psi, psi));
        e.priors.push_back(prior);
        e.pure.push_back(std::move(psi));
    }
    return e;
}

Ensemble make_mixed_em(std::size_t M, double eps) {
    check_m(M, "make_mixed_em");
    if (!(eps >= 0.0 && eps <= 1.0)) {
        throw std::invalid_argument("make_mixed_em: eps must lie in [0, 1]");
    }
    Ensemble e = make_em(M);
    if (eps == 0.0) {
        return e;
    }
    const CMat noise = (0.5 * eps) * CMat::identity(2);
    for (auto &rho : e.states) {
        rho = (1.0 - eps) * rho + noise;
    }
    e.pure.clear(); // states are mixed now
    return e;
}

Ensemble make_double_em(std::size_t M) {
    check_m(M, "make_double_em");
    Ensemble e;
    e.dim = 4;
    const double prior = 1.0 / static_cast<double>(M);
    for (std::size_t k = 0; k < M; ++k) {
        const CVec psi = em_state_vector(M, k);
        CVec pair = tensor(psi, psi);
        e.states.push_back(outer(pair, pair));
        e.priors.push_back(prior);
        e.pure.push_back(std::move(pair));
    }
    return e;
}

Ensemble make_ensemble(std::size_t dim, std::vector<CMat> states, std::vector<double> priors) {
    Ensemble e;
    e.dim = dim;
    e.states = std::move(states);
    e.priors = std::move(priors);
    validate_ensemble(e);
    return e;
}

void validate_ensemble(const Ensemble &e, double tol) {
    if (e.states.size() != e.priors.size()) {
        throw std::invalid_argument("ensemble: " + std::to_string(e.states.size()) +
                                    " states but " + std::to_string(e.priors.size()) + " priors");
    }
    if (e.states.empty()) {
        throw std::invalid_argument("ensemble: no states");
    }
    double prior_sum = 0.0;
    for (std::size_t i = 0; i < e.priors.size(); ++i) {
        if (e.priors[i] < 0.0) {
            throw std::invalid_argument("ensemble: prior " + std::to_string(i) + " is negative");
        }
        prior_sum += e.priors[i];
    }
    if (std::abs(prior_sum - 1.0) > 1e-12) {
        throw std::invalid_argument("ensemble: priors sum to " + std::to_string(prior_sum) +
                                    ", expected 1 within 1e-12");
    }
    for (std::size_t i = 0; i < e.states.size(); ++i) {
        const CMat &rho = e.states[i];
        const std::string name = "ensemble: state " + std::to_string(i);
        if (rho.rows() != e.dim || rho.cols() != e.dim) {
            throw std::invalid_argument(name + " has shape " + std::to_string(rho.rows()) + "x" +
                                        std::to_string(rho.cols()) + ", expected dim " +
                                        std::to_string(e.dim));
        }
        const double defect = hermiticity_defect(rho);
        if (defect > tol) {
            throw std::invalid_argument(name + " is not hermitian (defect " +
                                        std::to_string(defect) + ")");
        }
        if (std::abs(trace(rho).real() - 1.0) > tol || std::abs(trace(rho).imag()) > tol) {
            throw std::invalid_argument(name + " has trace " + std::to_string(trace(rho).real()) +
                                        ", expected 1");
        }
        if (!is_psd(rho, tol)) {
            throw std::invalid_argument(name + " is not positive semidefinite");
        }
    }
    if (!e.pure.empty() && e.pure.size() != e.states.size()) {
        throw std::invalid_argument("ensemble: pure-vector list length does not match states");
    }
}

} // namespace symdet
