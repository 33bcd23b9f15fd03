#include "symdet/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace symdet {

namespace {

constexpr double kPi = std::numbers::pi;
// Probabilities below this are treated as exact zeros before taking logs.
constexpr double kProbFloor = 1e-15;

double xlnx(double x) { return x > kProbFloor ? x * std::log(x) : 0.0; }

} // namespace

BayesCostMatrix BayesCostMatrix::error_cost(std::size_t n) {
    BayesCostMatrix m;
    m.inputs = n;
    m.outputs = n;
    m.c.assign(n * n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        m.c[i * n + i] = 0.0;
    }
    return m;
}

ChannelMatrix channel_matrix(const Ensemble &e, const Povm &p) {
    if (e.dim != p.dim) {
        throw std::invalid_argument("channel_matrix: ensemble dim " + std::to_string(e.dim) +
                                    " does not match POVM dim " + std::to_string(p.dim));
    }
    ChannelMatrix ch;
    ch.outputs = p.size();
    ch.inputs = e.size();
    ch.p.assign(ch.outputs * ch.inputs, 0.0);
    const bool have_pure = e.pure.size() == e.size();
    for (std::size_t j = 0; j < p.size(); ++j) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            double prob;
            if (have_pure) {
                prob = inner(e.pure[i], p.elements[j] * e.pure[i]).real();
            } else {
                prob = trace(p.elements[j] * e.states[i]).real();
            }
            if (prob < -1e-12) {
                throw std::invalid_argument("channel_matrix: P(" + std::to_string(j) + "|" +
                                            std::to_string(i) + ") = " + std::to_string(prob) +
                                            " is negative beyond tolerance");
            }
            ch(j, i) = std::clamp(prob, 0.0, 1.0);
        }
    }
    return ch;
}

double mutual_information(const ChannelMatrix &ch, const std::vector<double> &priors) {
    if (priors.size() != ch.inputs) {
        throw std::invalid_argument("mutual_information: prior count does not match channel");
    }
    double info = 0.0;
    for (std::size_t j = 0; j < ch.outputs; ++j) {
        double marginal = 0.0;
        for (std::size_t k = 0; k < ch.inputs; ++k) {
            marginal += priors[k] * ch(j, k);
        }
        if (marginal <= kProbFloor) {
            continue;
        }
        for (std::size_t i = 0; i < ch.inputs; ++i) {
            const double pji = ch(j, i);
            if (pji > kProbFloor) {
                info += priors[i] * pji * std::log(pji / marginal);
            }
        }
    }
    return std::max(0.0, info);
}

double mutual_information(const Ensemble &e, const Povm &p) {
    return mutual_information(channel_matrix(e, p), e.priors);
}

double i_theta(std::size_t M, double theta) {
    if (M < 2) {
        throw std::invalid_argument("i_theta: M must be at least 2");
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < M; ++k) {
        const double x = 1.0 + std::cos(2.0 * theta - 2.0 * static_cast<double>(k) * kPi /
                                                          static_cast<double>(M));
        sum += xlnx(x);
    }
    return sum / static_cast<double>(M);
}

double i_theta_mixed(std::size_t M, double theta, double eps) {
    if (M < 2) {
        throw std::invalid_argument("i_theta_mixed: M must be at least 2");
    }
    if (!(eps >= 0.0 && eps <= 1.0)) {
        throw std::invalid_argument("i_theta_mixed: eps must lie in [0, 1]");
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < M; ++k) {
        const double x = 1.0 + (1.0 - eps) * std::cos(2.0 * theta -
                                                      2.0 * static_cast<double>(k) * kPi /
                                                          static_cast<double>(M));
        sum += xlnx(x);
    }
    return sum / static_cast<double>(M);
}

double lemma6_info(std::size_t M, const Rank1Real &r) {
    if (r.weights.size() != r.angles.size()) {
        throw std::invalid_argument("lemma6_info: weights/angles length mismatch");
    }
    double info = 0.0;
    for (std::size_t a = 0; a < r.weights.size(); ++a) {
        info += 0.5 * r.weights[a] * i_theta(M, r.angles[a]);
    }
    return info;
}

double bayes_cost(const Ensemble &e, const Povm &p, const BayesCostMatrix &c) {
    const ChannelMatrix ch = channel_matrix(e, p);
    if (c.inputs != ch.inputs || c.outputs != ch.outputs) {
        throw std::invalid_argument("bayes_cost: cost matrix shape does not match channel");
    }
    double cost = 0.0;
    for (std::size_t i = 0; i < ch.inputs; ++i) {
        for (std::size_t j = 0; j < ch.outputs; ++j) {
            cost += c(i, j) * e.priors[i] * ch(j, i);
        }
    }
    return cost;
}

double error_probability(const Ensemble &e, const Povm &p) {
    if (e.size() != p.size()) {
        throw std::invalid_argument("error_probability: " + std::to_string(p.size()) +
                                    " outcomes for " + std::to_string(e.size()) +
                                    " states; the diagonal is undefined");
    }
    const ChannelMatrix ch = channel_matrix(e, p);
    double correct = 0.0;
    for (std::size_t k = 0; k < e.size(); ++k) {
        correct += e.priors[k] * ch(k, k);
    }
    return std::clamp(1.0 - correct, 0.0, 1.0);
}

bool PeOptimalityReport::pass() const {
    if (!hermitian_ok) {
        return false;
    }
    return std::all_of(min_eigenvalues.begin(), min_eigenvalues.end(),
                       [this](double v) { return v >= -tol; });
}

PeOptimalityReport check_pe_optimal(const Ensemble &e, const Povm &p, double tol) {
    if (e.size() != p.size()) {
        throw std::invalid_argument("check_pe_optimal: element count must equal state count");
    }
    if (e.dim != p.dim) {
        throw std::invalid_argument("check_pe_optimal: dimension mismatch");
    }
    CMat gamma(e.dim, e.dim);
    for (std::size_t k = 0; k < e.size(); ++k) {
        gamma = gamma + e.priors[k] * (e.states[k] * p.elements[k]);
    }
    PeOptimalityReport report;
    report.tol = tol;
    report.hermiticity_defect = hermiticity_defect(gamma);
    report.hermitian_ok = report.hermiticity_defect <= tol;
    const CMat lagrangian = 0.5 * (gamma + adjoint(gamma));
    for (std::size_t j = 0; j < e.size(); ++j) {
        const CMat diff = lagrangian - e.priors[j] * e.states[j];
        report.min_eigenvalues.push_back(hermitian_eigen(diff, tol).back().value);
    }
    return report;
}

} // namespace symdet
