#pragma once

#include <cstddef>
#include <vector>

#include "symdet/ensembles.hpp"
#include "symdet/povm.hpp"

// Scalar figures of merit: Shannon mutual information (general and closed
// form), Bayes cost, error probability, and the P_e-optimality certificate.
// All information values are in nats.

namespace symdet {

struct ChannelMatrix {
    std::size_t outputs = 0; // rows, indexed j
    std::size_t inputs = 0;  // cols, indexed i
    std::vector<double> p;   // row-major, p[j*inputs + i] = P(j|i)

    double operator()(std::size_t j, std::size_t i) const { return p[j * inputs + i]; }
    double &operator()(std::size_t j, std::size_t i) { return p[j * inputs + i]; }
};

struct BayesCostMatrix {
    std::size_t inputs = 0;  // rows, indexed i
    std::size_t outputs = 0; // cols, indexed j
    std::vector<double> c;   // row-major, c[i*outputs + j] = C_ij

    double operator()(std::size_t i, std::size_t j) const { return c[i * outputs + j]; }

    /// C_ij = 1 − δ_ij (the error-counting cost).
    static BayesCostMatrix error_cost(std::size_t n);
};

/// P(j|i) = Tr(π_j ρ_i), floored/clipped into [0, 1]; columns sum to 1.
ChannelMatrix channel_matrix(const Ensemble &e, const Povm &p);

/// Shannon mutual information of the channel with the given input priors,
/// with the conventions 0·log(·) = 0 and zero output marginals skipped.
double mutual_information(const ChannelMatrix &ch, const std::vector<double> &priors);

double mutual_information(const Ensemble &e, const Povm &p);

/// Closed-form I(θ) for E_M:
/// (1/M) Σ_k (1 + cos(2θ − 2kπ/M)) ln(1 + cos(2θ − 2kπ/M)).
double i_theta(std::size_t M, double theta);

/// I(θ) with the cosine damped by (1−eps) — the maximally-mixed-noise source.
double i_theta_mixed(std::size_t M, double theta, double eps);

/// Σ_a (λ_a²/2) I(θ_a): the mutual information of E_M under any real rank-1
/// POVM, from its canonical (weight, angle) form.
double lemma6_info(std::size_t M, const Rank1Real &r);

/// B = Σ_ij C_ij ξ_i P(j|i).
double bayes_cost(const Ensemble &e, const Povm &p, const BayesCostMatrix &c);

/// Average error probability 1 − Σ_k ξ_k P(k|k); requires one POVM element
/// per state.
double error_probability(const Ensemble &e, const Povm &p);

/// Helstrom/Holevo certificate for minimum-error optimality:
/// Γ = Σ_k ξ_k ρ_k π_k must be hermitian and Γ − ξ_j ρ_j ⪰ 0 for every j.
struct PeOptimalityReport {
    double hermiticity_defect = 0.0;
    bool hermitian_ok = false;
    std::vector<double> min_eigenvalues; // of Γ − ξ_j ρ_j, per j
    double tol = 0.0;

    bool pass() const;
};

PeOptimalityReport check_pe_optimal(const Ensemble &e, const Povm &p, double tol = kDefaultTol);

} // namespace symdet
