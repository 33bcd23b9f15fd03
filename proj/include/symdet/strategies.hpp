#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symdet/povm.hpp"

// Constructors for every optimal detection-strategy family: the covariant
// M-element POVM, the 3-element W POVMs, subgroup reductions, and shifted
// convex combinations.

namespace symdet {

/// Parameters of the 3-element W POVM for E_M:
/// a² = cos(nπ/M)/(sin(mπ/M) sin((m+n)π/M)), b² likewise with m↔n,
/// c² = 2 − a² − b².
struct W3Params {
    std::size_t M = 0;
    std::size_t m = 0;
    std::size_t n = 0;
    double a2 = 0.0;
    double b2 = 0.0;
    double c2 = 0.0;
};

/// The three free parameters of the general real rank-1 3-element POVM:
/// directions at angles theta, theta+phi_a, theta+phi_b.
struct GeneralW {
    double theta = 0.0;
    double phi_a = 0.0;
    double phi_b = 0.0;
};

struct W3Weights {
    double a2 = 0.0;
    double b2 = 0.0;
    double c2 = 0.0;
};

/// Derives (a², b², c²) from the angles (φ_a, φ_b) of the general 3-element
/// form. Returns nullopt when the pair lies outside the feasible region
/// (a² or b² negative, a² + b² > 2, or a degenerate denominator).
std::optional<W3Weights> general_w_weights(double phi_a, double phi_b);

/// Evaluates and validates the 3-element W parameters for (M, m, n). Throws
/// naming the violated inequality when infeasible.
W3Params w3_params(std::size_t M, std::size_t m, std::size_t n);

/// All feasible (m, n) pairs with 1 ≤ m, n ≤ M−1. No claim is made about
/// which pairs give geometrically inequivalent POVMs.
std::vector<W3Params> feasible_w_params(std::size_t M);

/// The Z_M-covariant optimal POVM: M elements (2/M)|a_j⟩⟨a_j| with a_j at
/// angle π/2 + jπ/M, each orthogonal to the state ψ_j.
Povm covariant_am(std::size_t M);

/// The W POVM {ω_0*, ω_1*, ω_2*} for (M, m, n); degenerate zero-norm
/// elements are dropped.
Povm theorem2_w(std::size_t M, std::size_t m, std::size_t n);

/// Subgroup reduction: the k elements (2/k)|a_{l+jM/k}⟩⟨a_{l+jM/k}| of the
/// coset l, for k dividing M.
Povm subgroup_povm(std::size_t M, std::size_t k, std::size_t l);

/// True iff every angle equals π/2 + (integer)·π/M within tol (mod π) — the
/// alignment condition under which any real rank-1 POVM is optimal for E_M.
bool lemma7_check(std::size_t M, const Rank1Real &r, double tol = kDefaultTol);

/// The 4-element POVM obtained by convexly combining the M=5 W POVM with its
/// shift by two steps, amalgamating the two proportional pairs.
Povm mu4_povm(double lambda);

/// Uniform convex combination of all M shifts of the (M, m, n) W POVM,
/// amalgamated; equals covariant_am(M) up to element order.
Povm covariant_from_w(std::size_t M, std::size_t m, std::size_t n);

/// The minimum-error strategy {(2/M)|ψ_k⟩⟨ψ_k|} based on the state
/// directions themselves.
Povm state_direction_povm(std::size_t M);

} // namespace symdet
