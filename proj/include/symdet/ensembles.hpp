#pragma once

#include <cstddef>
#include <vector>

#include "symdet/matcore.hpp"

// Information sources: the symmetric qubit ensemble E_M, its noise-corrupted
// variant, and the 2-qubit tensor ensemble. States are always stored as
// density matrices; the pure vectors are kept alongside when they are known.

namespace symdet {

inline constexpr std::size_t kMaxEnsembleM = 360;

struct Ensemble {
    std::size_t dim = 0;
    std::vector<CMat> states;   // density matrices, trace 1
    std::vector<double> priors; // sum to 1
    std::vector<CVec> pure;     // aligned pure vectors when known, else empty

    std::size_t size() const { return states.size(); }
};

/// Generator of the Z_M action: rotation by π/M in the x–z real plane,
/// V = exp(−i(π/M)σ_y). Satisfies matrix^M = −I.
struct RotationGen {
    std::size_t order = 0; // M
    CMat matrix;           // 2×2 real orthogonal
};

RotationGen rotation_gen(std::size_t M);

/// kth state of E_M as a vector: (cos kπ/M, sin kπ/M).
CVec em_state_vector(std::size_t M, std::size_t k);

/// E_M: M equiprobable pure qubit states spaced by π/M in the x–z plane.
Ensemble make_em(std::size_t M);

/// E_M with each state mixed toward I/2: (1−eps)|ψ_k⟩⟨ψ_k| + eps·I/2.
Ensemble make_mixed_em(std::size_t M, double eps);

/// The 2-qubit ensemble of states |ψ_k⟩⊗|ψ_k⟩ with priors 1/M (dim 4).
Ensemble make_double_em(std::size_t M);

/// Builds an ensemble from raw parts, checking every invariant. Throws
/// std::invalid_argument naming the first violated property and its index.
Ensemble make_ensemble(std::size_t dim, std::vector<CMat> states, std::vector<double> priors);

/// Checks priors, hermiticity, positivity, trace and dimensions. Throws on
/// the first violation.
void validate_ensemble(const Ensemble &e, double tol = kDefaultTol);

} // namespace symdet
