#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "symdet/matcore.hpp"

// Naimark dilation of the 3-element W POVM (m = n family) into a von Neumann
// measurement on the 4-dimensional two-port single-photon space, decomposed
// into the U2·U1 circuit, plus an exact photon-counting simulator.
//
// Port basis order: E_0 = ↑_a vac_b, E_1 = ↓_a vac_b, E_2 = vac_a ↑_b,
// E_3 = vac_a ↓_b. The signal enters port a; port b starts in the vacuum.

namespace symdet {

struct NaimarkPlan {
    std::size_t M = 0;
    std::size_t m = 0;
    double gamma = 0.0; // rotation angle: cos(γ/2) = cot(mπ/M), sin(γ/2) ≤ 0
    std::array<CVec, 3> omega_vecs; // measurement vectors ω_j*, dim 2, un-normalized
    std::array<CVec, 4> Omega_vecs; // orthonormal dilation vectors Ω_j, dim 4
    CMat U1;                        // 4×4 real orthogonal
    CMat U2;                        // 4×4 real orthogonal
    // Detector port E_j → POVM outcome index; -1 marks the dark port.
    std::array<int, 4> outcome_map{};
};

struct DetectionStats {
    std::array<double, 4> probs{}; // at ports E_0..E_3, sum to 1
};

struct DilationCheck {
    std::string name;
    double defect = 0.0;
    bool pass = false;
};

struct DilationReport {
    std::vector<DilationCheck> checks;

    bool all_pass() const;
};

/// Builds the dilation for E_M with the m = n strategy. Requires M odd and
/// M/4 < m < M/2 (so that cot(mπ/M) ≤ 1 and γ is defined).
NaimarkPlan build_plan(std::size_t M, std::size_t m);

/// Four checks, each pass/fail at tol: channel equality
/// ⟨ω_j|ψ_i⟩ = ⟨Ω_j|(ψ_i ⊗ vac)⟩, orthogonality of U2·U1, the basis
/// relations ⟨Ω_j| = ⟨E_σ(j)|U2·U1, and Gram(Ω) = I.
DilationReport verify_dilation(const NaimarkPlan &plan, double tol = kDefaultTol);

/// Embeds the signal qubit into the 4-port space: ψ in port a, port b vacuum.
CVec embed_signal(const CVec &psi);

/// Exact port statistics for the input state (cos θ, sin θ):
/// probs_j = |⟨E_j| U2·U1 |ψ(θ)⟩⊗|vac⟩|².
DetectionStats simulate(const NaimarkPlan &plan, double input_theta);

/// Seeded multinomial draw of photon counts from the exact port statistics
/// (demo output only).
std::array<std::uint64_t, 4> sample_counts(const NaimarkPlan &plan, double input_theta,
                                           std::uint64_t shots, std::uint64_t seed);

/// The polarization-rotator matrix
/// [[cos γ/2, sin γ/2], [−sin γ/2, cos γ/2]].
CMat ry_gate(double gamma);

} // namespace symdet
