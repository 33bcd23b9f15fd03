#pragma once

#include <cstddef>
#include <vector>

#include "symdet/strategies.hpp"

// Independent brute-force verification: exhaustive scans over the complete
// 3-parameter family of real rank-1 POVMs and θ-sweeps of the closed-form
// information curve.

namespace symdet {

struct SweepCurve {
    std::size_t M = 0;
    std::vector<double> thetas; // radians
    std::vector<double> values; // nats
};

struct ScanResult {
    double best_theta = 0.0;
    double best_phi_a = 0.0;
    double best_phi_b = 0.0;
    double best_value = 0.0; // nats
    std::size_t grid_points_evaluated = 0; // feasible lattice points
    bool refined = false; // refinement improved on the grid optimum
};

/// The general 3-element real rank-1 POVM at (θ, φ_a, φ_b): directions θ,
/// θ+φ_a, θ+φ_b with weights c², a², b² derived from the angles. Throws when
/// the angles are infeasible; degenerate zero-norm elements are dropped.
Povm build_general_w(double theta, double phi_a, double phi_b);

/// Exhaustive lattice scan of the mutual information of E_M over the full
/// 3-parameter family (θ ∈ [0, π/M), φ_a, φ_b ∈ [0, π); grid_n points per
/// axis), followed by coordinate-descent refinement from the best lattice
/// point. Infeasible points are skipped. Grid ties break toward the
/// lexicographically smallest (θ, φ_a, φ_b), so the result is deterministic.
ScanResult scan3(std::size_t M, std::size_t grid_n, std::size_t refine_iters);

/// Uniform sweep of I(θ) over [0, π) with n_points samples.
SweepCurve theta_sweep(std::size_t M, std::size_t n_points);

} // namespace symdet
