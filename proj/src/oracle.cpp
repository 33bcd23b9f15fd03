#include "symdet/oracle.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "symdet/measures.hpp"

namespace symdet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRefineStopStep = 1e-9;

// Closed-form objective: I = (c²/2)I(θ) + (a²/2)I(θ+φ_a) + (b²/2)I(θ+φ_b).
// Returns -inf for infeasible angles so the scan can skip them.
double objective(std::size_t M, double theta, double phi_a, double phi_b) {
    const auto w = general_w_weights(phi_a, phi_b);
    if (!w) {
        return -std::numeric_limits<double>::infinity();
    }
    return 0.5 * w->c2 * i_theta(M, theta) + 0.5 * w->a2 * i_theta(M, theta + phi_a) +
           0.5 * w->b2 * i_theta(M, theta + phi_b);
}

} // namespace

Povm build_general_w(double theta, double phi_a, double phi_b) {
    const auto w = general_w_weights(phi_a, phi_b);
    if (!w) {
        throw std::invalid_argument(
            "build_general_w: (phi_a, phi_b) lies outside the feasible region "
            "(requires a², b² ≥ 0 and a² + b² ≤ 2)");
    }
    const std::array<double, 3> weights{w->c2, w->a2, w->b2};
    const std::array<double, 3> angles{theta, theta + phi_a, theta + phi_b};
    Povm p;
    p.dim = 2;
    for (std::size_t i = 0; i < 3; ++i) {
        if (weights[i] > kTraceTol) {
            p.elements.push_back(weights[i] * direction_projector(angles[i]));
        }
    }
    return p;
}

ScanResult scan3(std::size_t M, std::size_t grid_n, std::size_t refine_iters) {
    if (M < 2) {
        throw std::invalid_argument("scan3: M must be at least 2");
    }
    if (grid_n < 8) {
        throw std::invalid_argument("scan3: grid_n must be at least 8");
    }

    const double theta_step = kPi / static_cast<double>(M) / static_cast<double>(grid_n);
    const double phi_step = kPi / static_cast<double>(grid_n);

    ScanResult result;
    result.best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t it = 0; it < grid_n; ++it) {
        const double theta = static_cast<double>(it) * theta_step;
        for (std::size_t ia = 0; ia < grid_n; ++ia) {
            const double phi_a = static_cast<double>(ia) * phi_step;
            for (std::size_t ib = 0; ib < grid_n; ++ib) {
                const double phi_b = static_cast<double>(ib) * phi_step;
                const double value = objective(M, theta, phi_a, phi_b);
                if (!std::isfinite(value)) {
                    continue;
                }
                ++result.grid_points_evaluated;
                if (value > result.best_value) {
                    result.best_value = value;
                    result.best_theta = theta;
                    result.best_phi_a = phi_a;
                    result.best_phi_b = phi_b;
                }
            }
        }
    }

    // Coordinate descent from the best lattice point, shrinking the step when
    // a full round makes no progress.
    std::array<double, 3> x{result.best_theta, result.best_phi_a, result.best_phi_b};
    std::array<double, 3> step{theta_step, phi_step, phi_step};
    double best = result.best_value;
    for (std::size_t round = 0; round < refine_iters && step[0] >= kRefineStopStep; ++round) {
        bool improved = false;
        for (std::size_t c = 0; c < 3; ++c) {
            for (const double delta : {step[c], -step[c]}) {
                std::array<double, 3> y = x;
                y[c] += delta;
                const double value = objective(M, y[0], y[1], y[2]);
                if (value > best) {
                    best = value;
                    x = y;
                    improved = true;
                }
            }
        }
        if (!improved) {
            for (double &s : step) {
                s *= 0.5;
            }
        }
    }
    if (best > result.best_value) {
        result.refined = true;
        result.best_value = best;
        result.best_theta = x[0];
        result.best_phi_a = x[1];
        result.best_phi_b = x[2];
    }
    return result;
}

SweepCurve theta_sweep(std::size_t M, std::size_t n_points) {
    if (n_points < 2) {
        throw std::invalid_argument("theta_sweep: n_points must be at least 2");
    }
    SweepCurve curve;
    curve.M = M;
    curve.thetas.reserve(n_points);
    curve.values.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double theta = static_cast<double>(i) * kPi / static_cast<double>(n_points);
        curve.thetas.push_back(theta);
        curve.values.push_back(i_theta(M, theta));
    }
    return curve;
}

} // namespace symdet
