#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "symdet/ensembles.hpp"
#include "symdet/matcore.hpp"

// POVM representation and the transform algebra: validation, realification,
// rank-1 refinement, group shifting, convex combination with amalgamation of
// same-direction elements.

namespace symdet {

/// Direction-match tolerance for amalgamating parallel rank-1 elements.
inline constexpr double kAngleTol = 1e-8;
/// Elements with trace at or below this are dropped as zero-weight.
inline constexpr double kTraceTol = 1e-12;

struct Povm {
    std::size_t dim = 0;
    std::vector<CMat> elements;

    std::size_t size() const { return elements.size(); }
};

struct Violation {
    int element = -1; // -1 for whole-set checks
    std::string property;
    double magnitude = 0.0;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

/// Canonical form of a real rank-1 qubit POVM: weights λ_a² and direction
/// angles θ_a in [0, π), with element a reconstructing to λ_a²|a⟩⟨a| for
/// |a⟩ = (cos θ_a, sin θ_a).
struct Rank1Real {
    std::vector<double> weights;
    std::vector<double> angles;

    std::size_t size() const { return weights.size(); }
};

/// Checks hermiticity and positivity of each element and the resolution of
/// the identity. Violations name the failing element and property.
ValidationReport validate(const Povm &p, double tol = kDefaultTol);

/// Replaces every element by its entrywise real part. Valid for any POVM;
/// preserves all outcome probabilities on real states.
Povm realify(const Povm &p);

/// Splits every element into its eigenvalue-scaled rank-1 eigenprojectors,
/// dropping parts with eigenvalue ≤ tol.
Povm refine_rank1(const Povm &p, double tol = kDefaultTol);

/// Conjugates every element by V^l (dim-2 POVMs only).
Povm shift(const Povm &p, const RotationGen &g, long l);

/// Convex combination: the union of weight-scaled elements, with rank-1
/// elements lying in the same direction (within angle_tol, mod π) summed into
/// one element and zero-weight elements dropped. Weights must sum to 1.
Povm convex_combine(const std::vector<std::pair<double, Povm>> &terms,
                    double angle_tol = kAngleTol);

/// Converts a dim-2 POVM of real rank-1 elements to (weight, angle) form.
/// Throws naming the first element that is not rank-1 with a real direction.
Rank1Real to_rank1_real(const Povm &p, double tol = kDefaultTol);

/// Rebuilds the POVM λ_a²|a⟩⟨a| from its canonical form.
Povm from_rank1_real(const Rank1Real &r);

/// |v⟩⟨v| for v = (cos θ, sin θ).
CMat direction_projector(double angle);

} // namespace symdet
