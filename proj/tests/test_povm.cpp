#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "symdet/measures.hpp"
#include "symdet/povm.hpp"
#include "symdet/strategies.hpp"
#include "test_support.hpp"

using namespace symdet;
using test::Rng;

namespace {

constexpr double kPi = std::numbers::pi;

Povm half_half() {
    Povm p;
    p.dim = 2;
    p.elements = {0.5 * CMat::identity(2), 0.5 * CMat::identity(2)};
    return p;
}

// Matches two POVMs as multisets of elements, greedily by max-norm distance.
double multiset_distance(const Povm &a, const Povm &b) {
    if (a.size() != b.size()) {
        return 1e9;
    }
    std::vector<bool> used(b.size(), false);
    double worst = 0.0;
    for (const auto &el : a.elements) {
        double best = 1e9;
        std::size_t best_j = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!used[j]) {
                const double d = max_abs_diff(el, b.elements[j]);
                if (d < best) {
                    best = d;
                    best_j = j;
                }
            }
        }
        used[best_j] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

} // namespace

TEST_CASE("validate accepts and rejects the basic cases") {
    CHECK(validate(half_half()).ok());

    Povm bad;
    bad.dim = 2;
    bad.elements = {CMat(2, 2, {1, 0, 0, 0}), CMat(2, 2, {1, 0, 0, 0})};
    const auto report = validate(bad);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().property == "elements do not sum to identity");

    CHECK(validate(covariant_am(3)).ok());
}

TEST_CASE("validate flags any single-element perturbation above 10 tol") {
    Rng rng(99);
    const double tol = 1e-10;
    for (int rep = 0; rep < 40; ++rep) {
        Povm p = covariant_am(2 + rep % 6);
        const std::size_t idx = static_cast<std::size_t>(test::urand(rng, 0, 0.999) *
                                                         static_cast<double>(p.size()));
        CMat noise = test::random_hermitian(rng, 2);
        const double magnitude = test::urand(rng, 11.0, 100.0) * tol;
        noise = (magnitude / max_abs(noise)) * noise;
        p.elements[idx] = p.elements[idx] + noise;
        CHECK_FALSE(validate(p, tol).ok());
    }
}

TEST_CASE("realify fixed point and the sigma_y pair") {
    const Povm real_povm = covariant_am(5);
    const Povm same = realify(real_povm);
    for (std::size_t i = 0; i < real_povm.size(); ++i) {
        CHECK(max_abs_diff(real_povm.elements[i], same.elements[i]) == 0.0);
    }

    Povm ypair;
    ypair.dim = 2;
    ypair.elements = {0.5 * (CMat::identity(2) + pauli_y()),
                      0.5 * (CMat::identity(2) - pauli_y())};
    REQUIRE(validate(ypair).ok());
    const Povm realified = realify(ypair);
    CHECK(max_abs_diff(realified.elements[0], 0.5 * CMat::identity(2)) <= 1e-15);
    CHECK(max_abs_diff(realified.elements[1], 0.5 * CMat::identity(2)) <= 1e-15);
    CHECK(validate(realified).ok());
}

TEST_CASE("realify is idempotent and preserves real-state channels") {
    Rng rng(17);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t dim = rep % 2 == 0 ? 2 : 3;
        const Povm p = test::random_complex_povm(rng, dim, 3);
        const Povm r1 = realify(p);
        const Povm r2 = realify(r1);
        for (std::size_t i = 0; i < p.size(); ++i) {
            CHECK(max_abs_diff(r1.elements[i], r2.elements[i]) == 0.0);
        }
        const Ensemble e = test::random_real_ensemble(rng, dim, 3);
        const ChannelMatrix ca = channel_matrix(e, p);
        const ChannelMatrix cb = channel_matrix(e, r1);
        for (std::size_t k = 0; k < ca.p.size(); ++k) {
            CHECK(std::abs(ca.p[k] - cb.p[k]) <= 1e-12);
        }
    }
}

TEST_CASE("refine_rank1 splits I/2 pairs and fixes rank-1 inputs") {
    const Povm refined = refine_rank1(half_half());
    CHECK(refined.size() == 4);
    CHECK(validate(refined).ok());
    for (const auto &el : refined.elements) {
        CHECK(trace(el).real() == doctest::Approx(0.5).epsilon(1e-12));
    }

    const Povm am = covariant_am(3);
    const Povm same = refine_rank1(am);
    CHECK(multiset_distance(same, am) <= 1e-12);
}

TEST_CASE("refinement never decreases mutual information") {
    Rng rng(23);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t dim = rep % 2 == 0 ? 2 : 3;
        const Povm p = test::random_complex_povm(rng, dim, 2 + rep % 3);
        const Povm refined = refine_rank1(p);
        CHECK(refined.size() <= dim * p.size());
        CHECK(validate(refined).ok());
        const Ensemble e = test::random_complex_ensemble(rng, dim, 3);
        CHECK(mutual_information(e, refined) >= mutual_information(e, p) - 1e-10);
    }
}

TEST_CASE("shift by zero and by M leaves elements unchanged") {
    const Povm w = theorem2_w(5, 2, 2);
    const RotationGen g = rotation_gen(5);
    const Povm s0 = shift(w, g, 0);
    const Povm sM = shift(w, g, 5);
    for (std::size_t i = 0; i < w.size(); ++i) {
        CHECK(max_abs_diff(s0.elements[i], w.elements[i]) <= 1e-15);
        CHECK(max_abs_diff(sM.elements[i], w.elements[i]) <= 1e-12);
    }
}

TEST_CASE("shift moves rank-1 angles by l*pi/M and composes additively") {
    Rng rng(41);
    const RotationGen g = rotation_gen(7);
    const Povm p = test::random_rank1_real_povm(rng, 3);
    const Rank1Real before = to_rank1_real(p);
    const Povm shifted = shift(p, g, 2);
    const Rank1Real after = to_rank1_real(shifted);
    for (std::size_t i = 0; i < before.size(); ++i) {
        const double d = std::remainder(after.angles[i] - before.angles[i] - 2.0 * kPi / 7.0, kPi);
        CHECK(std::abs(d) <= 1e-12);
    }

    for (long l1 : {-3L, 1L, 4L}) {
        for (long l2 : {2L, 9L}) {
            const Povm a = shift(shift(p, g, l1), g, l2);
            const Povm b = shift(p, g, l1 + l2);
            for (std::size_t i = 0; i < p.size(); ++i) {
                CHECK(max_abs_diff(a.elements[i], b.elements[i]) <= 1e-12);
            }
        }
    }
}

TEST_CASE("convex_combine basics") {
    const Povm am = covariant_am(3);

    SUBCASE("single unit-weight term is unchanged") {
        const Povm c = convex_combine({{1.0, am}});
        CHECK(multiset_distance(c, am) <= 1e-15);
    }
    SUBCASE("zero-weight terms are dropped") {
        const Povm c = convex_combine({{1.0, am}, {0.0, half_half()}});
        CHECK(multiset_distance(c, am) <= 1e-15);
    }
    SUBCASE("weights must sum to one") {
        CHECK_THROWS_AS(convex_combine({{0.7, am}, {0.2, am}}), std::invalid_argument);
        CHECK_THROWS_AS(convex_combine({{1.2, am}, {-0.2, am}}), std::invalid_argument);
    }
    SUBCASE("swapped orthogonal pairs amalgamate back to the pair") {
        Povm pair;
        pair.dim = 2;
        pair.elements = {direction_projector(0.3), direction_projector(0.3 + kPi / 2.0)};
        Povm swapped;
        swapped.dim = 2;
        swapped.elements = {pair.elements[1], pair.elements[0]};
        const Povm c = convex_combine({{0.5, pair}, {0.5, swapped}});
        CHECK(c.size() == 2);
        CHECK(multiset_distance(c, pair) <= 1e-12);
    }
}

TEST_CASE("amalgamation of parallel rank-1 elements preserves mutual information") {
    Rng rng(57);
    for (int rep = 0; rep < 40; ++rep) {
        const Povm p = test::random_rank1_real_povm(rng, 2 + rep % 3);
        // split every element into two halves pointing the same way
        Povm split;
        split.dim = 2;
        for (const auto &el : p.elements) {
            split.elements.push_back(0.5 * el);
            split.elements.push_back(0.5 * el);
        }
        const Povm merged = convex_combine({{1.0, split}});
        CHECK(merged.size() == p.size());
        const Ensemble e = make_em(2 + rep % 6);
        CHECK(std::abs(mutual_information(e, split) - mutual_information(e, p)) <= 1e-12);
        CHECK(std::abs(mutual_information(e, merged) - mutual_information(e, p)) <= 1e-12);
    }
}

TEST_CASE("convex combinations never beat the best ingredient") {
    Rng rng(71);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t n_terms = 2 + rep % 2;
        std::vector<std::pair<double, Povm>> terms;
        const auto weights = test::random_simplex(rng, n_terms);
        for (std::size_t t = 0; t < n_terms; ++t) {
            terms.emplace_back(weights[t], test::random_rank1_real_povm(rng, 2 + rep % 3));
        }
        const Povm combined = convex_combine(terms);
        CHECK(validate(combined).ok());
        const Ensemble e = test::random_real_ensemble(rng, 2, 2 + rep % 3);
        double best = 0.0;
        for (const auto &[w, povm] : terms) {
            best = std::max(best, mutual_information(e, povm));
        }
        CHECK(mutual_information(e, combined) <= best + 1e-9);
    }
}

TEST_CASE("to_rank1_real canonical forms") {
    Povm zpair;
    zpair.dim = 2;
    zpair.elements = {CMat(2, 2, {1, 0, 0, 0}), CMat(2, 2, {0, 0, 0, 1})};
    const Rank1Real r = to_rank1_real(zpair);
    REQUIRE(r.size() == 2);
    CHECK(r.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.weights[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(r.angles[0]) <= 1e-14);
    CHECK(r.angles[1] == doctest::Approx(kPi / 2.0).epsilon(1e-14));

    const Rank1Real am = to_rank1_real(covariant_am(3));
    REQUIRE(am.size() == 3);
    for (double w : am.weights) {
        CHECK(w == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    }
    CHECK(am.angles[0] == doctest::Approx(kPi / 2.0).epsilon(1e-12));
    CHECK(am.angles[1] == doctest::Approx(kPi / 2.0 + kPi / 3.0).epsilon(1e-12));
    CHECK(am.angles[2] == doctest::Approx(kPi / 6.0).epsilon(1e-12));

    const Rank1Real w311 = to_rank1_real(theorem2_w(3, 1, 1));
    REQUIRE(w311.size() == 3);
    for (double w : w311.weights) {
        CHECK(w == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    }
}

TEST_CASE("to_rank1_real round-trips and rejects bad elements") {
    Rng rng(4);
    for (int rep = 0; rep < 30; ++rep) {
        const Povm p = test::random_rank1_real_povm(rng, 2 + rep % 3);
        const Povm back = from_rank1_real(to_rank1_real(p));
        CHECK(multiset_distance(back, p) <= 1e-12);
    }

    CHECK_THROWS_WITH_AS(to_rank1_real(half_half()), doctest::Contains("element 0 is not rank 1"),
                         std::invalid_argument);

    Povm ypair;
    ypair.dim = 2;
    ypair.elements = {0.5 * (CMat::identity(2) + pauli_y()),
                      0.5 * (CMat::identity(2) - pauli_y())};
    CHECK_THROWS_WITH_AS(to_rank1_real(ypair), doctest::Contains("not real"),
                         std::invalid_argument);
}

TEST_CASE("refinement keeps at most d elements per input element") {
    Rng rng(63);
    for (int rep = 0; rep < 30; ++rep) {
        const Povm p = test::random_complex_povm(rng, 2, 2 + rep % 3);
        CHECK(refine_rank1(p).size() <= 2 * p.size());
    }
}
