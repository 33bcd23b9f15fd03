#pragma once

#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "symdet/ensembles.hpp"
#include "symdet/povm.hpp"

// Seeded generators shared by the unit and acceptance suites.

namespace symdet::test {

using Rng = std::mt19937_64;

inline double urand(Rng &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline CMat random_complex_matrix(Rng &rng, std::size_t dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMat m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            m(i, j) = cplx(gauss(rng), gauss(rng));
        }
    }
    return m;
}

inline CMat random_hermitian(Rng &rng, std::size_t dim) {
    const CMat g = random_complex_matrix(rng, dim);
    return 0.5 * (g + adjoint(g));
}

inline CMat random_psd(Rng &rng, std::size_t dim) {
    const CMat g = random_complex_matrix(rng, dim);
    return g * adjoint(g);
}

inline CMat random_real_density(Rng &rng, std::size_t dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMat a(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            a(i, j) = gauss(rng);
        }
    }
    CMat rho = a * transpose(a);
    return (1.0 / trace(rho).real()) * rho;
}

inline std::vector<double> random_simplex(Rng &rng, std::size_t n) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (auto &x : w) {
        x = urand(rng, 0.05, 1.0);
        sum += x;
    }
    for (auto &x : w) {
        x /= sum;
    }
    return w;
}

inline Ensemble random_real_ensemble(Rng &rng, std::size_t dim, std::size_t n_states) {
    Ensemble e;
    e.dim = dim;
    e.priors = random_simplex(rng, n_states);
    for (std::size_t i = 0; i < n_states; ++i) {
        e.states.push_back(random_real_density(rng, dim));
    }
    return e;
}

inline Ensemble random_complex_ensemble(Rng &rng, std::size_t dim, std::size_t n_states) {
    Ensemble e;
    e.dim = dim;
    e.priors = random_simplex(rng, n_states);
    for (std::size_t i = 0; i < n_states; ++i) {
        CMat rho = random_psd(rng, dim);
        e.states.push_back((1.0 / trace(rho).real()) * rho);
    }
    return e;
}

// S^{-1/2} H_i S^{-1/2} for random PSD H_i: a generic (complex, full-rank)
// POVM.
inline Povm random_complex_povm(Rng &rng, std::size_t dim, std::size_t n_elements) {
    std::vector<CMat> parts;
    CMat total(dim, dim);
    for (std::size_t i = 0; i < n_elements; ++i) {
        parts.push_back(random_psd(rng, dim));
        total = total + parts.back();
    }
    CMat inv_sqrt(dim, dim);
    for (const auto &pair : hermitian_eigen(total)) {
        if (pair.value <= 1e-12) {
            throw std::runtime_error("random_complex_povm: singular normalization");
        }
        inv_sqrt = inv_sqrt + (1.0 / std::sqrt(pair.value)) * outer(pair.vector, pair.vector);
    }
    Povm p;
    p.dim = dim;
    for (const auto &h : parts) {
        p.elements.push_back(inv_sqrt * h * inv_sqrt);
    }
    return p;
}

// Convex combination of random orthogonal direction pairs: a generic real
// rank-1 qubit POVM.
inline Povm random_rank1_real_povm(Rng &rng, std::size_t n_pairs) {
    const auto weights = random_simplex(rng, n_pairs);
    Povm p;
    p.dim = 2;
    for (std::size_t t = 0; t < n_pairs; ++t) {
        const double angle = urand(rng, 0.0, std::numbers::pi);
        p.elements.push_back(weights[t] * direction_projector(angle));
        p.elements.push_back(weights[t] *
                             direction_projector(angle + std::numbers::pi / 2.0));
    }
    return p;
}

} // namespace symdet::test
