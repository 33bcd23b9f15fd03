#include "symdet/povm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace symdet {

namespace {

constexpr double kPi = std::numbers::pi;

// Scale-aware rank-1 test: second eigenvalue ≤ tol·(first + 1).
bool is_rank1(const std::vector<EigenPair> &eig, double tol) {
    if (eig.empty() || eig.front().value <= 0.0) {
        return false;
    }
    return eig.size() < 2 || std::abs(eig[1].value) <= tol * (eig.front().value + 1.0);
}

// Angular distance between two unit direction vectors, in [0, π/2]; 0 means
// parallel (mod a phase). Computed from the orthogonal residual so that
// near-parallel directions come out at roundoff level, not sqrt(roundoff).
double direction_gap(const CVec &p, const CVec &q) {
    const cplx overlap = inner(q, p);
    double residual_sq = 0.0;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        residual_sq += std::norm(p[i] - overlap * q[i]);
    }
    return std::asin(std::min(1.0, std::sqrt(residual_sq)));
}

} // namespace

std::string ValidationReport::to_string() const {
    if (ok()) {
        return "valid";
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        const auto &v = violations[i];
        if (i) {
            os << "; ";
        }
        if (v.element >= 0) {
            os << "element " << v.element << ": ";
        }
        os << v.property << " (magnitude " << v.magnitude << ")";
    }
    return os.str();
}

CMat direction_projector(double angle) {
    const CVec v{std::cos(angle), std::sin(angle)};
    return outer(v, v);
}

ValidationReport validate(const Povm &p, double tol) {
    ValidationReport report;
    if (p.elements.empty()) {
        report.violations.push_back({-1, "no elements", 0.0});
        return report;
    }
    CMat sum(p.dim, p.dim);
    for (std::size_t i = 0; i < p.elements.size(); ++i) {
        const CMat &el = p.elements[i];
        if (el.rows() != p.dim || el.cols() != p.dim) {
            report.violations.push_back({static_cast<int>(i), "shape mismatch", 0.0});
            continue;
        }
        const double defect = hermiticity_defect(el);
        if (defect > tol) {
            report.violations.push_back({static_cast<int>(i), "not hermitian", defect});
        }
        const CMat herm = 0.5 * (el + adjoint(el));
        const auto eig = hermitian_eigen(herm, tol * 10.0 + defect);
        const double min_eig = eig.back().value;
        if (min_eig < -tol) {
            report.violations.push_back({static_cast<int>(i), "not positive semidefinite", -min_eig});
        }
        sum = sum + el;
    }
    const double sum_defect = max_abs_diff(sum, CMat::identity(p.dim));
    if (sum_defect > tol) {
        report.violations.push_back({-1, "elements do not sum to identity", sum_defect});
    }
    return report;
}

Povm realify(const Povm &p) {
    Povm out;
    out.dim = p.dim;
    out.elements.reserve(p.size());
    for (const CMat &el : p.elements) {
        if (el.rows() != p.dim || el.cols() != p.dim) {
            throw std::invalid_argument("realify: element shape does not match POVM dim");
        }
        out.elements.push_back(real_part(el));
    }
    // The real part of a positive operator is positive; a failure here means
    // the input was not a POVM.
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
        if (!is_psd(out.elements[i], kDefaultTol)) {
            throw std::logic_error("realify: element " + std::to_string(i) +
                                   " lost positivity; input was not a valid POVM");
        }
    }
    return out;
}

Povm refine_rank1(const Povm &p, double tol) {
    Povm out;
    out.dim = p.dim;
    for (const CMat &el : p.elements) {
        const auto eig = hermitian_eigen(el, std::max(tol, kDefaultTol));
        for (const auto &pair : eig) {
            if (pair.value > tol) {
                out.elements.push_back(pair.value * outer(pair.vector, pair.vector));
            }
        }
    }
    return out;
}

Povm shift(const Povm &p, const RotationGen &g, long l) {
    if (p.dim != 2) {
        throw std::invalid_argument("shift: only dim-2 POVMs can be shifted");
    }
    // V^l is the rotation by lπ/M exactly; computing it directly keeps
    // shift(shift(p, l1), l2) = shift(p, l1 + l2) at machine precision.
    const double a = static_cast<double>(l) * kPi / static_cast<double>(g.order);
    const CMat v(2, 2, {std::cos(a), -std::sin(a), std::sin(a), std::cos(a)});
    const CMat vdag = adjoint(v);
    Povm out;
    out.dim = 2;
    out.elements.reserve(p.size());
    for (const CMat &el : p.elements) {
        out.elements.push_back(v * el * vdag);
    }
    return out;
}

Povm convex_combine(const std::vector<std::pair<double, Povm>> &terms, double angle_tol) {
    if (terms.empty()) {
        throw std::invalid_argument("convex_combine: no terms");
    }
    double wsum = 0.0;
    for (const auto &[w, povm] : terms) {
        if (w < 0.0) {
            throw std::invalid_argument("convex_combine: negative weight");
        }
        if (povm.dim != terms.front().second.dim) {
            throw std::invalid_argument("convex_combine: POVM dimensions differ");
        }
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > 1e-12) {
        throw std::invalid_argument("convex_combine: weights sum to " + std::to_string(wsum) +
                                    ", expected 1 within 1e-12");
    }

    struct Group {
        bool rank1 = false;
        CVec direction; // normalized representative (rank-1 only)
        CMat sum;
    };
    std::vector<Group> groups;

    for (const auto &[w, povm] : terms) {
        for (const CMat &el : povm.elements) {
            CMat scaled = w * el;
            const double tr = trace(scaled).real();
            if (tr <= kTraceTol) {
                continue; // zero-weight element
            }
            const auto eig = hermitian_eigen(scaled, kDefaultTol);
            if (is_rank1(eig, kDefaultTol)) {
                const CVec &dir = eig.front().vector;
                bool merged = false;
                for (auto &g : groups) {
                    if (g.rank1 && direction_gap(g.direction, dir) <= angle_tol) {
                        g.sum = g.sum + scaled;
                        merged = true;
                        break;
                    }
                }
                if (!merged) {
                    groups.push_back({true, dir, std::move(scaled)});
                }
            } else {
                groups.push_back({false, CVec(), std::move(scaled)});
            }
        }
    }

    Povm out;
    out.dim = terms.front().second.dim;
    out.elements.reserve(groups.size());
    for (auto &g : groups) {
        out.elements.push_back(std::move(g.sum));
    }
    return out;
}

Rank1Real to_rank1_real(const Povm &p, double tol) {
    if (p.dim != 2) {
        throw std::invalid_argument("to_rank1_real: POVM must have dim 2");
    }
    Rank1Real r;
    for (std::size_t i = 0; i < p.elements.size(); ++i) {
        const CMat &el = p.elements[i];
        const std::string name = "to_rank1_real: element " + std::to_string(i);
        const double w = trace(el).real();
        if (w <= kTraceTol) {
            continue; // zero-weight element
        }
        double imag_max = 0.0;
        for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t b = 0; b < 2; ++b) {
                imag_max = std::max(imag_max, std::abs(el(a, b).imag()));
            }
        }
        if (imag_max > tol) {
            throw std::invalid_argument(name + " is not real (max imaginary part " +
                                        std::to_string(imag_max) + ")");
        }
        const auto eig = hermitian_eigen(el, tol);
        if (!is_rank1(eig, tol)) {
            throw std::invalid_argument(name + " is not rank 1 (second eigenvalue " +
                                        std::to_string(eig.size() > 1 ? eig[1].value : 0.0) + ")");
        }
        // w|v⟩⟨v| with v = (cos θ, sin θ) has entries
        // (w/2)[[1+cos2θ, sin2θ],[sin2θ, 1−cos2θ]].
        double theta = 0.5 * std::atan2(2.0 * el(0, 1).real(), (el(0, 0) - el(1, 1)).real());
        if (theta < 0.0) {
            theta += kPi;
        }
        if (theta >= kPi) {
            theta -= kPi;
        }
        r.weights.push_back(w);
        r.angles.push_back(theta);
    }
    return r;
}

Povm from_rank1_real(const Rank1Real &r) {
    if (r.weights.size() != r.angles.size()) {
        throw std::invalid_argument("from_rank1_real: weights/angles length mismatch");
    }
    Povm p;
    p.dim = 2;
    for (std::size_t i = 0; i < r.weights.size(); ++i) {
        p.elements.push_back(r.weights[i] * direction_projector(r.angles[i]));
    }
    return p;
}

} // namespace symdet
