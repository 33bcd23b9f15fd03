#include "symdet/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace symdet {

namespace {

void check_dim(std::size_t n, const char *what) {
    if (n > kMaxDim) {
        throw std::invalid_argument(std::string(what) + ": dimension " + std::to_string(n) +
                                    " exceeds the supported maximum " + std::to_string(kMaxDim));
    }
}

void check_same_shape(const CMat &a, const CMat &b, const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(what) + ": shape mismatch");
    }
}

} // namespace

CVec::CVec(std::size_t dim) : e_(dim) { check_dim(dim, "CVec"); }

CVec::CVec(std::initializer_list<cplx> entries) : e_(entries) { check_dim(e_.size(), "CVec"); }

CMat::CMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {
    check_dim(rows, "CMat");
    check_dim(cols, "CMat");
}

CMat::CMat(std::size_t rows, std::size_t cols, std::initializer_list<cplx> entries)
    : CMat(rows, cols) {
    if (entries.size() != rows * cols) {
        throw std::invalid_argument("CMat: entry count does not match shape");
    }
    std::copy(entries.begin(), entries.end(), e_.begin());
}

CMat CMat::identity(std::size_t n) {
    CMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

CMat operator+(const CMat &a, const CMat &b) {
    check_same_shape(a, b, "operator+");
    CMat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            r(i, j) = a(i, j) + b(i, j);
        }
    }
    return r;
}

CMat operator-(const CMat &a, const CMat &b) {
    check_same_shape(a, b, "operator-");
    CMat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            r(i, j) = a(i, j) - b(i, j);
        }
    }
    return r;
}

CMat operator*(const CMat &a, const CMat &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("operator*: inner dimensions do not match");
    }
    CMat r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                r(i, j) += aik * b(k, j);
            }
        }
    }
    return r;
}

CMat operator*(cplx s, const CMat &a) {
    CMat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            r(i, j) = s * a(i, j);
        }
    }
    return r;
}

CMat operator*(double s, const CMat &a) { return cplx(s, 0.0) * a; }

CVec operator*(const CMat &a, const CVec &v) {
    if (a.cols() != v.dim()) {
        throw std::invalid_argument("operator*: matrix/vector dimensions do not match");
    }
    CVec r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            s += a(i, j) * v[j];
        }
        r[i] = s;
    }
    return r;
}

CVec operator*(cplx s, const CVec &v) {
    CVec r(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        r[i] = s * v[i];
    }
    return r;
}

CVec operator+(const CVec &u, const CVec &v) {
    if (u.dim() != v.dim()) {
        throw std::invalid_argument("operator+: vector dimensions do not match");
    }
    CVec r(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
        r[i] = u[i] + v[i];
    }
    return r;
}

CMat adjoint(const CMat &a) {
    CMat r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            r(j, i) = std::conj(a(i, j));
        }
    }
    return r;
}

CMat transpose(const CMat &a) {
    CMat r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            r(j, i) = a(i, j);
        }
    }
    return r;
}

CMat real_part(const CMat &a) {
    CMat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            r(i, j) = a(i, j).real();
        }
    }
    return r;
}

cplx trace(const CMat &a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("trace: matrix is not square");
    }
    cplx t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        t += a(i, i);
    }
    return t;
}

double max_abs(const CMat &a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            m = std::max(m, std::abs(a(i, j)));
        }
    }
    return m;
}

double hermiticity_defect(const CMat &a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("hermiticity_defect: matrix is not square");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return m;
}

bool is_hermitian(const CMat &a, double tol) {
    return a.rows() == a.cols() && hermiticity_defect(a) <= tol;
}

double max_abs_diff(const CMat &a, const CMat &b) {
    check_same_shape(a, b, "max_abs_diff");
    return max_abs(a - b);
}

CMat outer(const CVec &u, const CVec &v) {
    CMat r(u.dim(), v.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
        for (std::size_t j = 0; j < v.dim(); ++j) {
            r(i, j) = u[i] * std::conj(v[j]);
        }
    }
    return r;
}

cplx inner(const CVec &u, const CVec &v) {
    if (u.dim() != v.dim()) {
        throw std::invalid_argument("inner: vector dimensions do not match");
    }
    cplx s = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        s += std::conj(u[i]) * v[i];
    }
    return s;
}

double norm(const CVec &v) { return std::sqrt(inner(v, v).real()); }

CVec normalized(const CVec &v) {
    const double n = norm(v);
    if (n == 0.0) {
        throw std::invalid_argument("normalized: zero vector");
    }
    return cplx(1.0 / n, 0.0) * v;
}

CVec tensor(const CVec &u, const CVec &v) {
    CVec r(u.dim() * v.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
        for (std::size_t j = 0; j < v.dim(); ++j) {
            r[i * v.dim() + j] = u[i] * v[j];
        }
    }
    return r;
}

CMat pauli_x() { return CMat(2, 2, {0.0, 1.0, 1.0, 0.0}); }
CMat pauli_y() { return CMat(2, 2, {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0}); }
CMat pauli_z() { return CMat(2, 2, {1.0, 0.0, 0.0, -1.0}); }

namespace {

// One Jacobi rotation zeroing a(p, q). The 2x2 unitary acting on the (p, q)
// plane is [[c, -s e^{iφ}], [s e^{-iφ}, c]] with φ = arg a(p, q) and the
// usual smaller-angle tangent choice.
void jacobi_rotate(CMat &a, CMat &v, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) {
        return;
    }
    const cplx phase = apq / r; // e^{iφ}
    const double alpha = a(p, p).real();
    const double beta = a(q, q).real();
    const double tau = (alpha - beta) / (2.0 * r);
    const double sign = tau >= 0.0 ? 1.0 : -1.0;
    const double t = sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.rows();
    // A <- J† A J, applied as column then row updates.
    for (std::size_t i = 0; i < n; ++i) {
        const cplx aip = a(i, p);
        const cplx aiq = a(i, q);
        a(i, p) = c * aip + s * std::conj(phase) * aiq;
        a(i, q) = -s * phase * aip + c * aiq;
    }
    for (std::size_t j = 0; j < n; ++j) {
        const cplx apj = a(p, j);
        const cplx aqj = a(q, j);
        a(p, j) = c * apj + s * phase * aqj;
        a(q, j) = -s * std::conj(phase) * apj + c * aqj;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const cplx vip = v(i, p);
        const cplx viq = v(i, q);
        v(i, p) = c * vip + s * std::conj(phase) * viq;
        v(i, q) = -s * phase * vip + c * viq;
    }
}

double off_diagonal_max(const CMat &a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) {
                m = std::max(m, std::abs(a(i, j)));
            }
        }
    }
    return m;
}

} // namespace

std::vector<EigenPair> hermitian_eigen(const CMat &input, double tol) {
    if (input.rows() != input.cols()) {
        throw std::invalid_argument("hermitian_eigen: matrix is not square");
    }
    const double defect = hermiticity_defect(input);
    if (defect > tol) {
        throw std::invalid_argument("hermitian_eigen: matrix is not hermitian (defect " +
                                    std::to_string(defect) + " > tol)");
    }

    const std::size_t n = input.rows();
    // Work on the exactly-hermitian part so tol-level asymmetry cannot bias
    // the sweep.
    CMat a = 0.5 * (input + adjoint(input));
    CMat v = CMat::identity(n);

    const double scale = std::max(1.0, max_abs(a));
    const double target = 1e-15 * scale;
    for (int sweep = 0; sweep < 100 && off_diagonal_max(a) > target; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) > target / 10.0) {
                    jacobi_rotate(a, v, p, q);
                }
            }
        }
    }

    std::vector<EigenPair> pairs;
    pairs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        CVec vec(n);
        for (std::size_t r = 0; r < n; ++r) {
            vec[r] = v(r, i);
        }
        pairs.push_back({a(i, i).real(), vec});
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const EigenPair &x, const EigenPair &y) { return x.value > y.value; });
    return pairs;
}

bool is_psd(const CMat &a, double tol) {
    const auto pairs = hermitian_eigen(a, tol);
    for (const auto &p : pairs) {
        if (p.value < -tol) {
            return false;
        }
    }
    return true;
}

} // namespace symdet
