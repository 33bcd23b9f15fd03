#pragma once

#include <complex>
#include <cstddef>
#include <vector>

// Dense complex matrix/vector kernel for the small operators this library
// works with (qubits, 2-qubit pairs, the 4-port dilation space). Dimensions
// are capped at 8; anything larger is rejected at construction.

namespace symdet {

using cplx = std::complex<double>;

inline constexpr std::size_t kMaxDim = 8;
inline constexpr double kDefaultTol = 1e-10;

class CVec {
  public:
    CVec() = default;
    explicit CVec(std::size_t dim);
    CVec(std::initializer_list<cplx> entries);

    std::size_t dim() const { return e_.size(); }
    cplx &operator[](std::size_t i) { return e_[i]; }
    const cplx &operator[](std::size_t i) const { return e_[i]; }

  private:
    std::vector<cplx> e_;
};

class CMat {
  public:
    CMat() = default;
    CMat(std::size_t rows, std::size_t cols); // zero-filled
    CMat(std::size_t rows, std::size_t cols, std::initializer_list<cplx> entries);

    static CMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    cplx &operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> e_;
};

CMat operator+(const CMat &a, const CMat &b);
CMat operator-(const CMat &a, const CMat &b);
CMat operator*(const CMat &a, const CMat &b);
CMat operator*(cplx s, const CMat &a);
CMat operator*(double s, const CMat &a);
CVec operator*(const CMat &a, const CVec &v);
CVec operator*(cplx s, const CVec &v);
CVec operator+(const CVec &u, const CVec &v);

CMat adjoint(const CMat &a);
CMat transpose(const CMat &a);
/// Entrywise real part.
CMat real_part(const CMat &a);
cplx trace(const CMat &a);
/// Max-norm: largest |entry|.
double max_abs(const CMat &a);
/// ‖A − A†‖_max.
double hermiticity_defect(const CMat &a);
bool is_hermitian(const CMat &a, double tol = kDefaultTol);
double max_abs_diff(const CMat &a, const CMat &b);

/// |u⟩⟨v|
CMat outer(const CVec &u, const CVec &v);
/// ⟨u|v⟩ (conjugate-linear in the first argument).
cplx inner(const CVec &u, const CVec &v);
double norm(const CVec &v);
CVec normalized(const CVec &v);

/// Tensor product, first-factor index major:
/// out[i*dim(v)+j] = u[i]*v[j]. For the 4-port dilation basis this order is
/// E_0 = ↑_a vac_b, E_1 = ↓_a vac_b, E_2 = vac_a ↑_b, E_3 = vac_a ↓_b.
CVec tensor(const CVec &u, const CVec &v);

CMat pauli_x();
CMat pauli_y();
CMat pauli_z();

struct EigenPair {
    double value;
    CVec vector;
};

/// Full spectral decomposition of a hermitian matrix (cyclic complex Jacobi).
/// Pairs are sorted by descending eigenvalue; eigenvectors are orthonormal.
/// Throws if the input is not square or not hermitian within tol.
std::vector<EigenPair> hermitian_eigen(const CMat &a, double tol = kDefaultTol);

/// True iff the minimum eigenvalue is ≥ −tol. Throws on non-hermitian input.
bool is_psd(const CMat &a, double tol = kDefaultTol);

} // namespace symdet
