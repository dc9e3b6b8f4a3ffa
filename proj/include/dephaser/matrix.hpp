// matrix.hpp — dense square complex matrices and validated quantum states.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace dephaser {

using cplx = std::complex<double>;

// Row-major dense square complex matrix.
class CMat {
  public:
    CMat() = default;
    explicit CMat(std::size_t n) : n_(n), a_(n * n, cplx(0.0, 0.0)) {}
    static CMat identity(std::size_t n);

    std::size_t dim() const { return n_; }
    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const {
        return a_[i * n_ + j];
    }
    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }
    cplx* row(std::size_t i) { return a_.data() + i * n_; }
    const cplx* row(std::size_t i) const { return a_.data() + i * n_; }

    cplx trace() const;
    CMat adjoint() const;
    // max_ij |a_ij - b_ij|
    static double max_abs_diff(const CMat& a, const CMat& b);
    double max_abs() const;
    bool all_finite() const;
    // max_ij |a_ij - conj(a_ji)|
    double hermiticity_defect() const;

    friend CMat operator*(const CMat& a, const CMat& b);
    CMat mul_adjoint(const CMat& b) const;  // this * b^dagger
    friend CMat operator+(const CMat& a, const CMat& b);
    friend CMat operator-(const CMat& a, const CMat& b);
    CMat scaled(double w) const;

  private:
    std::size_t n_ = 0;
    std::vector<cplx> a_;
};

// Kronecker products; a's indices are the more significant ones.
CMat tensor(const CMat& a, const CMat& b);
std::vector<cplx> tensor(std::span<const cplx> a, std::span<const cplx> b);

// Eigendecomposition of a Hermitian matrix.  values are sorted descending;
// vector(k) is the (unit, phase-canonicalized) eigenvector of values[k].
struct EigenSystem {
    std::vector<double> values;
    CMat vectors_rows;  // row k = eigenvector k
    std::span<const cplx> vector(std::size_t k) const {
        return {vectors_rows.row(k), vectors_rows.dim()};
    }
};

// Cyclic complex Jacobi.  Requires hermiticity defect <= herm_tol (throws
// std::domain_error otherwise).  Converges when the off-diagonal Frobenius
// norm drops below 1e-14 times the Frobenius norm of the input; throws
// std::runtime_error after 100 sweeps without convergence.
EigenSystem hermitian_eigensystem(const CMat& m, double herm_tol = 1e-10);
std::vector<double> hermitian_eigenvalues(const CMat& m,
                                          double herm_tol = 1e-10);

// Pure state of `qubits` qubits (unit-norm amplitude vector, dim 2^qubits).
class PureState {
  public:
    PureState(std::vector<cplx> amplitudes, int qubits);
    static PureState basis(int qubits, std::size_t index);

    int qubits() const { return qubits_; }
    std::size_t dim() const { return amp_.size(); }
    std::span<const cplx> amplitudes() const { return amp_; }
    const cplx& operator[](std::size_t i) const { return amp_[i]; }

    CMat projector() const;  // |psi><psi|

  private:
    std::vector<cplx> amp_;
    int qubits_;
};

// Density operator on `qubits` qubits.  Construction validates squareness,
// power-of-two dimension, finiteness, hermiticity (1e-12 entrywise) and unit
// trace (1e-12).  Positive semidefiniteness (eigenvalues >= -1e-10) is
// checked by the operations that need the spectrum.
class DensityMatrix {
  public:
    explicit DensityMatrix(CMat m);
    static DensityMatrix from_pure(const PureState& psi);
    static DensityMatrix maximally_mixed(int qubits);

    int qubits() const { return qubits_; }
    std::size_t dim() const { return m_.dim(); }
    const CMat& matrix() const { return m_; }
    const cplx& operator()(std::size_t i, std::size_t j) const {
        return m_(i, j);
    }

    double min_eigenvalue() const;

  private:
    CMat m_;
    int qubits_;
};

}  // namespace dephaser
