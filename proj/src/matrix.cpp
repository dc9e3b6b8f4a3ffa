// matrix.cpp — CMat arithmetic, the complex Jacobi eigensolver, and the
// validated state types.

#include "dephaser/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dephaser/kernels.hpp"

namespace dephaser {

namespace {

constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kOffdiagStop = 1e-14;  // relative to ||A||_F
constexpr int kMaxSweeps = 100;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
    int q = 0;
    while ((std::size_t{1} << q) < n) ++q;
    return q;
}

}  // namespace

CMat CMat::identity(std::size_t n) {
    CMat m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = cplx(1.0, 0.0);
    return m;
}

cplx CMat::trace() const {
    cplx t(0.0, 0.0);
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

CMat CMat::adjoint() const {
    CMat r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
}

double CMat::max_abs_diff(const CMat& a, const CMat& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        m = std::max(m, std::abs(a.a_[i] - b.a_[i]));
    return m;
}

double CMat::max_abs() const {
    double m = 0.0;
    for (const cplx& v : a_) m = std::max(m, std::abs(v));
    return m;
}

bool CMat::all_finite() const {
    for (const cplx& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

double CMat::hermiticity_defect() const {
    double m = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

CMat operator*(const CMat& a, const CMat& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("matrix product: dimension mismatch");
    CMat r(a.dim());
    kernels::active().matmul(r.data(), a.data(), b.data(), a.dim());
    return r;
}

CMat CMat::mul_adjoint(const CMat& b) const {
    if (dim() != b.dim())
        throw std::invalid_argument("matrix product: dimension mismatch");
    CMat r(dim());
    kernels::active().matmul_adj_rhs(r.data(), data(), b.data(), dim());
    return r;
}

CMat operator+(const CMat& a, const CMat& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("matrix sum: dimension mismatch");
    CMat r = a;
    kernels::active().accum_scaled(r.data(), b.data(), 1.0, b.dim() * b.dim());
    return r;
}

CMat operator-(const CMat& a, const CMat& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("matrix difference: dimension mismatch");
    CMat r = a;
    kernels::active().accum_scaled(r.data(), b.data(), -1.0, b.dim() * b.dim());
    return r;
}

CMat CMat::scaled(double w) const {
    CMat r(n_);
    kernels::active().accum_scaled(r.data(), data(), w, n_ * n_);
    return r;
}

CMat tensor(const CMat& a, const CMat& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    CMat r(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const cplx aij = a(i, j);
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    r(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return r;
}

std::vector<cplx> tensor(std::span<const cplx> a, std::span<const cplx> b) {
    std::vector<cplx> r(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            r[i * b.size() + k] = a[i] * b[k];
    return r;
}

namespace {

double offdiag_fro(const CMat& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            s += std::norm(a(i, j)) + std::norm(a(j, i));
    return std::sqrt(s);
}

double fro_norm(const CMat& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Make the first component of each eigenvector with magnitude above tol real
// and positive, so decompositions (and purifications built on them) are
// deterministic.
void canonicalize_phases(CMat& rows) {
    const std::size_t n = rows.dim();
    for (std::size_t k = 0; k < n; ++k) {
        cplx* v = rows.row(k);
        std::size_t lead = 0;
        while (lead < n && std::abs(v[lead]) <= 1e-12) ++lead;
        if (lead == n) continue;
        const cplx phase = v[lead] / std::abs(v[lead]);
        const cplx fix = std::conj(phase);
        for (std::size_t i = 0; i < n; ++i) v[i] *= fix;
    }
}

}  // namespace

EigenSystem hermitian_eigensystem(const CMat& m, double herm_tol) {
    const std::size_t n = m.dim();
    if (n == 0) throw std::invalid_argument("eigensystem of empty matrix");
    if (!m.all_finite())
        throw std::domain_error("eigensystem: non-finite entries");
    if (m.hermiticity_defect() > herm_tol)
        throw std::domain_error("eigensystem: matrix is not Hermitian");

    CMat a = m;
    // w rows accumulate J^T...J^T applied left, i.e. w = V^T (row k holds
    // eigenvector k once converged).
    CMat w = CMat::identity(n);
    const double scale = fro_norm(a);
    const double stop = kOffdiagStop * std::max(scale, 1e-300);
    const auto& K = kernels::active();

    int sweep = 0;
    while (offdiag_fro(a) > stop) {
        if (++sweep > kMaxSweeps)
            throw std::runtime_error("jacobi eigensolver did not converge");
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Real Jacobi angle in the frame where a_pq is rotated real.
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0)
                                     ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cplx s = (t * c) * (apq / mag);
                // Columns p,q (stride n), then rows p,q (contiguous).
                K.rotate_pair(a.data() + p, a.data() + q, n,
                              static_cast<std::ptrdiff_t>(n), c, s);
                K.rotate_pair(a.row(p), a.row(q), n, 1, c, std::conj(s));
                a(p, p) = cplx(app - t * mag, 0.0);
                a(q, q) = cplx(aqq + t * mag, 0.0);
                a(p, q) = cplx(0.0, 0.0);
                a(q, p) = cplx(0.0, 0.0);
                // w = V^T updates as w <- J^T w, i.e. rows p,q mix with
                // coefficients (c, -conj(s)) / (s, c).
                K.rotate_pair(w.row(p), w.row(q), n, 1, c, s);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() > a(y, y).real();
    });

    EigenSystem es;
    es.values.resize(n);
    es.vectors_rows = CMat(n);
    for (std::size_t k = 0; k < n; ++k) {
        es.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i)
            es.vectors_rows(k, i) = w(order[k], i);
    }
    canonicalize_phases(es.vectors_rows);
    return es;
}

std::vector<double> hermitian_eigenvalues(const CMat& m, double herm_tol) {
    return hermitian_eigensystem(m, herm_tol).values;
}

PureState::PureState(std::vector<cplx> amplitudes, int qubits)
    : amp_(std::move(amplitudes)), qubits_(qubits) {
    if (qubits < 0 || amp_.size() != (std::size_t{1} << qubits))
        throw std::invalid_argument("pure state: dimension is not 2^qubits");
    double norm2 = 0.0;
    for (const cplx& v : amp_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::domain_error("pure state: non-finite amplitude");
        norm2 += std::norm(v);
    }
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw std::domain_error("pure state: not unit norm");
}

PureState PureState::basis(int qubits, std::size_t index) {
    std::vector<cplx> a(std::size_t{1} << qubits, cplx(0.0, 0.0));
    a.at(index) = cplx(1.0, 0.0);
    return PureState(std::move(a), qubits);
}

CMat PureState::projector() const {
    CMat p(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            p(i, j) = amp_[i] * std::conj(amp_[j]);
    return p;
}

DensityMatrix::DensityMatrix(CMat m) : m_(std::move(m)) {
    const std::size_t n = m_.dim();
    if (!is_power_of_two(n))
        throw std::invalid_argument("density matrix: dimension is not 2^q");
    qubits_ = log2_exact(n);
    if (!m_.all_finite())
        throw std::domain_error("density matrix: non-finite entries");
    if (m_.hermiticity_defect() > kHermTol)
        throw std::domain_error("density matrix: not Hermitian");
    const cplx tr = m_.trace();
    if (std::abs(tr - cplx(1.0, 0.0)) > kTraceTol)
        throw std::domain_error("density matrix: trace != 1");
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    return DensityMatrix(psi.projector());
}

DensityMatrix DensityMatrix::maximally_mixed(int qubits) {
    const std::size_t n = std::size_t{1} << qubits;
    CMat m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = cplx(1.0 / double(n), 0.0);
    return DensityMatrix(std::move(m));
}

double DensityMatrix::min_eigenvalue() const {
    const auto ev = hermitian_eigenvalues(m_);
    return ev.back();
}

}  // namespace dephaser
