// qstate.cpp

#include "dephaser/qstate.hpp"

#include <cmath>
#include <stdexcept>

#include "dephaser/kernels.hpp"

namespace dephaser::qstate {

namespace {

// Distribute the bits of `sub` (one per index in `positions`) into a basis
// index of a `total`-qubit register.
std::size_t scatter_bits(std::size_t sub, std::span<const int> positions,
                         int total) {
    std::size_t out = 0;
    for (std::size_t k = 0; k < positions.size(); ++k) {
        const std::size_t bit = (sub >> (positions.size() - 1 - k)) & 1u;
        out |= bit << (total - 1 - positions[k]);
    }
    return out;
}

}  // namespace

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix(dephaser::tensor(a.matrix(), b.matrix()));
}

PureState tensor(const PureState& a, const PureState& b) {
    return PureState(dephaser::tensor(a.amplitudes(), b.amplitudes()),
                     a.qubits() + b.qubits());
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            std::span<const int> keep) {
    const int q = rho.qubits();
    for (std::size_t k = 0; k < keep.size(); ++k) {
        if (keep[k] < 0 || keep[k] >= q)
            throw std::invalid_argument("partial_trace: qubit index out of range");
        if (k > 0 && keep[k] <= keep[k - 1])
            throw std::invalid_argument("partial_trace: keep indices must increase");
    }
    std::vector<int> traced;
    for (int i = 0; i < q; ++i) {
        bool kept = false;
        for (int k : keep) kept = kept || (k == i);
        if (!kept) traced.push_back(i);
    }
    const std::size_t nk = std::size_t{1} << keep.size();
    const std::size_t nt = std::size_t{1} << traced.size();
    CMat out(nk);
    for (std::size_t m = 0; m < nk; ++m) {
        const std::size_t base_m = scatter_bits(m, keep, q);
        for (std::size_t n = 0; n < nk; ++n) {
            const std::size_t base_n = scatter_bits(n, keep, q);
            cplx acc(0.0, 0.0);
            for (std::size_t s = 0; s < nt; ++s) {
                const std::size_t env = scatter_bits(s, traced, q);
                acc += rho(base_m | env, base_n | env);
            }
            out(m, n) = acc;
        }
    }
    return DensityMatrix(std::move(out));
}

double entropy_of_spectrum(std::span<const double> eigenvalues) {
    double s = 0.0;
    for (double l : eigenvalues) {
        if (l < -1e-10)
            throw std::domain_error("entropy: negative eigenvalue beyond tolerance");
        if (l <= 0.0) continue;  // clamp window [-1e-10, 0) and exact zeros
        s -= l * std::log2(l);
    }
    return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    return entropy_of_spectrum(hermitian_eigenvalues(rho.matrix()));
}

double binary_entropy(double x) {
    if (x < -1e-12 || x > 1.0 + 1e-12)
        throw std::domain_error("binary_entropy: argument outside [0,1]");
    x = std::min(1.0, std::max(0.0, x));
    double s = 0.0;
    if (x > 0.0) s -= x * std::log2(x);
    if (x < 1.0) s -= (1.0 - x) * std::log2(1.0 - x);
    return s;
}

double state_fidelity(const PureState& psi, const DensityMatrix& rho) {
    if (psi.dim() != rho.dim())
        throw std::invalid_argument("state_fidelity: dimension mismatch");
    const std::size_t n = rho.dim();
    std::vector<cplx> t(n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        const cplx* row = rho.matrix().row(i);
        cplx acc(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) acc += row[j] * psi[j];
        t[i] = acc;
    }
    const cplx f = kernels::active().vdot(psi.amplitudes().data(), t.data(), n);
    if (std::abs(f.imag()) > 1e-12)
        throw std::domain_error("state_fidelity: non-real overlap");
    return f.real();
}

PureState purify(const DensityMatrix& rho) {
    const std::size_t n = rho.dim();
    const EigenSystem es = hermitian_eigensystem(rho.matrix());
    std::vector<cplx> psi(n * n, cplx(0.0, 0.0));
    double kept = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double l = es.values[k];
        if (l < -1e-10)
            throw std::domain_error("purify: negative eigenvalue beyond tolerance");
        if (l <= 0.0) continue;
        kept += l;
        const double w = std::sqrt(l);
        const auto v = es.vector(k);
        for (std::size_t s = 0; s < n; ++s) psi[k * n + s] = w * v[s];
    }
    // Clamped eigenvalues leave the norm off unity by the clamp window.
    const double renorm = 1.0 / std::sqrt(kept);
    for (cplx& c : psi) c *= renorm;
    return PureState(std::move(psi), 2 * rho.qubits());
}

}  // namespace dephaser::qstate
