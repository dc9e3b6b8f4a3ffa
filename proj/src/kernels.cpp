// kernels.cpp — scalar reference kernels and the backend dispatcher.

#include "dephaser/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace dephaser::kernels {

namespace {

void hadamard_scale_scalar(cplx* dst, const cplx* src, const double* coeff,
                           std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = coeff[i] * src[i];
}

void accum_scaled_scalar(cplx* acc, const cplx* x, double w, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += w * x[i];
}

void rotate_pair_scalar(cplx* x, cplx* y, std::size_t n, std::ptrdiff_t stride,
                        double c, cplx s) {
    const cplx sbar = std::conj(s);
    for (std::size_t k = 0; k < n; ++k) {
        const cplx xk = x[k * stride];
        const cplx yk = y[k * stride];
        x[k * stride] = c * xk - sbar * yk;
        y[k * stride] = s * xk + c * yk;
    }
}

void matmul_scalar(cplx* out, const cplx* a, const cplx* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        cplx* orow = out + i * n;
        for (std::size_t j = 0; j < n; ++j) orow[j] = cplx(0.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            const cplx* brow = b + k * n;
            for (std::size_t j = 0; j < n; ++j) orow[j] += aik * brow[j];
        }
    }
}

cplx vdot_scalar(const cplx* x, const cplx* y, std::size_t n) {
    cplx acc(0.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) acc += std::conj(x[k]) * y[k];
    return acc;
}

void matmul_adj_rhs_scalar(cplx* out, const cplx* a, const cplx* b,
                           std::size_t n) {
    // out[i][j] = sum_k a[i][k] conj(b[j][k]) = vdot(b_row_j, a_row_i)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i * n + j] = vdot_scalar(b + j * n, a + i * n, n);
}

const Dispatch k_scalar{hadamard_scale_scalar, accum_scaled_scalar,
                        rotate_pair_scalar,    matmul_scalar,
                        matmul_adj_rhs_scalar, vdot_scalar};

std::atomic<const Dispatch*> g_active{nullptr};
std::atomic<Backend> g_backend{Backend::scalar};

void autoselect() {
    if (const Dispatch* t = avx2_table()) {
        g_active.store(t);
        g_backend.store(Backend::avx2);
        return;
    }
    if (const Dispatch* t = neon_table()) {
        g_active.store(t);
        g_backend.store(Backend::neon);
        return;
    }
    g_active.store(&k_scalar);
    g_backend.store(Backend::scalar);
}

}  // namespace

const Dispatch* scalar_table() { return &k_scalar; }

const Dispatch& active() {
    const Dispatch* t = g_active.load();
    if (!t) {
        autoselect();
        t = g_active.load();
    }
    return *t;
}

Backend active_backend() {
    active();
    return g_backend.load();
}

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar: return true;
        case Backend::avx2: return avx2_table() != nullptr;
        case Backend::neon: return neon_table() != nullptr;
    }
    return false;
}

void force_backend(Backend b) {
    const Dispatch* t = nullptr;
    switch (b) {
        case Backend::scalar: t = scalar_table(); break;
        case Backend::avx2: t = avx2_table(); break;
        case Backend::neon: t = neon_table(); break;
    }
    if (!t) throw std::invalid_argument("kernel backend not available on this host");
    g_active.store(t);
    g_backend.store(b);
}

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
    }
    return "?";
}

}  // namespace dephaser::kernels
