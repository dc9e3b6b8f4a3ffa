// kernels_neon.cpp — NEON kernel variants (aarch64; NEON is baseline there).
//
// One float64x2_t holds a single complex value [re, im].  Complex products use
// the swap-and-signed-fma idiom: s*y = sr*y + si*swap(y)*[-1,+1].

#include "dephaser/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace dephaser::kernels {
namespace {

const float64x2_t k_pm = {-1.0, +1.0};  // signs for [re, im] of i*swap terms
const float64x2_t k_mp = {+1.0, -1.0};

inline float64x2_t swap_lanes(float64x2_t v) { return vextq_f64(v, v, 1); }

void hadamard_scale_neon(cplx* dst, const cplx* src, const double* coeff,
                         std::size_t n) {
    auto* d = reinterpret_cast<double*>(dst);
    const auto* s = reinterpret_cast<const double*>(src);
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t v = vld1q_f64(s + 2 * i);
        vst1q_f64(d + 2 * i, vmulq_n_f64(v, coeff[i]));
    }
}

void accum_scaled_neon(cplx* acc, const cplx* x, double w, std::size_t n) {
    auto* a = reinterpret_cast<double*>(acc);
    const auto* b = reinterpret_cast<const double*>(x);
    const std::size_t m = 2 * n;
    std::size_t i = 0;
    for (; i + 2 <= m; i += 2) {
        float64x2_t av = vld1q_f64(a + i);
        float64x2_t bv = vld1q_f64(b + i);
        vst1q_f64(a + i, vfmaq_n_f64(av, bv, w));
    }
    for (; i < m; ++i) a[i] += w * b[i];
}

// s*y = sr*y + si*swap(y)*[-1,+1];  conj(s)*y = sr*y + si*swap(y)*[+1,-1]
inline float64x2_t cmul(float64x2_t y, double sr, double si, float64x2_t pm) {
    float64x2_t t = vmulq_n_f64(y, sr);
    float64x2_t u = vmulq_n_f64(swap_lanes(y), si);
    return vfmaq_f64(t, u, pm);
}

void rotate_pair_neon(cplx* x, cplx* y, std::size_t n, std::ptrdiff_t stride,
                      double c, cplx s) {
    auto* xd = reinterpret_cast<double*>(x);
    auto* yd = reinterpret_cast<double*>(y);
    const double sr = s.real(), si = s.imag();
    for (std::size_t k = 0; k < n; ++k) {
        float64x2_t xv = vld1q_f64(xd + 2 * k * stride);
        float64x2_t yv = vld1q_f64(yd + 2 * k * stride);
        float64x2_t sbar_y = cmul(yv, sr, si, k_mp);
        float64x2_t s_x = cmul(xv, sr, si, k_pm);
        vst1q_f64(xd + 2 * k * stride,
                  vsubq_f64(vmulq_n_f64(xv, c), sbar_y));
        vst1q_f64(yd + 2 * k * stride, vfmaq_n_f64(s_x, yv, c));
    }
}

void matmul_neon(cplx* out, const cplx* a, const cplx* b, std::size_t n) {
    auto* od = reinterpret_cast<double*>(out);
    const auto* bd = reinterpret_cast<const double*>(b);
    for (std::size_t i = 0; i < n; ++i) {
        double* orow = od + 2 * i * n;
        for (std::size_t j = 0; j < 2 * n; ++j) orow[j] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            const double ar = aik.real(), ai = aik.imag();
            const double* brow = bd + 2 * k * n;
            for (std::size_t j = 0; j < n; ++j) {
                float64x2_t bv = vld1q_f64(brow + 2 * j);
                float64x2_t prod = cmul(bv, ar, ai, k_pm);
                float64x2_t ov = vld1q_f64(orow + 2 * j);
                vst1q_f64(orow + 2 * j, vaddq_f64(ov, prod));
            }
        }
    }
}

cplx vdot_neon(const cplx* x, const cplx* y, std::size_t n) {
    const auto* xd = reinterpret_cast<const double*>(x);
    const auto* yd = reinterpret_cast<const double*>(y);
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t k = 0; k < n; ++k) {
        float64x2_t xv = vld1q_f64(xd + 2 * k);
        float64x2_t yv = vld1q_f64(yd + 2 * k);
        // conj(x)*y = xr*y + xi*swap(y)*[+1,-1]
        float64x2_t prod = cmul(yv, vgetq_lane_f64(xv, 0),
                                vgetq_lane_f64(xv, 1), k_mp);
        acc = vaddq_f64(acc, prod);
    }
    return cplx(vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1));
}

void matmul_adj_rhs_neon(cplx* out, const cplx* a, const cplx* b,
                         std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i * n + j] = vdot_neon(b + j * n, a + i * n, n);
}

const Dispatch k_neon{hadamard_scale_neon, accum_scaled_neon, rotate_pair_neon,
                      matmul_neon,         matmul_adj_rhs_neon, vdot_neon};

}  // namespace

const Dispatch* neon_table() { return &k_neon; }

}  // namespace dephaser::kernels

#else

namespace dephaser::kernels {
const Dispatch* neon_table() { return nullptr; }
}  // namespace dephaser::kernels

#endif
