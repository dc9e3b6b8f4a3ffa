// kernels_avx2.cpp — AVX2 kernel variants (x86-64 only; TU compiled with -mavx2).
//
// Complex data is interleaved [re, im]; one __m256d holds two complex values.
// Complex products use the addsub idiom: for s*y with yswap = [im, re] pairs,
// addsub(sr*y, si*yswap) yields [sr*re - si*im, sr*im + si*re].
// No FMA is used, so per-element results match the scalar reference bit for
// bit; only the reductions (vdot, matmul_adj_rhs) reorder sums.

#include "dephaser/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)

#include <immintrin.h>

namespace dephaser::kernels {
namespace {

inline __m256d neg(__m256d v) {
    return _mm256_xor_pd(v, _mm256_set1_pd(-0.0));
}

// [re0, im0, re1, im1] -> [im0, re0, im1, re1]
inline __m256d swap_pairs(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

void hadamard_scale_avx2(cplx* dst, const cplx* src, const double* coeff,
                         std::size_t n) {
    auto* d = reinterpret_cast<double*>(dst);
    const auto* s = reinterpret_cast<const double*>(src);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m128d c01 = _mm_loadu_pd(coeff + i);
        __m256d cc = _mm256_set_m128d(_mm_unpackhi_pd(c01, c01),
                                      _mm_unpacklo_pd(c01, c01));
        __m256d v = _mm256_loadu_pd(s + 2 * i);
        _mm256_storeu_pd(d + 2 * i, _mm256_mul_pd(cc, v));
    }
    for (; i < n; ++i) dst[i] = coeff[i] * src[i];
}

void accum_scaled_avx2(cplx* acc, const cplx* x, double w, std::size_t n) {
    // Real weight acts identically on re and im: plain axpy over 2n doubles.
    auto* a = reinterpret_cast<double*>(acc);
    const auto* b = reinterpret_cast<const double*>(x);
    const __m256d wv = _mm256_set1_pd(w);
    const std::size_t m = 2 * n;
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        __m256d av = _mm256_loadu_pd(a + i);
        __m256d bv = _mm256_loadu_pd(b + i);
        _mm256_storeu_pd(a + i, _mm256_add_pd(av, _mm256_mul_pd(wv, bv)));
    }
    for (; i < m; ++i) a[i] += w * b[i];
}

void rotate_pair_avx2(cplx* x, cplx* y, std::size_t n, std::ptrdiff_t stride,
                      double c, cplx s) {
    if (stride != 1) {
        const cplx sbar = std::conj(s);
        for (std::size_t k = 0; k < n; ++k) {
            const cplx xk = x[k * stride];
            const cplx yk = y[k * stride];
            x[k * stride] = c * xk - sbar * yk;
            y[k * stride] = s * xk + c * yk;
        }
        return;
    }
    auto* xd = reinterpret_cast<double*>(x);
    auto* yd = reinterpret_cast<double*>(y);
    const __m256d cv = _mm256_set1_pd(c);
    const __m256d sr = _mm256_set1_pd(s.real());
    const __m256d si = _mm256_set1_pd(s.imag());
    const __m256d si_neg = neg(si);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        __m256d xv = _mm256_loadu_pd(xd + 2 * k);
        __m256d yv = _mm256_loadu_pd(yd + 2 * k);
        __m256d ys = swap_pairs(yv);
        // conj(s)*y and s*x
        __m256d sbar_y = _mm256_addsub_pd(_mm256_mul_pd(sr, yv),
                                          _mm256_mul_pd(si_neg, ys));
        __m256d xs = swap_pairs(xv);
        __m256d s_x = _mm256_addsub_pd(_mm256_mul_pd(sr, xv),
                                       _mm256_mul_pd(si, xs));
        _mm256_storeu_pd(xd + 2 * k,
                         _mm256_sub_pd(_mm256_mul_pd(cv, xv), sbar_y));
        _mm256_storeu_pd(yd + 2 * k,
                         _mm256_add_pd(s_x, _mm256_mul_pd(cv, yv)));
    }
    const cplx sbar = std::conj(s);
    for (; k < n; ++k) {
        const cplx xk = x[k];
        const cplx yk = y[k];
        x[k] = c * xk - sbar * yk;
        y[k] = s * xk + c * yk;
    }
}

void matmul_avx2(cplx* out, const cplx* a, const cplx* b, std::size_t n) {
    auto* od = reinterpret_cast<double*>(out);
    const auto* bd = reinterpret_cast<const double*>(b);
    for (std::size_t i = 0; i < n; ++i) {
        double* orow = od + 2 * i * n;
        std::size_t j = 0;
        for (; j + 4 <= 2 * n; j += 4)
            _mm256_storeu_pd(orow + j, _mm256_setzero_pd());
        for (; j < 2 * n; ++j) orow[j] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            const __m256d ar = _mm256_set1_pd(aik.real());
            const __m256d ai = _mm256_set1_pd(aik.imag());
            const double* brow = bd + 2 * k * n;
            std::size_t jj = 0;
            for (; jj + 2 <= n; jj += 2) {
                __m256d bv = _mm256_loadu_pd(brow + 2 * jj);
                __m256d prod = _mm256_addsub_pd(
                    _mm256_mul_pd(ar, bv),
                    _mm256_mul_pd(ai, swap_pairs(bv)));
                __m256d ov = _mm256_loadu_pd(orow + 2 * jj);
                _mm256_storeu_pd(orow + 2 * jj, _mm256_add_pd(ov, prod));
            }
            for (; jj < n; ++jj) {
                const cplx bkj = b[k * n + jj];
                out[i * n + jj] += aik * bkj;
            }
        }
    }
}

cplx vdot_avx2(const cplx* x, const cplx* y, std::size_t n) {
    const auto* xd = reinterpret_cast<const double*>(x);
    const auto* yd = reinterpret_cast<const double*>(y);
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        __m256d xv = _mm256_loadu_pd(xd + 2 * k);
        __m256d yv = _mm256_loadu_pd(yd + 2 * k);
        __m256d xr = _mm256_movedup_pd(xv);            // [xr, xr]
        __m256d xi = _mm256_permute_pd(xv, 0b1111);    // [xi, xi]
        // conj(x)*y = [xr*yr + xi*yi, xr*yi - xi*yr]
        __m256d prod = _mm256_addsub_pd(_mm256_mul_pd(xr, yv),
                                        neg(_mm256_mul_pd(xi, swap_pairs(yv))));
        acc = _mm256_add_pd(acc, prod);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    cplx total(lanes[0] + lanes[2], lanes[1] + lanes[3]);
    for (; k < n; ++k) total += std::conj(x[k]) * y[k];
    return total;
}

void matmul_adj_rhs_avx2(cplx* out, const cplx* a, const cplx* b,
                         std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i * n + j] = vdot_avx2(b + j * n, a + i * n, n);
}

const Dispatch k_avx2{hadamard_scale_avx2, accum_scaled_avx2, rotate_pair_avx2,
                      matmul_avx2,         matmul_adj_rhs_avx2, vdot_avx2};

}  // namespace

const Dispatch* avx2_table() {
    return __builtin_cpu_supports("avx2") ? &k_avx2 : nullptr;
}

}  // namespace dephaser::kernels

#else

namespace dephaser::kernels {
const Dispatch* avx2_table() { return nullptr; }
}  // namespace dephaser::kernels

#endif
