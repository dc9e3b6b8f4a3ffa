// kernels.hpp — runtime-dispatched arithmetic kernels (scalar / AVX2 / NEON)
//
// The dense complex-matrix inner loops of the library (elementwise coefficient
// products, Kraus conjugations, Jacobi rotations, inner products) are routed
// through a small table of function pointers.  A portable scalar reference
// implementation is always available; on x86-64 an AVX2 variant is selected at
// startup when cpuid reports support, and on aarch64 a NEON variant is used.
// The variants are equivalence-tested against the scalar reference.

#pragma once

#include <complex>
#include <cstddef>

namespace dephaser::kernels {

using cplx = std::complex<double>;

enum class Backend { scalar, avx2, neon };

struct Dispatch {
    // dst[i] = coeff[i] * src[i], real coefficients on complex data.
    void (*hadamard_scale)(cplx* dst, const cplx* src, const double* coeff,
                           std::size_t n);
    // acc[i] += w * x[i].
    void (*accum_scaled)(cplx* acc, const cplx* x, double w, std::size_t n);
    // Plane rotation with real cosine c and complex sine s, applied to two
    // strided spans:  x[k] <- c*x[k] - conj(s)*y[k],  y[k] <- s*x[k] + c*y[k].
    void (*rotate_pair)(cplx* x, cplx* y, std::size_t n, std::ptrdiff_t stride,
                        double c, cplx s);
    // out = a * b, square row-major, out must not alias a or b.
    void (*matmul)(cplx* out, const cplx* a, const cplx* b, std::size_t n);
    // out = a * b^dagger, same conventions.
    void (*matmul_adj_rhs)(cplx* out, const cplx* a, const cplx* b,
                           std::size_t n);
    // sum_k conj(x[k]) * y[k].
    cplx (*vdot)(const cplx* x, const cplx* y, std::size_t n);
};

const Dispatch& active();
Backend active_backend();
bool backend_available(Backend b);
// Override the automatic choice (used by the equivalence tests).
// Throws std::invalid_argument if the backend is not available on this host.
void force_backend(Backend b);
const char* backend_name(Backend b);

// Backend tables; null when not compiled in / not supported by the CPU.
const Dispatch* scalar_table();
const Dispatch* avx2_table();
const Dispatch* neon_table();

}  // namespace dephaser::kernels
