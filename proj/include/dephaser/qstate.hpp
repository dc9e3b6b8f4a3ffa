// qstate.hpp — operations on qubit states: tensor products, partial trace,
// entropies, fidelity, purification.
//
// Qubit index convention: qubit 0 is the leftmost label in |j_0 j_1 ... >,
// i.e. the most significant bit of the basis index.

#pragma once

#include <span>
#include <vector>

#include "dephaser/matrix.hpp"

namespace dephaser::qstate {

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
PureState tensor(const PureState& a, const PureState& b);

// Reduced state on the qubits in `keep` (strictly increasing indices, order
// preserved).  An empty keep set yields the 1x1 matrix [trace] = [1].
DensityMatrix partial_trace(const DensityMatrix& rho,
                            std::span<const int> keep);

// -sum_k lambda_k log2 lambda_k.  Eigenvalues in [-1e-10, 0) are clamped to
// zero; anything below -1e-10 is a positivity violation (std::domain_error).
double von_neumann_entropy(const DensityMatrix& rho);
double entropy_of_spectrum(std::span<const double> eigenvalues);

// Shannon binary entropy H(x) in bits; domain error beyond [0,1] +- 1e-12.
double binary_entropy(double x);

// <psi|rho|psi> (real part; the imaginary part is checked to be < 1e-12).
double state_fidelity(const PureState& psi, const DensityMatrix& rho);

// Purification on 2q qubits, reference first: sum_k sqrt(l_k) |e_k>|v_k>
// with eigenpairs in descending order and computational-basis reference
// vectors.  Tracing out the reference recovers rho.
PureState purify(const DensityMatrix& rho);

}  // namespace dephaser::qstate
