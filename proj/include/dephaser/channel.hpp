// channel.hpp — the exact N-use dephasing map as a coefficient matrix, plus
// Kraus representations derived from it.
//
// The authoritative channel representation is the real symmetric coefficient
// matrix C with unit diagonal: the map multiplies each matrix element of the
// state elementwise, rho'_{jl} = c_{jl} rho_{jl}.  C positive semidefinite is
// equivalent to complete positivity.

#pragma once

#include <span>
#include <vector>

#include "dephaser/bath.hpp"
#include "dephaser/matrix.hpp"

namespace dephaser::channel {

class DephasingMap {
  public:
    // c_{jl} = g^(d^T Gamma d) with d = bits(j) - bits(l) in {-1,0,1}^N and
    // Gamma the Toeplitz matrix of memory coefficients (Gamma_kk' =
    // gamma_lags[|k-k'|-1], unit diagonal).  gamma_lags has N-1 entries.
    static DephasingMap from_memory_profile(double g,
                                            std::span<const double> gamma_lags);
    // Bath route: overlaps = {I(0), I(tau), ..., I((N-1) tau)}.
    static DephasingMap from_overlaps(double lambda,
                                      std::span<const double> overlaps);
    // N <= 2 from the scalar parameter set (uses g, h+ and h- directly).
    static DephasingMap from_params(const bath::DephasingParams& p, int n_uses);
    // Explicit coefficients (tests, diagnostics).  When validate is true the
    // constructor enforces symmetry, unit diagonal and PSD.
    static DephasingMap from_coefficients(int n_uses, std::vector<double> c,
                                          bool validate = true);

    int n_uses() const { return n_uses_; }
    std::size_t dim() const { return std::size_t{1} << n_uses_; }
    double coeff(std::size_t j, std::size_t l) const {
        return c_[j * dim() + l];
    }
    const std::vector<double>& coefficients() const { return c_; }

    // Eigenvalues of C, descending.
    std::vector<double> spectrum() const;

  private:
    DephasingMap(int n_uses, std::vector<double> c)
        : n_uses_(n_uses), c_(std::move(c)) {}
    void check_psd() const;
    int n_uses_;
    std::vector<double> c_;
};

// rho'_{jl} = c_{jl} rho_{jl}; populations are untouched.
DensityMatrix apply_dephasing(const DensityMatrix& rho,
                              const DephasingMap& map);

// The map extended by the identity to a larger register: coefficients are
// looked up from the bits of the qubits in `acting_on` (use k of the map is
// qubit acting_on[k]).
class ExtendedDephasing {
  public:
    ExtendedDephasing(DephasingMap map, int total_qubits,
                      std::vector<int> acting_on);
    DensityMatrix operator()(const DensityMatrix& rho) const;

  private:
    DephasingMap map_;
    int total_qubits_;
    std::vector<int> acting_on_;
};

inline ExtendedDephasing extend_with_identity(DephasingMap map,
                                              int total_qubits,
                                              std::vector<int> acting_on) {
    return ExtendedDephasing(std::move(map), total_qubits,
                             std::move(acting_on));
}

struct KrausSet {
    struct Op {
        double weight;
        CMat op;
    };
    std::vector<Op> ops;
    bool valid = true;  // false when any construction weight is negative

    // max_ij |sum_m w_m K_m^dag K_m - I|
    double completeness_defect() const;
};

// {( (1+g)/2, I ), ( (1-g)/2, sigma_z )}.
KrausSet kraus_single(double g);

// Prefactor convention for the K4/K5 weights of the six-operator two-use
// set: `halved` (1/2, trace preserving) or `quarter` (1/4, kept for
// reference; fails trace preservation by exactly (h- - h+)/4).
enum class TwoUseWeights { halved, quarter };

// Six-operator two-use set on {I,Z}x{I,Z} plus K4 = (K1+K2)/2 and
// K5 = (K0-K3)/2.  Marked invalid when 1 - 2g + h+ < 0 (negative weight).
KrausSet kraus_two_use(double g, double h_plus, double h_minus,
                       TwoUseWeights convention = TwoUseWeights::halved);

// Always-valid decomposition from the eigenvectors of C: one diagonal
// operator per eigenvalue above 1e-12, scaled so the largest entry is 1.
KrausSet kraus_canonical(const DephasingMap& map);

// sum_m w_m K_m rho K_m^dag.  Sets flagged invalid are refused unless
// allow_invalid is passed.
DensityMatrix apply_kraus(const KrausSet& set, const DensityMatrix& rho,
                          bool allow_invalid = false);

}  // namespace dephaser::channel
