// infometrics.hpp — entanglement fidelity, entropy exchange and coherent
// information, from first principles (purified evolution) and from closed
// forms for the single-use and diagonal two-use input families.

#pragma once

#include <array>

#include "dephaser/channel.hpp"
#include "dephaser/matrix.hpp"

namespace dephaser::infometrics {

// Bloch input with z = rho00 - rho11 and transverse magnitude r (the
// coherence is taken along x; the metrics depend on |rho01| only).
struct BlochInput {
    double z = 0.0;
    double r = 0.0;
};

struct PqInput {
    double p = 0.5;
    double q() const { return 1.0 - p; }
};

struct MetricsReport {
    double fe = 1.0;    // entanglement fidelity
    double se = 0.0;    // entropy exchange (bits)
    double ic = 0.0;    // coherent information (bits)
    double s_in = 0.0;  // input entropy (bits)
};

DensityMatrix bloch_state(const BlochInput& in);
// (1/2)[ p(|01><01| + |10><10|) + q(|00><00| + |11><11|) ]
DensityMatrix pq_state(const PqInput& in);

// First-principles route: purify, apply I (x) E, and evaluate.
double entanglement_fidelity(const DensityMatrix& rho,
                             const channel::DephasingMap& map);
double entropy_exchange(const DensityMatrix& rho,
                        const channel::DephasingMap& map);
double coherent_information(const DensityMatrix& rho,
                            const channel::DephasingMap& map);
// All four metrics from one purified evolution.
MetricsReport metrics_from_pipeline(const DensityMatrix& rho,
                                    const channel::DephasingMap& map);

// Kraus-route cross-checks: Fe = sum_m |Tr(rho A_m)|^2 and Se = S(W) with
// W_mn = Tr(A_m rho A_n^dag), A_m = sqrt(w_m) K_m.
double entanglement_fidelity_kraus(const DensityMatrix& rho,
                                   const channel::KrausSet& set);
double entropy_exchange_kraus(const DensityMatrix& rho,
                              const channel::KrausSet& set);

// Single-use closed forms: Fe = (1+g)/2 + (1-g)z^2/2, Se from the W-matrix
// eigenvalues (1 +- sqrt(g^2 + (1-g^2)z^2))/2, output eigenvalues
// (1 +- sqrt(z^2 + g^2 r^2))/2.
MetricsReport single_use_closed_forms(double g, const BlochInput& in);

// Two-use closed forms for the pq family.
MetricsReport two_use_family_metrics(const PqInput& in,
                                     const bath::DephasingParams& params);
// The four nonzero eigenvalues of the purified output, descending.
std::array<double, 4> two_use_output_spectrum(const PqInput& in,
                                              const bath::DephasingParams& p);

struct OptResult {
    double p_opt = 0.5;
    double ic_max = 0.0;
    double fe_at_opt = 1.0;
    double se_at_opt = 0.0;
    double s_in_at_opt = 0.0;
};

// Maximize Ic over p in [0,1]: 1001-point grid, then golden-section
// refinement of the best cell to |dp| <= 1e-8.
OptResult optimize_p(const bath::DephasingParams& params);

}  // namespace dephaser::infometrics
