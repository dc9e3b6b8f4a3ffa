// infometrics.cpp

#include "dephaser/infometrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "dephaser/qstate.hpp"

namespace dephaser::infometrics {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Purified evolution shared by the pipeline metrics: returns the output
// rho^{RQ'} together with the purification it was built from.
struct Evolved {
    PureState psi;
    DensityMatrix rq_out;
};

Evolved evolve_purified(const DensityMatrix& rho,
                        const channel::DephasingMap& map) {
    if (rho.dim() != map.dim())
        throw std::invalid_argument("metrics: state/map dimension mismatch");
    const int q = rho.qubits();
    PureState psi = qstate::purify(rho);
    std::vector<int> acting(q);
    for (int k = 0; k < q; ++k) acting[k] = q + k;  // reference first
    const auto ext = channel::extend_with_identity(map, 2 * q, acting);
    DensityMatrix out = ext(DensityMatrix::from_pure(psi));
    return {std::move(psi), std::move(out)};
}

}  // namespace

DensityMatrix bloch_state(const BlochInput& in) {
    if (in.z * in.z + in.r * in.r > 1.0 + 1e-12)
        throw std::invalid_argument("bloch_state: z^2 + r^2 must be <= 1");
    CMat m(2);
    m(0, 0) = 0.5 * (1.0 + in.z);
    m(1, 1) = 0.5 * (1.0 - in.z);
    m(0, 1) = 0.5 * in.r;
    m(1, 0) = 0.5 * in.r;
    return DensityMatrix(std::move(m));
}

DensityMatrix pq_state(const PqInput& in) {
    if (!(in.p >= 0.0 && in.p <= 1.0))
        throw std::invalid_argument("pq_state: p must be in [0,1]");
    CMat m(4);
    m(0, 0) = 0.5 * in.q();
    m(1, 1) = 0.5 * in.p;
    m(2, 2) = 0.5 * in.p;
    m(3, 3) = 0.5 * in.q();
    return DensityMatrix(std::move(m));
}

double entanglement_fidelity(const DensityMatrix& rho,
                             const channel::DephasingMap& map) {
    const Evolved ev = evolve_purified(rho, map);
    return qstate::state_fidelity(ev.psi, ev.rq_out);
}

double entropy_exchange(const DensityMatrix& rho,
                        const channel::DephasingMap& map) {
    const Evolved ev = evolve_purified(rho, map);
    return qstate::von_neumann_entropy(ev.rq_out);
}

double coherent_information(const DensityMatrix& rho,
                            const channel::DephasingMap& map) {
    const double s_out =
        qstate::von_neumann_entropy(channel::apply_dephasing(rho, map));
    return s_out - entropy_exchange(rho, map);
}

MetricsReport metrics_from_pipeline(const DensityMatrix& rho,
                                    const channel::DephasingMap& map) {
    const Evolved ev = evolve_purified(rho, map);
    MetricsReport r;
    r.fe = qstate::state_fidelity(ev.psi, ev.rq_out);
    r.se = qstate::von_neumann_entropy(ev.rq_out);
    r.s_in = qstate::von_neumann_entropy(rho);
    r.ic = qstate::von_neumann_entropy(channel::apply_dephasing(rho, map)) - r.se;
    return r;
}

double entanglement_fidelity_kraus(const DensityMatrix& rho,
                                   const channel::KrausSet& set) {
    double fe = 0.0;
    const std::size_t n = rho.dim();
    for (const auto& [w, k] : set.ops) {
        if (k.dim() != n)
            throw std::invalid_argument("fidelity: kraus dimension mismatch");
        cplx tr(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) tr += rho(i, j) * k(j, i);
        fe += w * std::norm(tr);
    }
    return fe;
}

double entropy_exchange_kraus(const DensityMatrix& rho,
                              const channel::KrausSet& set) {
    const std::size_t m = set.ops.size();
    CMat w_matrix(m);
    for (std::size_t a = 0; a < m; ++a) {
        const CMat ka_rho = set.ops[a].op * rho.matrix();
        for (std::size_t b = 0; b < m; ++b) {
            const CMat t = ka_rho.mul_adjoint(set.ops[b].op);
            w_matrix(a, b) = std::sqrt(set.ops[a].weight) *
                             std::sqrt(set.ops[b].weight) * t.trace();
        }
    }
    return qstate::entropy_of_spectrum(hermitian_eigenvalues(w_matrix));
}

MetricsReport single_use_closed_forms(double g, const BlochInput& in) {
    if (!(g >= 0.0 && g <= 1.0))
        throw std::invalid_argument("single_use_closed_forms: g must be in [0,1]");
    const double z2 = in.z * in.z;
    const double r2 = in.r * in.r;
    if (z2 + r2 > 1.0 + 1e-12)
        throw std::invalid_argument("single_use_closed_forms: Bloch norm > 1");
    MetricsReport rep;
    rep.fe = 0.5 * (1.0 + g) + 0.5 * (1.0 - g) * z2;
    rep.se = qstate::binary_entropy(
        0.5 * (1.0 + std::sqrt(g * g + (1.0 - g * g) * z2)));
    const double s_out = qstate::binary_entropy(
        0.5 * (1.0 + std::sqrt(z2 + g * g * r2)));
    rep.ic = s_out - rep.se;
    rep.s_in =
        qstate::binary_entropy(0.5 * (1.0 + std::sqrt(z2 + r2)));
    return rep;
}

std::array<double, 4> two_use_output_spectrum(const PqInput& in,
                                              const bath::DephasingParams& pr) {
    const double p = in.p, q = in.q();
    const double hp = pr.h_plus, hm = pr.h_minus, g = pr.g;
    const double l1 = 0.5 * q * (1.0 - hp);
    const double l2 = 0.5 * p * (1.0 - hm);
    const double mean = 0.25 * (1.0 + q * hp + p * hm);
    const double off = q * (1.0 + hp) - p * (1.0 + hm);
    const double delta = std::sqrt(off * off / 16.0 + g * g * p * q);
    std::array<double, 4> ev{l1, l2, mean + delta, mean - delta};
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

MetricsReport two_use_family_metrics(const PqInput& in,
                                     const bath::DephasingParams& params) {
    const double p = in.p, q = in.q();
    const double hp = params.h_plus, hm = params.h_minus, g = params.g;
    MetricsReport r;
    r.fe = 0.5 * (q * q * (1.0 + hp) + p * p * (1.0 + hm) + 4.0 * g * p * q);
    const auto ev = two_use_output_spectrum(in, params);
    double se = 0.0;
    for (double l : ev) se -= xlog2x(std::max(l, 0.0));
    r.se = se;
    r.s_in = -xlog2x(p) - xlog2x(q) + 1.0;  // -p log2(p/2) - q log2(q/2)
    r.ic = r.s_in - r.se;
    return r;
}

OptResult optimize_p(const bath::DephasingParams& params) {
    auto ic_of = [&](double p) {
        return two_use_family_metrics({p}, params).ic;
    };
    constexpr int kGrid = 1001;
    int best = 0;
    double best_ic = -1e300;
    for (int i = 0; i < kGrid; ++i) {
        const double ic = ic_of(double(i) / (kGrid - 1));
        if (ic > best_ic) {
            best_ic = ic;
            best = i;
        }
    }
    double lo = std::max(0.0, (best - 1.0) / double(kGrid - 1));
    double hi = std::min(1.0, (best + 1.0) / double(kGrid - 1));
    // Golden-section refinement of the bracketing cell.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = ic_of(x1), f2 = ic_of(x2);
    while (hi - lo > 1e-8) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = ic_of(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = ic_of(x2);
        }
    }
    OptResult res;
    res.p_opt = 0.5 * (lo + hi);
    const MetricsReport rep = two_use_family_metrics({res.p_opt}, params);
    res.ic_max = rep.ic;
    res.fe_at_opt = rep.fe;
    res.se_at_opt = rep.se;
    res.s_in_at_opt = rep.s_in;
    return res;
}

}  // namespace dephaser::infometrics
