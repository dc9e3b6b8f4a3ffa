// channel.cpp

#include "dephaser/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "dephaser/kernels.hpp"

namespace dephaser::channel {

namespace {

constexpr double kPsdSlack = -1e-10;
constexpr double kEigPrune = 1e-12;

int bit(std::size_t x, int n, int k) { return int(x >> (n - 1 - k)) & 1; }

CMat real_to_cmat(const std::vector<double>& c, std::size_t n) {
    CMat m(n);
    for (std::size_t i = 0; i < n * n; ++i) m.data()[i] = cplx(c[i], 0.0);
    return m;
}

}  // namespace

DephasingMap DephasingMap::from_memory_profile(
    double g, std::span<const double> gamma_lags) {
    if (!(g >= 0.0 && g <= 1.0))
        throw std::invalid_argument("dephasing map: g must be in [0,1]");
    const int n = int(gamma_lags.size()) + 1;
    if (n > 10)
        throw std::invalid_argument("dephasing map: more than 10 uses is unsupported");
    const std::size_t dim = std::size_t{1} << n;
    auto gamma = [&](int lag) { return lag == 0 ? 1.0 : gamma_lags[lag - 1]; };

    std::vector<double> c(dim * dim, 1.0);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t l = 0; l < j; ++l) {
            double expo = 0.0;
            for (int k = 0; k < n; ++k) {
                const int dk = bit(j, n, k) - bit(l, n, k);
                if (dk == 0) continue;
                for (int k2 = 0; k2 < n; ++k2) {
                    const int dk2 = bit(j, n, k2) - bit(l, n, k2);
                    if (dk2 == 0) continue;
                    expo += double(dk * dk2) * gamma(std::abs(k - k2));
                }
            }
            const double v = std::pow(g, expo);
            c[j * dim + l] = v;
            c[l * dim + j] = v;
        }
    }
    DephasingMap m(n, std::move(c));
    m.check_psd();
    return m;
}

DephasingMap DephasingMap::from_overlaps(double lambda,
                                         std::span<const double> overlaps) {
    if (overlaps.empty())
        throw std::invalid_argument("dephasing map: need at least I(0)");
    const double i0 = overlaps[0];
    const double g = std::exp(-lambda * lambda * i0);
    std::vector<double> lags(overlaps.size() - 1);
    for (std::size_t m = 1; m < overlaps.size(); ++m)
        lags[m - 1] = i0 > 0.0 ? overlaps[m] / i0 : 0.0;
    return from_memory_profile(g, lags);
}

DephasingMap DephasingMap::from_params(const bath::DephasingParams& p,
                                       int n_uses) {
    if (n_uses == 1) {
        return from_memory_profile(p.g, {});
    }
    if (n_uses == 2) {
        const double lag[1] = {p.gamma_mem.value_or(0.0)};
        return from_memory_profile(p.g, lag);
    }
    throw std::invalid_argument(
        "dephasing map: scalar parameters determine at most two uses; "
        "use from_overlaps / from_memory_profile for more");
}

DephasingMap DephasingMap::from_coefficients(int n_uses, std::vector<double> c,
                                             bool validate) {
    const std::size_t dim = std::size_t{1} << n_uses;
    if (c.size() != dim * dim)
        throw std::invalid_argument("dephasing map: coefficient size mismatch");
    DephasingMap m(n_uses, std::move(c));
    if (validate) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (m.c_[j * dim + j] != 1.0)
                throw std::invalid_argument("dephasing map: diagonal must be 1");
            for (std::size_t l = 0; l < j; ++l)
                if (m.c_[j * dim + l] != m.c_[l * dim + j])
                    throw std::invalid_argument("dephasing map: not symmetric");
        }
        m.check_psd();
    }
    return m;
}

std::vector<double> DephasingMap::spectrum() const {
    return hermitian_eigenvalues(real_to_cmat(c_, dim()));
}

void DephasingMap::check_psd() const {
    const auto ev = spectrum();
    if (ev.back() < kPsdSlack)
        throw std::runtime_error(
            "dephasing map: coefficient matrix is not positive semidefinite "
            "(inconsistent overlap integrals)");
}

DensityMatrix apply_dephasing(const DensityMatrix& rho,
                              const DephasingMap& map) {
    if (rho.dim() != map.dim())
        throw std::invalid_argument("apply_dephasing: dimension mismatch");
    const std::size_t n = rho.dim();
    CMat out(n);
    for (std::size_t j = 0; j < n; ++j)
        kernels::active().hadamard_scale(out.row(j), rho.matrix().row(j),
                                         map.coefficients().data() + j * n, n);
    return DensityMatrix(std::move(out));
}

ExtendedDephasing::ExtendedDephasing(DephasingMap map, int total_qubits,
                                     std::vector<int> acting_on)
    : map_(std::move(map)),
      total_qubits_(total_qubits),
      acting_on_(std::move(acting_on)) {
    if (int(acting_on_.size()) != map_.n_uses())
        throw std::invalid_argument("extend_with_identity: index count != uses");
    std::vector<bool> seen(total_qubits_, false);
    for (int q : acting_on_) {
        if (q < 0 || q >= total_qubits_)
            throw std::invalid_argument("extend_with_identity: index out of range");
        if (seen[q])
            throw std::invalid_argument("extend_with_identity: duplicate index");
        seen[q] = true;
    }
}

DensityMatrix ExtendedDephasing::operator()(const DensityMatrix& rho) const {
    if (rho.qubits() != total_qubits_)
        throw std::invalid_argument("extend_with_identity: dimension mismatch");
    const std::size_t n = rho.dim();
    const int nu = map_.n_uses();
    // Restrict a basis index to the acted-on qubits, in use order.
    auto restrict_bits = [&](std::size_t full) {
        std::size_t sub = 0;
        for (int k = 0; k < nu; ++k)
            sub |= std::size_t(bit(full, total_qubits_, acting_on_[k]))
                   << (nu - 1 - k);
        return sub;
    };
    std::vector<std::size_t> sub(n);
    for (std::size_t j = 0; j < n; ++j) sub[j] = restrict_bits(j);

    CMat out(n);
    std::vector<double> row_coeff(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l)
            row_coeff[l] = map_.coeff(sub[j], sub[l]);
        kernels::active().hadamard_scale(out.row(j), rho.matrix().row(j),
                                         row_coeff.data(), n);
    }
    return DensityMatrix(std::move(out));
}

double KrausSet::completeness_defect() const {
    if (ops.empty()) return 1.0;
    const std::size_t n = ops.front().op.dim();
    CMat acc(n);
    for (const auto& [w, k] : ops) {
        const CMat kk = k.adjoint() * k;
        kernels::active().accum_scaled(acc.data(), kk.data(), w, n * n);
    }
    return CMat::max_abs_diff(acc, CMat::identity(n));
}

KrausSet kraus_single(double g) {
    if (!(g >= 0.0 && g <= 1.0))
        throw std::invalid_argument("kraus_single: g must be in [0,1]");
    CMat id = CMat::identity(2);
    CMat sz = CMat::identity(2);
    sz(1, 1) = cplx(-1.0, 0.0);
    KrausSet set;
    set.ops.push_back({0.5 * (1.0 + g), std::move(id)});
    set.ops.push_back({0.5 * (1.0 - g), std::move(sz)});
    return set;
}

KrausSet kraus_two_use(double g, double h_plus, double h_minus,
                       TwoUseWeights convention) {
    for (double v : {g, h_plus, h_minus})
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("kraus_two_use: parameters must be in [0,1]");
    auto diag4 = [](double a, double b, double c, double d) {
        CMat m(4);
        m(0, 0) = a;
        m(1, 1) = b;
        m(2, 2) = c;
        m(3, 3) = d;
        return m;
    };
    const CMat k0 = diag4(1, 1, 1, 1);     // I (x) I
    const CMat k1 = diag4(1, -1, 1, -1);   // I (x) Z
    const CMat k2 = diag4(1, 1, -1, -1);   // Z (x) I
    const CMat k3 = diag4(1, -1, -1, 1);   // Z (x) Z
    const CMat k4 = diag4(1, 0, 0, -1);    // (K1+K2)/2
    const CMat k5 = diag4(0, 1, 1, 0);     // (K0-K3)/2

    const double pair_prefactor =
        convention == TwoUseWeights::halved ? 0.5 : 0.25;
    const double w0 = 0.25 * (1.0 + 2.0 * g + h_plus);
    const double w12 = 0.25 * (1.0 - h_minus);
    const double w3 = 0.25 * (1.0 - 2.0 * g + h_plus);
    const double w45 = pair_prefactor * (h_minus - h_plus);

    KrausSet set;
    set.ops.push_back({w0, k0});
    set.ops.push_back({w12, k1});
    set.ops.push_back({w12, k2});
    set.ops.push_back({w3, k3});
    set.ops.push_back({w45, k4});
    set.ops.push_back({w45, k5});
    for (const auto& op : set.ops)
        if (op.weight < 0.0) set.valid = false;
    return set;
}

KrausSet kraus_canonical(const DephasingMap& map) {
    const std::size_t n = map.dim();
    const EigenSystem es =
        hermitian_eigensystem(real_to_cmat(map.coefficients(), n));
    KrausSet set;
    for (std::size_t k = 0; k < n; ++k) {
        const double mu = es.values[k];
        if (mu < kPsdSlack)
            throw std::runtime_error("kraus_canonical: map is not completely positive");
        if (mu <= kEigPrune) continue;
        const auto v = es.vector(k);
        // Scale the diagonal operator so its largest entry has magnitude 1
        // (recovers I and sigma_z exactly in the single-use case).
        double vmax = 0.0;
        for (const cplx& x : v) vmax = std::max(vmax, std::abs(x));
        CMat op(n);
        for (std::size_t i = 0; i < n; ++i) op(i, i) = v[i] / vmax;
        set.ops.push_back({mu * vmax * vmax, std::move(op)});
    }
    return set;
}

DensityMatrix apply_kraus(const KrausSet& set, const DensityMatrix& rho,
                          bool allow_invalid) {
    if (!set.valid && !allow_invalid)
        throw std::invalid_argument(
            "apply_kraus: set has negative weights; pass allow_invalid to "
            "apply it anyway");
    if (set.ops.empty()) throw std::invalid_argument("apply_kraus: empty set");
    const std::size_t n = rho.dim();
    const auto& K = kernels::active();
    CMat acc(n);
    CMat tmp(n), term(n);
    for (const auto& [w, k] : set.ops) {
        if (k.dim() != n)
            throw std::invalid_argument("apply_kraus: dimension mismatch");
        if (w == 0.0) continue;
        K.matmul(tmp.data(), k.data(), rho.matrix().data(), n);
        K.matmul_adj_rhs(term.data(), tmp.data(), k.data(), n);
        K.accum_scaled(acc.data(), term.data(), w, n * n);
    }
    return DensityMatrix(std::move(acc));
}

}  // namespace dephaser::channel
