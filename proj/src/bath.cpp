// bath.cpp

#include "dephaser/bath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dephaser::bath {

namespace {

bool finite(double x) { return std::isfinite(x); }

// (1 - cos(w*tau_p)) / w^2 without cancellation: 2 sin^2(w*tau_p/2) / w^2.
double crossing_kernel(double omega, double tau_p) {
    if (omega == 0.0) return 0.5 * tau_p * tau_p;
    const double s = std::sin(0.5 * omega * tau_p);
    return 2.0 * s * s / (omega * omega);
}

double tabulated_value(const Tabulated& tab, double omega) {
    const auto& s = tab.samples;
    if (s.empty()) return 0.0;
    if (omega <= s.front().first) return s.front().second;
    if (omega >= s.back().first) {
        return omega == s.back().first ? s.back().second : 0.0;
    }
    auto it = std::upper_bound(
        s.begin(), s.end(), omega,
        [](double w, const std::pair<double, double>& p) { return w < p.first; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double t = (omega - lo.first) / (hi.first - lo.first);
    return lo.second + t * (hi.second - lo.second);
}

}  // namespace

void validate(const SpectralModel& model) {
    std::visit(
        [](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Ohmic>) {
                if (!finite(m.eta) || !finite(m.omega_c) || !finite(m.temperature))
                    throw std::invalid_argument("ohmic model: non-finite parameter");
                if (m.eta < 0.0)
                    throw std::invalid_argument("ohmic model: eta must be >= 0");
                if (m.omega_c <= 0.0)
                    throw std::invalid_argument("ohmic model: omega_c must be > 0");
                if (m.temperature < 0.0)
                    throw std::invalid_argument("ohmic model: temperature must be >= 0");
            } else if constexpr (std::is_same_v<T, White>) {
                if (!finite(m.s0) || m.s0 < 0.0)
                    throw std::invalid_argument("white model: s0 must be finite and >= 0");
                if (m.omega_max && !(*m.omega_max > 0.0))
                    throw std::invalid_argument("white model: omega_max must be > 0");
            } else {
                double prev = -1.0;
                for (const auto& [w, v] : m.samples) {
                    if (!finite(w) || !finite(v))
                        throw std::invalid_argument("tabulated model: non-finite sample");
                    if (w < 0.0 || v < 0.0)
                        throw std::invalid_argument("tabulated model: negative sample");
                    if (w <= prev)
                        throw std::invalid_argument(
                            "tabulated model: abscissae must strictly increase");
                    prev = w;
                }
            }
        },
        model);
}

double spectral_density(const SpectralModel& model, double omega) {
    if (omega < 0.0)
        throw std::domain_error("spectral_density: negative frequency");
    return std::visit(
        [omega](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Ohmic>) {
                const double cutoff = std::exp(-omega / m.omega_c);
                if (m.temperature <= 0.0) return m.eta * omega * cutoff;
                if (omega == 0.0) return 2.0 * m.eta * m.temperature;
                // w * coth(w/2T) = w / tanh(w/2T), stable down to w -> 0.
                return m.eta * omega / std::tanh(0.5 * omega / m.temperature) *
                       cutoff;
            } else if constexpr (std::is_same_v<T, White>) {
                return m.s0;
            } else {
                return tabulated_value(m, omega);
            }
        },
        model);
}

double overlap_integral(const SpectralModel& model, double tau_p, double shift,
                        const quadrature::Options& opts) {
    validate(model);
    if (!(tau_p > 0.0))
        throw std::invalid_argument("overlap_integral: tau_p must be > 0");
    if (shift < 0.0)
        throw std::invalid_argument("overlap_integral: shift must be >= 0");

    auto integrand = [&](double w) {
        return spectral_density(model, w) * crossing_kernel(w, tau_p) *
               std::cos(w * shift);
    };
    const double osc = tau_p + shift;  // highest cosine frequency in the integrand
    double upper = 0.0;
    double tail = 0.0;
    std::vector<double> breakpoints;
    if (const auto* oh = std::get_if<Ohmic>(&model)) {
        // exp(-w/omega_c) < 1e-17 beyond 40 cutoffs: tail negligible.
        upper = 40.0 * oh->omega_c;
    } else if (const auto* wh = std::get_if<White>(&model)) {
        upper = wh->omega_max.value_or(200.0 / tau_p);
        if (wh->s0 > 0.0) {
            // (1-cos a w) cos b w = cos b w - (cos (a+b) w + cos (a-b) w)/2
            const double a = tau_p, b = shift;
            tail = wh->s0 *
                   (quadrature::inverse_square_cosine_tail(b, upper) -
                    0.5 * quadrature::inverse_square_cosine_tail(a + b, upper) -
                    0.5 * quadrature::inverse_square_cosine_tail(std::abs(a - b),
                                                                 upper));
        }
    } else {
        const auto& tab = std::get<Tabulated>(model);
        if (tab.samples.empty()) return 0.0;
        upper = tab.samples.back().first;  // S = 0 beyond the last sample
        for (const auto& [w, v] : tab.samples) breakpoints.push_back(w);
    }
    if (!(upper > 0.0)) return 0.0;
    const double main = quadrature::integrate_adaptive(integrand, 0.0, upper,
                                                       osc, opts, breakpoints);
    return (main + tail) / M_PI;
}

std::vector<double> overlap_sequence(const SpectralModel& model,
                                     const ChannelTiming& timing,
                                     std::size_t count,
                                     const quadrature::Options& opts) {
    if (timing.lambda < 0.0 || !(timing.tau_p > 0.0) || timing.tau < 0.0)
        throw std::invalid_argument("channel timing: need lambda >= 0, tau_p > 0, tau >= 0");
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t m = 0; m < count; ++m) {
        if (m > 0 && timing.tau == 0.0) {
            out.push_back(out.front());  // perfectly superimposed windows
            continue;
        }
        quadrature::Options o = opts;
        if (m > 0 && !out.empty())
            o.abs_tol = std::max(o.abs_tol, o.rel_tol * std::abs(out.front()));
        out.push_back(
            overlap_integral(model, timing.tau_p, double(m) * timing.tau, o));
    }
    return out;
}

DephasingParams dephasing_params(const SpectralModel& model,
                                 const ChannelTiming& timing,
                                 const quadrature::Options& opts) {
    const auto overlaps = overlap_sequence(model, timing, 2, opts);
    const double i0 = overlaps[0];
    const double itau = overlaps[1];
    const double l2 = timing.lambda * timing.lambda;
    DephasingParams p;
    p.i0 = i0;
    p.i_tau = itau;
    p.lambda = timing.lambda;
    p.tau_p = timing.tau_p;
    p.tau = timing.tau;
    p.g = std::exp(-l2 * i0);
    p.h_plus = std::exp(-2.0 * l2 * (i0 + itau));
    p.h_minus = std::exp(-2.0 * l2 * (i0 - itau));
    if (i0 > 0.0) p.gamma_mem = itau / i0;
    return p;
}

DephasingParams direct_params(double g, double gamma_mem) {
    if (!(g >= 0.0 && g <= 1.0))
        throw std::invalid_argument("direct_params: g must be in [0,1]");
    if (!(gamma_mem >= -1.0 && gamma_mem <= 1.0))
        throw std::invalid_argument("direct_params: gamma_mem must be in [-1,1]");
    DephasingParams p;
    p.g = g;
    p.gamma_mem = gamma_mem;
    p.h_plus = std::pow(g, 2.0 * (1.0 + gamma_mem));
    p.h_minus = std::pow(g, 2.0 * (1.0 - gamma_mem));
    p.i0 = g > 0.0 ? -std::log(g) : std::numeric_limits<double>::infinity();
    p.i_tau = std::isfinite(p.i0) ? gamma_mem * p.i0 : p.i0;
    p.lambda = 1.0;
    return p;
}

}  // namespace dephaser::bath
