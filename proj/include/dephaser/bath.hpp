// bath.hpp — bath power spectra, overlap integrals, and the scalar channel
// parameters {g, gamma_mem, h+, h-} they induce.
//
// Units: hbar = k_B = 1 throughout; frequencies in rad/time, temperatures in
// energy.

#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "dephaser/quadrature.hpp"

namespace dephaser::bath {

// S(w) = eta * w * exp(-w/omega_c), times coth(w/2T) when T > 0.
struct Ohmic {
    double eta = 1.0;
    double omega_c = 1.0;
    double temperature = 0.0;
};

// Flat spectrum S(w) = s0.  The overlap quadrature integrates up to
// omega_max (default 200/tau_p) and adds the analytic oscillatory tail.
struct White {
    double s0 = 1.0;
    std::optional<double> omega_max{};
};

// Piecewise-linear samples (strictly increasing abscissae).  S is held at
// the first sample below it and is zero beyond the last sample.
struct Tabulated {
    std::vector<std::pair<double, double>> samples;
};

using SpectralModel = std::variant<Ohmic, White, Tabulated>;

// Throws std::invalid_argument on nonpositive cutoffs, negative values,
// non-increasing abscissae, or non-finite numbers.
void validate(const SpectralModel& model);

// S(w) for w >= 0; negative w is a domain error.  The ohmic T > 0 value at
// w = 0 is the finite limit 2*eta*T.
double spectral_density(const SpectralModel& model, double omega);

struct ChannelTiming {
    double lambda = 1.0;  // coupling strength (1/time)
    double tau_p = 1.0;   // crossing time
    double tau = 0.0;     // separation between consecutive uses
};

// I(shift) = (1/pi) int_0^inf S(w) (1-cos w*tau_p)/w^2 cos(w*shift) dw.
double overlap_integral(const SpectralModel& model, double tau_p, double shift,
                        const quadrature::Options& opts = {});

// {I(0), I(tau), ..., I((count-1)*tau)}.
std::vector<double> overlap_sequence(const SpectralModel& model,
                                     const ChannelTiming& timing,
                                     std::size_t count,
                                     const quadrature::Options& opts = {});

struct DephasingParams {
    double g = 1.0;        // exp(-lambda^2 I(0))
    double h_plus = 1.0;   // exp(-2 lambda^2 (I(0)+I(tau)))
    double h_minus = 1.0;  // exp(-2 lambda^2 (I(0)-I(tau)))
    std::optional<double> gamma_mem{};  // I(tau)/I(0); empty when I(0) = 0
    double i0 = 0.0;
    double i_tau = 0.0;
    double lambda = 1.0;
    double tau_p = 1.0;
    double tau = 0.0;
};

DephasingParams dephasing_params(const SpectralModel& model,
                                 const ChannelTiming& timing,
                                 const quadrature::Options& opts = {});

// Parameters given directly as (g, gamma_mem) rather than through a bath
// model; h+- = g^(2(1 +- gamma)).
DephasingParams direct_params(double g, double gamma_mem);

}  // namespace dephaser::bath
