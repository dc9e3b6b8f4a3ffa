// quadrature.hpp — panel-adaptive Gauss-Kronrod integration plus an
// accelerated tail for semi-infinite cosine/omega^2 integrals.

#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace dephaser::quadrature {

struct Options {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;            // extra absolute floor on the error sum
    std::size_t max_evals = 1'000'000;
};

struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive G7/K15 on [lo, hi].  `osc_freq` is the highest angular frequency
// of oscillatory factors in f; the initial mesh places panel boundaries at
// half-periods pi/osc_freq (capped at 512 panels), with optional extra
// breakpoints (e.g. interpolation knots).  Panels are then bisected worst
// first until sum(err) <= max(rel_tol*|I|, abs_tol); exceeding max_evals
// throws convergence_error.
double integrate_adaptive(const std::function<double(double)>& f, double lo,
                          double hi, double osc_freq, const Options& opts,
                          const std::vector<double>& breakpoints = {});

// int_{omega0}^inf cos(c*w)/w^2 dw for c >= 0, omega0 > 0.  Computed as a
// half-period alternating series accelerated by iterated averaging; for
// c*omega0 < 2 the head up to 2/c is integrated adaptively first.
double inverse_square_cosine_tail(double c, double omega0);

}  // namespace dephaser::quadrature
