// quadrature.cpp

#include "dephaser/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace dephaser::quadrature {

namespace {

// QUADPACK G7/K15 nodes and weights (positive half; node 7 is the center).
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767,
                           0.3818300505051189, 0.4179591836734694};

struct PanelResult {
    double value;
    double error;
};

PanelResult gk15(const std::function<double(double)>& f, double lo,
                 double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(center);
    double kron = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = half * kXgk[j];
        const double fsum = f(center - x) + f(center + x);
        kron += kWgk[j] * fsum;
        if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
    }
    kron *= half;
    gauss *= half;
    return {kron, std::abs(kron - gauss)};
}

struct Panel {
    double error;
    double value;
    double lo, hi;
    bool operator<(const Panel& o) const { return error < o.error; }
};

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double lo,
                          double hi, double osc_freq, const Options& opts,
                          const std::vector<double>& breakpoints) {
    if (!(hi > lo)) return 0.0;

    std::vector<double> edges{lo, hi};
    if (osc_freq > 0.0) {
        const double span = hi - lo;
        const double raw = std::ceil(span * osc_freq / M_PI);
        const std::size_t count =
            raw >= 512.0 ? 512 : std::max<std::size_t>(1, std::size_t(raw));
        for (std::size_t k = 1; k < count; ++k)
            edges.push_back(lo + span * double(k) / double(count));
    }
    for (double b : breakpoints)
        if (b > lo && b < hi) edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::priority_queue<Panel> heap;
    double total = 0.0, err = 0.0;
    std::size_t evals = 0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const PanelResult r = gk15(f, edges[i], edges[i + 1]);
        evals += 15;
        total += r.value;
        err += r.error;
        heap.push({r.error, r.value, edges[i], edges[i + 1]});
    }

    const double width_floor = (hi - lo) * 1e-15;
    auto converged = [&] {
        return err <= std::max(opts.rel_tol * std::abs(total), opts.abs_tol);
    };
    while (!converged()) {
        if (evals >= opts.max_evals)
            throw convergence_error(
                "adaptive quadrature: tolerance not reached within the "
                "evaluation budget");
        Panel worst = heap.top();
        heap.pop();
        if (worst.error <= 0.0) break;  // nothing left that refinement can improve
        if (worst.hi - worst.lo <= width_floor) {
            // Cannot split further in double precision; accept as is.
            err -= worst.error;
            worst.error = 0.0;
            heap.push(worst);
            continue;
        }
        const double mid = 0.5 * (worst.lo + worst.hi);
        const PanelResult a = gk15(f, worst.lo, mid);
        const PanelResult b = gk15(f, mid, worst.hi);
        evals += 30;
        total += a.value + b.value - worst.value;
        err += a.error + b.error - worst.error;
        heap.push({a.error, a.value, worst.lo, mid});
        heap.push({b.error, b.value, mid, worst.hi});
    }
    return total;
}

double inverse_square_cosine_tail(double c, double omega0) {
    if (!(omega0 > 0.0))
        throw std::invalid_argument("cosine tail: omega0 must be positive");
    if (c < 0.0) c = -c;
    if (c == 0.0) return 1.0 / omega0;

    auto f = [c](double w) { return std::cos(c * w) / (w * w); };
    double head = 0.0;
    double start = omega0;
    if (c * start < 2.0) {
        // Not yet oscillating: push the series start out to phase 2.
        const double ext = 2.0 / c;
        Options o;
        o.rel_tol = 1e-13;
        o.abs_tol = 1e-16 / omega0;
        head += integrate_adaptive(f, start, ext, c, o);
        start = ext;
    }
    // First zero of cos(c w) at or beyond `start`.
    const long k = std::lround(std::ceil(start * c / M_PI - 0.5));
    double z = (double(k) + 0.5) * M_PI / c;
    if (z > start) head += gk15(f, start, z).value;

    // Alternating half-period integrals, accelerated by iterated averaging
    // of the partial sums.
    constexpr int kPanels = 48;
    std::vector<double> partial(kPanels);
    double acc = 0.0;
    const double h = M_PI / c;
    for (int j = 0; j < kPanels; ++j) {
        acc += gk15(f, z + j * h, z + (j + 1) * h).value;
        partial[j] = acc;
    }
    while (partial.size() > 1) {
        for (std::size_t i = 0; i + 1 < partial.size(); ++i)
            partial[i] = 0.5 * (partial[i] + partial[i + 1]);
        partial.pop_back();
    }
    return head + partial[0];
}

}  // namespace dephaser::quadrature
