// commands.cpp

#include "dephaser/commands.hpp"

#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

#include "dephaser/csv.hpp"
#include "dephaser/infometrics.hpp"
#include "dephaser/protocol.hpp"

namespace dephaser::cli {

namespace {

struct Prepared {
    std::string out_path;
    int precision;
    // Bath-sourced runs carry the quadrature-derived parameters; direct runs
    // rebuild params per grid point.
    std::optional<bath::DephasingParams> bath_params;
};

Prepared prepare(const RunConfig& cfg, const CommandOverrides& ov) {
    Prepared p;
    p.out_path = !ov.out_path.empty() ? ov.out_path : cfg.out_path;
    p.precision = ov.precision > 0 ? ov.precision : cfg.precision;
    if (cfg.source_kind == SourceKind::bath) {
        try {
            p.bath_params = bath::dephasing_params(cfg.model, cfg.timing);
        } catch (const quadrature::convergence_error& e) {
            throw quadrature::convergence_error(
                std::string("while computing bath dephasing parameters: ") +
                e.what());
        }
    }
    return p;
}

std::vector<double> grid_values(const Range& r) {
    std::vector<double> v;
    v.reserve(r.count);
    for (int i = 0; i < r.count; ++i) v.push_back(r.at(i));
    return v;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const unsigned threads =
        std::max(1u, std::min<unsigned>(thread_cap(), unsigned(n)));
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::exception_ptr first_error;
    std::mutex err_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < n; i += threads) fn(i);
            } catch (...) {
                std::lock_guard lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

bath::DephasingParams point_params(const Prepared& prep, double g,
                                   double gamma) {
    if (prep.bath_params) return *prep.bath_params;
    return bath::direct_params(g, gamma);
}

// Resolve the g grid: [sweep] range, else the direct scalar, else the
// bath-derived value.
std::vector<double> resolve_g(const RunConfig& cfg, const Prepared& prep,
                              const char* command) {
    if (prep.bath_params) {
        if (cfg.g_range)
            throw ParseError("a bath source fixes g; remove the [sweep] g range");
        return {prep.bath_params->g};
    }
    if (cfg.g_range) return grid_values(*cfg.g_range);
    if (cfg.g_direct) return {*cfg.g_direct};
    throw ParseError(std::string(command) +
                     " command requires g (direct source or [sweep] range)");
}

std::vector<double> resolve_gamma(const RunConfig& cfg, const Prepared& prep,
                                  const char* command,
                                  std::optional<double> fallback = {}) {
    if (prep.bath_params) {
        if (cfg.gamma_range)
            throw ParseError(
                "a bath source fixes gamma; remove the [sweep] gamma range");
        return {prep.bath_params->gamma_mem.value_or(0.0)};
    }
    if (cfg.gamma_range) return grid_values(*cfg.gamma_range);
    if (cfg.gamma_direct) return {*cfg.gamma_direct};
    if (fallback) return {*fallback};
    throw ParseError(std::string(command) +
                     " command requires gamma (direct source or [sweep] range)");
}

}  // namespace

unsigned thread_cap() {
    if (const char* env = std::getenv("DEPHASER_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return unsigned(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::string cmd_params(const RunConfig& cfg, const CommandOverrides& ov) {
    if (cfg.source_kind != SourceKind::bath)
        throw ParseError("params command requires a bath source");
    const Prepared prep = prepare(cfg, ov);
    const auto& p = *prep.bath_params;
    CsvWriter csv({"g", "gamma_mem", "h_plus", "h_minus", "i0", "i_tau"},
                  prep.precision);
    csv.begin_rows(1);
    const double gamma = p.gamma_mem
                             ? *p.gamma_mem
                             : std::numeric_limits<double>::quiet_NaN();
    csv.set_row(0, {p.g, gamma, p.h_plus, p.h_minus, p.i0, p.i_tau});
    csv.write(prep.out_path);
    return csv.str();
}

std::string cmd_sweep(const RunConfig& cfg, const CommandOverrides& ov) {
    if (!ov.figure.empty() && ov.figure != "fe" && ov.figure != "se" &&
        ov.figure != "ic")
        throw ParseError("--figure must be fe, se or ic");
    if (!cfg.p_range)
        throw ParseError("sweep command requires a p range in [sweep]");
    const Prepared prep = prepare(cfg, ov);
    const auto gs = resolve_g(cfg, prep, "sweep");
    const auto gammas = resolve_gamma(cfg, prep, "sweep");
    const auto ps = grid_values(*cfg.p_range);

    CsvWriter csv({"g", "gamma_mem", "p", "fe", "se", "ic", "s_in"},
                  prep.precision);
    const std::size_t total = gs.size() * gammas.size() * ps.size();
    csv.begin_rows(total);
    parallel_for(total, [&](std::size_t idx) {
        const std::size_t ip = idx % ps.size();
        const std::size_t igamma = (idx / ps.size()) % gammas.size();
        const std::size_t ig = idx / (ps.size() * gammas.size());
        const auto params = point_params(prep, gs[ig], gammas[igamma]);
        const auto rep = infometrics::two_use_family_metrics({ps[ip]}, params);
        csv.set_row(idx, {gs[ig], gammas[igamma], ps[ip], rep.fe, rep.se,
                          rep.ic, rep.s_in});
    });
    csv.write(prep.out_path);
    return csv.str();
}

std::string cmd_opt(const RunConfig& cfg, const CommandOverrides& ov) {
    const Prepared prep = prepare(cfg, ov);
    const auto gs = resolve_g(cfg, prep, "opt");
    const auto gammas = resolve_gamma(cfg, prep, "opt", 1.0);
    if (gammas.size() != 1)
        throw ParseError("opt command uses a single gamma value");
    const double gamma = gammas.front();

    CsvWriter csv({"g", "p_opt", "ic_max", "ic_memoryless", "fe_at_opt",
                   "se_at_opt", "s_in_at_opt"},
                  prep.precision);
    csv.begin_rows(gs.size());
    parallel_for(gs.size(), [&](std::size_t ig) {
        const auto params = point_params(prep, gs[ig], gamma);
        const auto res = infometrics::optimize_p(params);
        const auto memoryless =
            infometrics::optimize_p(bath::direct_params(params.g, 0.0));
        csv.set_row(ig, {gs[ig], res.p_opt, res.ic_max, memoryless.ic_max,
                         res.fe_at_opt, res.se_at_opt, res.s_in_at_opt});
    });
    csv.write(prep.out_path);
    return csv.str();
}

std::string cmd_protocol(const RunConfig& cfg, const CommandOverrides& ov) {
    const Prepared prep = prepare(cfg, ov);
    const auto gs = resolve_g(cfg, prep, "protocol");
    const auto gammas = resolve_gamma(cfg, prep, "protocol");

    CsvWriter csv({"g", "gamma_mem", "coded", "uncoded", "advantageous"},
                  prep.precision);
    const std::size_t total = gs.size() * gammas.size();
    csv.begin_rows(total);
    parallel_for(total, [&](std::size_t idx) {
        const std::size_t igamma = idx % gammas.size();
        const std::size_t ig = idx / gammas.size();
        const auto params = point_params(prep, gs[ig], gammas[igamma]);
        const auto adv = protocol::protocol_advantage(params);
        csv.set_row(idx, {gs[ig], gammas[igamma], adv.coded, adv.uncoded,
                          adv.advantageous ? 1.0 : 0.0});
    });
    csv.write(prep.out_path);
    return csv.str();
}

}  // namespace dephaser::cli
