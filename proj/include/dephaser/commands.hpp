// commands.hpp — the four CLI commands as library entry points, so tests can
// drive them without a process boundary.  Grid evaluation fans out over
// threads (capped by DEPHASER_THREADS); rows are emitted in grid order.

#pragma once

#include <string>

#include "dephaser/config.hpp"

namespace dephaser::cli {

struct CommandOverrides {
    std::string out_path;  // overrides [output] path when nonempty
    int precision = 0;     // overrides [output] precision when > 0
    std::string figure;    // sweep: fe | se | ic (validated; columns are fixed)
    bool allow_invalid_kraus = false;
};

// Each returns the CSV text it wrote (stdout when the path is empty).
std::string cmd_params(const RunConfig& cfg, const CommandOverrides& ov = {});
std::string cmd_sweep(const RunConfig& cfg, const CommandOverrides& ov = {});
std::string cmd_opt(const RunConfig& cfg, const CommandOverrides& ov = {});
std::string cmd_protocol(const RunConfig& cfg, const CommandOverrides& ov = {});

// Thread cap: DEPHASER_THREADS when set and positive, else the hardware
// concurrency.
unsigned thread_cap();

}  // namespace dephaser::cli
