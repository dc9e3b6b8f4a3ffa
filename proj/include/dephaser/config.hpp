// config.hpp — INI-style run configuration for the CLI.
//
// Sections: [source] (bath model or direct g/gamma), [sweep] (ranges as
// start:stop:count or a single value), [output] (path, precision).

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "dephaser/bath.hpp"

namespace dephaser::cli {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Range {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;

    double at(int i) const {
        if (count <= 1) return start;
        return start + (stop - start) * double(i) / double(count - 1);
    }
};

enum class SourceKind { bath, direct };

struct RunConfig {
    SourceKind source_kind = SourceKind::direct;
    bath::SpectralModel model = bath::White{};
    bath::ChannelTiming timing{};
    std::optional<double> g_direct;      // direct source scalars
    std::optional<double> gamma_direct;
    std::optional<Range> g_range;
    std::optional<Range> gamma_range;
    std::optional<Range> p_range;
    std::string out_path;  // empty = stdout
    int precision = 12;
    bool allow_invalid_kraus = false;
};

RunConfig parse_config_file(const std::string& path);
// `origin` names the source in error messages ("file.ini:12: ...").
RunConfig parse_config_text(const std::string& text, const std::string& origin);

}  // namespace dephaser::cli
