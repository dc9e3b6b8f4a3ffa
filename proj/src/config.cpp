// config.cpp

#include "dephaser/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace dephaser::cli {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

struct Entry {
    std::string value;
    int line;
    bool used = false;
};

using Section = std::map<std::string, Entry>;

[[noreturn]] void fail(const std::string& origin, int line,
                       const std::string& msg) {
    std::ostringstream os;
    os << origin << ":" << line << ": " << msg;
    throw ParseError(os.str());
}

double parse_double(const std::string& origin, const Entry& e,
                    const std::string& key) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(e.value, &pos);
        if (pos != e.value.size()) throw std::invalid_argument("trailing text");
        return v;
    } catch (const std::exception&) {
        fail(origin, e.line, "invalid number for '" + key + "': " + e.value);
    }
}

Range parse_range(const std::string& origin, const Entry& e,
                  const std::string& key) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : e.value) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    auto num = [&](const std::string& s) {
        Entry tmp{trim(s), e.line};
        return parse_double(origin, tmp, key);
    };
    if (parts.size() == 1) {
        const double v = num(parts[0]);
        return Range{v, v, 1};
    }
    if (parts.size() != 3)
        fail(origin, e.line, "range for '" + key + "' must be value or start:stop:count");
    Range r;
    r.start = num(parts[0]);
    r.stop = num(parts[1]);
    const double c = num(parts[2]);
    r.count = int(c);
    if (r.count < 1 || double(r.count) != c)
        fail(origin, e.line, "range count for '" + key + "' must be a positive integer");
    return r;
}

std::vector<std::pair<double, double>> parse_samples(const std::string& origin,
                                                     const Entry& e) {
    std::vector<std::pair<double, double>> out;
    std::stringstream ss(e.value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            fail(origin, e.line, "samples must be omega:value pairs");
        Entry w{trim(item.substr(0, colon)), e.line};
        Entry v{trim(item.substr(colon + 1)), e.line};
        out.emplace_back(parse_double(origin, w, "samples"),
                         parse_double(origin, v, "samples"));
    }
    if (out.empty()) fail(origin, e.line, "samples list is empty");
    return out;
}

}  // namespace

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

RunConfig parse_config_text(const std::string& text,
                            const std::string& origin) {
    std::map<std::string, Section> sections;
    std::string current;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(origin, lineno, "unterminated section header");
            current = trim(line.substr(1, line.size() - 2));
            if (current != "source" && current != "sweep" && current != "output")
                fail(origin, lineno, "unknown section [" + current + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(origin, lineno, "expected key = value");
        if (current.empty()) fail(origin, lineno, "key outside of any section");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(origin, lineno, "empty key");
        auto [it, inserted] =
            sections[current].emplace(key, Entry{value, lineno});
        if (!inserted) fail(origin, lineno, "duplicate key '" + key + "'");
    }

    RunConfig cfg;
    auto take = [&](const std::string& sec,
                    const std::string& key) -> Entry* {
        auto s = sections.find(sec);
        if (s == sections.end()) return nullptr;
        auto e = s->second.find(key);
        if (e == s->second.end()) return nullptr;
        e->second.used = true;
        return &e->second;
    };

    // [source]
    const Entry* type = take("source", "type");
    if (!type) throw ParseError(origin + ": missing [source] type");
    if (type->value == "direct") {
        cfg.source_kind = SourceKind::direct;
        if (const Entry* e = take("source", "g"))
            cfg.g_direct = parse_double(origin, *e, "g");
        if (const Entry* e = take("source", "gamma"))
            cfg.gamma_direct = parse_double(origin, *e, "gamma");
    } else if (type->value == "bath") {
        cfg.source_kind = SourceKind::bath;
        const Entry* spec = take("source", "spectrum");
        if (!spec)
            throw ParseError(origin + ": bath source requires 'spectrum'");
        if (spec->value == "ohmic") {
            bath::Ohmic m;
            if (const Entry* e = take("source", "eta"))
                m.eta = parse_double(origin, *e, "eta");
            if (const Entry* e = take("source", "omega_c"))
                m.omega_c = parse_double(origin, *e, "omega_c");
            if (const Entry* e = take("source", "temperature"))
                m.temperature = parse_double(origin, *e, "temperature");
            cfg.model = m;
        } else if (spec->value == "white") {
            bath::White m;
            if (const Entry* e = take("source", "s0"))
                m.s0 = parse_double(origin, *e, "s0");
            if (const Entry* e = take("source", "omega_max"))
                m.omega_max = parse_double(origin, *e, "omega_max");
            cfg.model = m;
        } else if (spec->value == "tabulated") {
            bath::Tabulated m;
            const Entry* e = take("source", "samples");
            if (!e)
                throw ParseError(origin + ": tabulated spectrum requires 'samples'");
            m.samples = parse_samples(origin, *e);
            cfg.model = m;
        } else {
            fail(origin, spec->line, "unknown spectrum '" + spec->value + "'");
        }
        if (const Entry* e = take("source", "lambda"))
            cfg.timing.lambda = parse_double(origin, *e, "lambda");
        if (const Entry* e = take("source", "tau_p"))
            cfg.timing.tau_p = parse_double(origin, *e, "tau_p");
        if (const Entry* e = take("source", "tau"))
            cfg.timing.tau = parse_double(origin, *e, "tau");
    } else {
        fail(origin, type->line, "source type must be 'bath' or 'direct'");
    }

    // [sweep]
    if (const Entry* e = take("sweep", "g"))
        cfg.g_range = parse_range(origin, *e, "g");
    if (const Entry* e = take("sweep", "gamma"))
        cfg.gamma_range = parse_range(origin, *e, "gamma");
    if (const Entry* e = take("sweep", "p"))
        cfg.p_range = parse_range(origin, *e, "p");

    // [output]
    if (const Entry* e = take("output", "path")) cfg.out_path = e->value;
    if (const Entry* e = take("output", "precision")) {
        const double p = parse_double(origin, *e, "precision");
        cfg.precision = int(p);
        if (cfg.precision < 1 || cfg.precision > 17 || double(cfg.precision) != p)
            fail(origin, e->line, "precision must be an integer in [1,17]");
    }

    for (const auto& [sec, entries] : sections)
        for (const auto& [key, entry] : entries)
            if (!entry.used)
                fail(origin, entry.line, "unknown key '" + key + "' in [" + sec + "]");

    return cfg;
}

}  // namespace dephaser::cli
