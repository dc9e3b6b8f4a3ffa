// csv.cpp

#include "dephaser/csv.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace dephaser::cli {

std::string format_number(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header, int precision)
    : header_(std::move(header)), precision_(precision) {}

void CsvWriter::begin_rows(std::size_t count) { rows_.assign(count, {}); }

void CsvWriter::set_row(std::size_t index, const std::vector<double>& values) {
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) line += ',';
        line += format_number(values[i], precision_);
    }
    rows_.at(index) = std::move(line);
}

std::string CsvWriter::str() const {
    std::string out;
    for (std::size_t i = 0; i < header_.size(); ++i) {
        if (i) out += ',';
        out += header_[i];
    }
    out += '\n';
    for (const std::string& r : rows_) {
        out += r;
        out += '\n';
    }
    return out;
}

void CsvWriter::write(const std::string& path) const {
    if (path.empty()) {
        std::cout << str();
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << str();
    if (!f) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace dephaser::cli
