// csv.hpp — deterministic CSV assembly: comma separator, '.' decimal,
// configurable significant digits, LF line endings.

#pragma once

#include <string>
#include <vector>

namespace dephaser::cli {

// %.{precision}g formatting (shortest form at the given significant digits).
std::string format_number(double v, int precision);

class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> header, int precision);

    void begin_rows(std::size_t count);
    // Thread-safe for distinct indices: each row slot is independent.
    void set_row(std::size_t index, const std::vector<double>& values);
    std::string str() const;
    // Writes to the path, or to stdout when the path is empty.
    void write(const std::string& path) const;

  private:
    std::vector<std::string> header_;
    std::vector<std::string> rows_;
    int precision_;
};

}  // namespace dephaser::cli
