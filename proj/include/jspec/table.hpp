#pragma once

// Sweep axes and tabular output (CSV with one header row, or JSON lines).

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace jspec {

enum class SweepScale { linear, logarithmic };

/// count points from min to max inclusive.
struct SweepSpec {
  std::string variable;
  double min = 0.0;
  double max = 1.0;
  int count = 2;
  SweepScale scale = SweepScale::linear;

  /// Throws std::invalid_argument unless min < max, count >= 2 and (for
  /// logarithmic scale) min > 0.
  void validate() const;
  std::vector<double> values() const;
};

/// Axis text: a single value ("1.5"), a list ("0.0005,0.05,0.5") or a range
/// "min:max:count[:lin|log]". Ranges go through SweepSpec validation.
std::vector<double> parse_axis(const std::string& variable, const std::string& text);

enum class OutputFormat { csv, json_lines };

using Cell = std::variant<double, std::int64_t, std::string>;

/// Formats doubles with `precision` significant digits (%.*g); NaN and
/// infinities are written as nan/inf in CSV and null in JSON.
std::string format_number(double value, int precision);

class TableWriter {
 public:
  TableWriter(std::ostream& out, std::vector<std::string> columns, OutputFormat format,
              int precision = 17);

  void row(const std::vector<Cell>& cells);
  std::size_t rows_written() const noexcept { return rows_; }
  const std::vector<std::string>& columns() const noexcept { return columns_; }

 private:
  std::ostream& out_;
  std::vector<std::string> columns_;
  OutputFormat format_;
  int precision_;
  std::size_t rows_ = 0;
};

}  // namespace jspec
