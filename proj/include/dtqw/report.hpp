#pragma once

// CSV/SVG output for the reproduction CLI. Numbers are written with 12 significant digits and
// files are replaced atomically (write to a sibling temp file, then rename).

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace dtqw::report {

std::string format_number(double v);

/// A table with a header row; the first column is usually the integer step t.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);
  const std::vector<std::string>& header() const noexcept { return header_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Minimal line chart.
std::string svg_line_chart(std::string_view title, std::string_view x_label, std::string_view y_label,
                           const std::vector<Series>& series);

/// Throws std::runtime_error if the file cannot be written.
void write_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace dtqw::report
