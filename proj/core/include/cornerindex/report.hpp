#pragma once

// Verdicts, CSV tables, self-contained SVG line plots and atomic file output.

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace cornerindex::report {

enum class Verdict { pass, fail, inconclusive };

const char* to_string(Verdict v);
/// 0 pass, 2 fail, 3 inconclusive.
int exit_code(Verdict v);
/// fail dominates inconclusive, which dominates pass.
Verdict combine(Verdict a, Verdict b);

/// Shortest round-trip decimal form (up to 17 significant digits).
std::string number(double x);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}
  void add_row(std::vector<std::string> row);
  const std::vector<std::string>& header() const { return header_; }
  std::size_t row_count() const { return rows_.size(); }
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct PlotOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
};

/// Standalone SVG document; non-positive values are dropped on log axes.
std::string svg_line_plot(const std::vector<Series>& series, const PlotOptions& options);

/// Writes to a temporary sibling and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Environment variable that overrides the output directory.
inline constexpr const char* kOutputDirEnv = "CORNERINDEX_OUTPUT_DIR";

/// `requested`, unless the environment override is set and non-empty.
std::filesystem::path output_directory(const std::filesystem::path& requested);

}  // namespace cornerindex::report
