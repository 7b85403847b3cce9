#pragma once

// Reproduction harness behind the `dtqw` executable.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dtqw::cli {

/// One row of the MESPS table: hits within one period (or the only hits, for chaotic rows)
/// and the hit-pattern period P.
struct TableRow {
  std::string phi_label;
  double phi = 0.0;
  std::string sequence;
  std::vector<int> base_hits;
  std::optional<int> period;

  /// All expected hits t <= t_max.
  std::vector<int> expected_hits(int t_max) const;
};

std::span<const TableRow> table1_rows();

enum class PresetKind { Entropy, EntropyAndSchmidt, ReturnProbability };

struct FigurePreset {
  std::string name;
  std::string description;
  PresetKind kind = PresetKind::Entropy;
  double phi = 0.0;
  double theta = 0.0;  ///< only for ReturnProbability
  int t_max = 30;
  std::vector<std::string> sequences;
};

std::span<const FigurePreset> figure_presets();
const FigurePreset* find_preset(std::string_view name);

struct FigureData {
  std::vector<int> t;
  std::vector<std::string> labels;
  std::vector<std::vector<double>> columns;  ///< columns[i][row]
};

FigureData compute_preset(const FigurePreset& preset, std::optional<int> t_max = std::nullopt, int nodes = 64);

/// Exit codes: 0 success, 1 usage or parse error, 2 numerical or protocol failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dtqw::cli
