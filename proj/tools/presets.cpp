#include <algorithm>
#include <stdexcept>

#include "cli.hpp"
#include "dtqw/kernels.hpp"
#include "dtqw/sequences.hpp"

namespace dtqw::cli {

std::vector<int> TableRow::expected_hits(int t_max) const {
  std::vector<int> out;
  if (!period) {
    for (int h : base_hits) {
      if (h <= t_max) out.push_back(h);
    }
    return out;
  }
  for (int h : base_hits) {
    for (int t = h; t <= t_max; t += *period) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::span<const TableRow> table1_rows() {
  constexpr double half = kPi / 2, sixth = kPi / 6;
  static const std::vector<TableRow> rows = {
      {"pi/2", half, "4: H", {1}, 4},
      {"pi/2", half, "4: C'", {1}, 4},
      {"pi/2", half, "4: F", {2}, 4},
      {"pi/2", half, "4: C", {5}, 12},
      {"pi/2", half, "8: H", {1}, 12},
      {"pi/2", half, "8: C'", {1}, 12},
      {"pi/2", half, "4: I H I", {5, 7, 9}, 12},
      {"pi/2", half, "4: H I I", {1, 3, 5}, 12},
      {"pi/2", half, "4: H I", {1}, 4},
      {"pi/2", half, "4: H H X", {1, 3}, 6},
      {"pi/2", half, "4: H X", {1}, 4},
      {"pi/2", half, "3: H", {1}, std::nullopt},
      {"pi/2", half, "5: H", {1}, std::nullopt},
      {"pi/2", half, "3: H I I", {1, 2}, 6},
      {"pi/2", half, "3: H I", {1, 2}, std::nullopt},
      {"pi/2", half, "5: I H I", {3, 4}, std::nullopt},
      {"pi/2", half, "5: H I I", {1, 2, 3, 4}, std::nullopt},
      {"pi/2", half, "5: H I", {1, 2, 3}, std::nullopt},
      {"pi/2", half, "3: H H X", {1, 3, 4, 6}, 9},
      {"pi/2", half, "3: H X", {1}, 4},
      {"pi/2", half, "5: H H X", {1, 3, 4, 5, 6, 7, 8, 9, 10, 12}, 15},
      {"pi/2", half, "5: H X", {1}, 4},
      {"pi/6", sixth, "4: R", {1}, 4},
      {"pi/6", sixth, "4: Q", {1}, 3},
      {"pi/6", sixth, "8: R", {1}, 12},
      {"pi/6", sixth, "3: R", {1}, std::nullopt},
      {"pi/6", sixth, "3: Q", {1}, std::nullopt},
      {"pi/6", sixth, "5: Q", {1}, std::nullopt},
      {"pi/6", sixth, "5: R", {1}, std::nullopt},
      {"pi", kPi, "4: F", {1}, 4},
      {"pi", kPi, "4: H", {2}, 4},
      {"pi", kPi, "8: F", {1}, 12},
      {"pi", kPi, "3: F", {1}, std::nullopt},
      {"pi", kPi, "5: F", {1}, std::nullopt},
  };
  return rows;
}

std::span<const FigurePreset> figure_presets() {
  constexpr double half = kPi / 2;
  using K = PresetKind;
  static const std::vector<FigurePreset> presets = {
      {"fig2", "E_av, single coins R and Q, phi = pi/6", K::Entropy, kPi / 6, 0.0, 30, {"4: R", "4: Q", "8: R"}},
      {"fig3", "E_av, F on 4- and 8-cycles and H on a 4-cycle, phi = pi", K::Entropy, kPi, 0.0, 30,
       {"4: F", "8: F", "4: H"}},
      {"fig4", "E_av, H, I H I and H on an 8-cycle, phi = pi/2", K::Entropy, half, 0.0, 30,
       {"4: H", "4: I H I", "8: H"}},
      {"fig5", "E_av, C on a 4-cycle and mixed sequences on a 3-cycle, phi = pi/2", K::Entropy, half, 0.0, 30,
       {"4: C", "3: H I I", "3: H H X", "3: H X"}},
      {"sfig1a", "E_av and S_av of the Hadamard 4-cycle walk, phi = pi/2", K::EntropyAndSchmidt, half, 0.0, 30,
       {"4: H"}},
      {"sfig1b", "E_av, non-involutory single coins, phi = pi/2", K::Entropy, half, 0.0, 30,
       {"4: C'", "4: F", "8: C'"}},
      {"sfig1c", "P(x=0), theta = 0, phi = pi/2", K::ReturnProbability, half, 0.0, 30, {"4: H", "4: C", "8: H"}},
      {"sfig1d", "E_av, H, X and I on a 4-cycle, phi = pi/2", K::Entropy, half, 0.0, 30, {"4: H", "4: X", "4: I"}},
      {"sfig2a", "E_av, effective-single and two-coin sequences on a 4-cycle, phi = pi/2", K::Entropy, half, 0.0, 30,
       {"4: I H I", "4: H I I", "4: H I", "4: H H X", "4: H X"}},
      {"sfig2b", "P(x=0), theta = 0, phi = pi/2", K::ReturnProbability, half, 0.0, 30,
       {"4: I H I", "4: H H X", "3: H H X"}},
      {"sfig3a", "E_av, H, X and I on a 3-cycle, phi = pi/2", K::Entropy, half, 0.0, 30, {"3: H", "3: X", "3: I"}},
      {"sfig3b", "E_av, H, X and I on a 5-cycle, phi = pi/2", K::Entropy, half, 0.0, 30, {"5: H", "5: X", "5: I"}},
      {"sfig4a", "E_av, I H I on 3-, 4- and 5-cycles, phi = pi/2", K::Entropy, half, 0.0, 35,
       {"3: I H I", "4: I H I", "5: I H I"}},
      {"sfig4b", "E_av, mixed sequences on a 5-cycle, phi = pi/2", K::Entropy, half, 0.0, 30,
       {"5: H I I", "5: H I", "5: H H X", "5: H X"}},
  };
  return presets;
}

const FigurePreset* find_preset(std::string_view name) {
  for (const auto& p : figure_presets()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

FigureData compute_preset(const FigurePreset& preset, std::optional<int> t_max, int nodes) {
  const int horizon = t_max.value_or(preset.t_max);
  if (horizon < 1) throw std::invalid_argument("t_max must be >= 1");
  FigureData data;
  const int first = preset.kind == PresetKind::ReturnProbability ? 0 : 1;
  for (int t = first; t <= horizon; ++t) data.t.push_back(t);

  for (const auto& text : preset.sequences) {
    const auto seq = parse_sequence(text);
    switch (preset.kind) {
      case PresetKind::Entropy: {
        const auto series = kernels::theta_average_series_omp(seq, preset.phi, horizon, nodes);
        std::vector<double> col;
        for (const auto& a : series) col.push_back(a.e_av);
        data.labels.push_back(seq.text());
        data.columns.push_back(std::move(col));
        break;
      }
      case PresetKind::EntropyAndSchmidt: {
        const auto series = kernels::theta_average_series_omp(seq, preset.phi, horizon, nodes);
        std::vector<double> e, s;
        for (const auto& a : series) e.push_back(a.e_av), s.push_back(a.s_av);
        data.labels.push_back("e_av");
        data.columns.push_back(std::move(e));
        data.labels.push_back("s_av");
        data.columns.push_back(std::move(s));
        break;
      }
      case PresetKind::ReturnProbability:
        data.labels.push_back(seq.text());
        data.columns.push_back(kernels::return_probability_series(seq, {preset.theta, preset.phi}, horizon));
        break;
    }
  }
  return data;
}

}  // namespace dtqw::cli
