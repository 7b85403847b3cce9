#pragma once

// Named coins, the sequence grammar, and MESPS timestep scans.
//
// Grammar (whitespace-insensitive):
//   sequence := <k> ':' coin+
//   coin     := H | X | I | F | R | Q | C' | C | C2( <real> , <real> , <real> )
//   real     := [sign] ( number ['*'] ['pi'] | 'pi' ) [ '/' number ]
// e.g. "4: H H X", "3: H I I", "4: C2(0.25, 0, 0)", "4: C2(1/2, pi/3, 2pi/3)".
// C' may also be written with the Unicode prime or as "Cp".

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dtqw/core_walk.hpp"

namespace dtqw {

struct NamedCoin {
  std::string_view name;
  CoinSpec spec;
};

/// H, X, I, F, R, Q, C', C in that order.
std::span<const NamedCoin> coin_catalog();

/// Accepts the catalog names plus the aliases "C′" and "Cp".
std::optional<CoinSpec> lookup_coin(std::string_view name);

/// One entry of a repeating block: a catalog name, or empty for a raw C2(...) coin.
struct SequenceCoin {
  std::string name;
  CoinSpec spec;

  std::string label() const;
};

class EvolutionSequence {
 public:
  EvolutionSequence(int k, std::vector<SequenceCoin> block);

  /// Repeats one catalog coin.
  static EvolutionSequence single(int k, std::string_view coin_name);

  int k() const noexcept { return k_; }
  const std::vector<SequenceCoin>& block() const noexcept { return block_; }
  int block_length() const noexcept { return static_cast<int>(block_.size()); }

  /// One step operator per block entry.
  const std::vector<EvolutionOperator>& operators() const noexcept { return ops_; }

  /// Operator applied at step t >= 1.
  const EvolutionOperator& step(int t) const;

  /// Canonical text, e.g. "4: H H X".
  std::string text() const;

 private:
  int k_;
  std::vector<SequenceCoin> block_;
  std::vector<EvolutionOperator> ops_;
};

/// Parses a real number, optionally in units of pi ("pi/2", "2pi/3", "-0.25", "1/4").
/// Throws ParseError (column relative to `text`).
double parse_real(std::string_view text);

/// Throws ParseError for syntax errors and unknown coin names, DomainError for k < 3 or rho outside [0,1].
EvolutionSequence parse_sequence(std::string_view text);

enum class SequenceClass { Single, EffectiveSingle, TwoCoin };

std::string_view to_string(SequenceClass c);

/// Single: every entry realizes the same coin. Effective-single: exactly one distinct
/// non-identity coin mixed with the identity coin. Two-coin: anything else.
SequenceClass classify_sequence(const EvolutionSequence& seq);

/// True when the realized 2x2 coin equals the identity (rho = 1, gamma + eta = pi mod 2 pi).
bool is_identity_coin(const CoinSpec& spec);

struct MespsScan {
  std::string sequence;
  double phi = 0.0;
  int t_max = 0;
  double tol = 0.0;
  std::vector<double> e_av;  ///< e_av[t-1] for t = 1..t_max
  std::vector<int> hits;     ///< sorted t with e_av >= 1 - tol
  std::optional<int> inferred_period;
};

/// Scans E_av(t) for t = 1..t_max at fixed phi and records the maximally entangled steps.
MespsScan scan_mesps(const EvolutionSequence& seq, double phi, int t_max = 100, double tol = 1e-9,
                     int nodes = 64);

/// Smallest P <= t_max/2 such that hit(t) == hit(t+P) for every t in [1, t_max-P].
/// Empty hit lists have no period.
std::optional<int> hit_pattern_period(std::span<const int> hits, int t_max);

}  // namespace dtqw
