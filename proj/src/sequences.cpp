#include "dtqw/sequences.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "dtqw/error.hpp"
#include "dtqw/kernels.hpp"

namespace dtqw {

namespace {

const std::array<NamedCoin, 8> kCatalog{{
    {"H", {0.5, 0.0, 0.0}},
    {"X", {0.0, 0.0, 0.0}},
    {"I", {1.0, 0.0, kPi}},
    {"F", {0.5, kPi / 2.0, kPi / 2.0}},
    {"R", {0.5, kPi / 3.0, 2.0 * kPi / 3.0}},
    {"Q", {0.5, kPi / 3.0, kPi / 6.0}},
    {"C'", {0.5, kPi, 0.0}},
    {"C", {(2.0 + std::numbers::sqrt3) / 4.0, 0.0, 0.0}},
}};

constexpr double kCoinEqualTol = 1e-12;

bool same_coin(const CoinSpec& a, const CoinSpec& b) {
  return (make_coin(a) - make_coin(b)).cwiseAbs().maxCoeff() < kCoinEqualTol;
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool consume(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }
  std::string_view rest() const { return text_.substr(pos_); }
  std::string_view slice(std::size_t from, std::size_t to) const { return text_.substr(from, to - from); }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, base_ + pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, base_ + at); }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

double parse_number(Cursor& cur) {
  const auto rest = cur.rest();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc{} || ptr == rest.data()) cur.fail("expected a number");
  cur.advance(static_cast<std::size_t>(ptr - rest.data()));
  return value;
}

double parse_real_at(std::string_view text, std::size_t base) {
  Cursor cur(text, base);
  cur.skip_ws();
  double sign = 1.0;
  if (cur.consume('-')) {
    sign = -1.0;
  } else {
    cur.consume('+');
  }
  cur.skip_ws();
  double value = 1.0;
  bool have_term = false;
  if (std::isdigit(static_cast<unsigned char>(cur.peek())) || cur.peek() == '.') {
    value = parse_number(cur);
    have_term = true;
    cur.skip_ws();
    const bool star = cur.consume('*');
    cur.skip_ws();
    if (cur.consume("pi")) {
      value *= kPi;
    } else if (star) {
      cur.fail("expected 'pi' after '*'");
    }
  } else if (cur.consume("pi")) {
    value = kPi;
    have_term = true;
  }
  if (!have_term) cur.fail("expected a number or 'pi'");
  cur.skip_ws();
  if (cur.consume('/')) {
    cur.skip_ws();
    const double denom = parse_number(cur);
    if (denom == 0.0) cur.fail("division by zero");
    value /= denom;
  }
  cur.skip_ws();
  if (!cur.done()) cur.fail("unexpected trailing characters");
  return sign * value;
}

bool is_name_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '\'' || c == '_' || u >= 0x80;
}

std::string_view canonical_name(std::string_view name) {
  if (name == "C\xE2\x80\xB2" || name == "Cp") return "C'";
  return name;
}

}  // namespace

std::span<const NamedCoin> coin_catalog() { return kCatalog; }

std::optional<CoinSpec> lookup_coin(std::string_view name) {
  name = canonical_name(name);
  for (const auto& c : kCatalog) {
    if (c.name == name) return c.spec;
  }
  return std::nullopt;
}

std::string SequenceCoin::label() const {
  if (!name.empty()) return name;
  return "C2(" + format_real(spec.rho) + "," + format_real(spec.gamma) + "," + format_real(spec.eta) + ")";
}

EvolutionSequence::EvolutionSequence(int k, std::vector<SequenceCoin> block) : k_(k), block_(std::move(block)) {
  if (k < kMinCycle) throw DomainError("cycle size must be >= 3, got " + std::to_string(k));
  if (block_.empty()) throw DomainError("evolution sequence needs at least one coin");
  ops_.reserve(block_.size());
  for (const auto& c : block_) ops_.push_back(make_evolution(k_, c.spec));
}

EvolutionSequence EvolutionSequence::single(int k, std::string_view coin_name) {
  auto spec = lookup_coin(coin_name);
  if (!spec) throw DomainError("unknown coin '" + std::string(coin_name) + "'");
  return EvolutionSequence(k, {SequenceCoin{std::string(coin_name), *spec}});
}

const EvolutionOperator& EvolutionSequence::step(int t) const {
  if (t < 1) throw DomainError("steps are numbered from 1");
  return ops_[static_cast<std::size_t>(t - 1) % ops_.size()];
}

std::string EvolutionSequence::text() const {
  std::string out = std::to_string(k_) + ":";
  for (const auto& c : block_) out += " " + c.label();
  return out;
}

double parse_real(std::string_view text) { return parse_real_at(text, 0); }

EvolutionSequence parse_sequence(std::string_view text) {
  Cursor cur(text);
  cur.skip_ws();
  const std::size_t k_start = cur.pos();
  while (std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.advance(1);
  if (cur.pos() == k_start) cur.fail("expected cycle size");
  int k = 0;
  const auto digits = cur.slice(k_start, cur.pos());
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc{}) cur.fail_at("cycle size out of range", k_start);
  cur.skip_ws();
  if (!cur.consume(':')) cur.fail("expected ':' after cycle size");
  if (k < kMinCycle) throw DomainError("cycle size must be >= 3, got " + std::to_string(k));

  std::vector<SequenceCoin> block;
  for (;;) {
    cur.skip_ws();
    if (cur.done()) break;
    const std::size_t start = cur.pos();
    while (!cur.done() && is_name_char(cur.peek())) cur.advance(1);
    if (cur.pos() == start) cur.fail("expected a coin name");
    const std::string name(cur.slice(start, cur.pos()));
    if (name == "C2") {
      cur.skip_ws();
      if (!cur.consume('(')) cur.fail("expected '(' after C2");
      std::array<double, 3> args{};
      for (int i = 0; i < 3; ++i) {
        const std::size_t arg_start = cur.pos();
        while (!cur.done() && cur.peek() != ',' && cur.peek() != ')') cur.advance(1);
        if (cur.done()) cur.fail("unterminated C2(...)");
        args[static_cast<std::size_t>(i)] = parse_real_at(cur.slice(arg_start, cur.pos()), arg_start);
        if (i < 2 && !cur.consume(',')) cur.fail("C2 takes three arguments");
      }
      if (!cur.consume(')')) cur.fail("C2 takes three arguments");
      CoinSpec spec{args[0], args[1], args[2]};
      spec.validate();
      block.push_back(SequenceCoin{"", spec});
      continue;
    }
    auto spec = lookup_coin(name);
    if (!spec) cur.fail_at("unknown coin '" + name + "'", start);
    block.push_back(SequenceCoin{std::string(canonical_name(name)), *spec});
  }
  if (block.empty()) cur.fail("sequence has no coins");
  return EvolutionSequence(k, std::move(block));
}

std::string_view to_string(SequenceClass c) {
  switch (c) {
    case SequenceClass::Single:
      return "single";
    case SequenceClass::EffectiveSingle:
      return "effective-single";
    case SequenceClass::TwoCoin:
      return "two-coin";
  }
  return "?";
}

bool is_identity_coin(const CoinSpec& spec) {
  return (make_coin(spec) - Matrix2::Identity()).cwiseAbs().maxCoeff() < kCoinEqualTol;
}

SequenceClass classify_sequence(const EvolutionSequence& seq) {
  std::vector<CoinSpec> distinct;
  for (const auto& c : seq.block()) {
    const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                  [&](const CoinSpec& d) { return same_coin(d, c.spec); });
    if (!seen) distinct.push_back(c.spec);
  }
  if (distinct.size() == 1) return SequenceClass::Single;
  if (distinct.size() == 2 &&
      std::count_if(distinct.begin(), distinct.end(), [](const CoinSpec& s) { return is_identity_coin(s); }) == 1) {
    return SequenceClass::EffectiveSingle;
  }
  return SequenceClass::TwoCoin;
}

std::optional<int> hit_pattern_period(std::span<const int> hits, int t_max) {
  if (hits.empty() || t_max < 2) return std::nullopt;
  std::vector<bool> hit(static_cast<std::size_t>(t_max) + 1, false);
  for (int t : hits) {
    if (t >= 1 && t <= t_max) hit[static_cast<std::size_t>(t)] = true;
  }
  for (int p = 1; p <= t_max / 2; ++p) {
    bool periodic = true;
    for (int t = 1; t + p <= t_max && periodic; ++t) {
      periodic = hit[static_cast<std::size_t>(t)] == hit[static_cast<std::size_t>(t + p)];
    }
    if (periodic) return p;
  }
  return std::nullopt;
}

MespsScan scan_mesps(const EvolutionSequence& seq, double phi, int t_max, double tol, int nodes) {
  if (t_max < 1) throw DomainError("t_max must be >= 1");
  MespsScan scan;
  scan.sequence = seq.text();
  scan.phi = phi;
  scan.t_max = t_max;
  scan.tol = tol;
  const auto series = kernels::theta_average_series_omp(seq, phi, t_max, nodes);
  scan.e_av.reserve(series.size());
  for (const auto& a : series) {
    scan.e_av.push_back(a.e_av);
    if (a.e_av >= 1.0 - tol) scan.hits.push_back(a.t);
  }
  scan.inferred_period = hit_pattern_period(scan.hits, t_max);
  return scan;
}

}  // namespace dtqw
