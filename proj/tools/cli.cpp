#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "dtqw/entanglement.hpp"
#include "dtqw/error.hpp"
#include "dtqw/kernels.hpp"
#include "dtqw/periodicity.hpp"
#include "dtqw/qkd.hpp"
#include "dtqw/report.hpp"
#include "dtqw/sequences.hpp"

namespace dtqw::cli {

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;
constexpr int kTableShownHits = 30;

struct Output {
  std::string path;
  std::string format = "csv";
};

void add_output_options(CLI::App* cmd, Output& o) {
  cmd->add_option("--out", o.path, "Output file (stdout when omitted)");
  cmd->add_option("--format", o.format, "csv, svg or both")->check(CLI::IsMember({"csv", "svg", "both"}));
}

// CSV and SVG for one result; `both` needs a path and writes <stem>.csv and <stem>.svg.
void emit(const Output& o, const std::string& csv, const std::string& svg, std::ostream& out) {
  namespace fs = std::filesystem;
  if (o.format == "both") {
    if (o.path.empty()) throw CLI::ValidationError("--format both needs --out");
    fs::path base(o.path);
    report::write_atomic(fs::path(base).replace_extension(".csv"), csv);
    report::write_atomic(fs::path(base).replace_extension(".svg"), svg);
    return;
  }
  const std::string& body = o.format == "svg" ? svg : csv;
  if (o.path.empty()) {
    out << body;
  } else {
    report::write_atomic(o.path, body);
  }
}

std::string join_ints(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string format_complex(Complex z) {
  const std::string re = report::format_number(std::abs(z.real()) < 1e-13 ? 0.0 : z.real());
  const double im = std::abs(z.imag()) < 1e-13 ? 0.0 : z.imag();
  if (im == 0.0) return re;
  return re + (im < 0 ? "-" : "+") + report::format_number(std::abs(im)) + "i";
}

std::string format_state(const WalkState& s) {
  std::string out;
  for (int j = 0; j < s.k(); ++j) {
    for (int q = 0; q < 2; ++q) {
      const Complex a = s.amplitude(j, q);
      if (std::abs(a) < 1e-12) continue;
      if (!out.empty()) out += " + ";
      out += "(" + format_complex(a) + ")|" + std::to_string(j) + "_p," + std::to_string(q) + "_c>";
    }
  }
  return out.empty() ? "0" : out;
}

std::string figure_csv(const FigureData& d) {
  std::vector<std::string> header{"t"};
  header.insert(header.end(), d.labels.begin(), d.labels.end());
  report::CsvTable table(header);
  for (std::size_t r = 0; r < d.t.size(); ++r) {
    std::vector<std::string> row{std::to_string(d.t[r])};
    for (const auto& col : d.columns) row.push_back(report::format_number(col[r]));
    table.add_row(std::move(row));
  }
  return table.str();
}

std::string figure_svg(const std::string& title, const std::string& y_label, const FigureData& d) {
  std::vector<report::Series> series;
  for (std::size_t i = 0; i < d.columns.size(); ++i) {
    report::Series s{d.labels[i], {}, d.columns[i]};
    for (int t : d.t) s.x.push_back(t);
    series.push_back(std::move(s));
  }
  return report::svg_line_chart(title, "t", y_label, series);
}

struct Options {
  std::string seq;
  std::string phi = "pi/2";
  std::string theta = "0";
  int t_max = 30;
  int nodes = kDefaultNodes;
  std::string measure = "entropy";
  int n_max = 200;
  std::string row;
  bool phi_given = false;
  int scan_horizon = 100;
  int j = 0;
  int m = 0;
  int a_power = 5;
  bool sweep = false;
  std::string preset;
  bool list = false;
  Output output;
};

int cmd_entropy(const Options& o, std::ostream& out) {
  const auto seq = parse_sequence(o.seq);
  const double phi = parse_real(o.phi);
  const auto series = kernels::theta_average_series_omp(seq, phi, o.t_max, o.nodes);

  FigureData d;
  for (const auto& a : series) d.t.push_back(a.t);
  auto column = [&](Measure m) {
    std::vector<double> c;
    for (const auto& a : series) c.push_back(a.value(m));
    return c;
  };
  if (o.measure != "schmidt") d.labels.push_back("e_av"), d.columns.push_back(column(Measure::Entropy));
  if (o.measure != "entropy") d.labels.push_back("s_av"), d.columns.push_back(column(Measure::Schmidt));
  emit(o.output, figure_csv(d), figure_svg(seq.text() + ", phi = " + o.phi, "average", d), out);
  return 0;
}

int cmd_pdist(const Options& o, std::ostream& out) {
  const auto seq = parse_sequence(o.seq);
  const InitialStateSpec init{parse_real(o.theta), parse_real(o.phi)};
  FigureData d;
  for (int t = 0; t <= o.t_max; ++t) d.t.push_back(t);
  d.labels.push_back("P0");
  d.columns.push_back(kernels::return_probability_series(seq, init, o.t_max));
  emit(o.output, figure_csv(d), figure_svg(seq.text() + ", P(x=0)", "P(x=0)", d), out);
  return 0;
}

int cmd_period(const Options& o, std::ostream& out) {
  const auto seq = parse_sequence(o.seq);
  const auto rep = detect_period(seq, o.n_max);
  out << "sequence: " << seq.text() << '\n';
  out << "sequence_class: " << to_string(classify_sequence(seq)) << '\n';
  out << "block_length: " << rep.block_length << '\n';
  out << "n_max: " << rep.n_max << '\n';
  out << "period: " << (rep.period ? std::to_string(*rep.period) : "none") << '\n';
  out << "classification: " << to_string(rep.classification) << '\n';
  if (rep.period) out << "aligned_period: " << rep.aligned_period << '\n';
  out << "verified: " << (rep.verified ? "true" : "false") << '\n';
  if (rep.period) out << "identity_residual: " << report::format_number(rep.identity_residual) << '\n';
  out << "block_leakage: " << report::format_number(rep.block_spectrum.leakage) << '\n';

  report::CsvTable table({"l", "re_lambda_plus", "im_lambda_plus", "re_lambda_minus", "im_lambda_minus",
                          "re_half_trace", "im_half_trace"});
  const auto& spec = rep.block_spectrum;
  for (std::size_t l = 0; l < spec.blocks.size(); ++l) {
    const auto& ev = spec.eigenvalues[l];
    const Complex ht = block_eigensum(spec.blocks[l]);
    table.add_row({std::to_string(l), report::format_number(ev[0].real()), report::format_number(ev[0].imag()),
                   report::format_number(ev[1].real()), report::format_number(ev[1].imag()),
                   report::format_number(ht.real()), report::format_number(ht.imag())});
  }
  if (o.output.path.empty()) {
    out << '\n' << table.str();
  } else {
    report::write_atomic(o.output.path, table.str());
  }
  return 0;
}

int cmd_table1(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<const TableRow*> rows;
  std::string row_text;
  if (!o.row.empty()) row_text = parse_sequence(o.row).text();
  const double phi = o.phi_given ? parse_real(o.phi) : 0.0;
  for (const auto& r : table1_rows()) {
    if (!row_text.empty() && parse_sequence(r.sequence).text() != row_text) continue;
    if (o.phi_given && std::abs(wrap_phase(r.phi) - wrap_phase(phi)) > 1e-9) continue;
    rows.push_back(&r);
  }
  if (rows.empty()) throw CLI::ValidationError("no table row matches the selection");

  report::CsvTable table({"phi", "sequence", "hits", "period", "matches_expected"});
  int matched = 0;
  for (const TableRow* r : rows) {
    const auto seq = parse_sequence(r->sequence);
    const auto scan = scan_mesps(seq, r->phi, o.scan_horizon, 1e-9, o.nodes);
    std::vector<int> shown;
    for (int h : scan.hits) {
      if (h <= kTableShownHits) shown.push_back(h);
    }
    const bool ok = shown == r->expected_hits(kTableShownHits) && scan.inferred_period == r->period;
    matched += ok;
    table.add_row({r->phi_label, seq.text(), join_ints(shown),
                   scan.inferred_period ? std::to_string(*scan.inferred_period) : "chaotic", ok ? "true" : "false"});
  }
  emit(o.output, table.str(), table.str(), out);
  err << matched << "/" << rows.size() << " rows match\n";
  return 0;
}

int cmd_crypto(const Options& o, std::ostream& out) {
  const double theta = parse_real(o.theta);
  auto run_one = [&](int j, int m, bool verbose) {
    const qkd::PrivateKey sk{o.a_power, j, theta};
    const auto pk = qkd::keygen(sk);
    const auto ct = qkd::encrypt(pk, qkd::Message{m});
    const auto dec = qkd::decrypt_detailed(ct, sk);
    if (verbose) {
      out << "private key: A_power=" << sk.a_power << " j=" << sk.j << " theta=" << report::format_number(theta)
          << '\n';
      out << "public key: " << format_state(pk.state) << '\n';
      out << "public key entropy: " << report::format_number(entropy(pk.state)) << '\n';
      out << "ciphertext (m=" << m << "): " << format_state(ct) << '\n';
      out << "after W: " << format_state(dec.final_state) << '\n';
      out << "measured position: " << dec.position << '\n';
      out << "recovered: " << dec.message.m << '\n';
    } else {
      out << "j=" << j << " m=" << m << " recovered=" << dec.message.m << '\n';
    }
    return dec.message.m == m;
  };
  if (!o.sweep) return run_one(o.j, o.m, true) ? 0 : kExitFailure;
  int ok = 0;
  for (int j = 0; j < qkd::kCycle; ++j) {
    for (int m = 0; m < qkd::kCycle; ++m) ok += run_one(j, m, false);
  }
  out << "recovered " << ok << "/16\n";
  return ok == 16 ? 0 : kExitFailure;
}

int cmd_figure(const Options& o, std::ostream& out, const CLI::App* cmd) {
  if (o.list || o.preset.empty()) {
    for (const auto& p : figure_presets()) out << p.name << "  " << p.description << '\n';
    return 0;
  }
  const FigurePreset* p = find_preset(o.preset);
  if (!p) throw CLI::ValidationError("unknown preset '" + o.preset + "' (see figure --list)");
  const std::optional<int> t_max = cmd->count("--tmax") ? std::optional<int>(o.t_max) : std::nullopt;
  const auto data = compute_preset(*p, t_max, o.nodes);
  const char* y = p->kind == PresetKind::ReturnProbability ? "P(x=0)" : "E_av";
  emit(o.output, figure_csv(data), figure_svg(p->name + ": " + p->description, y, data), out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete-time quantum walks on cycles: entanglement, periodicity and key exchange"};
  app.name("dtqw");
  app.require_subcommand(1);
  Options o;

  auto angle_help = "radians or a multiple of pi, e.g. pi/2";
  auto* entropy_cmd = app.add_subcommand("entropy", "theta-averaged entanglement E_av(t) (and S_av)");
  auto* pdist_cmd = app.add_subcommand("pdist", "return probability P(x=0) for t = 0..tmax");
  auto* period_cmd = app.add_subcommand("period", "walk period and block spectrum");
  auto* table_cmd = app.add_subcommand("table1", "reproduce the MESPS sequence table");
  auto* crypto_cmd = app.add_subcommand("crypto", "public-key exchange demo on the Hadamard 4-cycle");
  auto* figure_cmd = app.add_subcommand("figure", "data series for a named figure preset");

  for (auto* c : {entropy_cmd, pdist_cmd, period_cmd}) {
    c->add_option("--seq", o.seq, "evolution sequence, e.g. \"4: H H X\"")->required();
  }
  for (auto* c : {entropy_cmd, pdist_cmd}) {
    c->add_option("--phi", o.phi, angle_help);
    c->add_option("--tmax", o.t_max, "last time step")->check(CLI::Range(0, 100000));
  }
  for (auto* c : {entropy_cmd, table_cmd, figure_cmd}) {
    c->add_option("--nodes", o.nodes, "Gauss-Legendre nodes per theta panel")->check(CLI::Range(kMinNodes, 4096));
  }
  entropy_cmd->add_option("--measure", o.measure, "entropy, schmidt or both")
      ->check(CLI::IsMember({"entropy", "schmidt", "both"}));
  pdist_cmd->add_option("--theta", o.theta, angle_help);
  period_cmd->add_option("--nmax", o.n_max, "largest period searched")->check(CLI::Range(1, 100000));
  table_cmd->add_option("--row", o.row, "only rows with this sequence");
  table_cmd->add_option("--phi", o.phi, "only rows at this phi");
  table_cmd->add_option("--horizon", o.scan_horizon, "scan length for the hit period")->check(CLI::Range(2, 10000));
  crypto_cmd->add_option("--j", o.j, "initial position")->check(CLI::Range(0, 3));
  crypto_cmd->add_option("--m", o.m, "message")->check(CLI::Range(0, 3));
  crypto_cmd->add_option("--theta", o.theta, angle_help);
  crypto_cmd->add_option("--apower", o.a_power, "H_4 steps used for the public key (1 mod 4)");
  crypto_cmd->add_flag("--sweep", o.sweep, "run every (j, m)");
  figure_cmd->add_option("--preset", o.preset, "preset name");
  figure_cmd->add_option("--tmax", o.t_max, "override the preset horizon")->check(CLI::Range(1, 100000));
  figure_cmd->add_flag("--list", o.list, "list presets");
  for (auto* c : {entropy_cmd, pdist_cmd, period_cmd, table_cmd, figure_cmd}) add_output_options(c, o.output);

  std::vector<std::string> argv_store{"dtqw"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }
  o.phi_given = table_cmd->count("--phi") > 0;

  try {
    if (*entropy_cmd) return cmd_entropy(o, out);
    if (*pdist_cmd) return cmd_pdist(o, out);
    if (*period_cmd) return cmd_period(o, out);
    if (*table_cmd) return cmd_table1(o, out, err);
    if (*crypto_cmd) return cmd_crypto(o, out);
    if (*figure_cmd) return cmd_figure(o, out, figure_cmd);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace dtqw::cli
