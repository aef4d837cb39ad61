// latsum: lattice weak-coupling series, strong-coupling resummation, and
// large-order analysis for the instanton and Blasius boundary-layer models.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "latsum/csv.hpp"
#include "latsum/errors.hpp"
#include "latsum/large_order.hpp"
#include "latsum/lattice.hpp"
#include "latsum/oracles.hpp"
#include "latsum/pade.hpp"
#include "latsum/power_series.hpp"
#include "latsum/richardson.hpp"
#include "latsum/table_io.hpp"
#include "latsum/vpt.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using latsum::BigFloat;
using latsum::Rational;
using nlohmann::json;

std::string basename_of(const std::string& path) {
  const auto pos = path.find_last_of('/');
  return pos == std::string::npos ? path : path.substr(pos + 1);
}

/// Every output file references the manifest that produced it; the manifest
/// itself is the only place wall time and timestamps appear.
class Manifest {
 public:
  Manifest(std::string command, std::string primary_out)
      : command_(std::move(command)),
        path_(primary_out + ".manifest.json"),
        start_(std::chrono::steady_clock::now()) {}

  const std::string& name() const { return name_; }

  void param(const std::string& key, const json& value) { params_[key] = value; }
  void input(const std::string& path) { inputs_.push_back(path); }
  void output(const std::string& path) { outputs_.push_back(path); }

  void write() {
    const auto wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
    json doc;
    doc["command"] = command_;
    doc["parameters"] = params_;
    doc["inputs"] = inputs_;
    doc["outputs"] = outputs_;
    doc["tool_version"] = kVersion;
    doc["wall_time_seconds"] = wall.count();
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    doc["timestamp"] = buf;
    std::ofstream out(path_);
    if (!out) throw latsum::Error("cannot write manifest '" + path_ + "'");
    out << doc.dump(1) << "\n";
  }

 private:
  std::string command_;
  std::string path_;
  std::string name_ = basename_of(path_);
  json params_ = json::object();
  std::vector<std::string> inputs_;
  std::vector<std::string> outputs_;
  std::chrono::steady_clock::time_point start_;

  friend class ManifestName;
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw latsum::Error("cannot write '" + path + "'");
  return out;
}

std::vector<Rational> load_site_series(const std::string& path, long site, int n_max,
                                       latsum::ModelId* model_out = nullptr) {
  const latsum::CoefficientTable table = latsum::load_table(path);
  if (table.max_order < n_max) {
    throw latsum::Error("table '" + path + "' holds order " + std::to_string(table.max_order) +
                        " < requested " + std::to_string(n_max));
  }
  if (model_out) *model_out = table.model;
  std::vector<Rational> row = table.site_row(site);
  row.resize(static_cast<std::size_t>(n_max) + 1);
  // The approximant and VPT machinery expect a unit constant term; divide
  // through by a_{site,0} (Blasius sites other than 1 carry a_{n,0} = n).
  const Rational lead = row[0];
  if (lead.is_zero()) throw latsum::Error("site " + std::to_string(site) + " has zero constant term");
  if (!(lead == Rational(1))) {
    for (Rational& r : row) r = r / lead;
  }
  return row;
}

// ---------------------------------------------------------------- generate

int cmd_generate(const std::string& model_name, int order, const std::string& out_path) {
  Manifest manifest("generate", out_path);
  manifest.param("model", model_name);
  manifest.param("order", order);
  manifest.output(out_path);

  const latsum::ModelId model = latsum::model_from_name(model_name);
  latsum::CoefficientTable table = model == latsum::ModelId::Instanton
                                       ? latsum::generate_instanton(order)
                                       : latsum::generate_blasius(order);
  table.metadata.generator = std::string("latsum generate ") + kVersion;
  table.metadata.manifest = manifest.name();
  latsum::save_table(table, out_path);
  manifest.write();
  return 0;
}

// -------------------------------------------------------------------- pade

int cmd_pade(const std::string& coeffs, long site, const std::string& M_str, int n_max,
             const std::string& reference, const std::string& out_path) {
  Manifest manifest("pade", out_path);
  manifest.param("coeffs", coeffs);
  manifest.param("site", site);
  manifest.param("M", M_str);
  manifest.param("n_max", n_max);
  manifest.param("reference", reference);
  manifest.input(coeffs);
  manifest.output(out_path);

  latsum::FrobeniusSeries series;
  series.coefficients.coefficients = load_site_series(coeffs, site, n_max);
  series.M = Rational::parse(M_str);
  std::optional<BigFloat> ref;
  if (!reference.empty()) ref = BigFloat::parse(reference);

  const latsum::SweepResult sweep = latsum::approximant_sweep(series, n_max, ref);
  {
    auto out = open_out(out_path);
    latsum::write_sweep_csv(sweep, out, manifest.name());
  }
  const auto& ann = sweep.annotations;
  if (ann.argmin_real) {
    std::cout << "minimum: N=" << *ann.argmin_real << " S=" << ann.min_value->str(10) << "\n";
  }
  if (!ann.crossings.empty()) {
    std::cout << "reference crossings:";
    for (int c : ann.crossings) std::cout << " " << c;
    std::cout << "\n";
  }
  for (const auto& [start, end] : ann.complex_windows) {
    std::cout << "complex window: N=" << start << " .. real again at N=" << end << "\n";
  }
  for (int d : ann.degenerate_orders) std::cout << "degenerate order: N=" << d << "\n";
  manifest.write();
  return 0;
}

// --------------------------------------------------------------------- vpt

int cmd_vpt(const std::string& coeffs, long site, long p, long q, int n_max,
            const std::string& strategy_name, int richardson_orders,
            const std::string& out_path) {
  Manifest manifest("vpt", out_path);
  manifest.param("coeffs", coeffs);
  manifest.param("site", site);
  manifest.param("p", p);
  manifest.param("q", q);
  manifest.param("n_max", n_max);
  manifest.param("strategy", strategy_name);
  manifest.param("richardson", richardson_orders);
  manifest.input(coeffs);
  manifest.output(out_path);

  latsum::VptProblem problem;
  problem.f = load_site_series(coeffs, site, n_max);
  problem.p = p;
  problem.q = q;
  const latsum::VptStrategy strategy = strategy_name == "extremum"
                                           ? latsum::VptStrategy::Extremum
                                           : latsum::VptStrategy::RightmostInflection;

  const latsum::VptSequence seq = latsum::vpt_sequence(problem, n_max, strategy);
  {
    auto out = open_out(out_path);
    latsum::write_vpt_csv(seq, out, manifest.name());
  }
  for (const auto& [N, reason] : seq.gaps) {
    std::cout << "gap: N=" << N << " (" << reason << ")\n";
  }
  if (!seq.results.empty()) {
    const auto& last = seq.results.back();
    std::cout << "b0(" << last.N << ") = " << last.b0.str(15)
              << "  at k0 = " << last.k0.str(10) << "\n";
  }
  if (richardson_orders > 0) {
    // Richardson needs a contiguous tail; start after the last gap.
    int first = seq.results.empty() ? 1 : seq.results.front().N;
    for (const auto& [N, reason] : seq.gaps) {
      (void)reason;
      if (N >= first) first = N + 1;
    }
    latsum::SequenceData data;
    data.n0 = first;
    for (const auto& r : seq.results) {
      if (r.N >= first) data.values.push_back(r.b0);
    }
    const auto report = latsum::richardson_report(data, richardson_orders);
    const std::string rep_path = out_path + ".richardson.csv";
    manifest.output(rep_path);
    auto out = open_out(rep_path);
    latsum::write_report_csv(report, out, manifest.name());
    for (const auto& row : report) {
      std::cout << "richardson k=" << row.k << ": " << row.value.str(20) << " (" << row.flag
                << ")\n";
    }
  }
  manifest.write();
  return 0;
}

// -------------------------------------------------------------- richardson

int cmd_richardson(const std::string& in_path, const std::string& index_col,
                   const std::string& value_col, int k_max, const std::string& out_path) {
  Manifest manifest("richardson", out_path);
  manifest.param("in", in_path);
  manifest.param("index_column", index_col);
  manifest.param("value_column", value_col);
  manifest.param("k_max", k_max);
  manifest.input(in_path);
  manifest.output(out_path);

  const latsum::CsvTable csv = latsum::read_csv(in_path);
  const std::size_t ic = csv.column(index_col);
  const std::size_t vc = csv.column(value_col);
  latsum::SequenceData seq;
  bool first = true;
  long expected = 0;
  for (const auto& row : csv.rows) {
    const long n = std::stol(row[ic]);
    if (first) {
      seq.n0 = n;
      expected = n;
      first = false;
    }
    if (n != expected) {
      throw latsum::Error("richardson: index column not contiguous at n=" + std::to_string(n));
    }
    ++expected;
    seq.values.push_back(BigFloat::parse(row[vc]));
  }
  const auto report = latsum::richardson_report(seq, k_max);
  {
    auto out = open_out(out_path);
    latsum::write_report_csv(report, out, manifest.name());
  }
  for (const auto& row : report) {
    std::cout << "k=" << row.k << ": " << row.value.str(20) << " (" << row.flag << ")\n";
  }
  manifest.write();
  return 0;
}

// ------------------------------------------------------------- large-order

int cmd_large_order(const std::string& coeffs, long site, long j0, int n_max,
                    const std::string& A_str, const std::string& K_str, int k_max,
                    const std::string& out_path) {
  Manifest manifest("large-order", out_path);
  manifest.param("coeffs", coeffs);
  manifest.param("site", site);
  manifest.param("j0", j0);
  manifest.param("n_max", n_max);
  manifest.param("A", A_str);
  manifest.param("K", K_str);
  manifest.param("k_max", k_max);
  manifest.input(coeffs);
  manifest.output(out_path);

  const latsum::CoefficientTable table = latsum::load_table(coeffs);
  const int top = n_max > 0 ? n_max : table.max_order;
  latsum::CoefficientSequence row;
  row.j0 = j0;
  for (long j = j0; j <= top; ++j) row.values.push_back(table.at(site, static_cast<int>(j)));

  auto out = open_out(out_path);
  out << "# manifest: " << manifest.name() << "\n";
  out << "quantity,k,value,flag\n";
  auto emit = [&](const char* name, const latsum::EstimateResult& est) -> BigFloat {
    for (long g : est.gaps) std::cout << name << ": gap at j=" << g << "\n";
    const auto report = latsum::richardson_report(est.seq, k_max);
    for (const auto& r : report) {
      out << name << "," << r.k << "," << r.value.str(25) << "," << r.flag << "\n";
      std::cout << name << " k=" << r.k << ": " << r.value.str(12) << " (" << r.flag << ")\n";
    }
    return report.back().value;
  };

  const auto estA = latsum::estimate_A(row);
  const BigFloat A = A_str.empty() ? emit("A", estA) : BigFloat::parse(A_str);
  if (!A_str.empty()) emit("A", estA);
  const auto estK = latsum::estimate_K(row, A);
  const BigFloat K = K_str.empty() ? emit("K", estK) : BigFloat::parse(K_str);
  if (!K_str.empty()) emit("K", estK);
  emit("B", latsum::estimate_B(row, K, A));
  manifest.write();
  return 0;
}

// ----------------------------------------------------------------- signfit

int cmd_signfit(const std::string& coeffs, long site, long j0, int n_max, double a_lo,
                double a_hi, double b_lo, double b_hi, bool pure, int resolution, int depth,
                int jobs, const std::string& out_path) {
  Manifest manifest("signfit", out_path);
  manifest.param("coeffs", coeffs);
  manifest.param("site", site);
  manifest.param("j0", j0);
  manifest.param("n_max", n_max);
  manifest.param("a_range", json::array({a_lo, a_hi}));
  manifest.param("b_range", json::array({b_lo, b_hi}));
  manifest.param("pure", pure);
  manifest.param("resolution", resolution);
  manifest.param("depth", depth);
  manifest.input(coeffs);
  manifest.output(out_path);

  const latsum::CoefficientTable table = latsum::load_table(coeffs);
  const int top = n_max > 0 ? n_max : table.max_order;
  latsum::CoefficientSequence row;
  row.j0 = j0;
  for (long j = j0; j <= top; ++j) row.values.push_back(table.at(site, static_cast<int>(j)));

  latsum::GridSearchConfig config;
  config.resolution = resolution;
  config.refine_depth = depth;
  config.jobs = jobs;
  std::vector<latsum::SignFit> fits;
  if (pure) {
    fits.push_back(latsum::best_pure_cosine(row, a_lo, a_hi, config));
  } else {
    fits = latsum::sign_grid_search(row, a_lo, a_hi, b_lo, b_hi, config);
  }
  auto out = open_out(out_path);
  out << "# manifest: " << manifest.name() << "\n";
  out << "a,b,score,mismatches\n";
  for (const auto& fit : fits) {
    std::ostringstream mm;
    for (std::size_t i = 0; i < fit.mismatches.size(); ++i) {
      if (i) mm << " ";
      mm << fit.mismatches[i];
    }
    char line[128];
    std::snprintf(line, sizeof line, "%.10f,%.10f,%d,", fit.a, fit.b, fit.score);
    out << line << mm.str() << "\n";
    std::cout << "peak a=" << fit.a << " b=" << fit.b << " score=" << fit.score
              << " mismatches=" << fit.mismatches.size() << "\n";
  }
  manifest.write();
  return 0;
}

// ------------------------------------------------------------------ oracle

int cmd_oracle(const std::string& model_name, double epsilon, double L, double h,
               const std::string& out_path) {
  const latsum::ModelId model = latsum::model_from_name(model_name);
  BigFloat value;
  if (model == latsum::ModelId::Instanton) {
    value = latsum::instanton_slope(BigFloat::of(epsilon));
  } else {
    latsum::ShootingConfig config;
    config.epsilon = epsilon;
    config.domain_length = L;
    config.step = h;
    value = latsum::blasius_shoot(config);
  }
  std::cout << value.str(15) << "\n";
  if (!out_path.empty()) {
    Manifest manifest("oracle", out_path);
    manifest.param("model", model_name);
    manifest.param("epsilon", epsilon);
    manifest.param("L", L);
    manifest.param("h", h);
    manifest.output(out_path);
    json doc;
    doc["model"] = model_name;
    doc["value"] = value.str(25);
    doc["metadata"]["manifest"] = manifest.name();
    auto out = open_out(out_path);
    out << doc.dump(1) << "\n";
    manifest.write();
  }
  return 0;
}

// ------------------------------------------------------------------ report

int cmd_report(int order, int blasius_order, const std::string& out_dir) {
  Manifest manifest("report", out_dir + "/report");
  manifest.param("order", order);
  manifest.param("blasius_order", blasius_order);

  const std::string inst_path = out_dir + "/instanton.json";
  const std::string blas_path = out_dir + "/blasius.json";
  cmd_generate("instanton", order, inst_path);
  cmd_generate("blasius", blasius_order, blas_path);
  manifest.output(inst_path);
  manifest.output(blas_path);

  std::ostringstream ref;
  ref.precision(20);
  cmd_pade(inst_path, 1, "1/2", order, "0.70710678118654752440", out_dir + "/instanton_pade.csv");
  cmd_pade(blas_path, 1, "1/2", std::min(blasius_order, 70), "", out_dir + "/blasius_pade.csv");
  cmd_vpt(inst_path, 1, -1, 2, order, "inflection", 6, out_dir + "/instanton_vpt.csv");
  cmd_vpt(blas_path, 1, -2, 4, blasius_order, "inflection", 6, out_dir + "/blasius_vpt.csv");
  cmd_large_order(inst_path, 1, 4, order, "", "", 6, out_dir + "/instanton_large_order.csv");
  manifest.output(out_dir + "/instanton_pade.csv");
  manifest.output(out_dir + "/blasius_pade.csv");
  manifest.output(out_dir + "/instanton_vpt.csv");
  manifest.output(out_dir + "/blasius_vpt.csv");
  manifest.output(out_dir + "/instanton_large_order.csv");
  manifest.write();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice boundary-layer series: generation, resummation, large-order analysis"};
  app.require_subcommand(1);
  int prec = 256;
  app.add_option("--prec", prec, "working float precision in bits")->capture_default_str();

  // generate
  auto* gen = app.add_subcommand("generate", "generate an exact coefficient table");
  std::string gen_model, gen_out;
  int gen_order = 20;
  gen->add_option("--model", gen_model, "instanton|blasius")->required();
  gen->add_option("--order", gen_order, "maximal order N")->required();
  gen->add_option("--out", gen_out, "output table (json)")->required();

  // pade
  auto* pade = app.add_subcommand("pade", "strong-coupling approximant sweep");
  std::string pade_coeffs, pade_M = "1/2", pade_ref, pade_out;
  long pade_site = 1;
  int pade_nmax = 20;
  pade->add_option("--coeffs", pade_coeffs, "coefficient table (json)")->required();
  pade->add_option("--site", pade_site, "lattice site n")->capture_default_str();
  pade->add_option("--M", pade_M, "Frobenius exponent (num/den)")->capture_default_str();
  pade->add_option("--n-max", pade_nmax, "maximal order")->required();
  pade->add_option("--reference", pade_ref, "reference value for crossing detection");
  pade->add_option("--out", pade_out, "output sweep (csv)")->required();

  // vpt
  auto* vpt = app.add_subcommand("vpt", "variational resummation sequence");
  std::string vpt_coeffs, vpt_strategy = "inflection", vpt_out;
  long vpt_site = 1, vpt_p = -1, vpt_q = 2;
  int vpt_nmax = 20, vpt_rich = 0;
  vpt->add_option("--coeffs", vpt_coeffs, "coefficient table (json)")->required();
  vpt->add_option("--site", vpt_site, "lattice site n")->capture_default_str();
  vpt->add_option("--p", vpt_p, "strong-coupling leading exponent")->required();
  vpt->add_option("--q", vpt_q, "strong-coupling approach exponent")->required();
  vpt->add_option("--n-max", vpt_nmax, "maximal order")->required();
  vpt->add_option("--strategy", vpt_strategy, "extremum|inflection")->capture_default_str();
  vpt->add_option("--richardson", vpt_rich, "also run Richardson orders 1..k");
  vpt->add_option("--out", vpt_out, "output sequence (csv)")->required();

  // richardson
  auto* rich = app.add_subcommand("richardson", "extrapolate a csv column");
  std::string rich_in, rich_ic = "N", rich_vc = "b0", rich_out;
  int rich_k = 6;
  rich->add_option("--in", rich_in, "input csv")->required();
  rich->add_option("--index-column", rich_ic, "index column name")->capture_default_str();
  rich->add_option("--value-column", rich_vc, "value column name")->capture_default_str();
  rich->add_option("--k-max", rich_k, "maximal transform order")->capture_default_str();
  rich->add_option("--out", rich_out, "output report (csv)")->required();

  // large-order
  auto* lo = app.add_subcommand("large-order", "growth-parameter estimators A, K, B");
  std::string lo_coeffs, lo_A, lo_K, lo_out;
  long lo_site = 1, lo_j0 = 4;
  int lo_nmax = 0, lo_k = 6;
  lo->add_option("--coeffs", lo_coeffs, "coefficient table (json)")->required();
  lo->add_option("--site", lo_site, "lattice site n")->capture_default_str();
  lo->add_option("--j0", lo_j0, "first order used")->capture_default_str();
  lo->add_option("--n-max", lo_nmax, "last order used (0 = all)");
  lo->add_option("--A", lo_A, "fixed exponent A (default: extrapolated)");
  lo->add_option("--K", lo_K, "fixed growth K (default: extrapolated)");
  lo->add_option("--k-max", lo_k, "Richardson orders")->capture_default_str();
  lo->add_option("--out", lo_out, "output report (csv)")->required();

  // signfit
  auto* sf = app.add_subcommand("signfit", "cosine sign-pattern search");
  std::string sf_coeffs, sf_out;
  long sf_site = 1, sf_j0 = 1;
  int sf_nmax = 0, sf_res = 2000, sf_depth = 3, sf_jobs = 0;
  double sf_alo = 0, sf_ahi = 3.141592653589793, sf_blo = 0, sf_bhi = 3.141592653589793;
  bool sf_pure = false;
  sf->add_option("--coeffs", sf_coeffs, "coefficient table (json)")->required();
  sf->add_option("--site", sf_site, "lattice site n")->capture_default_str();
  sf->add_option("--j0", sf_j0, "first order used")->capture_default_str();
  sf->add_option("--n-max", sf_nmax, "last order used (0 = all)");
  sf->add_option("--a-lo", sf_alo, "frequency range low")->capture_default_str();
  sf->add_option("--a-hi", sf_ahi, "frequency range high")->capture_default_str();
  sf->add_option("--b-lo", sf_blo, "phase range low")->capture_default_str();
  sf->add_option("--b-hi", sf_bhi, "phase range high")->capture_default_str();
  sf->add_flag("--pure", sf_pure, "restrict to a pure cosine (b = 0 or pi)");
  sf->add_option("--resolution", sf_res, "grid cells per axis")->capture_default_str();
  sf->add_option("--depth", sf_depth, "refinement levels")->capture_default_str();
  sf->add_option("--jobs", sf_jobs, "worker threads (0 = hardware)");
  sf->add_option("--out", sf_out, "output peaks (csv)")->required();

  // oracle
  auto* orc = app.add_subcommand("oracle", "independent continuum reference");
  std::string orc_model, orc_out;
  double orc_eps = 1.0, orc_L = 10.0, orc_h = 1e-3;
  orc->add_option("--model", orc_model, "instanton|blasius")->required();
  orc->add_option("--epsilon", orc_eps, "coupling epsilon")->capture_default_str();
  orc->add_option("--L", orc_L, "integration domain length")->capture_default_str();
  orc->add_option("--step", orc_h, "integration step")->capture_default_str();
  orc->add_option("--out", orc_out, "optional output value (json)");

  // report
  auto* rep = app.add_subcommand("report", "bundle the standard table reproductions");
  std::string rep_dir;
  int rep_order = 200, rep_border = 200;
  rep->add_option("--order", rep_order, "instanton table order")->capture_default_str();
  rep->add_option("--blasius-order", rep_border, "Blasius table order")->capture_default_str();
  rep->add_option("--out-dir", rep_dir, "output directory (must exist)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  latsum::BigFloat::set_default_precision(prec);
  try {
    if (*gen) return cmd_generate(gen_model, gen_order, gen_out);
    if (*pade) return cmd_pade(pade_coeffs, pade_site, pade_M, pade_nmax, pade_ref, pade_out);
    if (*vpt)
      return cmd_vpt(vpt_coeffs, vpt_site, vpt_p, vpt_q, vpt_nmax, vpt_strategy, vpt_rich,
                     vpt_out);
    if (*rich) return cmd_richardson(rich_in, rich_ic, rich_vc, rich_k, rich_out);
    if (*lo)
      return cmd_large_order(lo_coeffs, lo_site, lo_j0, lo_nmax, lo_A, lo_K, lo_k, lo_out);
    if (*sf)
      return cmd_signfit(sf_coeffs, sf_site, sf_j0, sf_nmax, sf_alo, sf_ahi, sf_blo, sf_bhi,
                         sf_pure, sf_res, sf_depth, sf_jobs, sf_out);
    if (*orc) return cmd_oracle(orc_model, orc_eps, orc_L, orc_h, orc_out);
    if (*rep) return cmd_report(rep_order, rep_border, rep_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
