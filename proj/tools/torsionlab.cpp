// torsionlab: exact boundary coefficients of analytic torsion under
// one-parameter degenerations, plus the numeric asymptotic-model bench.
//
// Exit codes: 0 success, 2 input error, 3 invariant violation.

#include <CLI11.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "torsion/elliptic.hpp"
#include "torsion/io.hpp"

using namespace torsion;
using torsion::io::Json;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct GlobalOpts {
  int order = -1;  // series/ring truncation override
  std::string convention = "steenbrink";
  double tolerance = 0.1;
  std::string output;
};

SpectrumConvention spectrum_convention(const GlobalOpts& opts) {
  if (opts.convention == "steenbrink") return SpectrumConvention::Steenbrink;
  if (opts.convention == "alt") return SpectrumConvention::Alt;
  throw InputError("unknown convention '" + opts.convention + "' (steenbrink|alt)");
}

void emit(const GlobalOpts& opts, const Json& report) {
  std::string text = report.dump(2);
  text += "\n";
  if (!opts.output.empty()) {
    std::ofstream out(opts.output);
    if (!out) throw InputError("cannot open output file: " + opts.output);
    out << text;
  }
  std::cout << text;
}

Json load_problem(const std::string& path, const std::string& expected_kind) {
  Json j = io::load_json_file(path);
  if (!j.contains("schema") || j["schema"] != "torsionlab/v1")
    throw InputError("problem file must declare \"schema\": \"torsionlab/v1\"");
  if (!j.contains("problem"))
    throw InputError("problem file must declare a \"problem\" kind");
  if (j["problem"] != expected_kind)
    throw InputError("expected problem kind '" + expected_kind + "', found '" +
                     j["problem"].get<std::string>() + "'");
  return j;
}

Json report_header(const std::string& command) {
  Json r;
  r["schema"] = "torsionlab-report/v1";
  r["command"] = command;
  return r;
}

Json germ_label(const Germ& g) {
  Json j;
  j["kind"] = germ_kind(g);
  j["nvars"] = germ_nvars(g);
  return j;
}

// ---------------------------------------------------------------------------

int cmd_milnor(const GlobalOpts& opts, const std::string& path) {
  Json problem = load_problem(path, "germs");
  auto germs = io::parse_germ_list(problem.at("germs"));
  Json report = report_header("milnor");
  Json list = Json::array();
  for (const auto& g : germs) {
    Json entry = germ_label(g);
    const char* source = nullptr;
    switch (g.index()) {
      case 0: source = "product(a_i - 1)"; break;
      case 1: source = "product(1/w_i - 1)"; break;
      case 2: source = "Kouchnirenko alternating volume"; break;
      default: source = "Macaulay local-algebra rank"; break;
    }
    entry["mu"] = io::rat_field(Rat(milnor_number(g)), source);
    list.push_back(std::move(entry));
  }
  report["results"] = std::move(list);
  emit(opts, report);
  return 0;
}

int cmd_spectrum(const GlobalOpts& opts, const std::string& path) {
  Json problem = load_problem(path, "germs");
  auto germs = io::parse_germ_list(problem.at("germs"));
  Json report = report_header("spectrum");
  Json list = Json::array();
  for (const auto& g : germs) {
    Json entry = germ_label(g);
    Spectrum sp = spectrum(g);
    Json vals = Json::array();
    for (const auto& a : sp.entries) vals.push_back(a.str());
    entry["spectrum"] = std::move(vals);
    entry["source"] = "weighted monomial degrees of the Milnor algebra basis";
    list.push_back(std::move(entry));
  }
  report["results"] = std::move(list);
  emit(opts, report);
  return 0;
}

int cmd_spectral_genus(const GlobalOpts& opts, const std::string& path) {
  Json problem = load_problem(path, "germs");
  auto germs = io::parse_germ_list(problem.at("germs"));
  auto conv = spectrum_convention(opts);
  Json report = report_header("spectral-genus");
  report["convention"] = opts.convention;
  Json list = Json::array();
  for (const auto& g : germs) {
    Json entry = germ_label(g);
    entry["spectral_genus"] = io::rat_field(
        spectral_genus(g, conv),
        conv == SpectrumConvention::Steenbrink
            ? "sum over spectrum entries alpha in (0,1) of 1 - alpha"
            : "sum over spectrum entries alpha in (0,1) of alpha");
    Json angles = Json::array();
    for (const auto& a : monodromy_angles(g)) angles.push_back(a.str());
    entry["monodromy_angles"] = std::move(angles);
    list.push_back(std::move(entry));
  }
  report["results"] = std::move(list);
  emit(opts, report);
  return 0;
}

int cmd_kappa_ihs(const GlobalOpts& opts, const std::string& path) {
  Json problem = load_problem(path, "germs");
  auto germs = io::parse_germ_list(problem.at("germs"));
  long rank = problem.value("rank", 1L);
  if (!problem.contains("n")) throw InputError("kappa-ihs needs the fiber dimension 'n'");
  int n = problem["n"].get<int>();
  Rat kappa = kappa_ihs(germs, rank, n, spectrum_convention(opts));
  Json report = report_header("kappa-ihs");
  report["n"] = n;
  report["rank"] = rank;
  report["results"]["kappa"] =
      io::rat_field(kappa, "-rk(xi) * sum_x (mu_x/(n+2)! - pg_x)");
  emit(opts, report);
  return 0;
}

int cmd_kappa_quadratic(const GlobalOpts& opts, const std::string& path) {
  Json problem = load_problem(path, "quadratic-rank2");
  QuadraticRank2Config cfg = io::parse_quadratic(problem);
  Rat kappa = kappa_quadratic(cfg, EClassConvention::EvenSubstitution, opts.order);
  Json report = report_header("kappa-quadratic");
  report["dim_sigma"] = cfg.dim_sigma;
  report["m"] = cfg.m;
  report["results"]["kappa"] = io::rat_field(
      kappa, "-(1/2) Int_Sigma Td(TSigma) E(N) ch(K_Sigma xi(m))");
  // The certified polynomial in the twist degree.
  std::vector<long> pts;
  for (long m = 0; m < 2 * cfg.dim_sigma + 4; ++m) pts.push_back(m);
  RatPoly p = kappa_polynomial_in_m(cfg, pts);
  Json poly = Json::array();
  for (const auto& c : p.coeffs) poly.push_back(c.str());
  report["results"]["kappa_polynomial_in_m"]["coefficients"] = std::move(poly);
  report["results"]["kappa_polynomial_in_m"]["source"] =
      "exact interpolation of kappa(m), degree certified <= dim Sigma";
  emit(opts, report);
  return 0;
}

int cmd_kappa_semistable(const GlobalOpts& opts, const std::string& path) {
  Json problem = load_problem(path, "semistable");
  Rat alpha_f = io::parse_rat(problem.at("alpha_f"));
  Rat beta = io::parse_rat(problem.at("beta"));
  long deg_mu = problem.at("deg_mu").get<long>();
  Rat kappa = kappa_semistable(alpha_f, beta, deg_mu);
  Json report = report_header("kappa-semistable");
  report["results"]["kappa"] = io::rat_field(kappa, "(alpha_f + beta)/deg_mu");
  if (problem.contains("alpha")) {
    Rat alpha = io::parse_rat(problem["alpha"]);
    Rat delta = kappa - alpha;
    report["results"]["delta"] =
        io::rat_field(delta, "(alpha_f + beta)/deg_mu - alpha");
    report["results"]["kappa_decomposition"] =
        io::rat_field(kappa_decomposition(alpha, delta), "alpha + delta");
  }
  emit(opts, report);
  return 0;
}

int cmd_exponents(const GlobalOpts& opts, const std::string& path) {
  Json j = io::load_json_file(path);
  if (!j.contains("schema") || j["schema"] != "torsionlab/v1")
    throw InputError("problem file must declare \"schema\": \"torsionlab/v1\"");
  std::string kind = j.value("problem", "");
  Json report = report_header("exponents");
  if (kind == "monodromy") {
    MonodromySpec spec = io::parse_monodromy(j);
    Json per = Json::object();
    for (int q = 0; q <= spec.n; ++q)
      per[std::to_string(q)] =
          io::rat_field(delta_q(spec, q), "sum of monodromy angles in degree q");
    report["results"]["delta_q"] = std::move(per);
    report["results"]["epsilon"] =
        io::rat_field(epsilon_pi(spec), "sum_q (-1)^q delta_q");
  } else if (kind == "colengths") {
    ColengthSpec spec = io::parse_colengths(j);
    report["results"]["delta"] = io::rat_field(
        delta_from_colength(spec), "sum_q (-1)^q colength_q / deg_mu");
  } else {
    throw InputError("exponents expects problem kind 'monodromy' or 'colengths'");
  }
  emit(opts, report);
  return 0;
}

int cmd_fit(const GlobalOpts& opts, const std::string& csv_path, bool with_c) {
  auto samples = io::read_samples_csv_file(csv_path);
  FitResult res = fit(samples, with_c, opts.tolerance);
  Json report = report_header("fit");
  report["samples"] = samples.size();
  const char* source = "least squares in {log r^2, -log log r^-2, 1, 1/log r^-1}";
  report["results"]["kappa"] = io::num_field(res.model.kappa, source);
  report["results"]["rho"] = io::num_field(res.model.rho, source);
  report["results"]["rho_rounded"] = res.rho_rounded;
  report["results"]["rho_integral"] = res.rho_integral;
  report["results"]["gamma"] = io::num_field(res.model.gamma, source);
  if (with_c) report["results"]["c"] = io::num_field(res.model.c, source);
  report["results"]["residual_rms"] = io::decimal(res.residual_rms);
  report["results"]["conditioning"] = io::decimal(res.conditioning);
  emit(opts, report);
  return 0;
}

int cmd_bt_fit(const GlobalOpts& opts, const std::string& path) {
  Json problem = load_problem(path, "bt-model");
  BTExpansion model;
  model.degree = problem.at("degree").get<int>();
  model.size = problem.at("size").get<int>();
  for (const auto& e : problem.at("exponents")) model.exponents.push_back(e.get<long>());
  for (const auto& mat : problem.at("matrices")) {
    HermMatrix a = HermMatrix::Zero(model.size, model.size);
    int r = 0;
    for (const auto& row : mat) {
      if (r >= model.size) throw InputError("matrix has too many rows");
      int c = 0;
      for (const auto& cell : row) {
        if (c >= model.size) throw InputError("matrix has too many columns");
        a(r, c) = std::complex<double>(cell.at(0).get<double>(), cell.at(1).get<double>());
        ++c;
      }
      ++r;
    }
    model.matrices.push_back(std::move(a));
  }
  model.validate();

  double lo = 1e-6, hi = 1e-1;
  int points = 48;
  if (problem.contains("grid")) {
    lo = problem["grid"].value("radius_lo", lo);
    hi = problem["grid"].value("radius_hi", hi);
    points = problem["grid"].value("points", points);
  }
  if (!(lo > 0.0) || !(hi < 1.0) || !(lo < hi) || points < 4)
    throw InputError("bt grid needs 0 < radius_lo < radius_hi < 1 and >= 4 points");

  std::vector<std::pair<std::complex<double>, HermMatrix>> scaled;
  std::vector<std::pair<std::complex<double>, double>> dets;
  double max_roundtrip = 0.0;
  for (int i = 0; i < points; ++i) {
    double frac = static_cast<double>(i) / (points - 1);
    double radius = std::exp(std::log(lo) + frac * (std::log(hi) - std::log(lo)));
    std::complex<double> t = std::polar(radius, 0.61 * i);
    scaled.emplace_back(t, bt_eval_scaled(model, t));
    dets.emplace_back(t, bt_eval(model, t).determinant().real());
  }
  DhResult dh = dh_decompose(scaled, model.exponents);
  for (size_t i = 0; i < scaled.size(); ++i) {
    HermMatrix expect = bt_eval(model, scaled[i].first);
    double rel = (dh.descaled[i] - expect).norm() / std::max(1.0, expect.norm());
    max_roundtrip = std::max(max_roundtrip, rel);
  }
  auto coeffs = bt_det_fit(dets, model.degree * model.size);

  Json report = report_header("bt-fit");
  Json cj = Json::array();
  for (double c : coeffs) cj.push_back(io::decimal(c));
  report["results"]["det_coefficients"] = std::move(cj);
  report["results"]["det_coefficients_source"] = "least squares in powers of log|t|^-2";
  report["results"]["rho"] = bt_rho(coeffs);
  report["results"]["rho_source"] = "max m with a_m != 0 at tolerance";
  report["results"]["min_eigenvalue"] =
      io::num_field(dh.min_eigenvalue, "min eigenvalue of descaled H over the grid");
  report["results"]["positivity_certified"] = dh.min_eigenvalue > 0.0;
  report["results"]["decompose_roundtrip_error"] = io::decimal(max_roundtrip);
  emit(opts, report);
  return 0;
}

std::function<double(std::complex<double>)> named_phi(const Json& spec) {
  if (spec.is_string()) {
    std::string name = spec.get<std::string>();
    if (name == "one") return [](std::complex<double>) { return 1.0; };
    if (name == "one-plus-abs2")
      return [](std::complex<double> t) { return 1.0 + std::norm(t); };
    throw InputError("unknown phi '" + name + "' (one|one-plus-abs2|{\"const\": c})");
  }
  if (spec.is_object() && spec.contains("const")) {
    double c = spec["const"].get<double>();
    return [c](std::complex<double>) { return c; };
  }
  throw InputError("phi must be a name or {\"const\": c}");
}

int cmd_curvature(const GlobalOpts& opts, const std::string& path) {
  std::vector<LogTerm> terms;
  double lo = 1e-4, hi = 1e-1;
  int points = 13;
  if (path.empty()) {
    terms = {{2, [](std::complex<double>) { return 1.0; }}};
  } else {
    Json problem = load_problem(path, "curvature");
    for (const auto& t : problem.at("terms"))
      terms.push_back({t.at("ell").get<int>(), named_phi(t.at("phi"))});
    if (problem.contains("grid")) {
      lo = problem["grid"].value("radius_lo", lo);
      hi = problem["grid"].value("radius_hi", hi);
      points = problem["grid"].value("points", points);
    }
  }
  if (!(lo > 0.0) || !(hi < 1.0) || !(lo < hi) || points < 2)
    throw InputError("curvature grid needs 0 < radius_lo < radius_hi < 1");
  std::vector<std::complex<double>> grid;
  for (int i = 0; i < points; ++i) {
    double frac = static_cast<double>(i) / (points - 1);
    grid.push_back(std::polar(
        std::exp(std::log(lo) + frac * (std::log(hi) - std::log(lo))), 0.41 * i));
  }
  CurvatureReport rep = curvature_check(terms, grid);
  Json report = report_header("curvature-check");
  report["results"]["ell"] = rep.ell;
  report["results"]["max_relative_deviation"] = io::decimal(rep.max_rel_dev);
  report["results"]["max_envelope"] = io::num_field(
      rep.max_envelope, "|numeric + ell/(4 |t|^2 (log|t|^-1)^2)| * |t|^2 (log|t|^-1)^3");
  report["results"]["numeric_source"] =
      "central differences, relative step |t|/100, one Richardson step";
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json r;
    r["abs_t"] = io::decimal(std::abs(row.t));
    r["numeric"] = io::decimal(row.numeric);
    r["principal"] = io::decimal(row.principal);
    r["envelope"] = io::decimal(row.envelope);
    rows.push_back(std::move(r));
  }
  report["results"]["grid"] = std::move(rows);
  emit(opts, report);
  return 0;
}

int cmd_elliptic_verify(const GlobalOpts& opts, double im_lo, double im_hi, int points,
                        const std::string& csv_out) {
  Json report = report_header("elliptic-verify");

  std::complex<double> tau_i(0.0, 1.0);
  std::complex<double> t1 = dedekind_eta(tau_i + std::complex<double>(1.0, 0.0)) -
                            std::exp(std::complex<double>(0.0, kPi / 12.0)) *
                                dedekind_eta(tau_i);
  std::complex<double> tau2(0.0, 2.0);
  std::complex<double> t2 =
      dedekind_eta(-1.0 / tau2) -
      std::sqrt(std::complex<double>(0.0, -1.0) * tau2) * dedekind_eta(tau2);
  report["results"]["eta_translation_defect"] =
      io::num_field(std::abs(t1), "eta(tau+1) = e^{i pi/12} eta(tau) at tau = i");
  report["results"]["eta_inversion_defect"] =
      io::num_field(std::abs(t2), "eta(-1/tau) = sqrt(-i tau) eta(tau) at tau = 2i");

  auto grid = node_tate_grid(im_lo, im_hi, points);
  auto samples = sample_family(NodeTateFamily{}, grid);
  if (!csv_out.empty()) {
    std::ofstream out(csv_out);
    if (!out) throw InputError("cannot open CSV output: " + csv_out);
    io::write_samples_csv(out, samples);
  }
  FitResult res = fit(samples, false, opts.tolerance);
  const char* source =
      "fit of -(2 log Im tau + 4 log|eta|) along tau(r) = log r/(2 pi i)";
  report["results"]["kappa"] = io::num_field(res.model.kappa, source);
  report["results"]["rho"] = io::num_field(res.model.rho, source);
  report["results"]["rho_rounded"] = res.rho_rounded;
  report["results"]["residual_rms"] = io::decimal(res.residual_rms);
  report["results"]["kappa_defect_from_minus_1_12"] =
      io::decimal(std::abs(res.model.kappa + 1.0 / 12.0));

  bool ok = std::abs(t1) < 1e-10 && std::abs(t2) < 1e-10 &&
            std::abs(res.model.kappa + 1.0 / 12.0) < 2e-3 && res.rho_rounded == 2;
  report["results"]["verified"] = ok;
  emit(opts, report);
  if (!ok) throw InvariantError("elliptic pipeline verification failed");
  return 0;
}

// ---------------------------------------------------------------------------

std::string corpus_dir() {
  if (const char* env = std::getenv("TORSION_CORPUS_DIR")) return env;
  return TORSIONLAB_CORPUS_DIR;
}

QuadraticRank2Config corpus_curve_config(long genus, long rank_xi, long deg_xi,
                                         long deg_h, long m) {
  RingCtx ctx(1, {{"t", 1}, {"x", 1}, {"h", 1}});
  QuadraticRank2Config cfg;
  cfg.dim_sigma = 1;
  cfg.m = m;
  cfg.tangent = {"T", 1, ctx, {GradedElt::generator(ctx, "t")}};
  cfg.normal = {"N", 2, ctx, {GradedElt::zero(ctx)}};
  cfg.xi = {"xi", static_cast<int>(rank_xi), ctx, {GradedElt::generator(ctx, "x")}};
  cfg.hyperplane = {"H", 1, ctx, {GradedElt::generator(ctx, "h")}};
  cfg.intersections.ctx = ctx;
  cfg.intersections.values[{1, 0, 0}] = Rat(2 - 2 * genus);
  cfg.intersections.values[{0, 1, 0}] = Rat(deg_xi);
  cfg.intersections.values[{0, 0, 1}] = Rat(deg_h);
  return cfg;
}

int cmd_corpus_check(const GlobalOpts& opts) {
  namespace fs = std::filesystem;
  std::string dir = corpus_dir();
  Json report = report_header("corpus-check");
  report["corpus_dir"] = dir;
  Json diffs = Json::array();
  int entries_checked = 0;

  auto check = [&diffs](const std::string& entry, const std::string& field,
                        const std::string& stored, const std::string& derived,
                        const std::string& route) {
    if (stored != derived) {
      Json d;
      d["entry"] = entry;
      d["field"] = field;
      d["stored"] = stored;
      d["derived"] = derived;
      d["route"] = route;
      diffs.push_back(std::move(d));
    }
  };

  fs::path bp_path = fs::path(dir) / "brieskorn_pham.json";
  if (fs::exists(bp_path)) {
    Json corpus = io::load_json_file(bp_path.string());
    int i = 0;
    for (const auto& e : corpus.at("entries")) {
      ++entries_checked;
      ++i;
      std::vector<long> exps;
      for (const auto& a : e.at("exponents")) exps.push_back(a.get<long>());
      std::string label = "bp" + std::to_string(i);

      BigInt closed = milnor_brieskorn_pham(exps);
      NewtonConvenient diagram;
      diagram.nvars = static_cast<int>(exps.size());
      MultiPoly poly;
      poly.nvars = diagram.nvars;
      long bound = 2;
      for (size_t k = 0; k < exps.size(); ++k) {
        std::vector<long> v(exps.size(), 0);
        v[k] = exps[k];
        diagram.vertices.push_back(v);
        std::vector<int> mono(exps.size(), 0);
        mono[k] = static_cast<int>(exps[k]);
        poly.terms.emplace_back(mono, Rat(1));
        bound += exps[k] - 2;
      }
      std::string stored_mu = std::to_string(e.at("mu").get<long>());
      BigInt kouch = newton_number(diagram);
      BigInt macaulay = milnor_macaulay(poly, static_cast<int>(bound));
      if (closed != kouch || closed != macaulay) {
        // The routes disagree among themselves: report each one.
        check(label, "mu", stored_mu, closed.str(), "product(a_i - 1)");
        check(label, "mu", stored_mu, kouch.str(), "Kouchnirenko alternating volume");
        check(label, "mu", stored_mu, macaulay.str(), "Macaulay local-algebra rank");
      } else {
        check(label, "mu", stored_mu, closed.str(),
              "closed form = Kouchnirenko = Macaulay");
      }

      Germ g = BrieskornPham{exps};
      Spectrum sp = spectrum(g);
      Json derived_sp = Json::array();
      for (const auto& a : sp.entries) derived_sp.push_back(a.str());
      check(label, "spectrum", e.at("spectrum").dump(), derived_sp.dump(),
            "Milnor algebra basis enumeration");
      check(label, "spectral_genus", e.at("spectral_genus").get<std::string>(),
            spectral_genus(g, spectrum_convention(opts)).str(),
            "sum over spectrum entries alpha in (0,1) of 1 - alpha");
      check(label, "spectrum_size", std::to_string(sp.entries.size()), closed.str(),
            "|spectrum| = mu");
    }
  }

  fs::path q_path = fs::path(dir) / "quadratic_rank2.json";
  if (fs::exists(q_path)) {
    Json corpus = io::load_json_file(q_path.string());
    int i = 0;
    for (const auto& e : corpus.at("entries")) {
      ++entries_checked;
      ++i;
      auto cfg = corpus_curve_config(e.at("genus").get<long>(),
                                     e.at("rank_xi").get<long>(),
                                     e.at("deg_xi").get<long>(),
                                     e.at("deg_h").get<long>(), e.at("m").get<long>());
      Rat engine = kappa_quadratic(cfg);
      check("quad" + std::to_string(i), "kappa", e.at("kappa").get<std::string>(),
            engine.str(), "-(1/2) Int Td(TSigma) E(N) ch(K_Sigma xi(m))");
    }
  }

  report["entries_checked"] = entries_checked;
  report["mismatches"] = diffs.size();
  if (entries_checked == 0)
    report["warning"] = "corpus directory is empty; nothing checked";
  report["diffs"] = std::move(diffs);
  bool ok = report["mismatches"].get<size_t>() == 0;
  report["status"] = ok ? "ok" : "mismatch";
  emit(opts, report);
  if (!ok) throw InvariantError("corpus mismatch");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact boundary coefficients of analytic torsion under degenerations"};
  app.require_subcommand(1);

  GlobalOpts opts;
  app.add_option("--order", opts.order, "series/ring truncation order override");
  app.add_option("--convention", opts.convention,
                 "spectral-genus sign convention (steenbrink|alt)");
  app.add_option("--tolerance", opts.tolerance, "rho rounding tolerance for fits");
  app.add_option("--output", opts.output, "also write the JSON report to this path");

  std::string problem_path;
  bool with_c = false;
  double im_lo = 10.0, im_hi = 200.0;
  int points = 60;
  std::string csv_out;

  auto* milnor = app.add_subcommand("milnor", "Milnor numbers of germs");
  milnor->add_option("problem", problem_path, "germ problem file")->required();
  auto* spect = app.add_subcommand("spectrum", "singularity spectra of germs");
  spect->add_option("problem", problem_path, "germ problem file")->required();
  auto* sgenus = app.add_subcommand("spectral-genus", "spectral genus and monodromy angles");
  sgenus->add_option("problem", problem_path, "germ problem file")->required();
  auto* kihs = app.add_subcommand("kappa-ihs", "kappa for isolated hypersurface singularities");
  kihs->add_option("problem", problem_path, "germ problem file with n and rank")->required();
  auto* kquad = app.add_subcommand("kappa-quadratic", "kappa for rank-two quadratic degenerations");
  kquad->add_option("problem", problem_path, "quadratic configuration file")->required();
  auto* ksemi = app.add_subcommand("kappa-semistable", "kappa through a semi-stable reduction");
  ksemi->add_option("problem", problem_path, "semistable scalar file")->required();
  auto* expo = app.add_subcommand("exponents", "exponent sums from monodromy angles or colengths");
  expo->add_option("problem", problem_path, "monodromy or colength file")->required();
  auto* fitcmd = app.add_subcommand("fit", "fit the log/loglog boundary model to CSV samples");
  fitcmd->add_option("csv", problem_path, "CSV sample file (header r,value)")->required();
  fitcmd->add_flag("--with-c", with_c, "include the 1/log r^-1 column");
  auto* btcmd = app.add_subcommand("bt-fit", "Barlet-Takayama matrix model bench");
  btcmd->add_option("problem", problem_path, "BT model file")->required();
  auto* curv = app.add_subcommand("curvature-check", "numeric curvature asymptotics");
  curv->add_option("problem", problem_path, "curvature problem file (optional)");
  auto* ell = app.add_subcommand("elliptic-verify", "Dedekind-eta pipeline validation");
  ell->add_option("--imtau-lo", im_lo, "smallest Im tau on the node grid");
  ell->add_option("--imtau-hi", im_hi, "largest Im tau on the node grid");
  ell->add_option("--points", points, "grid size");
  ell->add_option("--csv", csv_out, "emit the sampled family as CSV");
  auto* corpus = app.add_subcommand(
      "corpus-check", "re-derive the bundled corpus through independent routes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (milnor->parsed()) return cmd_milnor(opts, problem_path);
    if (spect->parsed()) return cmd_spectrum(opts, problem_path);
    if (sgenus->parsed()) return cmd_spectral_genus(opts, problem_path);
    if (kihs->parsed()) return cmd_kappa_ihs(opts, problem_path);
    if (kquad->parsed()) return cmd_kappa_quadratic(opts, problem_path);
    if (ksemi->parsed()) return cmd_kappa_semistable(opts, problem_path);
    if (expo->parsed()) return cmd_exponents(opts, problem_path);
    if (fitcmd->parsed()) return cmd_fit(opts, problem_path, with_c);
    if (btcmd->parsed()) return cmd_bt_fit(opts, problem_path);
    if (curv->parsed()) return cmd_curvature(opts, problem_path);
    if (ell->parsed()) return cmd_elliptic_verify(opts, im_lo, im_hi, points, csv_out);
    if (corpus->parsed()) return cmd_corpus_check(opts);
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
