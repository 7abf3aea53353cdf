// ouschro: experiment runner for the Ornstein-Uhlenbeck Schroedinger group,
// the imaginary harmonic oscillator and the associated decay/dispersion
// probes. Subcommands: propagate, validate, dispersive, uncertainty, report.
//
// Exit codes: 0 pass, 1 usage/config error, 2 flagged-but-completed,
// 3 assertion failure.

#include <CLI11.hpp>

#include <clocale>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "ouschro/checks.hpp"
#include "ouschro/io.hpp"
#include "ouschro/probes.hpp"

namespace fs = std::filesystem;
using namespace ouschro;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFlagged = 2;
constexpr int kExitAssertion = 3;

struct CommonOptions {
  int m = 1;
  int n = 0;        // 0 = dimension default
  double r = 0.0;   // 0 = dimension default
  std::string out = "out";
  std::string config_path;
  Json config;
};

void resolve_grid_defaults(CommonOptions& c) {
  if (c.n == 0) c.n = c.m == 1 ? 512 : (c.m == 2 ? 128 : 64);
  if (c.r == 0.0) c.r = c.m == 1 ? 12.0 : (c.m == 2 ? 10.0 : 8.0);
}

Json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
  }
  return j;
}

// Flags override file values: apply the config only where the flag is absent.
template <class T>
void merge_option(const CLI::App* cmd, const std::string& flag,
                  const Json& config, const std::string& key, T& value) {
  if (cmd->count(flag) == 0 && config.contains(key))
    value = config.at(key).get<T>();
}

std::pair<GaussianExponential, Json> parse_psi_gauss(const std::string& text,
                                                     int m) {
  double re = 0.0, im = 0.0;
  const auto comma = text.find(',');
  try {
    re = std::stod(text.substr(0, comma));
    if (comma != std::string::npos) im = std::stod(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("--psi-gauss: expected a_re[,a_im], got '" +
                                text + "'");
  }
  GaussianExponential g = GaussianExponential::isotropic(m, Complex(re, im));
  return {g, gaussian_to_json(g)};
}

std::string branch_name(TimeBranch b) {
  switch (b) {
    case TimeBranch::JPlus: return "J+";
    case TimeBranch::JMinus: return "J-";
    case TimeBranch::SingularZero: return "singular-0";
    case TimeBranch::SingularPi: return "singular-pi";
  }
  return "?";
}

[[noreturn]] void fail_singular(const EvolutionTime& et) {
  std::ostringstream os;
  os << "singular time: t = " << fmt17(et.t)
     << " (t mod pi = " << fmt17(std::remainder(et.t, kPi)) << ")";
  throw std::domain_error(os.str());
}

// ---------------------------------------------------------------------------
// propagate

struct PropagateOptions {
  CommonOptions common;
  std::string op = "ou";
  double t = 0.0;
  std::string path;
  double omega = 0.25;
  std::string psi_gauss = "1";
  std::string phi = "gauss";
};

int cmd_propagate(const PropagateOptions& opt) {
  CommonOptions c = opt.common;
  resolve_grid_defaults(c);
  const Grid grid = make_grid(c.m, c.n, c.r);
  std::string path = opt.path;
  if (path.empty()) path = opt.op == "ho" ? "direct" : "transform";

  Json meta;
  meta["command"] = "propagate";
  meta["op"] = opt.op;
  meta["grid"] = grid_to_json(grid);
  meta["t"] = opt.t;
  meta["path"] = path;

  Field initial{grid, Eigen::ArrayXcd::Zero(grid.size())};
  PropagationResult result{Field{grid, {}}, {}};
  std::optional<GaussianExponential> evolved;

  const bool const_data = opt.phi == "const";
  if (opt.phi != "const" && opt.phi != "gauss")
    throw std::invalid_argument("--phi must be 'gauss' or 'const'");

  if (opt.op == "ou") {
    const EvolutionTime et = covariance_q(opt.t);
    meta["t_reduced"] = et.t_reduced;
    meta["branch"] = branch_name(et.branch);
    GaussianExponential phi_state = GaussianExponential::isotropic(c.m, {});
    if (!const_data) {
      auto [psi, psi_json] = parse_psi_gauss(opt.psi_gauss, c.m);
      meta["data_psi_side"] = psi_json;
      phi_state = multiply_quadratic(psi, Complex(0.25));
    }
    meta["data_phi_side"] =
        const_data ? Json("const") : gaussian_to_json(phi_state);
    initial = sample(phi_state, grid);
    if (path == "symbol") {
      evolved = ou_evolve(phi_state, et, OuPath::Symbol);
      result.field = sample(*evolved, grid);
    } else {
      if (et.singular()) fail_singular(et);
      result = path == "kernel" ? propagate_ou_kernel(initial, et)
                                : propagate_ou_transform(initial, et);
      evolved = ou_evolve(phi_state, et, OuPath::Symbol);
    }
  } else if (opt.op == "ho") {
    const EvolutionTime et = covariance_q(opt.t);
    meta["t_reduced"] = et.t_reduced;
    meta["branch"] = branch_name(et.branch);
    if (const_data)
      throw std::invalid_argument("propagate --op ho requires Gaussian data");
    auto [u0, u0_json] = parse_psi_gauss(opt.psi_gauss, c.m);
    meta["data_u0"] = u0_json;
    initial = sample(u0, grid);
    const HoPath hp = path == "gauge" ? HoPath::Gauge : HoPath::Direct;
    if (et.singular() && hp == HoPath::Direct) fail_singular(et);
    result = propagate_ho(initial, et, hp);
    evolved = ho_evolve(u0, et, HoPath::Gauge);
  } else if (opt.op == "mehler") {
    meta["omega"] = opt.omega;
    GaussianExponential phi_state = GaussianExponential::isotropic(c.m, {});
    if (!const_data) {
      auto [g, g_json] = parse_psi_gauss(opt.psi_gauss, c.m);
      meta["data_phi"] = g_json;
      phi_state = g;
    } else {
      meta["data_phi"] = "const";
    }
    initial = sample(phi_state, grid);
    result = propagate_mehler(initial, opt.t, opt.omega);
    evolved = mehler_evolve(phi_state, opt.t, opt.omega);
  } else {
    throw std::invalid_argument("--op must be one of ou, ho, mehler");
  }

  meta["flags"] = result.flags;
  if (evolved) meta["evolved_coefficients"] = gaussian_to_json(*evolved);
  meta["files"] = Json{{"initial", "initial.csv"}, {"final", "final.csv"}};

  fs::create_directories(c.out);
  write_field_csv((fs::path(c.out) / "initial.csv").string(), initial);
  write_field_csv((fs::path(c.out) / "final.csv").string(), result.field);
  write_file_atomic((fs::path(c.out) / "metadata.json").string(),
                    meta.dump(2) + "\n");
  for (const auto& f : result.flags)
    std::cerr << "flag: " << f << "\n";
  std::cout << "propagate: wrote " << c.out << "/{initial.csv,final.csv,metadata.json}\n";
  return result.flags.empty() ? kExitOk : kExitFlagged;
}

// ---------------------------------------------------------------------------
// validate

struct ValidateOptions {
  CommonOptions common;
  std::vector<std::string> only;
  std::string inject_fault;
};

int cmd_validate(const ValidateOptions& opt) {
  CommonOptions c = opt.common;
  resolve_grid_defaults(c);
  ValidationOptions vo;
  vo.m = c.m;
  vo.n = c.n;
  vo.r = c.r;
  vo.only = opt.only;
  vo.inject_fault = opt.inject_fault;
  if (c.config.contains("tolerances"))
    for (const auto& [key, value] : c.config.at("tolerances").items())
      vo.tolerances[key] = value.get<double>();

  const std::vector<CheckResult> results = run_validation(vo);
  const Json report = validation_report(vo, results);
  fs::create_directories(c.out);
  write_file_atomic((fs::path(c.out) / "report.json").string(),
                    report.dump(2) + "\n");
  bool all_pass = true;
  for (const auto& res : results) {
    all_pass = all_pass && res.pass;
    std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << res.name
              << "  measured=" << fmt17(res.measured)
              << "  tolerance=" << fmt17(res.tolerance) << "\n";
  }
  std::cout << (all_pass ? "validate: all checks passed\n"
                         : "validate: FAILURES present\n");
  return all_pass ? kExitOk : kExitAssertion;
}

// ---------------------------------------------------------------------------
// dispersive

struct DispersiveOptions {
  CommonOptions common;
  std::vector<double> p_list;
  std::vector<double> t_list;
};

int cmd_dispersive(const DispersiveOptions& opt) {
  CommonOptions c = opt.common;
  resolve_grid_defaults(c);
  std::vector<double> ps = opt.p_list;
  if (ps.empty()) ps = {1.0, 1.2, 4.0 / 3.0, 1.5, 2.0, 2.5};
  std::vector<double> ts = opt.t_list;
  if (ts.empty()) ts = {kPi / 4.0, kPi / 2.0, 2.2};
  for (double p : ps)
    if (!(p >= 1.0))
      throw std::invalid_argument("dispersive: p must be >= 1, got " +
                                  std::to_string(p));
  const Grid grid = make_grid(c.m, c.n, c.r);
  const double tol = 1e-6;

  std::ostringstream csv;
  csv << "label,p,p_conj,t,branch,lhs,rhs,constant,ratio,ratio_grid,"
         "in_theorem,tolerance,pass\n";
  Json records = Json::array();
  bool all_pass = true;
  bool counterexample_seen = false;
  for (double t : ts) {
    const EvolutionTime et = covariance_q(t);
    if (et.singular()) fail_singular(et);
    const std::vector<std::pair<std::string, Complex>> states = {
        {"plain", Complex(1.0, 0.0)},
        {"chirp-cancel", Complex(1.0, et.cot_t / 4.0)},
        {"chirped", Complex(1.0, -1.0)}};
    for (const auto& [label, a_psi] : states) {
      const GaussianExponential psi =
          GaussianExponential::isotropic(c.m, a_psi);
      const Field psi_field = sample(psi, grid);
      for (double p : ps) {
        const DispersiveProbeResult closed = dispersive_probe(psi, et, p);
        const DispersiveProbeResult gridp = dispersive_probe(psi_field, et, p);
        const bool row_pass =
            !closed.in_theorem ||
            (closed.ratio <= 1.0 + tol && gridp.ratio <= 1.0 + tol);
        all_pass = all_pass && row_pass;
        if (!closed.in_theorem && closed.ratio > 1.0)
          counterexample_seen = true;
        csv << label << ',' << fmt17(p) << ',' << fmt17(closed.p_conj) << ','
            << fmt17(t) << ',' << branch_name(et.branch) << ','
            << fmt17(closed.lhs) << ',' << fmt17(closed.rhs) << ','
            << fmt17(closed.constant) << ',' << fmt17(closed.ratio) << ','
            << fmt17(gridp.ratio) << ','
            << (closed.in_theorem ? "yes" : "out-of-theorem") << ','
            << fmt17(tol) << ',' << (row_pass ? "pass" : "FAIL") << '\n';
        records.push_back({{"label", label},
                           {"data", gaussian_to_json(psi)},
                           {"p", p},
                           {"p_conj", closed.p_conj},
                           {"t", t},
                           {"branch", branch_name(et.branch)},
                           {"lhs", closed.lhs},
                           {"rhs", closed.rhs},
                           {"constant", closed.constant},
                           {"ratio", closed.ratio},
                           {"ratio_grid", gridp.ratio},
                           {"in_theorem", closed.in_theorem},
                           {"tolerance", tol},
                           {"pass", row_pass}});
      }
    }
  }

  fs::create_directories(c.out);
  write_file_atomic((fs::path(c.out) / "dispersive.csv").string(), csv.str());
  write_file_atomic((fs::path(c.out) / "dispersive.json").string(),
                    records.dump(2) + "\n");
  write_file_atomic(
      (fs::path(c.out) / "dispersive.gp").string(),
      "# gnuplot script: dispersive ratio against p\n"
      "set datafile separator ','\n"
      "set key autotitle columnhead\n"
      "set xlabel 'p'\nset ylabel 'ratio'\n"
      "plot 'dispersive.csv' using 2:9 with points pt 7\n");
  std::cout << "dispersive: " << (all_pass ? "all in-theorem rows pass"
                                           : "FAILURES present")
            << (counterexample_seen ? "; out-of-theorem ratio > 1 exhibited"
                                    : "")
            << "\n";
  return all_pass ? kExitOk : kExitAssertion;
}

// ---------------------------------------------------------------------------
// uncertainty

struct UncertaintyOptions {
  CommonOptions common;
  std::vector<double> s_list;
};

int cmd_uncertainty(const UncertaintyOptions& opt) {
  CommonOptions c = opt.common;
  resolve_grid_defaults(c);
  std::vector<double> ss = opt.s_list;
  if (ss.empty()) ss = {kPi / 6.0, kPi / 4.0, kPi / 2.0, 2.2, 4.0};

  const double sharp_tol = 1e-12;
  const double separation = 1e-3;
  const double threshold = 1.0 / 16.0;

  std::ostringstream csv;
  csv << "s,alpha,theta,probe,a_max,b_max,product,threshold,gap,sharp,"
         "attained,endpoint,C,tolerance,pass\n";
  Json records = Json::array();
  bool all_pass = true;
  for (double s : ss) {
    const EvolutionTime et = covariance_q(s);
    if (et.singular()) fail_singular(et);
    const double cot4 = et.cot_t / 4.0;
    for (double alpha : {0.25, 0.5, 1.0}) {
      for (double theta : {0.0, cot4, -cot4, 1.0, -1.0}) {
        const GaussianExponential psi =
            GaussianExponential::isotropic(c.m, Complex(alpha, theta));
        const bool sharp = std::abs(theta - cot4) <= 1e-9;
        for (const char* probe : {"l2", "linf"}) {
          const UncertaintyProbeResult res =
              std::string(probe) == "l2" ? uncertainty_probe_l2(psi, s)
                                         : uncertainty_probe_linf(psi, s);
          const double gap = threshold - res.product;
          const bool row_pass =
              res.product <= threshold + sharp_tol &&
              (sharp ? std::abs(res.product - threshold) < sharp_tol
                     : gap > separation);
          all_pass = all_pass && row_pass;
          csv << fmt17(s) << ',' << fmt17(alpha) << ',' << fmt17(theta) << ','
              << probe << ',' << fmt17(res.a_max) << ',' << fmt17(res.b_max)
              << ',' << fmt17(res.product) << ',' << fmt17(res.threshold)
              << ',' << fmt17(gap) << ',' << (sharp ? "yes" : "no") << ','
              << (res.attained ? "yes" : "no") << ','
              << (res.endpoint ? "yes" : "no") << ',' << fmt17(res.C) << ','
              << fmt17(sharp ? sharp_tol : separation) << ','
              << (row_pass ? "pass" : "FAIL") << '\n';
          records.push_back({{"s", s},
                             {"data", gaussian_to_json(psi)},
                             {"probe", probe},
                             {"a_max", res.a_max},
                             {"b_max", res.b_max},
                             {"product", res.product},
                             {"threshold", res.threshold},
                             {"sharp", sharp},
                             {"attained", res.attained},
                             {"endpoint", res.endpoint},
                             {"C", res.C},
                             {"tolerance", sharp ? sharp_tol : separation},
                             {"pass", row_pass}});
        }
      }
    }
  }

  std::ostringstream hardy_csv;
  hardy_csv << "re_a,im_a,a_rate,b_rate,product,threshold,equality,tolerance,pass\n";
  Json hardy_records = Json::array();
  const double pi2 = kPi * kPi;
  for (Complex a : {Complex(kPi, 0.0), Complex(1.0, 0.0), Complex(2.0, 0.0),
                    Complex(1.0, -1.0), Complex(0.5, 0.25), Complex(2.0, 3.0)}) {
    const HardyProbeResult res =
        hardy_probe(GaussianExponential::isotropic(c.m, a));
    const bool equality = a.imag() == 0.0;
    const double tol = equality ? 1e-12 : 1e-3;
    const bool row_pass =
        res.product <= pi2 * (1.0 + 1e-12) &&
        (equality ? std::abs(res.product - pi2) < 1e-12
                  : res.product < pi2 - 1e-3);
    all_pass = all_pass && row_pass;
    hardy_csv << fmt17(a.real()) << ',' << fmt17(a.imag()) << ','
              << fmt17(res.a_rate) << ',' << fmt17(res.b_rate) << ','
              << fmt17(res.product) << ',' << fmt17(pi2) << ','
              << (equality ? "yes" : "no") << ',' << fmt17(tol) << ','
              << (row_pass ? "pass" : "FAIL") << '\n';
    hardy_records.push_back({{"re_a", a.real()},
                             {"im_a", a.imag()},
                             {"a_rate", res.a_rate},
                             {"b_rate", res.b_rate},
                             {"product", res.product},
                             {"threshold", pi2},
                             {"equality", equality},
                             {"tolerance", tol},
                             {"pass", row_pass}});
  }

  fs::create_directories(c.out);
  write_file_atomic((fs::path(c.out) / "uncertainty.csv").string(), csv.str());
  write_file_atomic((fs::path(c.out) / "hardy.csv").string(), hardy_csv.str());
  Json combined;
  combined["uncertainty"] = records;
  combined["hardy"] = hardy_records;
  write_file_atomic((fs::path(c.out) / "uncertainty.json").string(),
                    combined.dump(2) + "\n");
  write_file_atomic(
      (fs::path(c.out) / "uncertainty.gp").string(),
      "# gnuplot script: decay product against chirp\n"
      "set datafile separator ','\n"
      "set key autotitle columnhead\n"
      "set xlabel 'theta'\nset ylabel 'a_max b_max sin^2 s'\n"
      "plot 'uncertainty.csv' using 3:7 with points pt 7, 1.0/16 with lines\n");
  std::cout << "uncertainty: "
            << (all_pass ? "all rows pass" : "FAILURES present") << "\n";
  return all_pass ? kExitOk : kExitAssertion;
}

// ---------------------------------------------------------------------------
// report

int cmd_report(const CommonOptions& common) {
  ValidateOptions v;
  v.common = common;
  DispersiveOptions d;
  d.common = common;
  UncertaintyOptions u;
  u.common = common;
  const int rc_v = cmd_validate(v);
  const int rc_d = cmd_dispersive(d);
  const int rc_u = cmd_uncertainty(u);
  Json summary;
  summary["command"] = "report";
  summary["validate_exit"] = rc_v;
  summary["dispersive_exit"] = rc_d;
  summary["uncertainty_exit"] = rc_u;
  CommonOptions c = common;
  resolve_grid_defaults(c);
  write_file_atomic((fs::path(c.out) / "summary.json").string(),
                    summary.dump(2) + "\n");
  if (rc_v == kExitAssertion || rc_d == kExitAssertion ||
      rc_u == kExitAssertion)
    return kExitAssertion;
  if (rc_v != 0 || rc_d != 0 || rc_u != 0) return kExitFlagged;
  return kExitOk;
}

void add_common(CLI::App* cmd, CommonOptions& c) {
  cmd->add_option("--m", c.m, "dimension (1-3)");
  cmd->add_option("--n", c.n, "nodes per axis (default 512 for m=1, 128 for m=2)");
  cmd->add_option("--r", c.r, "half-extent of the grid (default 12 for m=1, 10 for m=2)");
  cmd->add_option("--out", c.out, "output directory")->capture_default_str();
  cmd->add_option("--config", c.config_path,
                  "JSON config file; flags override file values");
}

void merge_common(const CLI::App* cmd, CommonOptions& c) {
  if (!c.config_path.empty()) c.config = load_config(c.config_path);
  merge_option(cmd, "--m", c.config, "m", c.m);
  merge_option(cmd, "--n", c.config, "n", c.n);
  merge_option(cmd, "--r", c.config, "r", c.r);
  merge_option(cmd, "--out", c.config, "out", c.out);
  if (c.m < 1 || c.m > 3)
    throw std::invalid_argument("--m: dimension must be in {1,2,3}");
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");
  CLI::App app{
      "ouschro: propagators for the Ornstein-Uhlenbeck Schroedinger group, "
      "the imaginary harmonic oscillator and the real-time drift semigroup, "
      "with decay-threshold and dispersive-bound probes.\n"
      "Environment: OU_SCHRO_THREADS caps internal parallelism."};
  app.require_subcommand(1);

  PropagateOptions po;
  CLI::App* prop = app.add_subcommand(
      "propagate", "evolve data and write field snapshots + metadata");
  add_common(prop, po.common);
  prop->add_option("--op", po.op, "ou | ho | mehler")->capture_default_str();
  prop->add_option("--t", po.t, "flow time")->required();
  prop->add_option("--path", po.path,
                   "ou: transform|kernel|symbol, ho: direct|gauge");
  prop->add_option("--omega", po.omega, "drift strength (mehler)")
      ->capture_default_str();
  prop->add_option("--psi-gauss", po.psi_gauss,
                   "flat-side Gaussian decay a_re[,a_im]; for ou this is the "
                   "psi-side state, for ho the initial state, for mehler the datum")
      ->capture_default_str();
  prop->add_option("--phi", po.phi, "gauss | const")->capture_default_str();

  ValidateOptions vo;
  CLI::App* val = app.add_subcommand(
      "validate", "run the invariant suite and write report.json");
  add_common(val, vo.common);
  val->add_option("--only", vo.only, "run only the named check(s)");
  val->add_option("--inject-fault", vo.inject_fault,
                  "testing hook: wrong-jminus-prefactor");

  DispersiveOptions dopt;
  CLI::App* disp = app.add_subcommand(
      "dispersive", "sweep the sharp dispersive bound; write dispersive.csv");
  add_common(disp, dopt.common);
  disp->add_option("--p", dopt.p_list, "exponents to probe");
  disp->add_option("--t", dopt.t_list, "times to probe");

  UncertaintyOptions uo;
  CLI::App* unc = app.add_subcommand(
      "uncertainty",
      "sweep the decay-threshold probes; write uncertainty.csv + hardy.csv");
  add_common(unc, uo.common);
  unc->add_option("--s", uo.s_list, "times to probe");

  CommonOptions ro;
  CLI::App* rep = app.add_subcommand(
      "report", "run validate + dispersive + uncertainty into one directory");
  add_common(rep, ro);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (prop->parsed()) {
      merge_common(prop, po.common);
      merge_option(prop, "--op", po.common.config, "op", po.op);
      merge_option(prop, "--t", po.common.config, "t", po.t);
      merge_option(prop, "--path", po.common.config, "path", po.path);
      merge_option(prop, "--omega", po.common.config, "omega", po.omega);
      merge_option(prop, "--psi-gauss", po.common.config, "psi_gauss",
                   po.psi_gauss);
      merge_option(prop, "--phi", po.common.config, "phi", po.phi);
      return cmd_propagate(po);
    }
    if (val->parsed()) {
      merge_common(val, vo.common);
      merge_option(val, "--only", vo.common.config, "only", vo.only);
      merge_option(val, "--inject-fault", vo.common.config, "inject_fault",
                   vo.inject_fault);
      return cmd_validate(vo);
    }
    if (disp->parsed()) {
      merge_common(disp, dopt.common);
      merge_option(disp, "--p", dopt.common.config, "p", dopt.p_list);
      merge_option(disp, "--t", dopt.common.config, "t", dopt.t_list);
      return cmd_dispersive(dopt);
    }
    if (unc->parsed()) {
      merge_common(unc, uo.common);
      merge_option(unc, "--s", uo.common.config, "s", uo.s_list);
      return cmd_uncertainty(uo);
    }
    if (rep->parsed()) {
      merge_common(rep, ro);
      return cmd_report(ro);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
