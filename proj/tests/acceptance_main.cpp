// Acceptance suite: one line per criterion, every tolerance pinned in code.
// Exit code 0 iff all criteria pass.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <vector>

#include "ouschro/checks.hpp"
#include "ouschro/probes.hpp"

namespace fs = std::filesystem;
using namespace ouschro;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

bool g_all_pass = true;

void report(int id, const std::string& name, bool pass,
            const std::string& detail) {
  g_all_pass = g_all_pass && pass;
  std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", id,
              name.c_str(), detail.c_str());
  std::fflush(stdout);
}

double coeff_distance(const GaussianExponential& u,
                      const GaussianExponential& v) {
  double d = std::abs(u.a - v.a) / (1.0 + std::abs(v.a));
  for (int a = 0; a < u.m; ++a)
    d = std::max(d, std::abs(u.b[a] - v.b[a]) / (1.0 + std::abs(v.b[a])));
  return std::max(d, std::abs(u.c - v.c) / (1.0 + std::abs(v.c)));
}

// Evolved phi-side states are compared in the gauged metric, the flat L^2
// norm of e^{-|x|^2/4} f: the unitary norm of the group.
double gauged_rel_l2(const Field& a, const Field& b) {
  return rel_l2_error(gauge_psi_of_phi(a), gauge_psi_of_phi(b));
}

const std::vector<double> kTimeSet = {0.3, kPi / 2.0, 2.2, 4.0};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// --------------------------------------------------------------------------

void criterion_1_oracle_agreement(const Grid& grid) {
  const double tol = 1e-6;
  double worst = 0.0;
  for (Complex a_psi : {Complex(1.0, 0.0), Complex(1.0, -0.3)}) {
    const GaussianExponential psi = GaussianExponential::isotropic(1, a_psi);
    const GaussianExponential phi_g = multiply_quadratic(psi, Complex(0.25));
    const Field phi = sample(phi_g, grid);
    for (double t : kTimeSet) {
      const EvolutionTime et = covariance_q(t);
      const Field oracle = sample(ou_evolve(phi_g, et, OuPath::Symbol), grid);
      worst = std::max(worst, gauged_rel_l2(
          propagate_ou_transform(phi, et, {}).field, oracle));
      worst = std::max(worst, gauged_rel_l2(
          propagate_ou_kernel(phi, et, {}).field, oracle));
    }
  }
  report(1, "transform and kernel paths match the closed-form evolution",
         worst < tol, "max rel L2 " + fmt(worst) + " < " + fmt(tol));
}

void criterion_2_unitarity(const Grid& grid) {
  const double tol = 1e-6;
  const GaussianExponential psi = GaussianExponential::isotropic(1, Complex(1.0));
  const Field phi = sample(multiply_quadratic(psi, Complex(0.25)), grid);
  const double n0 = weighted_l2_gamma_norm(phi, 0.0).value;
  double worst = 0.0;
  for (double t : kTimeSet) {
    const Field f = propagate_ou_transform(phi, covariance_q(t), {}).field;
    worst = std::max(worst,
                     std::abs(weighted_l2_gamma_norm(f, 0.0).value - n0) / n0);
  }
  report(2, "gamma-norm is preserved by the flow", worst < tol,
         "max drift " + fmt(worst) + " < " + fmt(tol));
}

void criterion_3_group_law(const Grid& grid) {
  const double grid_tol = 1e-5, coeff_tol = 1e-12;
  const GaussianExponential psi = GaussianExponential::isotropic(1, Complex(1.0));
  const Field phi = sample(multiply_quadratic(psi, Complex(0.25)), grid);
  double composition = 0.0;
  for (auto [s, t] : {std::pair{0.6, 0.7}, std::pair{2.5, 2.5}}) {
    const Field two = propagate_ou_transform(
        propagate_ou_transform(phi, covariance_q(s), {}).field,
        covariance_q(t), {}).field;
    const Field one = propagate_ou_transform(phi, covariance_q(s + t), {}).field;
    composition = std::max(composition, gauged_rel_l2(two, one));
  }

  const GaussianExponential g(1, Complex(0.5, 0.3),
                              ComplexVector::Constant(1, Complex(0.3, 0.2)),
                              Complex(0.1, -0.05));
  const double parity = coeff_distance(
      ou_evolve(g, covariance_q(kPi), OuPath::Symbol),
      scale_argument(g, Complex(-1.0)));
  const double identity = coeff_distance(
      ou_evolve(g, covariance_q(2.0 * kPi), OuPath::Symbol), g);
  const bool pass = composition < grid_tol && parity < coeff_tol &&
                    identity < coeff_tol;
  report(3, "group law, parity at pi, identity at 2 pi", pass,
         "composition " + fmt(composition) + " < " + fmt(grid_tol) +
             ", parity " + fmt(parity) + ", identity " + fmt(identity) +
             " < " + fmt(coeff_tol));
}

void criterion_4_gauge_equivalence(const Grid& grid) {
  const double tol = 1e-6, eig_tol = 1e-7;
  double worst = 0.0;
  const Field u0 = sample(GaussianExponential::isotropic(1, Complex(0.5)), grid);
  for (double t : {1.0, 2.2, 4.0}) {
    const EvolutionTime et = covariance_q(t);
    worst = std::max(worst, rel_l2_error(
        propagate_ho(u0, et, HoPath::Direct, {}).field,
        propagate_ho(u0, et, HoPath::Gauge, {}).field));
  }
  const Grid grid2 = make_grid(2, 128, 10.0);
  const Field v0 = sample(GaussianExponential::isotropic(2, Complex(0.5)), grid2);
  const EvolutionTime et2 = covariance_q(1.0);
  worst = std::max(worst, rel_l2_error(
      propagate_ho(v0, et2, HoPath::Direct, {}).field,
      propagate_ho(v0, et2, HoPath::Gauge, {}).field));

  double eig_worst = 0.0;
  for (int m : {1, 2}) {
    const Grid& g = m == 1 ? grid : grid2;
    const Field ground = sample(GaussianExponential::isotropic(m, Complex(0.25)), g);
    const Field u = propagate_ho(ground, covariance_q(1.0), HoPath::Direct, {}).field;
    const Field expect{g, ground.values * std::exp(-kI * (0.5 * m))};
    eig_worst = std::max(eig_worst, rel_l2_error(u, expect));
  }
  const bool pass = worst < tol && eig_worst < eig_tol;
  report(4, "oscillator direct and gauge paths coincide", pass,
         "paths " + fmt(worst) + " < " + fmt(tol) + ", ground state " +
             fmt(eig_worst) + " < " + fmt(eig_tol));
}

void criterion_5_pde_residuals(const Grid& grid) {
  const double tol = 1e-3, order_min = 1.8;
  const Field phi = sample(GaussianExponential::isotropic(1, Complex(0.75)), grid);
  const Field u0 = sample(GaussianExponential::isotropic(1, Complex(0.5)), grid);
  const double r_ou = pde_residual_ou(phi, 0.7, 1e-4, {});
  const double r_ho = pde_residual_ho(u0, 0.7, 1e-4, HoPath::Direct, {});
  const double o_ou = convergence_order(
      [&](double h) { return pde_residual_ou(phi, 0.7, h, {}); },
      {1.6e-2, 8e-3, 4e-3});
  const double o_ho = convergence_order(
      [&](double h) { return pde_residual_ho(u0, 0.7, h, HoPath::Direct, {}); },
      {1.6e-2, 8e-3, 4e-3});
  const bool pass =
      r_ou < tol && r_ho < tol && o_ou >= order_min && o_ho >= order_min;
  report(5, "generator residuals vanish at second order", pass,
         "residuals " + fmt(r_ou) + "/" + fmt(r_ho) + " < " + fmt(tol) +
             ", orders " + fmt(o_ou) + "/" + fmt(o_ho) + " >= 1.8");
}

void criterion_6_dispersive(const Grid& grid) {
  const double tol = 1e-6;
  bool pass = true;
  double worst_ratio = 0.0;
  for (double t : {kPi / 4.0, kPi / 2.0, 2.2}) {
    const EvolutionTime et = covariance_q(t);
    for (Complex a : {Complex(1.0, 0.0), Complex(1.0, et.cot_t / 4.0),
                      Complex(1.0, -1.0)}) {
      const GaussianExponential psi = GaussianExponential::isotropic(1, a);
      const Field psif = sample(psi, grid);
      for (double p : {1.0, 1.2, 4.0 / 3.0, 1.5, 2.0}) {
        const double rc = dispersive_probe(psi, et, p).ratio;
        const double rg = dispersive_probe(psif, et, p, {}).ratio;
        worst_ratio = std::max({worst_ratio, rc, rg});
        pass = pass && rc <= 1.0 + tol && rg <= 1.0 + tol;
      }
    }
  }
  // exact equality cases, on the closed form and on the grid
  const GaussianExponential plain = GaussianExponential::isotropic(1, Complex(1.0));
  const DispersiveProbeResult p1 =
      dispersive_probe(plain, covariance_q(kPi / 2.0), 1.0);
  pass = pass && std::abs(p1.lhs - 0.5) < tol && std::abs(p1.rhs - 0.5) < tol &&
         std::abs(p1.ratio - 1.0) < tol;
  const DispersiveProbeResult p1g = dispersive_probe(
      sample(plain, grid), covariance_q(kPi / 2.0), 1.0, {});
  pass = pass && std::abs(p1g.ratio - 1.0) < tol;
  const EvolutionTime tq = covariance_q(kPi / 4.0);
  const DispersiveProbeResult pc = dispersive_probe(
      GaussianExponential::isotropic(1, Complex(1.0, tq.cot_t / 4.0)), tq,
      4.0 / 3.0);
  pass = pass && std::abs(pc.ratio - 1.0) < tol;
  // explicit out-of-range counterexample
  const DispersiveProbeResult cx = dispersive_probe(
      GaussianExponential::isotropic(1, Complex(1.0, -1.0)),
      covariance_q(kPi / 2.0), 2.5);
  pass = pass && cx.ratio > 1.0;
  report(6, "sharp dispersive bound holds on [1,2], fails at p=2.5", pass,
         "max in-theorem ratio " + fmt(worst_ratio) + " <= 1+" + fmt(tol) +
             ", equality |ratio-1| " + fmt(std::abs(pc.ratio - 1.0)) +
             ", p=2.5 ratio " + fmt(cx.ratio) + " > 1");
}

void criterion_7_uncertainty_thresholds() {
  const double sharp_tol = 1e-12, separation = 1e-3, threshold = 1.0 / 16.0;
  bool pass = true;
  double max_product = 0.0;
  for (double s : {kPi / 6.0, kPi / 4.0, kPi / 2.0, 2.2, 4.0}) {
    const double cot4 = covariance_q(s).cot_t / 4.0;
    for (double alpha : {0.25, 0.5, 1.0}) {
      for (double theta : {0.0, cot4, -cot4, 1.0, -1.0}) {
        const UncertaintyProbeResult r = uncertainty_probe_l2(
            GaussianExponential::isotropic(1, Complex(alpha, theta)), s);
        max_product = std::max(max_product, r.product);
        const bool sharp = std::abs(theta - cot4) <= 1e-9;
        pass = pass && r.product <= threshold + sharp_tol;
        if (sharp)
          pass = pass && std::abs(r.product - threshold) < sharp_tol;
        else
          pass = pass && r.product < threshold - separation;
      }
    }
  }
  const double pi2 = kPi * kPi;
  double hardy_eq_dev = 0.0;
  for (Complex a : {Complex(kPi, 0.0), Complex(1.0, 0.0), Complex(2.0, 0.0),
                    Complex(1.0, -1.0), Complex(0.5, 0.25)}) {
    const HardyProbeResult h = hardy_probe(GaussianExponential::isotropic(1, a));
    pass = pass && h.product <= pi2 * (1.0 + 1e-12);
    if (a.imag() == 0.0) {
      hardy_eq_dev = std::max(hardy_eq_dev, std::abs(h.product - pi2));
      pass = pass && std::abs(h.product - pi2) < 1e-12;
    } else {
      pass = pass && h.product < pi2 - 1e-3;
    }
  }
  report(7, "decay-threshold products saturate exactly on the sharp family",
         pass,
         "max product " + fmt(max_product) + " vs 1/16, Fourier-pair equality "
             "deviation " + fmt(hardy_eq_dev) + " < 1e-12");
}

void criterion_8_riccati(const Grid& grid) {
  const double tol = 1e-3;
  const RiccatiSpec spec{Complex(0.25), Complex(0.0, 0.5), Complex(-0.25)};
  const RiccatiPotential pot = riccati_potential(spec, 1);
  const bool exact = pot.quad == Complex(-0.25) && pot.constant == Complex(0.0);
  const RiccatiCheckResult rc = riccati_gauge_check(
      spec, GaussianExponential::isotropic(1, Complex(0.75)), 0.7, grid);
  bool rejected = false;
  try {
    riccati_gauge_check({Complex(0.25), Complex(0.1, 0.5), Complex(-0.25)},
                        GaussianExponential::isotropic(1, Complex(0.75)), 0.7,
                        grid);
  } catch (const std::invalid_argument&) {
    rejected = true;
  }
  const bool pass = exact && rc.max_residual() < tol && rejected;
  report(8, "quadratic gauge solves the oscillator equation", pass,
         "potential exact, residuals " + fmt(rc.forward_residual) + "/" +
             fmt(rc.converse_residual) + " < " + fmt(tol) +
             (rejected ? ", perturbed spec rejected" : ", REJECTION MISSING"));
}

void criterion_9_wick(const Grid& grid) {
  const double coeff_tol = 1e-12, mass_tol = 1e-8;
  double worst = 0.0;
  for (int m : {1, 2}) {
    ComplexVector b(m);
    for (int a = 0; a < m; ++a) b[a] = Complex(0.3, -0.2) / (1.0 + a);
    const std::vector<GaussianExponential> states = {
        GaussianExponential::isotropic(m, Complex(0.75)),
        GaussianExponential(m, Complex(0.5, 0.3), b, Complex(0.1, -0.05))};
    for (const auto& g : states)
      for (double t : {0.3, 1.0, kPi / 2.0, 2.5})
        worst = std::max(worst, coeff_distance(
            mehler_evolve_complex_time(g, Complex(0.0, t), 0.25),
            ou_evolve(g, covariance_q(t), OuPath::Symbol)));
  }
  const Field one = sample(GaussianExponential::isotropic(1, Complex(0.0)), grid);
  const Field u = propagate_mehler(one, 1.0, 0.25, {}).field;
  const double mass_dev = (u.values - Complex(1.0)).abs().maxCoeff();
  const bool pass = worst < coeff_tol && mass_dev < mass_tol;
  report(9, "real-time flow continues to the unitary group", pass,
         "coefficient mismatch " + fmt(worst) + " < 1e-12, mass drift " +
             fmt(mass_dev) + " < 1e-8");
}

void criterion_10_determinism() {
  const fs::path base = fs::temp_directory_path() / "ouschro_acceptance";
  fs::remove_all(base);
  fs::create_directories(base);
  const auto run_with_threads = [&](const char* threads, const fs::path& out) {
    setenv("OU_SCHRO_THREADS", threads, 1);
    const std::string cmd = std::string(OUSCHRO_CLI_PATH) + " validate --out " +
                            out.string() + " >/dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
  };
  const int rc1 = run_with_threads("1", base / "t1");
  const int rc2 = run_with_threads("4", base / "t4");
  unsetenv("OU_SCHRO_THREADS");
  const auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  const std::string r1 = slurp(base / "t1" / "report.json");
  const std::string r2 = slurp(base / "t4" / "report.json");
  const bool pass = rc1 == 0 && rc2 == 0 && !r1.empty() && r1 == r2;
  report(10, "validation reports are byte-identical across thread counts",
         pass, rc1 == 0 && rc2 == 0 ? (r1 == r2 ? "reports identical"
                                                : "REPORTS DIFFER")
                                    : "validate exited nonzero");
}

}  // namespace

int main() {
  const Grid grid = make_grid(1, 512, 12.0);
  criterion_1_oracle_agreement(grid);
  criterion_2_unitarity(grid);
  criterion_3_group_law(grid);
  criterion_4_gauge_equivalence(grid);
  criterion_5_pde_residuals(grid);
  criterion_6_dispersive(grid);
  criterion_7_uncertainty_thresholds();
  criterion_8_riccati(grid);
  criterion_9_wick(grid);
  criterion_10_determinism();
  std::printf("%s\n", g_all_pass ? "acceptance: ALL CRITERIA PASS"
                                 : "acceptance: FAILURES PRESENT");
  return g_all_pass ? 0 : 1;
}
