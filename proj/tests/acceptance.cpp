// End-to-end acceptance run: eleven numbered checks over the four reference
// instances, one verdict line each.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "graphprod/gamma2.hpp"
#include "graphprod/kernels.hpp"
#include "graphprod/verify.hpp"
#include "instances.hpp"

namespace {

int failures = 0;

void verdict(int criterion, bool pass, const std::string& text) {
  std::printf("%s criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, text.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

bool suites_pass(const std::vector<gp::SuiteReport>& reps, std::string& detail) {
  bool ok = true;
  for (const auto& rep : reps) {
    for (const auto& c : rep.checks) {
      if (!c.pass) {
        ok = false;
        detail += " [" + rep.instance + ": " + c.claim + " measured " +
                  std::to_string(c.measured) + "]";
      }
    }
  }
  return ok;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  gp::ProductSpec A = inst::pentagon();
  gp::ProductSpec B = inst::path_323();
  gp::ProductSpec C = inst::free_23();
  gp::ProductSpec D = inst::triangle_222();

  // Perturbed tables used by the kernel-side criteria on (B): the middle Z2
  // factor has gamma2 = 1.03, so the measured epsilon is 0.03.
  gp::PhiTables phiB{{1.0, 0.9, 0.9}, {1.0, 1.03}, {1.0, 0.85, 0.85}};
  gp::PhiTables phiA{{1.0, 0.9}, {1.0, 0.9}, {1.0, 0.9}, {1.0, 0.9}, {1.0, 0.9}};

  {  // 1: canonical forms versus the rewrite-closure oracle, raw length <= 6.
    auto t0 = std::chrono::steady_clock::now();
    gp::SuiteOptions o;
    o.max_word_len = 6;
    std::string detail;
    bool ok = suites_pass({gp::run_suite("normal-form", A, o),
                           gp::run_suite("normal-form", B, o)},
                          detail);
    double dt = elapsed(t0);
    ok = ok && dt < 120;
    verdict(1, ok, "normal form matches rewrite closure on (A),(B), length <= 6 (" +
                       std::to_string(dt) + " s)" + detail);
  }

  {  // 2: wall count 2|h^-1 g|_r on all four instances, radius 3.
    auto t0 = std::chrono::steady_clock::now();
    gp::SuiteOptions o;
    o.radius = 3;
    std::string detail;
    bool ok = suites_pass(
        {gp::run_suite("walls-distance", A, o), gp::run_suite("walls-distance", B, o),
         gp::run_suite("walls-distance", C, o), gp::run_suite("walls-distance", D, o)},
        detail);
    double dt = elapsed(t0);
    ok = ok && dt < 300;
    verdict(2, ok, "wall distance = 2|h^-1 g|_r on (A)-(D), radius 3 (" +
                       std::to_string(dt) + " s)" + detail);
  }

  {  // 3: pairwise-crossing families capped by kappa.
    gp::SuiteOptions o;
    o.radius = 2;
    std::string detail;
    bool ok = suites_pass({gp::run_suite("walls-crossing", A, o),
                           gp::run_suite("walls-crossing", D, o)},
                          detail);
    verdict(3, ok, "crossing families: size <= 2 on (A), exactly 3 on (D)" + detail);
  }

  {  // 4: d-tail bound and oracle, radius 4, d <= 4.
    gp::SuiteOptions o;
    o.radius = 4;
    o.d_max = 4;
    std::string detail;
    bool ok = suites_pass(
        {gp::run_suite("lemma-dtail", A, o), gp::run_suite("lemma-dtail", B, o),
         gp::run_suite("lemma-dtail", C, o), gp::run_suite("lemma-dtail", D, o)},
        detail);
    verdict(4, ok, "|d-tail| <= d*kappa and oracle membership on (A)-(D)" + detail);
  }

  {  // 5: gamma2 solver on stock matrices and nested balls.
    gp::SuiteOptions o;
    std::string detail;
    bool ok = suites_pass({gp::run_suite("gns-gamma2", B, o)}, detail);
    verdict(5, ok, "gamma2: identity/ones/PSD Gram = 1 +- 1e-4, residual <= 1e-6" + detail);
  }

  {  // 6: renormalization constants on (B) with measured epsilon 0.03.
    gp::SuiteOptions o;
    o.phi = &phiB;
    std::string detail;
    auto rep = gp::run_suite("lemma-approx", B, o);
    auto data = gp::prepare_vertex_data(B, phiB, gp::KernelMode::cb);
    bool eps_ok = data.epsilon >= 1e-4 && data.epsilon <= 0.1;
    bool ok = suites_pass({rep}, detail) && eps_ok;
    verdict(6, ok, "|C| <= 8 eps^{1/4}, D >= eps^{1/4}/4, drift <= eps (eps = " +
                       std::to_string(data.epsilon) + ")" + detail);
  }

  {  // 7: extension product formula, invariance and the norm bound, d <= 3.
    gp::SuiteOptions o;
    o.radius = 3;
    o.d_max = 3;
    gp::SuiteOptions oa = o;
    oa.phi = &phiA;
    gp::SuiteOptions ob = o;
    ob.phi = &phiB;
    std::string detail;
    bool ok = suites_pass(
        {gp::run_suite("gpextension", A, oa), gp::run_suite("gpextension", B, ob),
         gp::run_suite("lemma-invariance", A, oa), gp::run_suite("lemma-invariance", B, ob)},
        detail);
    verdict(7, ok, "phi_d invariance <= 1e-9, syllable products, norm bound on (A),(B)" +
                       detail);
  }

  {  // 8: gamma2(phi_d - Psi) <= q(d, eps) and Psi PSD, radius 3, d <= 3.
    gp::SuiteOptions o;
    o.radius = 3;
    o.d_max = 3;
    o.phi = &phiB;
    std::string detail;
    bool ok = suites_pass({gp::run_suite("lemma-cbpd", B, o)}, detail);
    verdict(8, ok, "gamma2(phi_d - Psi) <= q(d, eps) + 1e-4, Psi Gram PSD on (B)" + detail);
  }

  {  // 9: positive-definite free-product mode on (C), radius 4.
    gp::PhiTables phiC{{1.0, 0.5}, {1.0, 0.4, 0.4}};
    gp::SuiteOptions o;
    o.radius = 4;
    o.phi = &phiC;
    std::string detail;
    bool ok = suites_pass({gp::run_suite("pd-free", C, o)}, detail);
    verdict(9, ok, "free-product extension: Gram PSD, values = syllable products on (C)" +
                       detail);
  }

  {  // 10: approximate identity end to end on (B).
    auto t0 = std::chrono::steady_clock::now();
    gp::SuiteOptions o;
    o.radius = 2;
    o.eps = 0.25;
    std::string detail;
    bool ok = suites_pass({gp::run_suite("main-theorem", B, o)}, detail);
    double dt = elapsed(t0);
    ok = ok && dt < 900;
    verdict(10, ok, "|1 - F| <= 0.25 on S, gamma2(F) <= 1.25 + 1e-3 on (B) (" +
                        std::to_string(dt) + " s)" + detail);
  }

  {  // 11: report-only tabulation of the distance-indicator norms on (A).
    auto ball = gp::enumerate_ball(A, 4);
    int n = static_cast<int>(ball.size());
    Eigen::MatrixXi dist(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        dist(i, j) = (ball[j].inverse() * ball[i]).reduced_length();
      }
    }
    gp::Gamma2Options opts;
    opts.max_projection_iters = 600;
    opts.max_bisection_steps = 8;
    std::string table;
    bool finite = true;
    for (int d = 0; d <= 3; ++d) {
      gp::KernelMatrix chi;
      chi.entries = Eigen::MatrixXcd::Zero(n, n);
      for (int i = 0; i < n; ++i) {
        chi.labels.push_back(ball[i].str());
        for (int j = 0; j < n; ++j) {
          if (dist(i, j) == d) chi.entries(i, j) = 1.0;
        }
      }
      double v = gp::gamma2(chi, opts).value;
      finite = finite && std::isfinite(v);
      table += " P(" + std::to_string(d) + ")=" + std::to_string(v);
    }
    verdict(11, finite, "gamma2(chi_d) on (A) radius-4 ball (report only):" + table);
  }

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all 11 criteria passed\n");
  return 0;
}
