#include "graphprod/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>

#include <json.hpp>

#include "graphprod/oracle.hpp"
#include "graphprod/wall.hpp"

namespace gp {

namespace {

using std::complex;

struct Checker {
  std::vector<CheckResult>& out;

  void le(const std::string& claim, double measured, double bound, double tol) {
    out.push_back({claim, measured <= bound + tol, measured, bound, tol});
  }
  void ge(const std::string& claim, double measured, double bound, double tol) {
    out.push_back({claim, measured >= bound - tol, measured, bound, tol});
  }
  void zero(const std::string& claim, double mismatches) {
    out.push_back({claim, mismatches == 0, mismatches, 0, 0});
  }
  void info(const std::string& claim, double measured) {
    out.push_back({claim, true, measured, measured, 0});
  }
};

int pick_radius(const SuiteOptions& o, int fallback) {
  return o.radius >= 0 ? o.radius : fallback;
}

int pick_d(const SuiteOptions& o, int fallback) {
  return o.d_max >= 0 ? o.d_max : fallback;
}

PhiTables pick_phi(const ProductSpec& spec, const SuiteOptions& o) {
  return o.phi ? *o.phi : ones_phi(spec);
}

double syllable_product_gap(const ExtensionData& data, const GroupElement& u,
                            complex<double> value) {
  complex<double> prod = 1.0;
  for (const Syllable& s : u.word()) prod *= data.vertex[s.vertex].phi[s.element];
  return std::abs(value - prod);
}

// Largest pairwise-crossing subset, exhaustively.
int max_crossing_family(const std::vector<std::vector<bool>>& cross) {
  int n = static_cast<int>(cross.size());
  int best = 0;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    best = std::max(best, static_cast<int>(cur.size()));
    for (int i = start; i < n; ++i) {
      bool ok = true;
      for (int j : cur) ok = ok && cross[i][j];
      if (!ok) continue;
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return best;
}

void suite_normal_form(const ProductSpec& spec, const SuiteOptions& opts, Checker& ck) {
  int len = opts.max_word_len >= 0 ? opts.max_word_len : 4;
  auto classes = oracle::classify_raw_words(spec, len);
  std::map<std::string, std::string> label_to_form;
  std::map<std::string, std::string> form_to_label;
  int not_constant = 0, not_injective = 0;
  for (int l = 0; l <= len; ++l) {
    for (const auto& w : oracle::raw_words(spec, l)) {
      const std::string& label = classes.at(oracle::word_key(w));
      std::string form = GroupElement::reduce(spec, w).str();
      auto [it, fresh] = label_to_form.emplace(label, form);
      if (!fresh && it->second != form) ++not_constant;
      if (fresh) {
        auto [jt, unseen] = form_to_label.emplace(form, label);
        if (!unseen) ++not_injective;
      }
    }
  }
  ck.zero("canonical form constant on rewrite classes", not_constant);
  ck.zero("distinct rewrite classes get distinct forms", not_injective);
}

void suite_remark1(const ProductSpec& spec, const SuiteOptions& opts, Checker& ck) {
  auto ball = enumerate_ball(spec, pick_radius(opts, 3), opts.max_ball);
  int mismatches = 0;
  for (const auto& a : ball) {
    for (const auto& b : ball) {
      GroupElement q = a.inverse() * b;
      for (int v = 0; v < spec.graph.vertex_count; ++v) {
        bool in_star_subgroup = true;
        for (const Syllable& s : q.word()) {
          in_star_subgroup = in_star_subgroup && spec.graph.in_star(s.vertex, v);
        }
        bool equal_index = coset_index(a, v) == coset_index(b, v);
        if (equal_index != in_star_subgroup) ++mismatches;
      }
    }
  }
  ck.zero("coset index equality matches star-subgroup membership", mismatches);
}

void suite_lemma_hg(const ProductSpec& spec, const SuiteOptions& opts, Checker& ck) {
  auto ball = enumerate_ball(spec, pick_radius(opts, 3), opts.max_ball);
  int length_mismatch = 0, pair_overflow = 0;
  for (const auto& g : ball) {
    for (const auto& h : ball) {
      Alignment al = align(g, h);
      int predicted = (h.reduced_length() - al.q - al.p) +
                      (g.reduced_length() - al.q - al.p) + al.nontrivial_amalgams;
      if ((h.inverse() * g).reduced_length() != predicted) ++length_mismatch;
      if (al.p > spec.kappa) ++pair_overflow;
    }
  }
  ck.zero("alignment reproduces |h^-1 g|_r", length_mismatch);
  ck.zero("amalgam pair count bounded by kappa", pair_overflow);
}

void suite_lemma_initial(const ProductSpec& spec, const SuiteOptions& opts, Checker& ck) {
  auto ball = enumerate_ball(spec, pick_radius(opts, 3), opts.max_ball);
  int begins_bad = 0, ends_bad = 0;
  for (const auto& g : ball) {
    std::set<int> firsts, lasts;
    for (const auto& rep : oracle::shuffle_closure(spec, g.word())) {
      if (!rep.empty()) {
        firsts.insert(rep.front().vertex);
        lasts.insert(rep.back().vertex);
      }
    }
    for (int v = 0; v < spec.graph.vertex_count; ++v) {
      if (g.begins_with(v) != (firsts.count(v) > 0)) ++begins_bad;
      if (g.ends_with(v) != (lasts.count(v) > 0)) ++ends_bad;
    }
  }
  ck.zero("begins_with matches representative enumeration", begins_bad);
  ck.zero("ends_with matches representative enumeration", ends_bad);
}

void suite_lemma_cancel(const ProductSpec& spec, const SuiteOptions& opts, Checker& ck) {
  auto ball = enumerate_ball(spec, pick_radius(opts, 2), opts.max_ball);
  GroupElement e = GroupElement::identity(spec);
  int inv_bad = 0, antihom_bad = 0, subadd_bad = 0;
  for (const auto& g : ball) {
    if (g * g.inverse() != e || g.inverse() * g != e) ++inv_bad;
    for (const auto& h : ball) {
      if ((g * h).inverse() != h.inverse() * g.inverse()) ++antihom_bad;
      if ((g * h).reduced_length() > g.reduced_length() + h.reduced_length()) ++subadd_bad;
    }
  }
  ck.zero("two-sided inverses", inv_bad);
  ck.zero("inverse anti-homomorphism", antihom_bad);
  ck.zero("length subadditivity", subadd_bad);

  std::mt19937 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  int assoc_bad = 0;
  for (int i = 0; i < 200; ++i) {
    const auto &a = ball[pick(rng)], &b = ball[pick(rng)], &c = ball[pick(rng)];
    if ((a * b) * c != a * (b * c)) ++assoc_bad;
  }
  ck.zero("associativity on sampled triples", assoc_bad);
}

void suite_lemma_dtail(const ProductSpec& spec, const SuiteOptions& opts, Checker& ck) {
  auto ball = enumerate_ball(spec, pick_radius(opts, 4), opts.max_ball);
  int d_max = pick_d(opts, 4);
  int oracle_bad = 0, bound_bad = 0;
  for (const auto& g : ball) {
    for (int d = 1; d <= d_max; ++d) {
      auto got = g.d_tail_positions(d);
      if (got != oracle::d_tail_positions_by_representatives(spec, g.word(), d)) {
        ++oracle_bad;
      }
      if (static_cast<int>(got.size()) > d * spec.kappa) ++bound_bad;
    }
  }
  ck.zero("d-tail matches representative oracle", oracle_bad);
  ck.zero("|d-tail| <= d * kappa", bound_bad);
}

void suite_walls_distance(const ProductSpec& spec, const SuiteOptions& opts, Checker& ck) {
  auto ball = enumerate_ball(spec, pick_radius(opts, 3), opts.max_ball);
  int mismatches = 0;
  for (const auto& g : ball) {
    for (const auto& h : ball) {
      if (wall_distance(g, h) != 2 * (h.inverse() * g).reduced_length()) ++mismatches;
    }
  }
  ck.zero("separating wall count equals 2|h^-1 g|_r", mismatches);
}

void suite_walls_crossing(const ProductSpec& spec, const SuiteOptions& opts, Checker& ck) {
  int radius = pick_radius(opts, 2);
  auto ball = enumerate_ball(spec, radius, opts.max_ball);
  GroupElement e = GroupElement::identity(spec);
  std::set<Wall> wall_set;
  for (const auto& g : ball) {
    for (const auto& w : separating_walls(g, e)) wall_set.insert(w);
  }
  std::vector<Wall> walls(wall_set.begin(), wall_set.end());
  int n = static_cast<int>(walls.size());
  std::vector<std::vector<bool>> cross(n, std::vector<bool>(n, false));
  int undetermined = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      CrossVerdict v = crosses(walls[i], walls[j], radius + 2);
      cross[i][j] = cross[j][i] = (v == CrossVerdict::Cross);
      if (v == CrossVerdict::ParallelUpToRadius) ++undetermined;
    }
  }
  int family = max_crossing_family(cross);
  ck.le("max pairwise-crossing family size <= kappa", family, spec.kappa, 0);
  ck.ge("a crossing family of size kappa exists", family, spec.kappa, 0);
  ck.info("wall pairs left parallel-up-to-radius", undetermined);
}

void suite_gns_gamma2(const ProductSpec& spec, const SuiteOptions& opts, Checker& ck) {
  auto labeled = [](const Eigen::MatrixXcd& m) {
    KernelMatrix km;
    km.entries = m;
    for (int i = 0; i < m.rows(); ++i) km.labels.push_back(std::to_string(i));
    return km;
  };
  Factorization id = gamma2(labeled(Eigen::MatrixXcd::Identity(6, 6)));
  ck.le("identity matrix value", std::abs(id.value - 1.0), 0, 1e-4);
  Factorization ones = gamma2(labeled(Eigen::MatrixXcd::Ones(6, 6)));
  ck.le("all-ones matrix value", std::abs(ones.value - 1.0), 0, 1e-4);

  std::mt19937 rng(opts.seed);
  std::normal_distribution<double> gauss;
  double worst_val = 0, worst_resid = std::max(id.tolerance, ones.tolerance);
  for (int trial = 0; trial < 3; ++trial) {
    int n = 5 + 5 * trial;
    Eigen::MatrixXcd v(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) v(i, j) = complex<double>(gauss(rng), gauss(rng));
    }
    Eigen::MatrixXcd gram = v * v.adjoint();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) gram(i, j) /= std::sqrt(gram(i, i).real() * gram(j, j).real());
      }
    }
    for (int i = 0; i < n; ++i) gram(i, i) = 1.0;
    Factorization f = gamma2(labeled(gram));
    worst_val = std::max(worst_val, std::abs(f.value - 1.0));
    worst_resid = std::max(worst_resid, f.tolerance);
  }
  ck.le("PSD unit-diagonal Gram value", worst_val, 0, 1e-4);
  ck.le("reconstruction residual", worst_resid, 1e-6, 0);

  double prev = 0;
  bool monotone = true;
  for (int radius = 1; radius <= 3; ++radius) {
    auto ball = enumerate_ball(spec, radius, opts.max_ball);
    int n = static_cast<int>(ball.size());
    KernelMatrix km;
    km.entries.resize(n, n);
    for (int i = 0; i < n; ++i) {
      km.labels.push_back(ball[i].str());
      for (int j = 0; j < n; ++j) {
        km.entries(i, j) = std::exp(-(double)(ball[j].inverse() * ball[i]).reduced_length());
      }
    }
    double val = gamma2(km).value;
    monotone = monotone && (val >= prev - 1e-6);
    prev = val;
  }
  ck.zero("restriction monotonicity on nested balls", monotone ? 0 : 1);
}

void suite_lemma_approx(const ProductSpec& spec, const SuiteOptions& opts, Checker& ck) {
  PhiTables phi = pick_phi(spec, opts);
  ExtensionData data = prepare_vertex_data(spec, phi, KernelMode::cb);
  double eps = data.epsilon, root4 = std::pow(eps, 0.25);
  double worst_c = 0, worst_d = 1e300, worst_drift = 0, worst_diag = 0, worst_norm = 0;
  for (const auto& vd : data.vertex) {
    int o = static_cast<int>(vd.phi.size());
    for (int g = 0; g < o; ++g) {
      worst_d = std::min(worst_d, vd.D[g]);
      worst_drift = std::max({worst_drift, (vd.alpha[g] - vd.omega[g]).squaredNorm(),
                              (vd.beta[g] - vd.omega[g]).squaredNorm()});
      worst_diag = std::max(worst_diag, std::abs(vd.beta[g].dot(vd.alpha[g]) - 1.0));
      worst_norm = std::max({worst_norm, vd.alpha[g].squaredNorm(), vd.beta[g].squaredNorm()});
      for (int h = 0; h < o; ++h) {
        worst_c = std::max({worst_c, std::abs(vd.Calpha(g, h)), std::abs(vd.Cbeta(g, h))});
      }
    }
  }
  ck.info("shared epsilon", eps);
  ck.le("|C| <= 8 eps^{1/4}", worst_c, 8 * root4, 1e-10);
  ck.ge("D >= eps^{1/4} / 4", worst_d, root4 / 4, 1e-10);
  ck.le("||alpha - omega||^2 and ||beta - omega||^2 <= eps", worst_drift, eps, 1e-10);
  ck.le("kernel diagonal <alpha, beta> = 1", worst_diag, 0, 1e-8);
  ck.le("||alpha||^2, ||beta||^2 <= 1 + eps", worst_norm, 1 + eps, 1e-9);
}

void suite_gpextension(const ProductSpec& spec, const SuiteOptions& opts, Checker& ck) {
  PhiTables phi = pick_phi(spec, opts);
  ExtensionData data = prepare_vertex_data(spec, phi, KernelMode::cb);
  auto inner = [](const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
    return y.dot(x);
  };
  double pair_gap = 0, amb_norm_gap = 0, corr_norm_gap = 0;
  for (const auto& vd : data.vertex) {
    int o = static_cast<int>(vd.phi.size());
    for (int g = 0; g < o; ++g) {
      Eigen::VectorXcd ca = corrected_alpha_vector(vd, g);
      Eigen::VectorXcd amb_g = ambient_vector(vd, g);
      pair_gap = std::max(pair_gap, std::abs(inner(ca, ambient_vector(vd, 0)) -
                                             inner(vd.alpha[g], vd.beta[0])));
      pair_gap = std::max(pair_gap,
                          std::abs(inner(ca, amb_g) - inner(vd.alpha[g], vd.beta[g])));
      Eigen::VectorXcd cb = corrected_beta_vector(vd, g);
      pair_gap = std::max(pair_gap, std::abs(inner(ambient_vector(vd, 0), cb) -
                                             inner(vd.alpha[0], vd.beta[g])));
      pair_gap = std::max(pair_gap,
                          std::abs(inner(amb_g, cb) - inner(vd.alpha[g], vd.beta[g])));
      for (int h = 0; h < o; ++h) {
        pair_gap = std::max(pair_gap, std::abs(inner(ca, corrected_beta_vector(vd, h)) -
                                               inner(vd.alpha[g], vd.beta[h])));
      }
      amb_norm_gap = std::max(amb_norm_gap, std::abs(amb_g.norm() - 1.0));
      double expect = vd.alpha[g].squaredNorm() + std::norm(vd.Calpha(g, g)) +
                      std::norm(vd.Calpha(g, 0));
      corr_norm_gap = std::max(corr_norm_gap, std::abs(ca.squaredNorm() - expect));
    }
  }
  ck.le("pairing identities", pair_gap, 0, 1e-10);
  ck.le("ambient vectors are unit", amb_norm_gap, 0, 1e-10);
  ck.le("corrected alpha norm decomposition", corr_norm_gap, 0, 1e-10);

  auto ball = enumerate_ball(spec, pick_radius(opts, 3), opts.max_ball);
  GroupElement e = GroupElement::identity(spec);
  int d_cap = pick_d(opts, 3);
  double prod_gap = 0, norm_excess = 0, omega_gap = 0, diag_gap = 0;
  for (const auto& g : ball) {
    int d = g.reduced_length();
    prod_gap = std::max(prod_gap,
                        syllable_product_gap(data, g, phi_d(data, g, e, d)));
    for (int dd = 0; dd <= d_cap; ++dd) {
      double bound = std::pow(1 + 129 * std::sqrt(data.epsilon),
                              dd * spec.kappa / 2.0);
      norm_excess = std::max(norm_excess,
                             embed(data, g, Role::alpha_hat, dd).norm() - bound);
    }
    omega_gap = std::max(omega_gap, std::abs(psi(data, g, g) - 1.0));
    if (d <= d_cap) {
      diag_gap = std::max(diag_gap, std::abs(phi_d(data, g, g, d_cap) - 1.0));
    }
  }
  ck.le("phi_d(g, e) equals the syllable product at d = |g|_r", prod_gap, 0, 1e-9);
  ck.le("||alpha_hat|| <= (1 + 129 sqrt(eps))^{d kappa / 2}", norm_excess, 0, 1e-9);
  ck.le("omega_hat is unit", omega_gap, 0, 1e-10);
  ck.le("<alpha_hat, beta_hat> = 1 when |g|_r <= d", diag_gap, 0, 1e-9);
}

void suite_lemma_invariance(const ProductSpec& spec, const SuiteOptions& opts, Checker& ck) {
  PhiTables phi = pick_phi(spec, opts);
  ExtensionData data = prepare_vertex_data(spec, phi, KernelMode::cb);
  auto ball = enumerate_ball(spec, pick_radius(opts, 3), opts.max_ball);
  GroupElement e = GroupElement::identity(spec);
  int d_cap = pick_d(opts, 3);
  double gap = 0;
  for (const auto& g : ball) {
    for (const auto& h : ball) {
      GroupElement u = h.inverse() * g;
      int d = u.reduced_length();
      if (d > d_cap) continue;
      gap = std::max(gap, std::abs(phi_d(data, g, h, d) - phi_d(data, u, e, d)));
    }
  }
  ck.le("phi_d(g, h) = phi_d(h^-1 g, e) at d = |h^-1 g|_r", gap, 0, 1e-9);

  int slot_mismatch = 0;
  for (const auto& g : ball) {
    std::set<std::string> canonical_slots;
    bool first = true;
    for (const auto& rep : oracle::shuffle_closure(spec, g.word())) {
      std::set<std::string> slots;
      GroupElement prefix = e;
      for (const Syllable& s : rep) {
        CosetIndex idx = coset_index(prefix, s.vertex);
        slots.insert(idx.rep.str() + "#" + std::to_string(idx.vertex) + "#" +
                     std::to_string(s.element));
        prefix = prefix * GroupElement::reduce(spec, {s});
      }
      if (first) {
        canonical_slots = std::move(slots);
        first = false;
      } else if (slots != canonical_slots) {
        ++slot_mismatch;
      }
    }
  }
  ck.zero("slot assignment independent of representative", slot_mismatch);
}

void suite_lemma_cbpd(const ProductSpec& spec, const SuiteOptions& opts, Checker& ck) {
  PhiTables phi = pick_phi(spec, opts);
  ExtensionData data = prepare_vertex_data(spec, phi, KernelMode::cb);
  auto ball = enumerate_ball(spec, pick_radius(opts, 3), opts.max_ball);
  int n = static_cast<int>(ball.size());
  int d_cap = pick_d(opts, 3);

  Eigen::MatrixXcd psi_m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) psi_m(i, j) = psi(data, ball[i], ball[j]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((psi_m + psi_m.adjoint()) * 0.5);
  ck.ge("Psi ball Gram minimum eigenvalue", es.eigenvalues().minCoeff(), 0, 1e-8);

  Gamma2Options g2;
  g2.max_projection_iters = 1500;
  g2.max_bisection_steps = 14;
  double excess = 0;
  for (int d = 0; d <= d_cap; ++d) {
    KernelMatrix km;
    km.entries.resize(n, n);
    for (int i = 0; i < n; ++i) {
      km.labels.push_back(ball[i].str());
      for (int j = 0; j < n; ++j) {
        km.entries(i, j) = phi_d(data, ball[i], ball[j], d) - psi_m(i, j);
      }
    }
    double val = gamma2(km, g2).value;
    excess = std::max(excess, val - q_bound(d, data.epsilon, spec.kappa));
  }
  ck.le("gamma2(phi_d - Psi) <= q(d, eps)", excess, 0, 1e-4);

  double vec_excess = 0;
  for (const auto& g : ball) {
    Embedding a = embed(data, g, Role::alpha_hat, d_cap);
    Embedding w = embed(data, g, Role::omega_hat, d_cap);
    double a2 = a.norm() * a.norm();
    double dist2 = a2 + 1.0 - 2 * std::real(pair_embeddings(data, a, w));
    vec_excess = std::max(vec_excess, dist2 - (a2 - 1.0));
  }
  ck.le("||alpha_hat - omega_hat||^2 <= ||alpha_hat||^2 - 1", vec_excess, 0, 1e-8);
}

void suite_pd_free(const ProductSpec& spec, const SuiteOptions& opts, Checker& ck) {
  PhiTables phi = pick_phi(spec, opts);
  ExtensionData data = prepare_vertex_data(spec, phi, KernelMode::positive_definite);
  auto ball = enumerate_ball(spec, pick_radius(opts, 4), opts.max_ball);
  GroupElement e = GroupElement::identity(spec);
  int n = static_cast<int>(ball.size());
  Eigen::MatrixXcd gram(n, n);
  double prod_gap = 0, invariance_gap = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      gram(i, j) = pd_free_extension(data, ball[i], ball[j]);
      GroupElement u = ball[j].inverse() * ball[i];
      prod_gap = std::max(prod_gap, syllable_product_gap(data, u, gram(i, j)));
      invariance_gap =
          std::max(invariance_gap, std::abs(gram(i, j) - pd_free_extension(data, u, e)));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((gram + gram.adjoint()) * 0.5);
  ck.ge("extension ball Gram minimum eigenvalue", es.eigenvalues().minCoeff(), 0, 1e-8);
  ck.le("values equal syllable products", prod_gap, 0, 1e-10);
  ck.le("kernel depends on h^-1 g only", invariance_gap, 0, 1e-12);
}

void suite_main_theorem(const ProductSpec& spec, const SuiteOptions& opts, Checker& ck) {
  PhiTables phi = pick_phi(spec, opts);
  int radius = pick_radius(opts, 2);
  auto S = enumerate_ball(spec, radius, opts.max_ball);
  ApproxIdReport rep = approximate_identity(spec, phi, S, opts.eps, radius + 2);
  double worst = 0;
  for (double v : rep.one_minus_F) worst = std::max(worst, v);
  ck.le("|1 - F(g)| <= eps on S", worst, opts.eps, 0);
  ck.le("gamma2(F) <= 1 + eps", rep.gamma2_F, 1 + opts.eps, 1e-3);

  // The exponential-of-distance kernel itself; the wall metric has negative
  // type, so this Gram should be PSD on every ball.
  int n = rep.F.size();
  auto ball = enumerate_ball(spec, radius + 2, opts.max_ball);
  Eigen::MatrixXd expm(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int d = (ball[j].inverse() * ball[i]).reduced_length();
      expm(i, j) = std::exp(-static_cast<double>(d) / rep.r);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(expm);
  ck.ge("exp(-|h^-1 g|_r / r) ball Gram minimum eigenvalue", es.eigenvalues().minCoeff(),
        0, 1e-8);
  ck.info("chosen r", rep.r);
  ck.info("chosen M", rep.M);
  ck.info("chosen mu", rep.mu);
}

}  // namespace

const std::vector<std::string> kSuiteNames = {
    "normal-form",    "remark1",        "lemma-hg",       "lemma-initial",
    "lemma-cancel",   "lemma-dtail",    "walls-distance", "walls-crossing",
    "gns-gamma2",     "lemma-approx",   "gpextension",    "lemma-invariance",
    "lemma-cbpd",     "pd-free",        "main-theorem"};

bool SuiteReport::passed() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::string SuiteReport::to_json() const {
  nlohmann::json j;
  j["schema"] = "suite-report/1";
  j["suite"] = suite;
  j["instance"] = instance;
  j["passed"] = passed();
  j["runtime_seconds"] = runtime_seconds;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"claim", c.claim},
                           {"pass", c.pass},
                           {"measured", c.measured},
                           {"bound", c.bound},
                           {"tolerance", c.tolerance}});
  }
  return j.dump(2);
}

SuiteReport run_suite(const std::string& name, const ProductSpec& spec,
                      const SuiteOptions& opts) {
  SuiteReport rep;
  rep.suite = name;
  rep.instance = spec.name;
  Checker ck{rep.checks};
  auto start = std::chrono::steady_clock::now();
  if (name == "normal-form") {
    suite_normal_form(spec, opts, ck);
  } else if (name == "remark1") {
    suite_remark1(spec, opts, ck);
  } else if (name == "lemma-hg") {
    suite_lemma_hg(spec, opts, ck);
  } else if (name == "lemma-initial") {
    suite_lemma_initial(spec, opts, ck);
  } else if (name == "lemma-cancel") {
    suite_lemma_cancel(spec, opts, ck);
  } else if (name == "lemma-dtail") {
    suite_lemma_dtail(spec, opts, ck);
  } else if (name == "walls-distance") {
    suite_walls_distance(spec, opts, ck);
  } else if (name == "walls-crossing") {
    suite_walls_crossing(spec, opts, ck);
  } else if (name == "gns-gamma2") {
    suite_gns_gamma2(spec, opts, ck);
  } else if (name == "lemma-approx") {
    suite_lemma_approx(spec, opts, ck);
  } else if (name == "gpextension") {
    suite_gpextension(spec, opts, ck);
  } else if (name == "lemma-invariance") {
    suite_lemma_invariance(spec, opts, ck);
  } else if (name == "lemma-cbpd") {
    suite_lemma_cbpd(spec, opts, ck);
  } else if (name == "pd-free") {
    suite_pd_free(spec, opts, ck);
  } else if (name == "main-theorem") {
    suite_main_theorem(spec, opts, ck);
  } else {
    throw SpecError("unknown suite: " + name);
  }
  rep.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace gp
