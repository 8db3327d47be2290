#include "graphprod/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gp {

namespace {

using std::complex;
using VectorXcd = Eigen::VectorXcd;

constexpr double kEpsilonFloor = 1e-4;

// <x, y> = sum_k x_k conj(y_k); Eigen's dot conjugates its callee.
complex<double> inner(const VectorXcd& x, const VectorXcd& y) { return y.dot(x); }

KernelMatrix vertex_kernel(const VertexGroup& grp,
                           const std::vector<complex<double>>& phi) {
  KernelMatrix m;
  m.entries.resize(grp.order, grp.order);
  for (int g = 0; g < grp.order; ++g) {
    m.labels.push_back(std::to_string(g));
    for (int h = 0; h < grp.order; ++h) {
      m.entries(g, h) = phi[grp.mul(grp.inverse(h), g)];
    }
  }
  return m;
}

}  // namespace

PhiTables ones_phi(const ProductSpec& spec) {
  PhiTables phi;
  for (const auto& grp : spec.groups) {
    phi.emplace_back(grp.order, complex<double>(1.0, 0.0));
  }
  return phi;
}

PhiTables parse_phi_tables(const ProductSpec& spec, const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("bad phi table JSON: ") + e.what());
  }
  PhiTables phi = ones_phi(spec);
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    int v = std::stoi(it.key());
    if (v < 0 || v >= spec.graph.vertex_count) throw SpecError("phi table: bad vertex");
    for (auto jt = it.value().begin(); jt != it.value().end(); ++jt) {
      int g = std::stoi(jt.key());
      if (g < 0 || g >= spec.groups[v].order) throw SpecError("phi table: bad element");
      const auto& pair = jt.value();
      phi[v][g] = complex<double>(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
  }
  return phi;
}

ExtensionData prepare_vertex_data(const ProductSpec& spec, const PhiTables& phi,
                                  KernelMode mode) {
  if (phi.size() != spec.groups.size()) throw SpecError("phi table count mismatch");
  ExtensionData data;
  data.spec = &spec;
  data.mode = mode;

  for (int v = 0; v < spec.graph.vertex_count; ++v) {
    const auto& grp = spec.groups[v];
    if (static_cast<int>(phi[v].size()) != grp.order) {
      throw SpecError("phi table size mismatch at vertex " + std::to_string(v));
    }
    if (std::abs(phi[v][0] - complex<double>(1.0)) > 1e-12) {
      throw SpecError("phi(identity) must be 1 at vertex " + std::to_string(v));
    }
    VertexFunctionData vd;
    vd.vertex = v;
    vd.phi = phi[v];
    KernelMatrix m = vertex_kernel(grp, phi[v]);
    if (mode == KernelMode::positive_definite) {
      vd.fact = pd_factor(m);
    } else {
      Gamma2Options opts;
      opts.polish = true;
      vd.fact = gamma2(m, opts);
    }
    vd.alpha = vd.fact.alpha;
    vd.beta = vd.fact.beta;
    vd.hdim = static_cast<int>(vd.alpha[0].size());
    double raised = std::max({vd.fact.value - 1.0, vd.fact.max_alpha_norm2() - 1.0,
                              vd.fact.max_beta_norm2() - 1.0, 0.0});
    // Excesses at roundoff scale are measurement noise, not kernel defect.
    if (raised < 1e-12) raised = 0;
    data.epsilon_raw = std::max(data.epsilon_raw, raised);
    data.vertex.push_back(std::move(vd));
  }

  if (mode == KernelMode::positive_definite) {
    data.epsilon = 0;
    return data;
  }

  data.epsilon = std::max(data.epsilon_raw, kEpsilonFloor);
  double eps = data.epsilon;
  for (auto& vd : data.vertex) {
    int o = static_cast<int>(vd.phi.size());
    double scale = 2.0 + std::sqrt(2.0 * eps);
    for (int g = 0; g < o; ++g) {
      VectorXcd w = (vd.alpha[g] + vd.beta[g]) / scale;
      vd.D.push_back(std::sqrt(std::max(0.0, (1.0 - w.squaredNorm()) / 2.0)));
      vd.omega.push_back(std::move(w));
    }
    vd.Calpha.resize(o, o);
    vd.Cbeta.resize(o, o);
    for (int g = 0; g < o; ++g) {
      for (int h = 0; h < o; ++h) {
        vd.Calpha(g, h) =
            (inner(vd.alpha[g], vd.beta[h]) - inner(vd.alpha[g], vd.omega[h])) / vd.D[h];
        vd.Cbeta(g, h) =
            (inner(vd.alpha[h], vd.beta[g]) - inner(vd.omega[h], vd.beta[g])) / vd.D[h];
      }
    }
  }
  return data;
}

CosetIndex coset_index(const GroupElement& prefix, int vertex) {
  const ProductSpec& spec = prefix.spec();
  GroupElement rep = prefix;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    const auto& w = rep.word();
    for (std::size_t i = w.size(); i-- > 0;) {
      if (!spec.graph.in_star(w[i].vertex, vertex)) continue;
      bool movable = true;
      for (std::size_t j = i + 1; j < w.size() && movable; ++j) {
        movable = spec.graph.adjacent(w[i].vertex, w[j].vertex);
      }
      if (!movable) continue;
      auto trimmed = w;
      trimmed.erase(trimmed.begin() + static_cast<std::ptrdiff_t>(i));
      rep = GroupElement::reduce(spec, std::move(trimmed));
      stripped = true;
      break;
    }
  }
  return CosetIndex{rep, vertex};
}

VectorXcd ambient_vector(const VertexFunctionData& vd, int elem) {
  VectorXcd z = VectorXcd::Zero(vd.hdim + 4);
  z.head(vd.hdim) = vd.omega[elem];
  if (elem == 0) {
    z[vd.hdim + 2] = z[vd.hdim + 3] = vd.D[0];
  } else {
    z[vd.hdim] = z[vd.hdim + 1] = vd.D[elem];
  }
  return z;
}

VectorXcd corrected_alpha_vector(const VertexFunctionData& vd, int elem) {
  VectorXcd z = VectorXcd::Zero(vd.hdim + 4);
  z.head(vd.hdim) = vd.alpha[elem];
  z[vd.hdim] = vd.Calpha(elem, elem);
  z[vd.hdim + 2] = vd.Calpha(elem, 0);
  return z;
}

VectorXcd corrected_beta_vector(const VertexFunctionData& vd, int elem) {
  VectorXcd z = VectorXcd::Zero(vd.hdim + 4);
  z.head(vd.hdim) = vd.beta[elem];
  z[vd.hdim + 1] = std::conj(vd.Cbeta(elem, elem));
  z[vd.hdim + 3] = std::conj(vd.Cbeta(elem, 0));
  return z;
}

VectorXcd vacuum_vector(const ExtensionData& data, int vertex) {
  const auto& vd = data.vertex[vertex];
  if (data.mode == KernelMode::positive_definite) return vd.alpha[0];
  return ambient_vector(vd, 0);
}

double Embedding::norm() const {
  double n2 = 1.0;
  for (const auto& [idx, vec] : slots) n2 *= vec.squaredNorm();
  return std::sqrt(n2);
}

Embedding embed(const ExtensionData& data, const GroupElement& g, Role role, int d) {
  const auto& w = g.word();
  std::vector<bool> tail(w.size(), false);
  if (role != Role::omega_hat && data.mode == KernelMode::cb) {
    for (int i : g.d_tail_positions(d)) tail[static_cast<std::size_t>(i)] = true;
  }
  std::map<CosetIndex, VectorXcd> slots;
  GroupElement prefix = GroupElement::identity(*data.spec);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Syllable& s = w[i];
    const auto& vd = data.vertex[s.vertex];
    VectorXcd vec;
    if (data.mode == KernelMode::positive_definite) {
      vec = vd.alpha[s.element];
    } else if (role == Role::alpha_hat && tail[i]) {
      vec = corrected_alpha_vector(vd, s.element);
    } else if (role == Role::beta_hat && tail[i]) {
      vec = corrected_beta_vector(vd, s.element);
    } else {
      vec = ambient_vector(vd, s.element);
    }
    CosetIndex idx = coset_index(prefix, s.vertex);
    if (!slots.emplace(std::move(idx), std::move(vec)).second) {
      throw std::logic_error("coset index collision within one element");
    }
    prefix = prefix * GroupElement::reduce(*data.spec, {s});
  }
  Embedding e;
  e.slots.assign(slots.begin(), slots.end());
  return e;
}

complex<double> pair_embeddings(const ExtensionData& data, const Embedding& x,
                                const Embedding& y) {
  complex<double> prod = 1.0;
  std::size_t i = 0, j = 0;
  while (i < x.slots.size() || j < y.slots.size()) {
    if (j == y.slots.size() ||
        (i < x.slots.size() && x.slots[i].first < y.slots[j].first)) {
      prod *= inner(x.slots[i].second, vacuum_vector(data, x.slots[i].first.vertex));
      ++i;
    } else if (i == x.slots.size() || y.slots[j].first < x.slots[i].first) {
      prod *= inner(vacuum_vector(data, y.slots[j].first.vertex), y.slots[j].second);
      ++j;
    } else {
      prod *= inner(x.slots[i].second, y.slots[j].second);
      ++i;
      ++j;
    }
  }
  return prod;
}

complex<double> phi_d(const ExtensionData& data, const GroupElement& g,
                      const GroupElement& h, int d) {
  return pair_embeddings(data, embed(data, g, Role::alpha_hat, d),
                         embed(data, h, Role::beta_hat, d));
}

complex<double> psi(const ExtensionData& data, const GroupElement& g,
                    const GroupElement& h) {
  return pair_embeddings(data, embed(data, g, Role::omega_hat, 0),
                         embed(data, h, Role::omega_hat, 0));
}

complex<double> pd_free_extension(const ExtensionData& data, const GroupElement& g,
                                  const GroupElement& h) {
  if (data.mode != KernelMode::positive_definite) {
    throw SpecError("pd_free_extension requires positive_definite mode data");
  }
  return pair_embeddings(data, embed(data, g, Role::alpha_hat, 0),
                         embed(data, h, Role::alpha_hat, 0));
}

double q_bound(int n, double x, int kappa) {
  double nk = static_cast<double>(n) * kappa;
  return 2.0 * std::sqrt(129.0 * nk) * std::pow(1.0 + 129.0 * std::sqrt(x), nk) *
         std::pow(x, 0.25);
}

std::string ApproxIdReport::to_json() const {
  nlohmann::json j;
  j["schema"] = "approx-id-report/1";
  j["N"] = N;
  j["delta"] = delta;
  j["r"] = r;
  j["M"] = M;
  j["mu"] = mu;
  j["epsilon_used"] = epsilon_used;
  j["epsilon_raw"] = epsilon_raw;
  j["P"] = P;
  j["one_minus_F"] = one_minus_F;
  j["gamma2_F"] = gamma2_F;
  return j.dump(2);
}

ApproxIdReport approximate_identity(const ProductSpec& spec, const PhiTables& phi,
                                    const std::vector<GroupElement>& S, double eps,
                                    int check_radius) {
  if (S.empty()) throw SpecError("approximate_identity: S must be nonempty");
  if (eps <= 0) throw SpecError("approximate_identity: eps must be positive");

  ExtensionData data = prepare_vertex_data(spec, phi, KernelMode::cb);
  ApproxIdReport rep;
  rep.epsilon_used = data.epsilon;
  rep.epsilon_raw = data.epsilon_raw;

  for (const auto& g : S) rep.N = std::max(rep.N, g.reduced_length());
  rep.delta = std::log1p(eps) / (rep.N + 1);
  rep.r = 1;
  while (std::abs(1.0 - std::exp(-static_cast<double>(rep.N) / rep.r)) >= rep.delta) {
    ++rep.r;
  }

  std::vector<GroupElement> ball = enumerate_ball(spec, check_radius);
  int n = static_cast<int>(ball.size());
  Eigen::MatrixXi dist(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      dist(i, j) = (ball[j].inverse() * ball[i]).reduced_length();
    }
  }

  // Measured multiplier norms of the distance indicators on the check ball.
  int d_max = 2 * check_radius;
  Gamma2Options chi_opts;
  chi_opts.max_projection_iters = 600;
  chi_opts.max_bisection_steps = 8;
  for (int d = 0; d <= d_max; ++d) {
    KernelMatrix chi;
    chi.entries = Eigen::MatrixXcd::Zero(n, n);
    bool any = false;
    for (int i = 0; i < n; ++i) {
      chi.labels.push_back(ball[i].str());
      for (int j = 0; j < n; ++j) {
        if (dist(i, j) == d) {
          chi.entries(i, j) = 1.0;
          any = true;
        }
      }
    }
    rep.P.push_back(any ? gamma2(chi, chi_opts).value : 0.0);
  }

  // Truncation point: grow M from N until the discarded tail of the series
  // is within eps/2 as measured on the check window.
  auto tail_mass = [&](int m) {
    double t = 0;
    for (int d = m + 1; d <= d_max; ++d) t += std::exp(-static_cast<double>(d) / rep.r) * rep.P[d];
    return t;
  };
  rep.M = rep.N;
  while (rep.M < d_max && tail_mass(rep.M) > eps / 2) ++rep.M;

  double kept_mass = 0;
  for (int d = 0; d <= rep.M && d <= d_max; ++d) {
    kept_mass += std::exp(-static_cast<double>(d) / rep.r) * rep.P[d];
  }
  rep.mu = 1.0;
  while (q_bound(rep.M, rep.mu, spec.kappa) * kept_mass > eps / 2) {
    rep.mu /= 2;
    if (rep.mu < 1e-300) {
      throw SolverError("approximate_identity: no admissible mu above floor");
    }
  }
  if (data.epsilon_raw > rep.mu) {
    throw SolverError(
        "approximate_identity: no admissible mu above floor (measured epsilon " +
        std::to_string(data.epsilon_raw) + " exceeds " + std::to_string(rep.mu) + ")");
  }

  rep.F.entries = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) rep.F.labels.push_back(ball[i].str());
  std::map<std::pair<int, int>, Embedding> cache_a, cache_b;  // (d, ball index)
  auto emb = [&](std::map<std::pair<int, int>, Embedding>& cache, Role role, int d,
                 int i) -> const Embedding& {
    auto key = std::make_pair(d, i);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, embed(data, ball[i], role, d)).first;
    return it->second;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int d = dist(i, j);
      if (d > rep.M) continue;
      complex<double> val = pair_embeddings(data, emb(cache_a, Role::alpha_hat, d, i),
                                            emb(cache_b, Role::beta_hat, d, j));
      rep.F.entries(i, j) = std::exp(-static_cast<double>(d) / rep.r) * val;
    }
  }

  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) index[ball[i].str()] = i;
  int e_idx = index.at(GroupElement::identity(spec).str());
  for (const auto& g : S) {
    auto it = index.find(g.str());
    if (it == index.end()) throw SpecError("approximate_identity: S exceeds check ball");
    rep.one_minus_F.push_back(std::abs(1.0 - rep.F.entries(it->second, e_idx)));
  }
  rep.gamma2_F = gamma2(rep.F).value;
  return rep;
}

}  // namespace gp
