#include <doctest.h>

#include <cmath>
#include <complex>

#include "graphprod/kernels.hpp"
#include "instances.hpp"

using std::complex;

namespace {

gp::PhiTables perturbed_phi_323() {
  // gamma2 of the middle Z2 kernel [[1, 1.03], [1.03, 1]] is 1.03, so the
  // shared epsilon lands at 0.03.
  gp::PhiTables phi{{1.0, 0.9, 0.9}, {1.0, 1.03}, {1.0, 0.85, 0.85}};
  return phi;
}

}  // namespace

TEST_CASE("phi tables parse and validate") {
  gp::ProductSpec spec = inst::path_323();
  gp::PhiTables phi = gp::parse_phi_tables(spec, R"({"0": {"1": [0.9, 0.0], "2": [0.9, 0.0]}})");
  CHECK(phi[0][1] == complex<double>(0.9, 0.0));
  CHECK(phi[1][1] == complex<double>(1.0, 0.0));
  CHECK_THROWS_AS(gp::parse_phi_tables(spec, R"({"9": {}})"), gp::SpecError);
  gp::PhiTables bad = gp::ones_phi(spec);
  bad[0][0] = 0.5;
  CHECK_THROWS_AS(gp::prepare_vertex_data(spec, bad, gp::KernelMode::cb), gp::SpecError);
}

TEST_CASE("measured epsilon tracks the vertex gamma2 values") {
  gp::ProductSpec spec = inst::path_323();
  auto data = gp::prepare_vertex_data(spec, perturbed_phi_323(), gp::KernelMode::cb);
  CHECK(data.epsilon == doctest::Approx(0.03).epsilon(1e-3));
  CHECK(data.epsilon >= 1e-4);
  auto flat = gp::prepare_vertex_data(spec, gp::ones_phi(spec), gp::KernelMode::cb);
  CHECK(flat.epsilon_raw <= 1e-9);
  CHECK(flat.epsilon == 1e-4);  // floor keeps D positive
}

TEST_CASE("coset index strips star syllables from the right") {
  gp::ProductSpec spec = inst::pentagon();
  using gp::GroupElement;
  CHECK(gp::coset_index(GroupElement::identity(spec), 0).rep.is_identity());
  // A single syllable at the vertex itself lies in the star subgroup.
  CHECK(gp::coset_index(GroupElement::parse(spec, "1:1"), 1).rep.is_identity());
  // Both syllables of (0)(2) lie in st(1), so the whole word strips away.
  CHECK(gp::coset_index(GroupElement::parse(spec, "0:1 2:1"), 1).rep.is_identity());
  // (3)(2) at vertex 1: the final 2 is in st(1), the 3 is not.
  gp::CosetIndex idx = gp::coset_index(GroupElement::parse(spec, "3:1 2:1"), 1);
  CHECK(idx.rep.str() == "3:1");
}

TEST_CASE("vertex-level pairing identities") {
  gp::ProductSpec spec = inst::path_323();
  auto data = gp::prepare_vertex_data(spec, perturbed_phi_323(), gp::KernelMode::cb);
  auto inner = [](const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) { return y.dot(x); };
  for (const auto& vd : data.vertex) {
    int o = static_cast<int>(vd.phi.size());
    for (int g = 0; g < o; ++g) {
      auto ca = gp::corrected_alpha_vector(vd, g);
      auto cb = gp::corrected_beta_vector(vd, g);
      auto amb = gp::ambient_vector(vd, g);
      auto vac = gp::ambient_vector(vd, 0);
      CHECK(std::abs(inner(ca, vac) - inner(vd.alpha[g], vd.beta[0])) < 1e-10);
      CHECK(std::abs(inner(ca, amb) - inner(vd.alpha[g], vd.beta[g])) < 1e-10);
      CHECK(std::abs(inner(vac, cb) - inner(vd.alpha[0], vd.beta[g])) < 1e-10);
      CHECK(std::abs(inner(amb, cb) - inner(vd.alpha[g], vd.beta[g])) < 1e-10);
      for (int h = 0; h < o; ++h) {
        CHECK(std::abs(inner(ca, gp::corrected_beta_vector(vd, h)) -
                       inner(vd.alpha[g], vd.beta[h])) < 1e-10);
      }
      CHECK(std::abs(amb.norm() - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("embedding basics") {
  gp::ProductSpec spec = inst::path_323();
  auto data = gp::prepare_vertex_data(spec, perturbed_phi_323(), gp::KernelMode::cb);
  gp::GroupElement e = gp::GroupElement::identity(spec);
  CHECK(gp::embed(data, e, gp::Role::alpha_hat, 2).slots.empty());
  CHECK(std::abs(gp::phi_d(data, e, e, 0) - complex<double>(1.0)) < 1e-12);
  gp::GroupElement a = gp::GroupElement::parse(spec, "0:1");
  CHECK(std::abs(gp::phi_d(data, a, e, 1) - complex<double>(0.9)) < 1e-9);
  gp::GroupElement ab = gp::GroupElement::parse(spec, "0:1 2:1");
  CHECK(std::abs(gp::phi_d(data, ab, e, 2) - complex<double>(0.9 * 0.85)) < 1e-9);
  CHECK(std::abs(gp::psi(data, ab, ab) - complex<double>(1.0)) < 1e-10);
}

TEST_CASE("positive-definite mode reproduces syllable products") {
  gp::ProductSpec spec = inst::free_23();
  gp::PhiTables phi{{1.0, 0.5}, {1.0, 0.4, 0.4}};
  auto data = gp::prepare_vertex_data(spec, phi, gp::KernelMode::positive_definite);
  gp::GroupElement e = gp::GroupElement::identity(spec);
  gp::GroupElement g = gp::GroupElement::parse(spec, "0:1 1:1");
  CHECK(std::abs(gp::pd_free_extension(data, g, e) - complex<double>(0.5 * 0.4)) < 1e-12);
  CHECK(std::abs(gp::pd_free_extension(data, g, g) - complex<double>(1.0)) < 1e-12);
  CHECK_THROWS_AS(gp::pd_free_extension(
                      gp::prepare_vertex_data(spec, phi, gp::KernelMode::cb), g, e),
                  gp::SpecError);
}

TEST_CASE("q_bound agrees with an independent evaluation") {
  // Re-derived with logarithms rather than direct powers.
  auto reference = [](int n, double x, int kappa) {
    if (n == 0 || x == 0) return 0.0;
    double nk = double(n) * kappa;
    return std::exp(std::log(2.0) + 0.5 * std::log(129.0 * nk) +
                    nk * std::log1p(129.0 * std::sqrt(x)) + 0.25 * std::log(x));
  };
  CHECK(gp::q_bound(0, 0.5, 2) == 0.0);
  CHECK(gp::q_bound(3, 0.0, 2) == 0.0);
  for (int n : {1, 2, 5}) {
    for (double x : {1e-6, 0.01, 0.3}) {
      CHECK(gp::q_bound(n, x, 2) == doctest::Approx(reference(n, x, 2)).epsilon(1e-12));
    }
  }
}

TEST_CASE("approximate identity on a singleton support") {
  gp::ProductSpec spec = inst::free_23();
  std::vector<gp::GroupElement> S{gp::GroupElement::identity(spec)};
  auto rep = gp::approximate_identity(spec, gp::ones_phi(spec), S, 0.5, 2);
  REQUIRE(rep.one_minus_F.size() == 1);
  CHECK(rep.one_minus_F[0] <= 0.5);
  CHECK(rep.N == 0);
  CHECK(rep.r >= 1);
  CHECK(rep.to_json().find("gamma2_F") != std::string::npos);
}
