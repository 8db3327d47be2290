#include <doctest.h>

#include <cmath>
#include <random>

#include "graphprod/gamma2.hpp"
#include "graphprod/graph.hpp"

namespace {

gp::KernelMatrix labeled(const Eigen::MatrixXcd& m) {
  gp::KernelMatrix km;
  km.entries = m;
  for (int i = 0; i < m.rows(); ++i) km.labels.push_back(std::to_string(i));
  return km;
}

// Independent 2x2 oracle: minimum over factorizations M = A B with A
// invertible, of (max row norm of A) * (max column norm of A^{-1} M),
// scanned over a dense grid of A = [[a, 0], [b, c]].
double grid_gamma2_2x2(const Eigen::Matrix2d& m) {
  double best = 1e300;
  for (double a = 0.05; a <= 3.0; a += 0.02) {
    for (double b = -3.0; b <= 3.0; b += 0.02) {
      for (double c = 0.05; c <= 3.0; c += 0.02) {
        Eigen::Matrix2d A;
        A << a, 0, b, c;
        Eigen::Matrix2d B = A.inverse() * m;
        double ra = std::max(A.row(0).norm(), A.row(1).norm());
        double cb = std::max(B.col(0).norm(), B.col(1).norm());
        // Balance the free scale between the factors.
        best = std::min(best, ra * cb);
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("complex token parsing") {
  using gp::parse_complex;
  CHECK(parse_complex("1.5") == std::complex<double>(1.5, 0));
  CHECK(parse_complex("2i") == std::complex<double>(0, 2));
  CHECK(parse_complex("1+2i") == std::complex<double>(1, 2));
  CHECK(parse_complex("1-2i") == std::complex<double>(1, -2));
  CHECK(parse_complex("-1.5e-3+4i") == std::complex<double>(-0.0015, 4));
  CHECK(parse_complex("-i") == std::complex<double>(0, -1));
  CHECK(parse_complex(gp::format_complex({1.25, -0.5})) == std::complex<double>(1.25, -0.5));
  CHECK_THROWS_AS(parse_complex(""), gp::SpecError);
}

TEST_CASE("kernel CSV round-trip") {
  Eigen::MatrixXcd m(2, 2);
  m << std::complex<double>(1, 0), std::complex<double>(0.5, -0.25),
      std::complex<double>(0.5, 0.25), std::complex<double>(1, 0);
  gp::KernelMatrix km = labeled(m);
  gp::KernelMatrix back = gp::read_kernel_csv(gp::write_kernel_csv(km));
  CHECK(back.labels == km.labels);
  CHECK((back.entries - km.entries).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("identity and ones have value 1") {
  auto id = gp::gamma2(labeled(Eigen::MatrixXcd::Identity(5, 5)));
  CHECK(std::abs(id.value - 1.0) < 1e-4);
  CHECK(id.tolerance < 1e-6);
  auto ones = gp::gamma2(labeled(Eigen::MatrixXcd::Ones(5, 5)));
  CHECK(std::abs(ones.value - 1.0) < 1e-4);
  CHECK(ones.tolerance < 1e-6);
}

TEST_CASE("factorization is balanced and reconstructs") {
  Eigen::MatrixXcd m(2, 2);
  m << 1, 2, 2, 1;
  auto f = gp::gamma2(labeled(m));
  CHECK(f.tolerance < 1e-6);
  CHECK(f.max_alpha_norm2() <= f.value + 1e-5);
  CHECK(f.max_beta_norm2() <= f.value + 1e-5);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CHECK(std::abs(f.beta[j].dot(f.alpha[i]) - m(i, j)) < 1e-5);
    }
  }
}

TEST_CASE("value for [[1,2],[2,1]] agrees with the grid-search oracle") {
  Eigen::Matrix2d m;
  m << 1, 2, 2, 1;
  double oracle = grid_gamma2_2x2(m);
  auto f = gp::gamma2(labeled(m.cast<std::complex<double>>()));
  CHECK(f.value == doctest::Approx(oracle).epsilon(0.05));
}

TEST_CASE("asymmetric matrices go through the general probe") {
  Eigen::MatrixXcd m(2, 2);
  m << 1, 3, 0, 1;
  auto f = gp::gamma2(labeled(m));
  CHECK(f.value >= 3.0 - 1e-6);  // max |entry| lower bound
  CHECK(f.tolerance < 1e-6);
}

TEST_CASE("pd_factor round-trips random Gram matrices") {
  std::mt19937 rng(7);
  std::normal_distribution<double> gauss;
  Eigen::MatrixXcd v(6, 4);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 4; ++j) v(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  }
  Eigen::MatrixXcd gram = v * v.adjoint();
  auto f = gp::pd_factor(labeled(gram));
  CHECK(f.tolerance < 1e-8);
  for (std::size_t i = 0; i < f.alpha.size(); ++i) {
    CHECK((f.alpha[i] - f.beta[i]).norm() == 0.0);
  }
}

TEST_CASE("pd_factor rejects indefinite matrices") {
  Eigen::MatrixXcd m(2, 2);
  m << 0, 1, 1, 0;
  CHECK_THROWS_AS(gp::pd_factor(labeled(m)), gp::SolverError);
}

TEST_CASE("NaN entries are rejected") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
  m(0, 1) = std::nan("");
  CHECK_THROWS_AS(gp::gamma2(labeled(m)), gp::SpecError);
}

TEST_CASE("value dominates every entry and principal submatrix") {
  Eigen::MatrixXcd m(3, 3);
  m << 1, 0.5, 0.2, 0.5, 1, -0.7, 0.2, -0.7, 1;
  auto full = gp::gamma2(labeled(m));
  CHECK(full.value >= m.cwiseAbs().maxCoeff() - 1e-9);
  auto sub = gp::gamma2(labeled(m.topLeftCorner(2, 2)));
  CHECK(sub.value <= full.value + 1e-6);
}
