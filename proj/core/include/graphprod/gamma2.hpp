#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace gp {

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Square complex matrix with row/column labels (group element strings).
struct KernelMatrix {
  std::vector<std::string> labels;
  Eigen::MatrixXcd entries;

  int size() const { return static_cast<int>(entries.rows()); }
  void validate() const;
};

/// Reads/writes the "a+bi" CSV form; the first column/row hold labels.
KernelMatrix read_kernel_csv(const std::string& text);
std::string write_kernel_csv(const KernelMatrix& m);

std::complex<double> parse_complex(const std::string& token);
std::string format_complex(const std::complex<double>& z, int precision = 12);

/// Row vectors of M = A B*: entry (g, h) = <alpha[g], beta[h]>.
struct Factorization {
  std::vector<std::string> labels;
  std::vector<Eigen::VectorXcd> alpha;
  std::vector<Eigen::VectorXcd> beta;
  double value = 0.0;
  double tolerance = 0.0;  // attained reconstruction residual

  const Eigen::VectorXcd& alpha_of(const std::string& label) const;
  const Eigen::VectorXcd& beta_of(const std::string& label) const;
  double max_alpha_norm2() const;
  double max_beta_norm2() const;
  /// max_{g,h} |<alpha[g], beta[h]> - M[g,h]|.
  double residual(const Eigen::MatrixXcd& m) const;
};

struct Gamma2Options {
  double feasibility_tol = 1e-6;
  int max_projection_iters = 5000;
  int max_bisection_steps = 40;
  /// Extra polishing pass at the final t to tighten the reconstruction
  /// residual (used when downstream bounds need better than feasibility_tol).
  bool polish = false;
  double polish_tol = 1e-11;
  int polish_iters = 200000;
};

/// gamma_2 norm (= cb norm of the Schur multiplier) with a balanced
/// factorization: min t admitting a PSD completion [[X, M], [M*, Y]] with
/// diagonal <= t, by bisection over [max |M_ij|, max column l2 norm] with
/// Dykstra alternating projections deciding feasibility.
Factorization gamma2(const KernelMatrix& m, const Gamma2Options& opts = {});

/// Gram factorization of a PSD matrix (alpha = beta); value = max diagonal.
/// Tolerates eigenvalues down to -1e-9 and throws below that.
Factorization pd_factor(const KernelMatrix& m);

}  // namespace gp
