#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "graphprod/gamma2.hpp"
#include "graphprod/word.hpp"

namespace gp {

enum class KernelMode { cb, positive_definite };

/// Per-vertex factorization data for a unital function phi_v on G_v.
struct VertexFunctionData {
  int vertex = 0;
  std::vector<std::complex<double>> phi;  // indexed by group element
  Factorization fact;
  std::vector<Eigen::VectorXcd> alpha, beta;  // fact rows, by element index
  std::vector<Eigen::VectorXcd> omega;        // (alpha+beta)/(2+sqrt(2 eps))
  std::vector<double> D;                      // sqrt((1-|omega|^2)/2)
  Eigen::MatrixXcd Calpha, Cbeta;             // renormalization constants (g,h)
  int hdim = 0;                               // ambient fiber dimension
};

/// [vertex][element index] -> phi value; phi[v][0] must be 1.
using PhiTables = std::vector<std::vector<std::complex<double>>>;

struct ExtensionData {
  const ProductSpec* spec = nullptr;
  KernelMode mode = KernelMode::cb;
  std::vector<VertexFunctionData> vertex;
  double epsilon = 0;      // shared, floored at 1e-4 in cb mode
  double epsilon_raw = 0;  // max over vertices of (gamma2 value - 1), unfloored
};

PhiTables parse_phi_tables(const ProductSpec& spec, const std::string& json_text);
PhiTables ones_phi(const ProductSpec& spec);

/// cb mode: gamma2 factorization per vertex plus omega/D/C tables under the
/// shared epsilon. positive_definite mode: Gram factorization with alpha=beta.
ExtensionData prepare_vertex_data(const ProductSpec& spec, const PhiTables& phi,
                                  KernelMode mode);

/// The left coset rep.G(st(vertex)), held by its minimal representative.
struct CosetIndex {
  GroupElement rep;
  int vertex = 0;
  bool operator==(const CosetIndex& o) const { return vertex == o.vertex && rep == o.rep; }
  bool operator<(const CosetIndex& o) const {
    if (vertex != o.vertex) return vertex < o.vertex;
    return rep < o.rep;
  }
};

CosetIndex coset_index(const GroupElement& prefix, int vertex);

enum class Role { alpha_hat, beta_hat, omega_hat };

/// Local fiber vectors in H_v + C^2 + C^2 (cb mode). The identity's ambient
/// vector is the vacuum.
Eigen::VectorXcd ambient_vector(const VertexFunctionData& vd, int elem);
Eigen::VectorXcd corrected_alpha_vector(const VertexFunctionData& vd, int elem);
Eigen::VectorXcd corrected_beta_vector(const VertexFunctionData& vd, int elem);
Eigen::VectorXcd vacuum_vector(const ExtensionData& data, int vertex);

/// Finitely supported assignment of local vectors to coset slots; every
/// unassigned slot implicitly holds that vertex's vacuum vector.
struct Embedding {
  std::vector<std::pair<CosetIndex, Eigen::VectorXcd>> slots;  // sorted
  double norm() const;
};

Embedding embed(const ExtensionData& data, const GroupElement& g, Role role, int d);

/// Product of slot-wise inner products over the union of supports, vacuum on
/// the missing side. <x, y> = sum_k x_k conj(y_k).
std::complex<double> pair_embeddings(const ExtensionData& data, const Embedding& x,
                                     const Embedding& y);

std::complex<double> phi_d(const ExtensionData& data, const GroupElement& g,
                           const GroupElement& h, int d);
std::complex<double> psi(const ExtensionData& data, const GroupElement& g,
                         const GroupElement& h);

/// Free-product style positive-definite extension <alpha_hat(g), alpha_hat(h)>.
std::complex<double> pd_free_extension(const ExtensionData& data, const GroupElement& g,
                                       const GroupElement& h);

/// q(n, x) = 2 sqrt(129 n kappa) (1 + 129 sqrt(x))^{n kappa} x^{1/4}.
double q_bound(int n, double x, int kappa);

struct ApproxIdReport {
  int N = 0;
  double delta = 0;
  int r = 0;
  int M = 0;
  double mu = 0;
  double epsilon_used = 0;
  double epsilon_raw = 0;
  std::vector<double> P;            // measured gamma2 of chi_d on the check ball
  std::vector<double> one_minus_F;  // |1 - F(g, e)| over S, in S order
  double gamma2_F = 0;
  KernelMatrix F;
  std::string to_json() const;
};

ApproxIdReport approximate_identity(const ProductSpec& spec, const PhiTables& phi,
                                    const std::vector<GroupElement>& S, double eps,
                                    int check_radius);

}  // namespace gp
