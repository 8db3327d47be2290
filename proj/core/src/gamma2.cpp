#include "graphprod/gamma2.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "graphprod/graph.hpp"

namespace gp {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using std::complex;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

void KernelMatrix::validate() const {
  if (entries.rows() != entries.cols()) throw SpecError("kernel matrix must be square");
  if (static_cast<int>(labels.size()) != entries.rows()) {
    throw SpecError("kernel matrix label count mismatch");
  }
  if (!entries.allFinite()) throw SpecError("kernel matrix has NaN/Inf entries");
}

std::complex<double> parse_complex(const std::string& token) {
  std::string s = trim(token);
  if (s.empty()) throw SpecError("empty complex entry");
  if (s.back() != 'i' && s.back() != 'I') return {std::stod(s), 0.0};
  s.pop_back();
  // Split "a+b" at the last sign that is not an exponent sign.
  std::size_t cut = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      cut = i;
      break;
    }
  }
  auto imag_of = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return std::stod(t);
  };
  if (cut == std::string::npos) return {0.0, imag_of(s)};
  return {std::stod(s.substr(0, cut)), imag_of(s.substr(cut))};
}

std::string format_complex(const std::complex<double>& z, int precision) {
  std::ostringstream os;
  os.precision(precision);
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

KernelMatrix read_kernel_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    rows.push_back(split(line, ','));
  }
  if (rows.empty()) throw SpecError("empty kernel CSV");
  KernelMatrix m;
  for (std::size_t j = 1; j < rows[0].size(); ++j) m.labels.push_back(trim(rows[0][j]));
  int n = static_cast<int>(m.labels.size());
  if (static_cast<int>(rows.size()) != n + 1) throw SpecError("kernel CSV row count mismatch");
  m.entries.resize(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i + 1].size()) != n + 1) {
      throw SpecError("kernel CSV column count mismatch");
    }
    for (int j = 0; j < n; ++j) m.entries(i, j) = parse_complex(rows[i + 1][j + 1]);
  }
  m.validate();
  return m;
}

std::string write_kernel_csv(const KernelMatrix& m) {
  std::ostringstream os;
  for (const auto& l : m.labels) os << "," << l;
  os << "\n";
  for (int i = 0; i < m.size(); ++i) {
    os << m.labels[i];
    for (int j = 0; j < m.size(); ++j) os << "," << format_complex(m.entries(i, j));
    os << "\n";
  }
  return os.str();
}

const Eigen::VectorXcd& Factorization::alpha_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return alpha[i];
  }
  throw SpecError("unknown factorization label: " + label);
}

const Eigen::VectorXcd& Factorization::beta_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return beta[i];
  }
  throw SpecError("unknown factorization label: " + label);
}

double Factorization::max_alpha_norm2() const {
  double m = 0;
  for (const auto& v : alpha) m = std::max(m, v.squaredNorm());
  return m;
}

double Factorization::max_beta_norm2() const {
  double m = 0;
  for (const auto& v : beta) m = std::max(m, v.squaredNorm());
  return m;
}

double Factorization::residual(const Eigen::MatrixXcd& m) const {
  double r = 0;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      r = std::max(r, std::abs(beta[j].dot(alpha[i]) - m(i, j)));
    }
  }
  return r;
}

namespace {

template <typename Mat>
void eigen_clip(const Mat& in, Mat& out) {
  Eigen::SelfAdjointEigenSolver<Mat> es((in + in.adjoint()) * typename Mat::Scalar(0.5));
  VectorXd lam = es.eigenvalues().cwiseMax(0.0);
  out = es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

// Shared plateau-based early exit: far from feasible and no longer improving.
struct Stall {
  double best = std::numeric_limits<double>::infinity();
  int since = 0;
  bool update(double v, double tol) {
    if (v < best * 0.9999) {
      best = v;
      since = 0;
    } else if (++since > 400 && best > 50 * tol) {
      return true;
    }
    return false;
  }
};

// Dykstra feasibility for general M: completion variable [[X, M], [M*, Y]],
// alternating between the PSD cone and {off-diagonal blocks = M, diag <= t}.
template <typename Mat>
struct GeneralProbe {
  const Mat& m;
  int n;
  Mat x, p, q, y;

  explicit GeneralProbe(const Mat& mat) : m(mat), n(static_cast<int>(mat.rows())) {
    x = Mat::Zero(2 * n, 2 * n);
    set_blocks(x);
    p = q = Mat::Zero(2 * n, 2 * n);
  }

  void set_blocks(Mat& z) const {
    z.topRightCorner(n, n) = m;
    z.bottomLeftCorner(n, n) = m.adjoint();
  }

  void warm_start(const Mat& z) {
    x = z;
    set_blocks(x);
  }

  double violation(double t) const {
    double v = (y.topRightCorner(n, n) - m).cwiseAbs().maxCoeff();
    for (int i = 0; i < 2 * n; ++i) {
      v = std::max(v, std::real(y(i, i)) - t);
      v = std::max(v, std::abs(std::imag(y(i, i))));
    }
    return v;
  }

  bool probe(double t, double tol, int max_iters) {
    p.setZero();
    q.setZero();
    Mat tmp;
    Stall stall;
    for (int it = 0; it < max_iters; ++it) {
      eigen_clip(Mat(x + p), y);
      p = x + p - y;
      double v = violation(t);
      if (v <= tol) return true;
      if (stall.update(v, tol)) return false;
      tmp = y + q;
      set_blocks(tmp);
      for (int i = 0; i < 2 * n; ++i) {
        tmp(i, i) = typename Mat::Scalar(std::min(std::real(tmp(i, i)), t));
      }
      q = y + q - tmp;
      x = std::move(tmp);
    }
    return false;
  }

  // PSD matrix within `violation` of the affine constraints.
  Mat completion() const { return y; }
};

// Hermitian M admits a symmetric completion X = Y, and [[X, M], [M, X]] >= 0
// iff X + M >= 0 and X - M >= 0. Working on the pair (Z1, Z2) = (X+M, X-M)
// halves the dimension of every eigendecomposition.
template <typename Mat>
struct HermitianProbe {
  const Mat& m;
  int n;
  Mat x1, x2, p1, p2, q1, q2, y1, y2;

  explicit HermitianProbe(const Mat& mat) : m(mat), n(static_cast<int>(mat.rows())) {
    x1 = m;
    x2 = -m;
    p1 = p2 = q1 = q2 = Mat::Zero(n, n);
  }

  void warm_start(const Mat& z) {
    Mat x = z.topLeftCorner(n, n);
    x1 = x + m;
    x2 = x - m;
  }

  double violation(double t) const {
    double v = ((y1 - y2) * 0.5 - m).cwiseAbs().maxCoeff();
    for (int i = 0; i < n; ++i) {
      double d = std::real(y1(i, i) + y2(i, i)) * 0.5;
      v = std::max(v, d - t);
      v = std::max(v, std::abs(std::imag(y1(i, i))));
      v = std::max(v, std::abs(std::imag(y2(i, i))));
    }
    return v;
  }

  bool probe(double t, double tol, int max_iters) {
    p1.setZero();
    p2.setZero();
    q1.setZero();
    q2.setZero();
    Mat mid, t1, t2;
    Stall stall;
    for (int it = 0; it < max_iters; ++it) {
      eigen_clip(Mat(x1 + p1), y1);
      eigen_clip(Mat(x2 + p2), y2);
      p1 = x1 + p1 - y1;
      p2 = x2 + p2 - y2;
      double v = violation(t);
      if (v <= tol) return true;
      if (stall.update(v, tol)) return false;
      // Affine projection: sync the difference to 2M, clip the mean diagonal.
      t1 = y1 + q1;
      t2 = y2 + q2;
      mid = (t1 + t2) * typename Mat::Scalar(0.5);
      for (int i = 0; i < n; ++i) {
        double excess = std::real(mid(i, i)) - t;
        if (excess > 0) mid(i, i) -= typename Mat::Scalar(excess);
      }
      q1 = t1 - (mid + m);
      q2 = t2 - (mid - m);
      x1 = mid + m;
      x2 = mid - m;
    }
    return false;
  }

  // [[X, M'], [M', X]] with X = (Y1+Y2)/2, M' = (Y1-Y2)/2 is exactly PSD
  // and M' is within `violation` of M.
  Mat completion() const {
    Mat z(2 * n, 2 * n);
    Mat x = (y1 + y2) * typename Mat::Scalar(0.5);
    Mat md = (y1 - y2) * typename Mat::Scalar(0.5);
    z.topLeftCorner(n, n) = x;
    z.bottomRightCorner(n, n) = x;
    z.topRightCorner(n, n) = md;
    z.bottomLeftCorner(n, n) = md.adjoint();
    return z;
  }
};

template <typename Mat, typename Probe>
Factorization solve(const KernelMatrix& km, const Mat& m, const Gamma2Options& opts) {
  int n = static_cast<int>(m.rows());
  double t_lo = m.cwiseAbs().maxCoeff();
  double t_hi = 0;
  for (int j = 0; j < n; ++j) t_hi = std::max(t_hi, m.col(j).norm());
  t_hi = std::max(t_hi, t_lo);

  Mat z_best;
  double t_best = t_hi;
  bool have_best = false;

  // Analytic completion [[U S U*, M], [M*, V S V*]] from the SVD; PSD by
  // construction. For PSD M its diagonal equals diag(M), which certifies
  // unit-diagonal instances at t_lo without any projection work.
  {
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Mat u = svd.matrixU(), v = svd.matrixV();
    VectorXd s = svd.singularValues();
    Mat z(2 * n, 2 * n);
    z.topLeftCorner(n, n) = u * s.asDiagonal() * u.adjoint();
    z.bottomRightCorner(n, n) = v * s.asDiagonal() * v.adjoint();
    z.topRightCorner(n, n) = m;
    z.bottomLeftCorner(n, n) = m.adjoint();
    double dmax = 0;
    for (int i = 0; i < 2 * n; ++i) dmax = std::max(dmax, std::real(z(i, i)));
    if (dmax <= std::max(t_lo + 1e-12 * std::max(1.0, t_lo), t_hi)) {
      z_best = std::move(z);
      t_best = std::max(t_lo, dmax);
      have_best = true;
    }
  }

  bool exact_lo = have_best && t_best <= t_lo + 1e-12 * std::max(1.0, t_lo);
  if (!exact_lo) {
    Probe probe(m);
    if (have_best) probe.warm_start(z_best);
    // The lower bound first: when it is feasible the value is exact.
    if (probe.probe(t_lo, opts.feasibility_tol, opts.max_projection_iters)) {
      z_best = probe.completion();
      t_best = t_lo;
      have_best = true;
    } else {
      double lo = t_lo, hi = have_best ? t_best : t_hi;
      for (int step = 0; step < opts.max_bisection_steps && hi - lo > 1e-12 * hi; ++step) {
        double mid = 0.5 * (lo + hi);
        if (probe.probe(mid, opts.feasibility_tol, opts.max_projection_iters)) {
          hi = mid;
          z_best = probe.completion();
          t_best = mid;
          have_best = true;
        } else {
          lo = mid;
        }
      }
      if (!have_best) {
        // Certified fallback: M = (cI)(M/c) with c^2 = max column norm.
        Mat z(2 * n, 2 * n);
        z.topLeftCorner(n, n) = Mat::Identity(n, n) * typename Mat::Scalar(t_hi);
        z.topRightCorner(n, n) = m;
        z.bottomLeftCorner(n, n) = m.adjoint();
        z.bottomRightCorner(n, n) = m.adjoint() * m / typename Mat::Scalar(t_hi);
        z_best = std::move(z);
        t_best = t_hi;
      }
    }
  }

  if (opts.polish) {
    Probe probe(m);
    probe.warm_start(z_best);
    double t_pol = t_best + std::max(1e-9, 1e-9 * t_best);
    if (probe.probe(t_pol, opts.polish_tol, opts.polish_iters)) {
      z_best = probe.completion();
    }
  }

  Eigen::SelfAdjointEigenSolver<Mat> es((z_best + z_best.adjoint()) *
                                        typename Mat::Scalar(0.5));
  VectorXd lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  Mat w = es.eigenvectors() * lam.asDiagonal();

  Factorization f;
  f.labels = km.labels;
  f.value = t_best;
  f.alpha.reserve(n);
  f.beta.reserve(n);
  for (int i = 0; i < n; ++i) {
    f.alpha.push_back(w.row(i).transpose().template cast<complex<double>>());
  }
  for (int i = 0; i < n; ++i) {
    f.beta.push_back(w.row(n + i).transpose().template cast<complex<double>>());
  }
  f.tolerance = f.residual(km.entries);
  return f;
}

template <typename Mat>
Factorization dispatch(const KernelMatrix& km, const Mat& m, const Gamma2Options& opts) {
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() <= 1e-14 * scale) {
    return solve<Mat, HermitianProbe<Mat>>(km, m, opts);
  }
  return solve<Mat, GeneralProbe<Mat>>(km, m, opts);
}

}  // namespace

Factorization gamma2(const KernelMatrix& m, const Gamma2Options& opts) {
  m.validate();
  if (m.size() == 0) return Factorization{};
  if (m.entries.imag().cwiseAbs().maxCoeff() == 0.0) {
    MatrixXd real = m.entries.real();
    return dispatch<MatrixXd>(m, real, opts);
  }
  return dispatch<MatrixXcd>(m, m.entries, opts);
}

Factorization pd_factor(const KernelMatrix& m) {
  m.validate();
  int n = m.size();
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es((m.entries + m.entries.adjoint()) * 0.5);
  if (n > 0 && es.eigenvalues().minCoeff() < -1e-9) {
    throw SolverError("matrix is not positive semidefinite (min eigenvalue " +
                      std::to_string(es.eigenvalues().minCoeff()) + ")");
  }
  VectorXd lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  MatrixXcd w = es.eigenvectors() * lam.asDiagonal();
  Factorization f;
  f.labels = m.labels;
  for (int i = 0; i < n; ++i) f.alpha.push_back(w.row(i).transpose());
  f.beta = f.alpha;
  f.value = 0;
  for (int i = 0; i < n; ++i) f.value = std::max(f.value, std::real(m.entries(i, i)));
  f.tolerance = f.residual(m.entries);
  return f;
}

}  // namespace gp
