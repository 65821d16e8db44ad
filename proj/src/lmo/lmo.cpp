#include "bpcg/lmo/lmo.hpp"

#include "bpcg/lmo/assignment.hpp"

#include <cmath>
#include <string>

namespace bpcg {

Atom simplex_lmo(const Eigen::VectorXd& c) {
  if (c.size() == 0) throw ContractViolation("simplex LMO needs a non-empty direction");
  if (!c.allFinite()) throw ContractViolation("simplex LMO direction must be finite");
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < c.size(); ++i)
    if (c[i] < c[best]) best = i;
  return make_basis_vertex(best, c.size());
}

Atom birkhoff_lmo(const Eigen::MatrixXd& cost) {
  if (cost.rows() != cost.cols() || cost.rows() == 0)
    throw ContractViolation("Birkhoff LMO needs a non-empty square cost matrix");
  return make_permutation(solve_assignment(cost));
}

Atom lp_ball_lmo(const Eigen::VectorXd& c, double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ContractViolation("l_p ball LMO needs finite p > 1");
  if (c.size() == 0 || !c.allFinite()) throw ContractViolation("l_p ball LMO direction must be finite and non-empty");
  const double cmax = c.lpNorm<Eigen::Infinity>();
  if (cmax == 0.0) throw ContractViolation("l_p ball LMO direction is zero");
  // Rescale by max|c| first; the result is scale invariant and this avoids
  // overflow in |c|^(1/(p-1)).
  const double expo = 1.0 / (p - 1.0);
  Eigen::VectorXd v(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    const double mag = std::pow(std::abs(c[i]) / cmax, expo);
    v[i] = c[i] > 0.0 ? -mag : (c[i] < 0.0 ? mag : 0.0);
  }
  double norm_p = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) norm_p += std::pow(std::abs(v[i]), p);
  v /= std::pow(norm_p, 1.0 / p);
  return make_dense_vertex(std::move(v));
}

PowerIterationError::PowerIterationError(double residual, int iterations)
    : SolverError("shifted power iteration did not converge after " + std::to_string(iterations) +
                  " iterations (residual " + std::to_string(residual) + ")"),
      residual_(residual),
      iterations_(iterations) {}

namespace {

struct PowerResult {
  Eigen::VectorXd u;
  double rayleigh = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

double eigen_residual(const Eigen::MatrixXd& g, const Eigen::VectorXd& u, double& rayleigh) {
  const Eigen::VectorXd gu = g * u;
  rayleigh = u.dot(gu);
  return (gu - rayleigh * u).norm();
}

PowerResult shifted_power_iteration(const Eigen::MatrixXd& g, Eigen::VectorXd start, double shift, double tolerance,
                                    int max_iterations) {
  PowerResult r;
  r.u = start.normalized();
  r.residual = eigen_residual(g, r.u, r.rayleigh);
  while (r.residual > tolerance) {
    if (r.iterations >= max_iterations) return r;
    Eigen::VectorXd next = shift * r.u - g * r.u;
    const double norm = next.norm();
    if (norm == 0.0) break;
    r.u = next / norm;
    ++r.iterations;
    r.residual = eigen_residual(g, r.u, r.rayleigh);
  }
  r.converged = true;
  return r;
}

}  // namespace

Atom spectrahedron_lmo(const Eigen::MatrixXd& g, const PowerIterationOptions& options) {
  if (g.rows() != g.cols() || g.rows() == 0) throw ContractViolation("spectrahedron LMO needs a square matrix");
  if (!g.allFinite()) throw ContractViolation("spectrahedron LMO matrix must be finite");
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw ContractViolation("spectrahedron LMO needs a symmetric matrix");
  const Eigen::Index n = g.rows();
  const double fro = g.norm();
  Eigen::VectorXd e1 = Eigen::VectorXd::Unit(n, 0);
  if (fro == 0.0) return make_rank1(e1);
  const double tolerance = options.relative_residual * fro;

  PowerResult best = shifted_power_iteration(g, e1, fro, tolerance, options.max_iterations);
  if (!best.converged) throw PowerIterationError(best.residual, best.iterations);
  if (best.iterations == 0 && n > 1) {
    // e_1 is an eigenvector and cannot leave its eigenspace; retry from a
    // start with every component non-zero.
    Eigen::VectorXd alt(n);
    for (Eigen::Index i = 0; i < n; ++i) alt[i] = 1.0 / static_cast<double>(i + 1);
    PowerResult other = shifted_power_iteration(g, alt, fro, tolerance, options.max_iterations);
    if (!other.converged) throw PowerIterationError(other.residual, other.iterations);
    if (other.rayleigh < best.rayleigh - tolerance) best = std::move(other);
  }

  Eigen::VectorXd u = best.u;
  Eigen::Index imax = 0;
  u.cwiseAbs().maxCoeff(&imax);
  if (u[imax] < 0.0) u = -u;
  u /= u.norm();
  return make_rank1(std::move(u));
}

SimplexLmo::SimplexLmo(Eigen::Index n) : n_(n) {
  if (n_ < 1) throw ConfigError("simplex dimension must be positive");
}

Atom SimplexLmo::minimize(const Eigen::VectorXd& direction) const {
  if (direction.size() != n_) throw ContractViolation("simplex LMO direction has the wrong dimension");
  return simplex_lmo(direction);
}

double SimplexLmo::diameter() const { return n_ > 1 ? std::sqrt(2.0) : 0.0; }

BirkhoffLmo::BirkhoffLmo(int n) : n_(n) {
  if (n_ < 1) throw ConfigError("Birkhoff polytope size must be positive");
}

Atom BirkhoffLmo::minimize(const Eigen::VectorXd& direction) const {
  if (direction.size() != dimension()) throw ContractViolation("Birkhoff LMO direction has the wrong dimension");
  return birkhoff_lmo(Eigen::Map<const Eigen::MatrixXd>(direction.data(), n_, n_));
}

double BirkhoffLmo::diameter() const { return n_ > 1 ? std::sqrt(2.0 * n_) : 0.0; }

LpBallLmo::LpBallLmo(Eigen::Index n, double p) : n_(n), p_(p) {
  if (n_ < 1) throw ConfigError("l_p ball dimension must be positive");
  if (!(p_ > 1.0) || !std::isfinite(p_)) throw ConfigError("l_p ball needs finite p > 1");
}

Atom LpBallLmo::minimize(const Eigen::VectorXd& direction) const {
  if (direction.size() != n_) throw ContractViolation("l_p ball LMO direction has the wrong dimension");
  return lp_ball_lmo(direction, p_);
}

double LpBallLmo::diameter() const {
  // max |x|_2 over the unit l_p ball is n^(1/2 - 1/p) for p >= 2 and 1 otherwise.
  if (p_ >= 2.0) return 2.0 * std::pow(static_cast<double>(n_), 0.5 - 1.0 / p_);
  return 2.0;
}

SpectrahedronLmo::SpectrahedronLmo(int n, PowerIterationOptions options) : n_(n), options_(options) {
  if (n_ < 1) throw ConfigError("spectrahedron size must be positive");
}

Atom SpectrahedronLmo::minimize(const Eigen::VectorXd& direction) const {
  if (direction.size() != dimension()) throw ContractViolation("spectrahedron LMO direction has the wrong dimension");
  Eigen::Map<const Eigen::MatrixXd> g(direction.data(), n_, n_);
  const Eigen::MatrixXd sym = 0.5 * (g + g.transpose());
  return spectrahedron_lmo(sym, options_);
}

double SpectrahedronLmo::diameter() const { return n_ > 1 ? std::sqrt(2.0) : 0.0; }

}  // namespace bpcg
