#include "landau/gpc.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "landau/errors.hpp"

namespace landau::gpc {

void ParameterDistribution::validate() const {
  if (kind == Kind::Uniform01) {
    return;
  }
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    std::ostringstream msg;
    msg << "Beta shape parameters must be positive, got (" << alpha << ", " << beta << ")";
    throw ParameterError(msg.str());
  }
}

double ParameterDistribution::density(double z) const {
  if (z < 0.0 || z > 1.0) {
    return 0.0;
  }
  if (kind == Kind::Uniform01) {
    return 1.0;
  }
  const double log_norm = std::lgamma(alpha + beta) - std::lgamma(alpha) - std::lgamma(beta);
  if ((z == 0.0 && alpha != 1.0) || (z == 1.0 && beta != 1.0)) {
    const double e = z == 0.0 ? alpha - 1.0 : beta - 1.0;
    return e > 0.0 ? 0.0 : HUGE_VAL;
  }
  return std::exp(log_norm + (alpha - 1.0) * std::log(z) + (beta - 1.0) * std::log1p(-z));
}

double ParameterDistribution::moment(int k) const {
  const double a = kind == Kind::Uniform01 ? 1.0 : alpha;
  const double b = kind == Kind::Uniform01 ? 1.0 : beta;
  double m = 1.0;
  for (int r = 0; r < k; ++r) {
    m *= (a + r) / (a + b + r);
  }
  return m;
}

std::string ParameterDistribution::describe() const {
  if (kind == Kind::Uniform01) {
    return "uniform";
  }
  std::ostringstream out;
  out << "beta(" << alpha << ", " << beta << ")";
  return out.str();
}

Recurrence recurrence(const ParameterDistribution& dist, int count) {
  dist.validate();
  // Beta(alpha, beta) on [0, 1] is the Jacobi weight (1 - x)^ja (1 + x)^jb on [-1, 1]
  // under x = 2z - 1, with ja = beta - 1 and jb = alpha - 1.
  const double ja = dist.kind == ParameterDistribution::Kind::Uniform01 ? 0.0 : dist.beta - 1.0;
  const double jb = dist.kind == ParameterDistribution::Kind::Uniform01 ? 0.0 : dist.alpha - 1.0;
  const double s = ja + jb;

  Recurrence rec;
  rec.a.resize(static_cast<std::size_t>(count));
  rec.b.resize(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) {
    const double nn = static_cast<double>(n);
    double an = 0.0;
    double bn = 0.0;
    if (n == 0) {
      an = (jb - ja) / (s + 2.0);
    } else {
      an = (jb * jb - ja * ja) / ((2.0 * nn + s) * (2.0 * nn + s + 2.0));
    }
    if (n == 0) {
      bn = 1.0;
    } else if (n == 1) {
      bn = 4.0 * (1.0 + ja) * (1.0 + jb) / ((2.0 + s) * (2.0 + s) * (3.0 + s));
    } else {
      const double t = 2.0 * nn + s;
      bn = 4.0 * nn * (nn + ja) * (nn + jb) * (nn + s) / (t * t * (t + 1.0) * (t - 1.0));
    }
    // Monic in z = (x + 1) / 2.
    rec.a[static_cast<std::size_t>(n)] = 0.5 * (an + 1.0);
    rec.b[static_cast<std::size_t>(n)] = n == 0 ? 1.0 : 0.25 * bn;
  }
  return rec;
}

std::vector<double> orthonormal_values(const Recurrence& rec, int order, double z) {
  std::vector<double> psi(static_cast<std::size_t>(order) + 1);
  psi[0] = 1.0;
  if (order >= 1) {
    psi[1] = (z - rec.a[0]) / std::sqrt(rec.b[1]);
  }
  for (int n = 1; n < order; ++n) {
    const auto k = static_cast<std::size_t>(n);
    psi[k + 1] = ((z - rec.a[k]) * psi[k] - std::sqrt(rec.b[k]) * psi[k - 1]) / std::sqrt(rec.b[k + 1]);
  }
  return psi;
}

namespace {

/// Monic p_L and p_L' at z.
std::pair<double, double> monic_with_derivative(const Recurrence& rec, int degree, double z) {
  double p_prev = 0.0;
  double p = 1.0;
  double d_prev = 0.0;
  double d = 0.0;
  for (int n = 0; n < degree; ++n) {
    const auto k = static_cast<std::size_t>(n);
    const double bn = n == 0 ? 0.0 : rec.b[k];
    const double p_next = (z - rec.a[k]) * p - bn * p_prev;
    const double d_next = p + (z - rec.a[k]) * d - bn * d_prev;
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
  }
  return {p, d};
}

}  // namespace

QuadratureRule gauss_quadrature(const ParameterDistribution& dist, int num_nodes) {
  if (num_nodes < 1) {
    throw ConfigurationError("quadrature needs at least one node");
  }
  const Recurrence rec = recurrence(dist, num_nodes + 1);
  const auto n = static_cast<Eigen::Index>(num_nodes);

  // Golub-Welsch for the initial nodes.
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max<Eigen::Index>(n - 1, 0));
  for (Eigen::Index k = 0; k < n; ++k) {
    diag[k] = rec.a[static_cast<std::size_t>(k)];
  }
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    sub[k] = std::sqrt(rec.b[static_cast<std::size_t>(k + 1)]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) {
    throw NumericalError("tridiagonal eigenvalue solve failed");
  }

  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(num_nodes));
  rule.weights.resize(static_cast<std::size_t>(num_nodes));
  for (int l = 0; l < num_nodes; ++l) {
    double z = eig.eigenvalues()[l];
    // Newton polish on the monic recurrence.
    for (int it = 0; it < 3; ++it) {
      const auto [p, dp] = monic_with_derivative(rec, num_nodes, z);
      if (dp == 0.0) {
        break;
      }
      z -= p / dp;
    }
    rule.nodes[static_cast<std::size_t>(l)] = z;
  }
  std::sort(rule.nodes.begin(), rule.nodes.end());

  // Christoffel weights 1 / sum_k Psi_k(z_l)^2.
  for (int l = 0; l < num_nodes; ++l) {
    const auto psi = orthonormal_values(rec, num_nodes - 1, rule.nodes[static_cast<std::size_t>(l)]);
    double s = 0.0;
    for (double v : psi) {
      s += v * v;
    }
    rule.weights[static_cast<std::size_t>(l)] = 1.0 / s;
  }
  return rule;
}

GpcBasis::GpcBasis(const ParameterDistribution& dist, int order, int num_nodes)
    : dist_(dist), order_(order) {
  dist_.validate();
  if (order < 0) {
    throw ConfigurationError("gPC order must be non-negative");
  }
  if (num_nodes < order + 1) {
    throw ConfigurationError("need at least M + 1 = " + std::to_string(order + 1) +
                             " quadrature nodes, got " + std::to_string(num_nodes));
  }
  rec_ = recurrence(dist_, std::max(order, num_nodes) + 1);
  rule_ = gauss_quadrature(dist_, num_nodes);
  table_.assign(modes() * nodes(), 0.0);
  for (std::size_t l = 0; l < nodes(); ++l) {
    const auto psi = orthonormal_values(rec_, order_, rule_.nodes[l]);
    for (std::size_t m = 0; m < modes(); ++m) {
      table_[m * nodes() + l] = psi[m];
    }
  }
}

std::vector<double> GpcBasis::values_at(double z) const {
  if (!(z >= 0.0 && z <= 1.0)) {
    std::ostringstream msg;
    msg << "parameter value " << z << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  return orthonormal_values(rec_, order_, z);
}

GpcBasis build_basis(const ParameterDistribution& dist, int order, int num_nodes) {
  return GpcBasis(dist, order, num_nodes > 0 ? num_nodes : default_node_count(order));
}

SgBasis::SgBasis(GpcBasis basis) {
  factors_.push_back(std::move(basis));
  assemble();
}

SgBasis::SgBasis(TensorGpcBasis basis) {
  factors_.push_back(std::move(basis.first));
  factors_.push_back(std::move(basis.second));
  assemble();
}

void SgBasis::assemble() {
  const GpcBasis& b1 = factors_[0];
  if (factors_.size() == 1) {
    modes_ = b1.modes();
    weights_ = b1.weights();
    points_.clear();
    for (double z : b1.node_values()) {
      points_.push_back({z, 0.0});
    }
    table_.assign(modes_ * nodes(), 0.0);
    for (std::size_t m = 0; m < modes_; ++m) {
      for (std::size_t l = 0; l < nodes(); ++l) {
        table_[m * nodes() + l] = b1.psi(m, l);
      }
    }
    return;
  }
  const GpcBasis& b2 = factors_[1];
  modes_ = b1.modes() * b2.modes();
  const std::size_t n2 = b2.nodes();
  const std::size_t count = b1.nodes() * n2;
  weights_.assign(count, 0.0);
  points_.assign(count, {0.0, 0.0});
  for (std::size_t l1 = 0; l1 < b1.nodes(); ++l1) {
    for (std::size_t l2 = 0; l2 < n2; ++l2) {
      weights_[l1 * n2 + l2] = b1.weights()[l1] * b2.weights()[l2];
      points_[l1 * n2 + l2] = {b1.node_values()[l1], b2.node_values()[l2]};
    }
  }
  table_.assign(modes_ * count, 0.0);
  for (std::size_t m1 = 0; m1 < b1.modes(); ++m1) {
    for (std::size_t m2 = 0; m2 < b2.modes(); ++m2) {
      const std::size_t k = m1 * b2.modes() + m2;
      for (std::size_t l1 = 0; l1 < b1.nodes(); ++l1) {
        for (std::size_t l2 = 0; l2 < n2; ++l2) {
          table_[k * count + l1 * n2 + l2] = b1.psi(m1, l1) * b2.psi(m2, l2);
        }
      }
    }
  }
}

std::vector<double> SgBasis::values_at(std::span<const double> z) const {
  if (z.size() != factors_.size()) {
    throw ShapeError("parameter point has " + std::to_string(z.size()) + " entries, basis has " +
                     std::to_string(factors_.size()));
  }
  const auto v1 = factors_[0].values_at(z[0]);
  if (factors_.size() == 1) {
    return v1;
  }
  const auto v2 = factors_[1].values_at(z[1]);
  std::vector<double> out(v1.size() * v2.size());
  for (std::size_t m1 = 0; m1 < v1.size(); ++m1) {
    for (std::size_t m2 = 0; m2 < v2.size(); ++m2) {
      out[m1 * v2.size() + m2] = v1[m1] * v2[m2];
    }
  }
  return out;
}

std::vector<double> SgBasis::project(std::span<const double> nodal, std::size_t cols) const {
  if (nodal.size() != nodes() * cols) {
    throw ShapeError("nodal table has " + std::to_string(nodal.size()) + " entries, expected " +
                     std::to_string(nodes()) + " x " + std::to_string(cols));
  }
  std::vector<double> out(modes_ * cols, 0.0);
  for (std::size_t k = 0; k < modes_; ++k) {
    for (std::size_t l = 0; l < nodes(); ++l) {
      const double f = psi(k, l) * weights_[l];
      for (std::size_t c = 0; c < cols; ++c) {
        out[k * cols + c] += f * nodal[l * cols + c];
      }
    }
  }
  return out;
}

std::vector<double> SgBasis::evaluate(std::span<const double> coefficients, std::size_t cols) const {
  if (coefficients.size() != modes_ * cols) {
    throw ShapeError("coefficient table has " + std::to_string(coefficients.size()) +
                     " entries, expected " + std::to_string(modes_) + " x " + std::to_string(cols));
  }
  std::vector<double> out(nodes() * cols, 0.0);
  for (std::size_t l = 0; l < nodes(); ++l) {
    for (std::size_t k = 0; k < modes_; ++k) {
      const double f = psi(k, l);
      for (std::size_t c = 0; c < cols; ++c) {
        out[l * cols + c] += f * coefficients[k * cols + c];
      }
    }
  }
  return out;
}

std::vector<double> SgBasis::evaluate_at(std::span<const double> coefficients, std::size_t cols,
                                         std::span<const double> z) const {
  if (coefficients.size() != modes_ * cols) {
    throw ShapeError("coefficient table has " + std::to_string(coefficients.size()) +
                     " entries, expected " + std::to_string(modes_) + " x " + std::to_string(cols));
  }
  const auto psi_z = values_at(z);
  std::vector<double> out(cols, 0.0);
  for (std::size_t k = 0; k < modes_; ++k) {
    for (std::size_t c = 0; c < cols; ++c) {
      out[c] += psi_z[k] * coefficients[k * cols + c];
    }
  }
  return out;
}

std::vector<double> project(std::span<const double> nodal, std::size_t cols, const GpcBasis& basis) {
  return SgBasis(basis).project(nodal, cols);
}

std::vector<double> evaluate(std::span<const double> coefficients, std::size_t cols,
                             const GpcBasis& basis) {
  return SgBasis(basis).evaluate(coefficients, cols);
}

std::vector<double> evaluate_at(std::span<const double> coefficients, std::size_t cols,
                                const GpcBasis& basis, double z) {
  const double point[1] = {z};
  return SgBasis(basis).evaluate_at(coefficients, cols, point);
}

}  // namespace landau::gpc
