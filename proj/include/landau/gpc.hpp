#ifndef LANDAU_GPC_HPP
#define LANDAU_GPC_HPP

// Generalized polynomial chaos on [0, 1]: Legendre (uniform) and Jacobi (Beta)
// orthonormal families, their Gauss rules, and nodal <-> modal transforms.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace landau::gpc {

/// Law of a scalar random parameter on [0, 1].
struct ParameterDistribution {
  enum class Kind { Uniform01, Beta };

  Kind kind = Kind::Uniform01;
  double alpha = 1.0;  // Beta shape parameters; 1, 1 for the uniform law
  double beta = 1.0;

  static ParameterDistribution uniform() { return {}; }
  static ParameterDistribution beta_law(double alpha, double beta) {
    return {Kind::Beta, alpha, beta};
  }

  /// Throws ParameterError for non-positive Beta shapes.
  void validate() const;

  /// p(z) on [0, 1]; 0 outside.
  double density(double z) const;

  /// E[z^k] = prod_{r<k} (alpha + r) / (alpha + beta + r).
  double moment(int k) const;

  std::string describe() const;
};

/// Monic three-term recurrence p_{n+1}(z) = (z - a_n) p_n(z) - b_n p_{n-1}(z) on [0, 1].
/// b_0 is the total mass (1).
struct Recurrence {
  std::vector<double> a;
  std::vector<double> b;
};

/// First `count` recurrence coefficients for the distribution.
Recurrence recurrence(const ParameterDistribution& dist, int count);

/// Orthonormal Psi_0..Psi_order at z (no domain check).
std::vector<double> orthonormal_values(const Recurrence& rec, int order, double z);

struct QuadratureRule {
  std::vector<double> nodes;    // ascending, interior to [0, 1]
  std::vector<double> weights;  // positive, sum to 1
};

/// L-point Gauss rule for p(z), exact for polynomials of degree <= 2L - 1.
QuadratureRule gauss_quadrature(const ParameterDistribution& dist, int num_nodes);

/// Default node count for order M.
inline int default_node_count(int order) { return 2 * (order + 1); }

/// Orthonormal family of order M with its quadrature rule and the (M+1) x L table Psi_m(z_l).
class GpcBasis {
 public:
  GpcBasis() = default;
  GpcBasis(const ParameterDistribution& dist, int order, int num_nodes);

  const ParameterDistribution& distribution() const { return dist_; }
  int order() const { return order_; }
  std::size_t modes() const { return static_cast<std::size_t>(order_) + 1; }
  std::size_t nodes() const { return rule_.nodes.size(); }
  const std::vector<double>& node_values() const { return rule_.nodes; }
  const std::vector<double>& weights() const { return rule_.weights; }
  double psi(std::size_t m, std::size_t l) const { return table_[m * nodes() + l]; }

  /// Psi_0..Psi_M at z; throws DomainError outside [0, 1].
  std::vector<double> values_at(double z) const;

 private:
  ParameterDistribution dist_;
  int order_ = 0;
  Recurrence rec_;
  QuadratureRule rule_;
  std::vector<double> table_;
};

/// build_basis with L = default_node_count(M) when num_nodes <= 0.
GpcBasis build_basis(const ParameterDistribution& dist, int order, int num_nodes = 0);

/// Independent pair (z1, z2) with the product basis Psi^(1)_m Psi^(2)_n.
struct TensorGpcBasis {
  GpcBasis first;
  GpcBasis second;
};

/// Flattened view used by the solver: one or two independent parameters.
/// Mode index k = m1 * (M2 + 1) + m2 and node index l = l1 * L2 + l2.
class SgBasis {
 public:
  SgBasis() = default;
  explicit SgBasis(GpcBasis basis);
  explicit SgBasis(TensorGpcBasis basis);

  int dimensions() const { return static_cast<int>(factors_.size()); }
  const std::vector<GpcBasis>& factors() const { return factors_; }
  std::size_t modes() const { return modes_; }
  std::size_t nodes() const { return weights_.size(); }
  double weight(std::size_t l) const { return weights_[l]; }
  const std::vector<double>& weights() const { return weights_; }
  double psi(std::size_t k, std::size_t l) const { return table_[k * nodes() + l]; }

  /// Parameter point of node l; unused coordinates are 0.
  std::array<double, 2> node(std::size_t l) const { return points_[l]; }

  /// All mode values at an arbitrary point; z must have dimensions() entries in [0, 1].
  std::vector<double> values_at(std::span<const double> z) const;

  /// coefficients (modes x cols) = sum_l nodal(l, :) Psi_k(z_l) w_l.
  std::vector<double> project(std::span<const double> nodal, std::size_t cols) const;

  /// nodal (nodes x cols) = sum_k coefficients(k, :) Psi_k(z_l).
  std::vector<double> evaluate(std::span<const double> coefficients, std::size_t cols) const;

  /// sum_k coefficients(k, :) Psi_k(z).
  std::vector<double> evaluate_at(std::span<const double> coefficients, std::size_t cols,
                                  std::span<const double> z) const;

 private:
  void assemble();

  std::vector<GpcBasis> factors_;
  std::size_t modes_ = 0;
  std::vector<double> weights_;
  std::vector<std::array<double, 2>> points_;
  std::vector<double> table_;
};

/// Projection of L x d nodal values onto a 1-D basis: (M+1) x d coefficients.
std::vector<double> project(std::span<const double> nodal, std::size_t cols, const GpcBasis& basis);

/// (M+1) x d coefficients to L x d values at the quadrature nodes.
std::vector<double> evaluate(std::span<const double> coefficients, std::size_t cols,
                             const GpcBasis& basis);

/// (M+1) x d coefficients to a d-vector at z in [0, 1].
std::vector<double> evaluate_at(std::span<const double> coefficients, std::size_t cols,
                                const GpcBasis& basis, double z);

}  // namespace landau::gpc

#endif  // LANDAU_GPC_HPP
