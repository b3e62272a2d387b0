#ifndef CCOEF_QUADRATURE_HPP
#define CCOEF_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccoef/recurrence.hpp"

namespace ccoef {

/// Discrete measure: strictly increasing nodes with (possibly signed) weights.
///
/// `exact_degree`, when known, is the largest polynomial degree the rule
/// integrates exactly against the measure it represents.
class QuadratureRule {
public:
  QuadratureRule(std::vector<double> nodes, std::vector<double> weights,
                 std::string domain, std::string weight_descriptor,
                 std::optional<int> exact_degree = std::nullopt,
                 bool signed_measure = false);

  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }
  std::size_t size() const { return nodes_.size(); }
  const std::string& domain() const { return domain_; }
  const std::string& weight_descriptor() const { return weight_descriptor_; }
  std::optional<int> exact_degree() const { return exact_degree_; }
  bool is_signed() const { return signed_; }

  double total_mass() const;
  double max_abs_node() const;
  double integrate(const std::function<double(double)>& f) const;

private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::string domain_;
  std::string weight_descriptor_;
  std::optional<int> exact_degree_;
  bool signed_;
};

/// Eigenvalues (ascending) of the symmetric tridiagonal matrix with the given
/// diagonal and off-diagonal, by implicit-shift QL. Throws std::runtime_error
/// on non-convergence.
std::vector<double> tridiagonal_eigenvalues(std::span<const double> diagonal,
                                            std::span<const double> off_diagonal);

/// K-point Gauss rule of the measure behind `coeffs` (Golub-Welsch nodes,
/// polished by Newton on p_K, Christoffel weights).
QuadratureRule gauss_from_coeffs(const CoefficientSequence& coeffs, std::size_t K);

/// Gauss-Chebyshev rule for (1-x^2)^{-1/2} on (-1, 1).
QuadratureRule gauss_chebyshev(std::size_t K);

/// Rule for the signed measure (alpha - x) x^{alpha-1} e^{-x} dx on (0, inf):
/// a K-point Gauss rule for x^{alpha-1} e^{-x} with weights scaled by
/// (alpha - node).
QuadratureRule signed_laguerre_rule(double alpha, std::size_t K);

/// Tanh-sinh discretization of (1-x^2)^gamma dx on (-1, 1), gamma > -1.
/// Not a Gauss rule; used as the base measure for the Stieltjes process.
/// Nodes that coincide in double precision are merged.
QuadratureRule tanh_sinh_jacobi_rule(double gamma, double step = 1.0 / 128.0);

/// Multiplies every weight by density(node). `density_degree` is the
/// polynomial degree of the density and lowers the certified exactness.
QuadratureRule with_density(const QuadratureRule& rule,
                            const std::function<double(double)>& density,
                            int density_degree, std::string weight_descriptor);

/// Gauss rule for (1-x^2)^gamma built from Stieltjes coefficients of the
/// tanh-sinh discretization.
QuadratureRule gauss_jacobi_symmetric(double gamma, std::size_t K);

/// Integral of p_m q_n against the rule's measure, polynomials evaluated by
/// their recurrences. `density_degree` is the polynomial degree of the
/// measure's density relative to the rule's base weight; when the rule's
/// certified exactness does not cover m + n + density_degree a warning is
/// written to std::clog.
double oracle_entry(const CoefficientSequence& p, const CoefficientSequence& q,
                    const QuadratureRule& eta_rule, long m, long n,
                    int density_degree = 0);

/// True when the rule's certified exactness covers the product p_m q_n.
bool exactness_certified(const QuadratureRule& rule, long m, long n,
                         int density_degree = 0);

/// Default oracle node count for entry (m, n).
inline std::size_t oracle_nodes(long m, long n) {
  return static_cast<std::size_t>(m + n + 16);
}

}  // namespace ccoef

#endif  // CCOEF_QUADRATURE_HPP
