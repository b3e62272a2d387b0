#ifndef CCOEF_RECURRENCE_HPP
#define CCOEF_RECURRENCE_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ccoef {

class QuadratureRule;

/// Raised by the discrete Stieltjes process when the measure has fewer
/// support points than the requested number of polynomials.
class BreakdownError : public std::runtime_error {
public:
  BreakdownError(const std::string& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}
  std::size_t index() const { return index_; }

private:
  std::size_t index_;
};

/// First `count` recurrence coefficients of an orthonormal family.
struct CoefficientBlock {
  std::vector<double> a;
  std::vector<double> b;
};

/// Recurrence coefficients (a_n, b_n) of an orthonormal family
///
///   b_n p_{n+1}(x) = (x - a_n) p_n(x) - b_{n-1} p_{n-1}(x),   b_{-1} = 0,
///
/// together with the total mass of the orthogonality measure, which fixes
/// p_0 = 1/sqrt(mass).
///
/// Values are produced lazily by a block producer and memoized. Copies share
/// the cache; access is serialized by an internal mutex, so a sequence can be
/// read from several threads.
class CoefficientSequence {
public:
  /// Produces at least the first `count` coefficients.
  using Producer = std::function<CoefficientBlock(std::size_t count)>;

  CoefficientSequence(std::string label, double mass, Producer producer,
                      std::optional<std::size_t> limit = std::nullopt);

  /// Wraps a fixed, already computed block.
  static CoefficientSequence from_block(std::string label, double mass,
                                        CoefficientBlock block);

  double a(long n) const;
  /// b(-1) is exactly 0.
  double b(long n) const;
  /// Forces generation of indices [0, count).
  void ensure(std::size_t count) const;

  const std::string& label() const { return label_; }
  double mass() const { return mass_; }
  /// Largest number of coefficients the producer can supply, if bounded.
  std::optional<std::size_t> limit() const { return limit_; }

  /// Orthonormal polynomials p_0..p_degree at x.
  std::vector<double> evaluate_all(long degree, double x) const;
  /// p_n(x) by forward recurrence.
  double evaluate(long n, double x) const;

private:
  struct Cache;
  std::string label_;
  double mass_;
  std::optional<std::size_t> limit_;
  std::shared_ptr<Cache> cache_;
};

// Closed-form coefficients.

/// Orthonormal Legendre on (-1, 1): a = 0, b = (n+1)/sqrt((2n+1)(2n+3)).
std::pair<double, double> legendre_coeffs(long n);
/// Orthonormal Laguerre for x^beta e^{-x}: a = 2n+1+beta, b = sqrt((n+1)(n+1+beta)).
std::pair<double, double> laguerre_coeffs(long n, double beta);

/// Discrete Stieltjes process on the nodes of `rule`.
CoefficientSequence stieltjes_coeffs(const QuadratureRule& rule,
                                     std::size_t count);

struct LegendreUnit {};
struct Laguerre {
  double beta;
};
struct Ultraspherical {
  double alpha;
};
struct CustomQuadrature {
  std::shared_ptr<const QuadratureRule> rule;
};

enum class Normalization { Orthonormal, Classical };

/// Names an orthogonality measure and a normalization convention.
class FamilySpec {
public:
  using Kind = std::variant<LegendreUnit, Laguerre, Ultraspherical,
                            CustomQuadrature>;

  FamilySpec(Kind kind, Normalization normalization = Normalization::Orthonormal);

  static FamilySpec legendre(Normalization n = Normalization::Orthonormal) {
    return FamilySpec(LegendreUnit{}, n);
  }
  static FamilySpec laguerre(double beta,
                             Normalization n = Normalization::Orthonormal) {
    return FamilySpec(Laguerre{beta}, n);
  }
  static FamilySpec ultraspherical(double alpha,
                                   Normalization n = Normalization::Orthonormal) {
    return FamilySpec(Ultraspherical{alpha}, n);
  }

  const Kind& kind() const { return kind_; }
  Normalization normalization() const { return normalization_; }
  bool has_classical_convention() const;
  std::string label() const;

private:
  Kind kind_;
  Normalization normalization_;
};

/// Orthonormal recurrence coefficients of the family's measure.
CoefficientSequence family_coefficients(const FamilySpec& family);

/// Classical polynomial of degree n at x: Legendre P_n, Laguerre L_n^(beta)
/// or Jacobi P_n^(alpha,alpha).
double classical_poly(const FamilySpec& family, long n, double x);

/// h_n = integral of the squared classical polynomial against the family's
/// measure, n < count, by Gauss quadrature.
std::vector<double> norm_constants(const FamilySpec& family, std::size_t count);

}  // namespace ccoef

#endif  // CCOEF_RECURRENCE_HPP
