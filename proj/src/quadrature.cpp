#include "ccoef/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ccoef {

QuadratureRule::QuadratureRule(std::vector<double> nodes, std::vector<double> weights,
                               std::string domain, std::string weight_descriptor,
                               std::optional<int> exact_degree, bool signed_measure)
    : nodes_(std::move(nodes)),
      weights_(std::move(weights)),
      domain_(std::move(domain)),
      weight_descriptor_(std::move(weight_descriptor)),
      exact_degree_(exact_degree),
      signed_(signed_measure) {
  if (nodes_.size() != weights_.size())
    throw std::invalid_argument("quadrature rule: node and weight counts differ");
  if (nodes_.empty()) throw std::invalid_argument("quadrature rule: no nodes");
  for (std::size_t k = 1; k < nodes_.size(); ++k)
    if (!(nodes_[k] > nodes_[k - 1]))
      throw std::invalid_argument("quadrature rule: nodes must be strictly increasing");
  if (!signed_)
    for (double w : weights_)
      if (!(w > 0.0))
        throw std::invalid_argument("quadrature rule: non-positive weight for a positive measure");
}

double QuadratureRule::total_mass() const {
  double s = 0.0;
  for (double w : weights_) s += w;
  return s;
}

double QuadratureRule::max_abs_node() const {
  return std::max(std::abs(nodes_.front()), std::abs(nodes_.back()));
}

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
  double s = 0.0;
  for (std::size_t k = 0; k < nodes_.size(); ++k) s += weights_[k] * f(nodes_[k]);
  return s;
}

std::vector<double> tridiagonal_eigenvalues(std::span<const double> diagonal,
                                            std::span<const double> off_diagonal) {
  const std::size_t n = diagonal.size();
  if (n == 0) return {};
  if (off_diagonal.size() + 1 != n)
    throw std::invalid_argument("tridiagonal_eigenvalues: off-diagonal must have n-1 entries");

  std::vector<double> d(diagonal.begin(), diagonal.end());
  std::vector<double> e(n, 0.0);
  std::copy(off_diagonal.begin(), off_diagonal.end(), e.begin());

  constexpr int kMaxIterations = 60;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-14 * dd) break;
      }
      if (m != l) {
        if (++iter > kMaxIterations)
          throw std::runtime_error("tridiagonal_eigenvalues: QL iteration did not converge");
        // Wilkinson-type implicit shift.
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        std::size_t i = m;
        bool deflated = false;
        while (i-- > l) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            deflated = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (deflated) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

namespace {

// p_K(x) * b_{K-1} and its derivative, from the orthonormal recurrence.
std::pair<double, double> scaled_top(const CoefficientSequence& c, std::size_t K, double x) {
  double p_prev = 0.0, p = 1.0 / std::sqrt(c.mass());
  double dp_prev = 0.0, dp = 0.0;
  for (std::size_t k = 0; k + 1 < K; ++k) {
    const long j = static_cast<long>(k);
    const double bk = c.b(j);
    const double next = ((x - c.a(j)) * p - c.b(j - 1) * p_prev) / bk;
    const double dnext = ((x - c.a(j)) * dp + p - c.b(j - 1) * dp_prev) / bk;
    p_prev = p;
    p = next;
    dp_prev = dp;
    dp = dnext;
  }
  const long j = static_cast<long>(K) - 1;
  const double top = (x - c.a(j)) * p - c.b(j - 1) * p_prev;
  const double dtop = (x - c.a(j)) * dp + p - c.b(j - 1) * dp_prev;
  return {top, dtop};
}

double christoffel_weight(const CoefficientSequence& c, std::size_t K, double x) {
  const auto p = c.evaluate_all(static_cast<long>(K) - 1, x);
  double s = 0.0;
  for (double v : p) s += v * v;
  return 1.0 / s;
}

}  // namespace

QuadratureRule gauss_from_coeffs(const CoefficientSequence& coeffs, std::size_t K) {
  if (K == 0) throw std::invalid_argument("gauss_from_coeffs: K must be positive");
  coeffs.ensure(K);
  std::vector<double> diag(K), off(K - 1);
  for (std::size_t k = 0; k < K; ++k) diag[k] = coeffs.a(static_cast<long>(k));
  for (std::size_t k = 0; k + 1 < K; ++k) off[k] = coeffs.b(static_cast<long>(k));
  std::vector<double> nodes = tridiagonal_eigenvalues(diag, off);

  double scale = 0.0;
  for (double x : nodes) scale = std::max(scale, std::abs(x));
  for (double& x : nodes) {
    for (int it = 0; it < 2; ++it) {
      const auto [f, df] = scaled_top(coeffs, K, x);
      if (df == 0.0) break;
      const double step = f / df;
      if (!(std::abs(step) < 1e-8 * std::max(scale, 1.0))) break;
      x -= step;
    }
  }
  std::sort(nodes.begin(), nodes.end());

  std::vector<double> weights(K);
  for (std::size_t k = 0; k < K; ++k) weights[k] = christoffel_weight(coeffs, K, nodes[k]);

  std::ostringstream label;
  label << "gauss[" << coeffs.label() << "]";
  return QuadratureRule(std::move(nodes), std::move(weights), "support of " + coeffs.label(),
                        label.str(), static_cast<int>(2 * K - 1));
}

QuadratureRule gauss_chebyshev(std::size_t K) {
  if (K == 0) throw std::invalid_argument("gauss_chebyshev: K must be positive");
  const double k2 = 2.0 * static_cast<double>(K);
  std::vector<double> nodes(K), weights(K, std::numbers::pi / static_cast<double>(K));
  for (std::size_t k = 1; k <= K; ++k) {
    // cos((2k-1)pi/(2K)) written as a sine so that the rule is exactly
    // antisymmetric; stored in ascending order.
    const double arg = static_cast<double>(static_cast<long>(2 * k) - 1 - static_cast<long>(K));
    nodes[k - 1] = std::sin(arg * std::numbers::pi / k2);
  }
  return QuadratureRule(std::move(nodes), std::move(weights), "(-1,1)", "(1-x^2)^(-1/2)",
                        static_cast<int>(2 * K - 1));
}

QuadratureRule signed_laguerre_rule(double alpha, std::size_t K) {
  if (!(alpha > 0.0)) throw std::invalid_argument("signed_laguerre_rule: alpha must be positive");
  if (K == 0) throw std::invalid_argument("signed_laguerre_rule: K must be positive");
  const QuadratureRule base = gauss_from_coeffs(family_coefficients(FamilySpec::laguerre(alpha - 1.0)), K);
  std::ostringstream label;
  label << "(" << alpha << "-x)x^(" << alpha << "-1)e^(-x)";
  return with_density(base, [alpha](double x) { return alpha - x; }, 1, label.str());
}

QuadratureRule tanh_sinh_jacobi_rule(double gamma, double step) {
  if (!(gamma > -1.0)) throw std::invalid_argument("tanh_sinh_jacobi_rule: gamma must exceed -1");
  if (!(step > 0.0)) throw std::invalid_argument("tanh_sinh_jacobi_rule: step must be positive");
  const double half_pi = 0.5 * std::numbers::pi;
  const double power = 2.0 * gamma + 2.0;

  // Right half t >= 0; the rule is symmetric.
  std::vector<double> xs, ws;
  for (long k = 0;; ++k) {
    const double t = static_cast<double>(k) * step;
    const double u = half_pi * std::sinh(t);
    // log sech(u) without overflow.
    const double log_sech = std::log(2.0) - u - std::log1p(std::exp(-2.0 * u));
    const double log_w = std::log(step * half_pi * std::cosh(t)) + power * log_sech;
    if (log_w < -700.0) break;
    xs.push_back(std::tanh(u));
    ws.push_back(std::exp(log_w));
  }

  std::vector<double> nodes, weights;
  nodes.reserve(2 * xs.size());
  weights.reserve(2 * xs.size());
  auto push = [&nodes, &weights](double x, double w) {
    if (!nodes.empty() && x == nodes.back()) weights.back() += w;
    else {
      nodes.push_back(x);
      weights.push_back(w);
    }
  };
  for (std::size_t i = xs.size(); i-- > 1;) push(-xs[i], ws[i]);
  for (std::size_t i = 0; i < xs.size(); ++i) push(xs[i], ws[i]);

  std::ostringstream label;
  label << "(1-x^2)^(" << gamma << ")";
  return QuadratureRule(std::move(nodes), std::move(weights), "(-1,1)", label.str());
}

QuadratureRule with_density(const QuadratureRule& rule,
                            const std::function<double(double)>& density,
                            int density_degree, std::string weight_descriptor) {
  std::vector<double> nodes(rule.nodes().begin(), rule.nodes().end());
  std::vector<double> weights(rule.size());
  bool is_signed = rule.is_signed();
  for (std::size_t k = 0; k < rule.size(); ++k) {
    weights[k] = rule.weights()[k] * density(nodes[k]);
    if (!(weights[k] > 0.0)) is_signed = true;
  }
  std::optional<int> exact;
  if (rule.exact_degree()) exact = *rule.exact_degree() - density_degree;
  return QuadratureRule(std::move(nodes), std::move(weights), rule.domain(),
                        std::move(weight_descriptor), exact, is_signed);
}

QuadratureRule gauss_jacobi_symmetric(double gamma, std::size_t K) {
  const QuadratureRule base = tanh_sinh_jacobi_rule(gamma);
  return gauss_from_coeffs(stieltjes_coeffs(base, K), K);
}

bool exactness_certified(const QuadratureRule& rule, long m, long n, int density_degree) {
  return rule.exact_degree() && *rule.exact_degree() >= m + n + density_degree;
}

double oracle_entry(const CoefficientSequence& p, const CoefficientSequence& q,
                    const QuadratureRule& eta_rule, long m, long n, int density_degree) {
  if (m < 0 || n < 0) throw std::invalid_argument("oracle_entry: indices must be >= 0");
  if (!exactness_certified(eta_rule, m, n, density_degree))
    std::clog << "warning: oracle_entry(" << m << ", " << n << ") on rule "
              << eta_rule.weight_descriptor() << " is not certified exact\n";
  const auto x = eta_rule.nodes();
  const auto w = eta_rule.weights();
  double s = 0.0;
  for (std::size_t k = 0; k < eta_rule.size(); ++k)
    s += w[k] * p.evaluate(m, x[k]) * q.evaluate(n, x[k]);
  return s;
}

}  // namespace ccoef
