#include "ccoef/families.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ccoef/special.hpp"

namespace ccoef {

double ClosedFormTable::operator()(long m, long n) const {
  if (m < 0 || n < 0) return 0.0;
  if (!support(m, n)) return 0.0;
  if (symmetry == Symmetry::Symmetric && m < n) return evaluator(n, m);
  return evaluator(m, n);
}

CoefficientTable ClosedFormTable::tabulate(std::size_t rows, std::size_t cols) const {
  std::vector<std::vector<double>> t(rows, std::vector<double>(cols));
  for (std::size_t m = 0; m < rows; ++m)
    for (std::size_t n = 0; n < cols; ++n)
      t[m][n] = (*this)(static_cast<long>(m), static_cast<long>(n));
  return CoefficientTable::rectangular(std::move(t), "closed form " + label);
}

double legendre_x2_closed(long m, long n) {
  if (m < 0 || n < 0) throw std::invalid_argument("legendre_x2_closed: negative index");
  if ((m + n) % 2 != 0 || std::abs(m - n) >= 3) return 0.0;
  if (m == n) {
    const double k = static_cast<double>(n);
    return (2.0 * k * k + 2.0 * k - 1.0) / ((2.0 * k - 1.0) * (2.0 * k + 3.0));
  }
  const double k = static_cast<double>(std::min(m, n));
  return (k + 1.0) * (k + 2.0) / ((2.0 * k + 3.0) * std::sqrt((2.0 * k + 1.0) * (2.0 * k + 5.0)));
}

double laguerre_connection_boundary(long m, double alpha, double beta) {
  if (m < 0) throw std::invalid_argument("laguerre_connection_boundary: negative index");
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw std::invalid_argument("laguerre_connection_boundary: parameters must exceed -1");
  SignedLog v = pochhammer(alpha - beta, m);
  if (v.sign == 0) return 0.0;
  v.log_abs += 0.5 * (std::lgamma(1.0 + beta) - log_factorial(m) -
                      std::lgamma(static_cast<double>(m) + 1.0 + alpha));
  if (m % 2 != 0) v.sign = -v.sign;
  return v.value();
}

double laguerre_connection_closed(long m, long n, double alpha, double beta) {
  if (m < 0 || n < 0) throw std::invalid_argument("laguerre_connection_closed: negative index");
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw std::invalid_argument("laguerre_connection_closed: parameters must exceed -1");
  if (n > m) return 0.0;
  const long k = m - n;
  SignedLog v = pochhammer(alpha - beta, k);
  if (v.sign == 0) return 0.0;
  v.log_abs += -log_factorial(k) +
               0.5 * (log_factorial(m) + std::lgamma(static_cast<double>(n) + 1.0 + beta) -
                      log_factorial(n) - std::lgamma(static_cast<double>(m) + 1.0 + alpha));
  if (k % 2 != 0) v.sign = -v.sign;
  return v.value();
}

double laguerre_signed_closed(long m, long n, double alpha) {
  if (m < 0 || n < 0) throw std::invalid_argument("laguerre_signed_closed: negative index");
  if (!(alpha > 0.0)) throw std::invalid_argument("laguerre_signed_closed: alpha must be positive");
  if (m == n) return 0.0;
  if (m < n) std::swap(m, n);
  const double log_ratio = log_factorial(m) + std::lgamma(static_cast<double>(n) + 1.0 + alpha) -
                           std::lgamma(static_cast<double>(m) + 1.0 + alpha) - log_factorial(n);
  return -0.5 * std::exp(0.5 * log_ratio);
}

double ultraspherical_F_closed(long m, long n, double alpha) {
  if (m < 0 || n < 0) throw std::invalid_argument("ultraspherical_F_closed: negative index");
  if (!(alpha > 0.0)) throw std::invalid_argument("ultraspherical_F_closed: alpha must be positive");
  if ((m + n) % 2 != 0) return 0.0;
  if (m < n) std::swap(m, n);
  const double dm = static_cast<double>(m), dn = static_cast<double>(n);
  const double log_v = alpha * std::log(4.0) - std::log(alpha) + std::lgamma(dm + 1.0 + alpha) +
                       std::lgamma(dn + 1.0 + alpha) - log_factorial(n) -
                       std::lgamma(dm + 1.0 + 2.0 * alpha);
  return std::exp(log_v);
}

namespace {

std::string param_label(const char* name, double alpha, const char* name2 = nullptr,
                        double beta = 0.0) {
  std::ostringstream os;
  os << name << "=" << alpha;
  if (name2) os << "," << name2 << "=" << beta;
  return os.str();
}

}  // namespace

ClosedFormTable legendre_x2_table() {
  return {"legendre-x2", Symmetry::Symmetric,
          [](long m, long n) { return legendre_x2_closed(m, n); },
          [](long m, long n) { return (m + n) % 2 == 0 && std::abs(m - n) < 3; }};
}

ClosedFormTable laguerre_connection_table(double alpha, double beta) {
  // Validates parameters up front.
  (void)laguerre_connection_closed(0, 0, alpha, beta);
  const bool equal = alpha == beta;
  return {"laguerre-connect(" + param_label("alpha", alpha, "beta", beta) + ")",
          Symmetry::LowerTriangular,
          [alpha, beta](long m, long n) { return laguerre_connection_closed(m, n, alpha, beta); },
          [equal](long m, long n) { return equal ? m == n : n <= m; }};
}

ClosedFormTable laguerre_signed_table(double alpha) {
  (void)laguerre_signed_closed(1, 0, alpha);
  return {"laguerre-signed(" + param_label("alpha", alpha) + ")", Symmetry::Symmetric,
          [alpha](long m, long n) { return laguerre_signed_closed(m, n, alpha); },
          [](long m, long n) { return m != n; }};
}

ClosedFormTable ultraspherical_F_table(double alpha) {
  (void)ultraspherical_F_closed(0, 0, alpha);
  return {"ultraspherical-f(" + param_label("alpha", alpha) + ")", Symmetry::Symmetric,
          [alpha](long m, long n) { return ultraspherical_F_closed(m, n, alpha); },
          [](long m, long n) { return (m + n) % 2 == 0; }};
}

namespace {

CoefficientTable rescale(const CoefficientTable& t, const std::vector<double>& norms, bool divide) {
  std::vector<std::vector<double>> out = t.data();
  for (std::size_t m = 0; m < out.size(); ++m) {
    for (std::size_t n = 0; n < out[m].size(); ++n) {
      if (m >= norms.size() || n >= norms.size())
        throw std::invalid_argument("rescale: not enough norm constants");
      const double s = std::sqrt(norms[m] * norms[n]);
      out[m][n] = divide ? out[m][n] / s : out[m][n] * s;
    }
  }
  return CoefficientTable(std::move(out), t.provenance());
}

}  // namespace

CoefficientTable to_orthonormal(const CoefficientTable& classical, const std::vector<double>& norms) {
  return rescale(classical, norms, true);
}

CoefficientTable to_classical(const CoefficientTable& orthonormal, const std::vector<double>& norms) {
  return rescale(orthonormal, norms, false);
}

}  // namespace ccoef
