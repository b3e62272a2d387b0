#include "ccoef/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ccoef {

double SignedLog::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_abs);
}

SignedLog& SignedLog::operator*=(const SignedLog& o) {
  sign *= o.sign;
  log_abs = sign == 0 ? -std::numeric_limits<double>::infinity() : log_abs + o.log_abs;
  return *this;
}

double log_factorial(long n) {
  if (n < 0) throw std::invalid_argument("log_factorial: negative argument");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(long n, long k) {
  if (k < 0 || k > n) throw std::invalid_argument("log_binomial: k outside [0, n]");
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

SignedLog pochhammer(double z, long k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative length");
  SignedLog out;
  for (long j = 0; j < k; ++j) {
    const double f = z + static_cast<double>(j);
    if (f == 0.0) return {0, -std::numeric_limits<double>::infinity()};
    if (f < 0.0) out.sign = -out.sign;
    out.log_abs += std::log(std::abs(f));
  }
  return out;
}

}  // namespace ccoef
