#ifndef CCOEF_SPECIAL_HPP
#define CCOEF_SPECIAL_HPP

namespace ccoef {

/// A real number stored as sign * exp(log_abs). sign is -1, 0 or +1; a zero
/// value has sign 0 and log_abs = -inf.
struct SignedLog {
  int sign = 1;
  double log_abs = 0.0;

  double value() const;
  SignedLog& operator*=(const SignedLog& o);
};

double log_factorial(long n);
double log_binomial(long n, long k);

/// Rising factorial (z)_k = z (z+1) ... (z+k-1) as an iterated product in
/// log space. Exactly zero when a factor vanishes.
SignedLog pochhammer(double z, long k);

}  // namespace ccoef

#endif  // CCOEF_SPECIAL_HPP
