#ifndef CCOEF_LEGENDRE_ASSOC_HPP
#define CCOEF_LEGENDRE_ASSOC_HPP

#include <cstddef>
#include <vector>

namespace ccoef {

/// Associated Legendre function P_n^m(x), 0 <= m <= n, |x| <= 1, including
/// the (-1)^m phase: P_1^1(x) = -sqrt(1 - x^2).
double eval_assoc_legendre(long n, long m, double x);

/// g^m_{m, m+2k} for k = 0..kmax.
std::vector<double> g_boundary_even(long m, long kmax);
/// g^m_{m+1, m+2k+1} for k = 0..kmax.
std::vector<double> g_boundary_odd(long m, long kmax);

/// g^m_{l,n} = integral over (-1, 1) of P_l^m P_n^m / sqrt(1 - x^2), stored
/// for m <= l, n <= N. Exactly symmetric, exact zeros at odd l + n.
class GTable {
public:
  GTable(long order, long truncation, std::vector<std::vector<double>> upper);

  long order() const { return order_; }
  long truncation() const { return truncation_; }
  /// Throws std::out_of_range unless m <= l, n <= N.
  double operator()(long l, long n) const;
  double max_abs() const;
  /// Rows l = m..N as a dense matrix.
  std::vector<std::vector<double>> dense() const;

private:
  long order_;
  long truncation_;
  std::vector<std::vector<double>> upper_;  // upper_[i][j - i] for i <= j
};

/// Fills g^m_{l,n} for m <= l, n <= N from the two seeded rows.
GTable g_fill(long m, long N);

/// Maximal violation of the three-term identity linking g_{n+1,l},
/// g_{n-1,l}, g_{n,l+1}, g_{n,l-1} over the table.
double g_residual(const GTable& table);

/// G_n^m for n = m..nmax (zero where m + n is odd).
std::vector<double> G_sequence(long m, long nmax);
/// H_n^m for n = m..nmax (zero where m + n is even).
std::vector<double> H_sequence(long m, long nmax);

struct GSpotValues {
  double g_m2_m;    // g^m_{m+2, m}
  double g_m2_m2;   // g^m_{m+2, m+2}
};
GSpotValues g_spot_checks(long m);

}  // namespace ccoef

#endif  // CCOEF_LEGENDRE_ASSOC_HPP
