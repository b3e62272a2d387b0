#ifndef CCOEF_FAMILIES_HPP
#define CCOEF_FAMILIES_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ccoef/crossrule.hpp"

namespace ccoef {

enum class Symmetry { Symmetric, LowerTriangular };

/// Closed-form table. Entries outside `support` are exactly zero and are
/// never passed to the evaluator.
struct ClosedFormTable {
  std::string label;
  Symmetry symmetry;
  std::function<double(long, long)> evaluator;
  std::function<bool(long, long)> support;

  double operator()(long m, long n) const;
  /// Rectangular [0, rows) x [0, cols) table.
  CoefficientTable tabulate(std::size_t rows, std::size_t cols) const;
};

// Orthonormal Legendre pair with the x^2 dx measure on (-1, 1).
double legendre_x2_closed(long m, long n);

// Orthonormal Laguerre(alpha) -> Laguerre(beta) connection coefficients
// against x^beta e^{-x}.
double laguerre_connection_boundary(long m, double alpha, double beta);
double laguerre_connection_closed(long m, long n, double alpha, double beta);

/// Orthonormal Laguerre(alpha) pair against the signed measure
/// d(x^alpha e^{-x}) = (alpha - x) x^{alpha-1} e^{-x} dx. Zero diagonal,
/// symmetric completion.
double laguerre_signed_closed(long m, long n, double alpha);

/// Integral of (1-x^2)^{alpha-1} P_m^(alpha,alpha) P_n^(alpha,alpha) over
/// (-1, 1) in the classical Jacobi normalization.
double ultraspherical_F_closed(long m, long n, double alpha);

ClosedFormTable legendre_x2_table();
ClosedFormTable laguerre_connection_table(double alpha, double beta);
ClosedFormTable laguerre_signed_table(double alpha);
ClosedFormTable ultraspherical_F_table(double alpha);

/// Entry-wise T_{m,n} / sqrt(h_m h_n): classical to orthonormal scaling.
CoefficientTable to_orthonormal(const CoefficientTable& classical,
                                const std::vector<double>& norms);
/// Entry-wise T_{m,n} * sqrt(h_m h_n).
CoefficientTable to_classical(const CoefficientTable& orthonormal,
                              const std::vector<double>& norms);

}  // namespace ccoef

#endif  // CCOEF_FAMILIES_HPP
