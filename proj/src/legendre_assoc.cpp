#include "ccoef/legendre_assoc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ccoef/special.hpp"

namespace ccoef {

double eval_assoc_legendre(long n, long m, double x) {
  if (m < 0 || m > n) throw std::invalid_argument("eval_assoc_legendre: need 0 <= m <= n");
  if (!(std::abs(x) <= 1.0)) throw std::invalid_argument("eval_assoc_legendre: need |x| <= 1");

  // P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}
  const double s = std::sqrt((1.0 - x) * (1.0 + x));
  double pmm = 1.0;
  for (long k = 1; k <= m; ++k) pmm *= -(2.0 * k - 1.0) * s;
  if (n == m) return pmm;

  // (n-m+1) P_{n+1} = (2n+1) x P_n - (n+m) P_{n-1}, with P_{m-1}^m = 0.
  double prev = pmm;
  double cur = (2.0 * m + 1.0) * x * pmm;
  for (long k = m + 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0) * x * cur - static_cast<double>(k + m) * prev) /
                        static_cast<double>(k - m + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> g_boundary_even(long m, long kmax) {
  if (m < 0 || kmax < 0) throw std::invalid_argument("g_boundary_even: need m, kmax >= 0");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(kmax) + 1);
  for (long k = 0; k <= kmax; ++k) {
    const double lg = std::log(std::numbers::pi) + log_factorial(2 * m) -
                      static_cast<double>(2 * m + 2 * k) * std::log(4.0) +
                      log_binomial(2 * k, k) + log_binomial(2 * m, m) +
                      log_binomial(2 * m + 2 * k, m + k);
    out.push_back(std::exp(lg));
  }
  return out;
}

std::vector<double> g_boundary_odd(long m, long kmax) {
  if (m < 0 || kmax < 0) throw std::invalid_argument("g_boundary_odd: need m, kmax >= 0");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(kmax) + 1);
  for (long k = 0; k <= kmax; ++k) {
    const double lg = std::log(2.0 * std::numbers::pi * static_cast<double>(m + 1)) -
                      static_cast<double>(2 * m + 2 * k + 1) * std::log(4.0) +
                      log_factorial(2 * m) + log_binomial(2 * k, k) +
                      log_binomial(2 * m + 1, m) + log_binomial(2 * m + 2 * k + 1, m + k);
    out.push_back(std::exp(lg));
  }
  return out;
}

GTable::GTable(long order, long truncation, std::vector<std::vector<double>> upper)
    : order_(order), truncation_(truncation), upper_(std::move(upper)) {
  const auto size = static_cast<std::size_t>(truncation - order + 1);
  if (upper_.size() != size) throw std::invalid_argument("GTable: wrong number of rows");
  for (std::size_t i = 0; i < size; ++i)
    if (upper_[i].size() != size - i) throw std::invalid_argument("GTable: wrong row length");
}

double GTable::operator()(long l, long n) const {
  if (l < order_ || n < order_ || l > truncation_ || n > truncation_) {
    std::ostringstream os;
    os << "g^" << order_ << "_{" << l << "," << n << "} outside [" << order_ << ", "
       << truncation_ << "]";
    throw std::out_of_range(os.str());
  }
  const auto i = static_cast<std::size_t>(std::min(l, n) - order_);
  const auto j = static_cast<std::size_t>(std::max(l, n) - order_);
  return upper_[i][j - i];
}

double GTable::max_abs() const {
  double mx = 0.0;
  for (const auto& r : upper_)
    for (double v : r) mx = std::max(mx, std::abs(v));
  return mx;
}

std::vector<std::vector<double>> GTable::dense() const {
  const long size = truncation_ - order_ + 1;
  std::vector<std::vector<double>> out(static_cast<std::size_t>(size),
                                       std::vector<double>(static_cast<std::size_t>(size)));
  for (long i = 0; i < size; ++i)
    for (long j = 0; j < size; ++j)
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (*this)(order_ + i, order_ + j);
  return out;
}

GTable g_fill(long m, long N) {
  if (m < 0) throw std::invalid_argument("g_fill: order must be >= 0");
  if (N < m) throw std::invalid_argument("g_fill: truncation N must be >= m");
  const long size = N - m + 1;

  // rows[i][j] = g_{m+i, m+j}. Each filled row is one column shorter than
  // the row above, so the seeds are made long enough to leave `size`
  // columns in the last row.
  const long width1 = std::max<long>(2 * (size - 1), size);
  const long width0 = width1 + 1;
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<std::size_t>(size));

  {
    const auto even = g_boundary_even(m, width0 / 2);
    std::vector<double> r(static_cast<std::size_t>(width0), 0.0);
    for (long j = 0; j < width0; j += 2) r[static_cast<std::size_t>(j)] = even[static_cast<std::size_t>(j / 2)];
    rows.push_back(std::move(r));
  }
  if (size > 1) {
    const auto odd = g_boundary_odd(m, width1 / 2);
    std::vector<double> r(static_cast<std::size_t>(width1), 0.0);
    for (long j = 1; j < width1; j += 2) r[static_cast<std::size_t>(j)] = odd[static_cast<std::size_t>((j - 1) / 2)];
    rows.push_back(std::move(r));
  }

  for (long i = 1; i + 1 < size; ++i) {
    const long n = m + i;
    const auto& cur = rows[static_cast<std::size_t>(i)];
    const auto& prev = rows[static_cast<std::size_t>(i - 1)];
    const long width = static_cast<long>(cur.size()) - 1;
    std::vector<double> next(static_cast<std::size_t>(width), 0.0);
    for (long j = 0; j < width; ++j) {
      // Parity: g_{n+1,l} vanishes unless n + 1 + l is even.
      if ((i + 1 + j) % 2 != 0) continue;
      if (j < i + 1) {
        // Mirror of an entry already computed in an earlier row.
        next[static_cast<std::size_t>(j)] =
            rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i + 1)];
        continue;
      }
      const long l = m + j;
      const double up = cur[static_cast<std::size_t>(j + 1)];
      const double down = j > 0 ? cur[static_cast<std::size_t>(j - 1)] : 0.0;
      const double two_l1 = 2.0 * static_cast<double>(l) + 1.0;
      const double two_n1 = 2.0 * static_cast<double>(n) + 1.0;
      const double bracket = static_cast<double>(l - m + 1) / two_l1 * up +
                             static_cast<double>(m + l) / two_l1 * down -
                             static_cast<double>(m + n) / two_n1 * prev[static_cast<std::size_t>(j)];
      next[static_cast<std::size_t>(j)] = two_n1 / static_cast<double>(n - m + 1) * bracket;
    }
    rows.push_back(std::move(next));
  }

  std::vector<std::vector<double>> upper(static_cast<std::size_t>(size));
  for (long i = 0; i < size; ++i) {
    const auto& r = rows[static_cast<std::size_t>(i)];
    upper[static_cast<std::size_t>(i)].assign(r.begin() + i, r.begin() + size);
  }
  return GTable(m, N, std::move(upper));
}

double g_residual(const GTable& t) {
  const long m = t.order(), N = t.truncation();
  auto g = [&t, m](long a, long b) { return (a < m || b < m) ? 0.0 : t(a, b); };
  double worst = 0.0;
  for (long n = m; n < N; ++n) {
    for (long l = m; l < N; ++l) {
      const double lhs = static_cast<double>(n - m + 1) / (2.0 * n + 1.0) * g(n + 1, l) +
                         static_cast<double>(m + n) / (2.0 * n + 1.0) * g(n - 1, l);
      const double rhs = static_cast<double>(l - m + 1) / (2.0 * l + 1.0) * g(n, l + 1) +
                         static_cast<double>(m + l) / (2.0 * l + 1.0) * g(n, l - 1);
      const double d = std::abs(lhs - rhs);
      if (!(d <= worst)) worst = d;
    }
  }
  return worst;
}

std::vector<double> G_sequence(long m, long nmax) {
  if (m < 0 || nmax < m) throw std::invalid_argument("G_sequence: need 0 <= m <= nmax");
  // G_m^m from g^m_{m,m} = (-1)^m (2m)!/(2^m m!) G_m^m.
  const double log_gmm = std::log(std::numbers::pi) + log_factorial(2 * m) +
                         2.0 * (log_binomial(2 * m, m) - static_cast<double>(m) * std::log(4.0));
  const double log_G = log_gmm + static_cast<double>(m) * std::log(2.0) + log_factorial(m) -
                       log_factorial(2 * m);
  std::vector<double> G(static_cast<std::size_t>(nmax - m + 1), 0.0);
  G[0] = (m % 2 == 0 ? 1.0 : -1.0) * std::exp(log_G);
  for (long n = m + 1; n + 1 <= nmax; n += 2) {
    const double ratio = static_cast<double>(n * n - m * m) /
                         static_cast<double>((n + 1) * (n + 1) - m * m);
    G[static_cast<std::size_t>(n + 1 - m)] = ratio * G[static_cast<std::size_t>(n - 1 - m)];
  }
  return G;
}

std::vector<double> H_sequence(long m, long nmax) {
  const auto G = G_sequence(m, nmax);
  std::vector<double> H(G.size(), 0.0);
  for (long n = m + 1; n <= nmax; ++n)
    H[static_cast<std::size_t>(n - m)] =
        static_cast<double>(m + n) / static_cast<double>(m + n + 1) * G[static_cast<std::size_t>(n - 1 - m)];
  return H;
}

GSpotValues g_spot_checks(long m) {
  if (m < 0) throw std::invalid_argument("g_spot_checks: m must be >= 0");
  const double md = static_cast<double>(m);
  const double log_a = std::log(std::numbers::pi) + log_factorial(2 * m) -
                       (2.0 * md + 1.0) * std::log(4.0) + log_binomial(2 * m, m) +
                       log_binomial(2 * m + 1, m);
  const double log_b = std::log(std::numbers::pi) + log_factorial(2 * m + 1) - std::log(2.0) -
                       (2.0 * md + 2.0) * std::log(4.0) +
                       std::log((8.0 * md * md + 20.0 * md + 11.0) / (2.0 * md + 3.0)) +
                       log_binomial(2 * m, m) + log_binomial(2 * m + 3, m + 1);
  return {std::exp(log_a), std::exp(log_b)};
}

}  // namespace ccoef
