#include "ccoef/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include "ccoef/quadrature.hpp"

namespace ccoef {

struct CoefficientSequence::Cache {
  Producer producer;
  std::mutex mutex;
  std::vector<double> a;
  std::vector<double> b;
};

CoefficientSequence::CoefficientSequence(std::string label, double mass,
                                         Producer producer,
                                         std::optional<std::size_t> limit)
    : label_(std::move(label)),
      mass_(mass),
      limit_(limit),
      cache_(std::make_shared<Cache>()) {
  if (!(mass > 0.0)) throw std::invalid_argument("measure mass must be positive");
  cache_->producer = std::move(producer);
}

CoefficientSequence CoefficientSequence::from_block(std::string label, double mass,
                                                    CoefficientBlock block) {
  if (block.a.size() != block.b.size())
    throw std::invalid_argument("coefficient block with unequal lengths");
  const std::size_t count = block.a.size();
  auto shared = std::make_shared<const CoefficientBlock>(std::move(block));
  return CoefficientSequence(
      std::move(label), mass,
      [shared](std::size_t) { return *shared; }, count);
}

void CoefficientSequence::ensure(std::size_t count) const {
  if (limit_ && count > *limit_) {
    std::ostringstream os;
    os << label_ << ": coefficients requested up to index " << count - 1
       << " but only " << *limit_ << " are available";
    throw std::out_of_range(os.str());
  }
  std::lock_guard lock(cache_->mutex);
  if (cache_->a.size() >= count) return;
  // Grow geometrically so repeated small extensions stay cheap.
  std::size_t target = std::max(count, 2 * cache_->a.size());
  if (limit_) target = std::min(target, *limit_);
  CoefficientBlock block = cache_->producer(target);
  if (block.a.size() < count || block.b.size() < count)
    throw std::logic_error(label_ + ": producer returned too few coefficients");
  for (std::size_t i = cache_->b.size(); i < block.b.size(); ++i) {
    if (!(block.b[i] > 0.0)) {
      std::ostringstream os;
      os << label_ << ": non-positive b_" << i << " = " << block.b[i];
      throw std::domain_error(os.str());
    }
  }
  cache_->a = std::move(block.a);
  cache_->b = std::move(block.b);
}

double CoefficientSequence::a(long n) const {
  if (n < 0) throw std::out_of_range("a_n requested for negative n");
  ensure(static_cast<std::size_t>(n) + 1);
  std::lock_guard lock(cache_->mutex);
  return cache_->a[static_cast<std::size_t>(n)];
}

double CoefficientSequence::b(long n) const {
  if (n == -1) return 0.0;
  if (n < -1) throw std::out_of_range("b_n requested for n < -1");
  ensure(static_cast<std::size_t>(n) + 1);
  std::lock_guard lock(cache_->mutex);
  return cache_->b[static_cast<std::size_t>(n)];
}

std::vector<double> CoefficientSequence::evaluate_all(long degree, double x) const {
  if (degree < 0) return {};
  std::vector<double> p(static_cast<std::size_t>(degree) + 1);
  p[0] = 1.0 / std::sqrt(mass_);
  if (degree == 0) return p;
  ensure(static_cast<std::size_t>(degree));
  double prev = 0.0;
  for (long k = 0; k < degree; ++k) {
    const auto i = static_cast<std::size_t>(k);
    p[i + 1] = ((x - a(k)) * p[i] - b(k - 1) * prev) / b(k);
    prev = p[i];
  }
  return p;
}

double CoefficientSequence::evaluate(long n, double x) const {
  if (n < 0) return 0.0;
  return evaluate_all(n, x).back();
}

std::pair<double, double> legendre_coeffs(long n) {
  if (n < 0) throw std::invalid_argument("legendre_coeffs: n must be >= 0");
  const double m = static_cast<double>(n);
  return {0.0, (m + 1.0) / std::sqrt((2.0 * m + 1.0) * (2.0 * m + 3.0))};
}

std::pair<double, double> laguerre_coeffs(long n, double beta) {
  if (n < 0) throw std::invalid_argument("laguerre_coeffs: n must be >= 0");
  if (!(beta > -1.0)) throw std::invalid_argument("laguerre_coeffs: beta must exceed -1");
  const double m = static_cast<double>(n);
  return {2.0 * m + 1.0 + beta, std::sqrt((m + 1.0) * (m + 1.0 + beta))};
}

namespace {

double inner(std::span<const double> w, const std::vector<double>& u,
             const std::vector<double>& v) {
  double s = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) s += w[k] * u[k] * v[k];
  return s;
}

CoefficientBlock stieltjes_block(const QuadratureRule& rule, std::size_t count) {
  const auto x = rule.nodes();
  const auto w = rule.weights();
  const std::size_t K = rule.size();
  const double tol = 1e-13 * rule.max_abs_node();
  const double mass = rule.total_mass();

  CoefficientBlock out;
  out.a.reserve(count);
  out.b.reserve(count);
  std::vector<double> prev(K, 0.0);
  std::vector<double> cur(K, 1.0 / std::sqrt(mass));
  std::vector<double> next(K);
  std::vector<double> xp(K);
  double b_prev = 0.0;
  for (std::size_t n = 0; n < count; ++n) {
    for (std::size_t k = 0; k < K; ++k) xp[k] = x[k] * cur[k];
    const double an = inner(w, xp, cur);
    for (std::size_t k = 0; k < K; ++k)
      next[k] = (x[k] - an) * cur[k] - b_prev * prev[k];
    const double norm2 = inner(w, next, next);
    const double bn = norm2 > 0.0 ? std::sqrt(norm2) : 0.0;
    if (!(bn > tol)) {
      std::ostringstream os;
      os << "Stieltjes breakdown: cannot form p_" << n + 1 << " (b_" << n
         << " = " << bn << "), measure has too few support points";
      throw BreakdownError(os.str(), n + 1);
    }
    for (std::size_t k = 0; k < K; ++k) next[k] /= bn;
    out.a.push_back(an);
    out.b.push_back(bn);
    std::swap(prev, cur);
    std::swap(cur, next);
    b_prev = bn;
  }
  return out;
}

}  // namespace

CoefficientSequence stieltjes_coeffs(const QuadratureRule& rule, std::size_t count) {
  if (count == 0) throw std::invalid_argument("stieltjes_coeffs: count must be positive");
  if (rule.is_signed())
    throw std::invalid_argument("stieltjes_coeffs: rule must represent a positive measure");
  return CoefficientSequence::from_block("stieltjes[" + rule.weight_descriptor() + "]",
                                         rule.total_mass(),
                                         stieltjes_block(rule, count));
}

FamilySpec::FamilySpec(Kind kind, Normalization normalization)
    : kind_(std::move(kind)), normalization_(normalization) {
  if (const auto* l = std::get_if<Laguerre>(&kind_); l && !(l->beta > -1.0))
    throw std::invalid_argument("Laguerre parameter beta must exceed -1");
  if (const auto* u = std::get_if<Ultraspherical>(&kind_); u && !(u->alpha > -1.0))
    throw std::invalid_argument("ultraspherical parameter alpha must exceed -1");
  if (const auto* c = std::get_if<CustomQuadrature>(&kind_); c && !c->rule)
    throw std::invalid_argument("custom family requires a quadrature rule");
  if (normalization_ == Normalization::Classical && !has_classical_convention())
    throw std::invalid_argument("family has no classical normalization");
}

bool FamilySpec::has_classical_convention() const {
  return !std::holds_alternative<CustomQuadrature>(kind_);
}

std::string FamilySpec::label() const {
  std::ostringstream os;
  std::visit(
      [&os](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, LegendreUnit>) os << "legendre";
        else if constexpr (std::is_same_v<T, Laguerre>) os << "laguerre(beta=" << k.beta << ")";
        else if constexpr (std::is_same_v<T, Ultraspherical>) os << "ultraspherical(alpha=" << k.alpha << ")";
        else os << "custom[" << k.rule->weight_descriptor() << "]";
      },
      kind_);
  return os.str();
}

CoefficientSequence family_coefficients(const FamilySpec& family) {
  const std::string label = family.label();
  return std::visit(
      [&label](const auto& k) -> CoefficientSequence {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, LegendreUnit>) {
          return CoefficientSequence(label, 2.0, [](std::size_t count) {
            CoefficientBlock blk;
            for (std::size_t n = 0; n < count; ++n) {
              auto [a, b] = legendre_coeffs(static_cast<long>(n));
              blk.a.push_back(a);
              blk.b.push_back(b);
            }
            return blk;
          });
        } else if constexpr (std::is_same_v<T, Laguerre>) {
          const double beta = k.beta;
          return CoefficientSequence(label, std::tgamma(1.0 + beta), [beta](std::size_t count) {
            CoefficientBlock blk;
            for (std::size_t n = 0; n < count; ++n) {
              auto [a, b] = laguerre_coeffs(static_cast<long>(n), beta);
              blk.a.push_back(a);
              blk.b.push_back(b);
            }
            return blk;
          });
        } else if constexpr (std::is_same_v<T, Ultraspherical>) {
          auto base = std::make_shared<const QuadratureRule>(tanh_sinh_jacobi_rule(k.alpha));
          // The tanh-sinh discretization resolves polynomials well past this degree.
          constexpr std::size_t kMaxCount = 120;
          return CoefficientSequence(
              label, base->total_mass(),
              [base](std::size_t count) { return stieltjes_block(*base, count); },
              kMaxCount);
        } else {
          const auto& rule = *k.rule;
          std::size_t count = rule.size() / 2;
          return CoefficientSequence::from_block(label, rule.total_mass(),
                                                 stieltjes_block(rule, count));
        }
      },
      family.kind());
}

double classical_poly(const FamilySpec& family, long n, double x) {
  if (n < 0) return 0.0;
  return std::visit(
      [n, x](const auto& k) -> double {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, LegendreUnit>) {
          double prev = 1.0, cur = x;
          if (n == 0) return prev;
          for (long j = 1; j < n; ++j) {
            const double next = ((2.0 * j + 1.0) * x * cur - j * prev) / (j + 1.0);
            prev = cur;
            cur = next;
          }
          return cur;
        } else if constexpr (std::is_same_v<T, Laguerre>) {
          const double beta = k.beta;
          double prev = 1.0, cur = 1.0 + beta - x;
          if (n == 0) return prev;
          for (long j = 1; j < n; ++j) {
            const double next =
                ((2.0 * j + beta + 1.0 - x) * cur - (j + beta) * prev) / (j + 1.0);
            prev = cur;
            cur = next;
          }
          return cur;
        } else if constexpr (std::is_same_v<T, Ultraspherical>) {
          // Jacobi recurrence with equal parameters; the x-independent
          // a^2 - b^2 term vanishes.
          const double al = k.alpha;
          double prev = 1.0, cur = (al + 1.0) * x;
          if (n == 0) return prev;
          for (long j = 2; j <= n; ++j) {
            const double s = 2.0 * j + 2.0 * al;
            const double lead = 2.0 * j * (j + 2.0 * al) * (s - 2.0);
            const double next =
                ((s - 1.0) * s * (s - 2.0) * x * cur - 2.0 * (j + al - 1.0) * (j + al - 1.0) * s * prev) /
                lead;
            prev = cur;
            cur = next;
          }
          return cur;
        } else {
          throw std::invalid_argument("custom family has no classical polynomials");
        }
      },
      family.kind());
}

std::vector<double> norm_constants(const FamilySpec& family, std::size_t count) {
  if (!family.has_classical_convention())
    throw std::invalid_argument("norm_constants: family has no classical convention");
  if (count == 0) return {};
  const auto coeffs = family_coefficients(family);
  const QuadratureRule rule = gauss_from_coeffs(coeffs, count + 2);
  std::vector<double> h(count, 0.0);
  const auto x = rule.nodes();
  const auto w = rule.weights();
  for (std::size_t k = 0; k < rule.size(); ++k) {
    for (std::size_t n = 0; n < count; ++n) {
      const double v = classical_poly(family, static_cast<long>(n), x[k]);
      h[n] += w[k] * v * v;
    }
  }
  return h;
}

}  // namespace ccoef
