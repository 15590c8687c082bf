#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace nlsstab {

struct Term {
  double coefficient = 0;
  double exponent = 0;
};

// f(s) = Σ cᵢ s^{eᵢ}, real exponents strictly increasing, coefficients nonzero.
class GeneralizedPolynomial {
public:
  GeneralizedPolynomial() = default;

  explicit GeneralizedPolynomial(std::vector<Term> terms) : terms_(std::move(terms)) {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].coefficient == 0.0 || !std::isfinite(terms_[i].coefficient))
        throw std::invalid_argument("generalized polynomial: coefficients must be nonzero and finite");
      if (!std::isfinite(terms_[i].exponent))
        throw std::invalid_argument("generalized polynomial: exponents must be finite");
      if (i > 0 && !(terms_[i - 1].exponent < terms_[i].exponent))
        throw std::invalid_argument("generalized polynomial: exponents must be strictly increasing");
    }
  }

  // Sorts, merges equal exponents and drops zero coefficients.
  static GeneralizedPolynomial from_terms(std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    std::vector<Term> merged;
    for (const auto& t : raw) {
      if (!merged.empty() && merged.back().exponent == t.exponent)
        merged.back().coefficient += t.coefficient;
      else
        merged.push_back(t);
    }
    std::erase_if(merged, [](const Term& t) { return t.coefficient == 0.0; });
    return GeneralizedPolynomial(std::move(merged));
  }

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  double operator()(double s) const {
    double sum = 0;
    for (const auto& t : terms_) sum += t.coefficient * std::pow(s, t.exponent);
    return sum;
  }

  // d/ds; the constant term (if any) disappears.
  GeneralizedPolynomial derivative() const {
    std::vector<Term> out;
    for (const auto& t : terms_)
      if (t.exponent != 0.0) out.push_back({t.coefficient * t.exponent, t.exponent - 1});
    return GeneralizedPolynomial(std::move(out));
  }

  // Multiplies by s^{shift}; positive zeros are unchanged.
  GeneralizedPolynomial shifted(double shift) const {
    auto out = terms_;
    for (auto& t : out) t.exponent += shift;
    return GeneralizedPolynomial(std::move(out));
  }

private:
  std::vector<Term> terms_;
};

// Number of sign changes in the coefficient sequence, which bounds the number of
// positive zeros from above.
inline int sign_changes(const GeneralizedPolynomial& gp) {
  int count = 0;
  const auto t = gp.terms();
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i - 1].coefficient * t[i].coefficient < 0) ++count;
  return count;
}

// Counts sign changes of gp on a geometric grid of n points spanning
// [s_max·1e−12, s_max], confirming each by bisection.
inline int count_positive_roots_sampled(const GeneralizedPolynomial& gp, double s_max, int n) {
  if (n < 2) throw std::invalid_argument("count_positive_roots_sampled: n must be at least 2");
  if (!(s_max > 0)) throw std::invalid_argument("count_positive_roots_sampled: s_max must be positive");
  const double s_min = s_max * 1e-12;
  const double ratio = std::pow(s_max / s_min, 1.0 / (n - 1));
  int roots = 0;
  double lo = s_min;
  double f_lo = gp(lo);
  for (int k = 1; k < n; ++k) {
    const double hi = k == n - 1 ? s_max : s_min * std::pow(ratio, k);
    const double f_hi = gp(hi);
    if (f_lo == 0.0) {
      ++roots;
    } else if (f_lo * f_hi < 0) {
      double a = lo, b = hi, fa = f_lo;
      for (int it = 0; it < 200 && b - a > 1e-15 * b; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = gp(m);
        if (fm == 0.0) { a = b = m; break; }
        if ((fm < 0) == (fa < 0)) { a = m; fa = fm; } else { b = m; }
      }
      ++roots;
    }
    lo = hi;
    f_lo = f_hi;
  }
  if (f_lo == 0.0) ++roots;
  return roots;
}

// h(x) = (x^{p1} − x^{q1}) / (x^{p2} − x^{q2}) on (0,1); increasing when p1 ≥ p2 and q1 > q2.
inline double ratio_h(double x, double p1, double q1, double p2, double q2) {
  if (!(q1 > p1 && p1 >= 0 && q2 > p2 && p2 >= 0))
    throw std::invalid_argument("ratio_h: need q1 > p1 >= 0 and q2 > p2 >= 0");
  if (!(x > 0 && x < 1)) throw std::invalid_argument("ratio_h: x must lie in (0,1)");
  const double lx = std::log(x);
  return std::exp((p1 - p2) * lx) * std::expm1((q1 - p1) * lx) / std::expm1((q2 - p2) * lx);
}

inline double ratio_h_limit_at_one(double p1, double q1, double p2, double q2) {
  return (q1 - p1) / (q2 - p2);
}

} // namespace nlsstab
