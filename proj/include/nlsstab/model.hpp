#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nlsstab {

// Signs of the lowest and highest power: F = focusing (+1), D = defocusing (−1).
enum class CaseLabel { FF, FD, DF, DD };

inline std::string_view to_string(CaseLabel c) {
  switch (c) {
  case CaseLabel::FF: return "FF";
  case CaseLabel::FD: return "FD";
  case CaseLabel::DF: return "DF";
  case CaseLabel::DD: return "DD";
  }
  return "?";
}

inline CaseLabel classify_case(int sign1, int sign3) {
  if ((sign1 != 1 && sign1 != -1) || (sign3 != 1 && sign3 != -1))
    throw std::domain_error("signs must be +1 or -1, got (" + std::to_string(sign1) + ", " +
                            std::to_string(sign3) + ")");
  if (sign1 > 0)
    return sign3 > 0 ? CaseLabel::FF : CaseLabel::FD;
  return sign3 > 0 ? CaseLabel::DF : CaseLabel::DD;
}

// Normalized nonlinearity f(u) = a₁|u|^{p−1}u − γ|u|^{q−1}u + a₃|u|^{r−1}u with |a₁| = |a₃| = 1.
// γ is not part of the parameter set; it is one of the two query coordinates.
struct NonlinearityParams {
  double p = 2;
  double q = 3;
  double r = 4;
  int sign1 = 1;
  int sign3 = 1;

  static NonlinearityParams make(double p, double q, double r, int sign1, int sign3) {
    NonlinearityParams out{p, q, r, sign1, sign3};
    out.validate();
    return out;
  }

  void validate() const {
    if (!(std::isfinite(p) && std::isfinite(q) && std::isfinite(r)))
      throw std::domain_error("exponents must be finite");
    if (!(1.0 < p && p < q && q < r))
      throw std::domain_error("exponents must satisfy 1 < p < q < r");
    (void)classify_case(sign1, sign3);
  }

  CaseLabel label() const { return classify_case(sign1, sign3); }
  double a1() const { return static_cast<double>(sign1); }
  double a3() const { return static_cast<double>(sign3); }

  // *F: highest power focusing; F*: lowest power focusing.
  bool top_focusing() const { return sign3 > 0; }
  bool bottom_focusing() const { return sign1 > 0; }

  friend bool operator==(const NonlinearityParams&, const NonlinearityParams&) = default;
};

struct QueryPoint {
  double omega = 0;
  double gamma = 0;
};

// u(t,x) = κ v(x/λ, t/λ²) maps general coefficients (a₁,a₂,a₃) to (b,c,d) with |b| = |d| = 1.
struct ScalingReduction {
  double kappa = 1;
  double lambda = 1;
  NonlinearityParams normalized;
  double gamma = 0;
  double b = 1;
  double c = 0;
  double d = 1;
};

inline ScalingReduction normalize(double a1, double a2, double a3, double p, double q, double r) {
  if (a1 == 0.0 || a3 == 0.0)
    throw std::domain_error("normalize: a1 and a3 must be nonzero");
  if (!(std::isfinite(a1) && std::isfinite(a2) && std::isfinite(a3)))
    throw std::domain_error("normalize: coefficients must be finite");
  const auto params = NonlinearityParams::make(p, q, r, a1 > 0 ? 1 : -1, a3 > 0 ? 1 : -1);

  ScalingReduction out;
  out.kappa = std::pow(std::abs(a1 / a3), 1.0 / (r - p));
  out.lambda = std::pow(std::abs(a3) / std::pow(std::abs(a1), (r - 1) / (p - 1)),
                        (p - 1) / (2 * (r - p)));
  const double l2 = out.lambda * out.lambda;
  out.b = a1 * std::pow(out.kappa, p - 1) * l2;
  out.c = a2 * std::pow(out.kappa, q - 1) * l2;
  out.d = a3 * std::pow(out.kappa, r - 1) * l2;
  out.normalized = params;
  out.gamma = -out.c;
  return out;
}

} // namespace nlsstab
