#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "model.hpp"

namespace nlsstab {

enum class LimitClass { NegInfinity, FiniteNegative, ZeroMinus, ExactZero, ZeroPlus, FinitePositive, PosInfinity };

inline std::string_view to_string(LimitClass k) {
  switch (k) {
  case LimitClass::NegInfinity: return "-inf";
  case LimitClass::FiniteNegative: return "finite<0";
  case LimitClass::ZeroMinus: return "0-";
  case LimitClass::ExactZero: return "0";
  case LimitClass::ZeroPlus: return "0+";
  case LimitClass::FinitePositive: return "finite>0";
  case LimitClass::PosInfinity: return "+inf";
  }
  return "?";
}

// +1 for limits approached from above / positive, −1 from below, 0 for ExactZero.
inline int sign_of(LimitClass k) {
  switch (k) {
  case LimitClass::NegInfinity:
  case LimitClass::FiniteNegative:
  case LimitClass::ZeroMinus: return -1;
  case LimitClass::ExactZero: return 0;
  default: return 1;
  }
}

inline bool tends_to_zero(LimitClass k) {
  return k == LimitClass::ZeroMinus || k == LimitClass::ZeroPlus || k == LimitClass::ExactZero;
}

inline bool tends_to_infinity(LimitClass k) { return k == LimitClass::NegInfinity || k == LimitClass::PosInfinity; }

enum class LimitDirection { OmegaToZero, OmegaToInf, GammaToInf, GammaToNegInf };

inline std::string_view to_string(LimitDirection d) {
  switch (d) {
  case LimitDirection::OmegaToZero: return "omega->0";
  case LimitDirection::OmegaToInf: return "omega->inf";
  case LimitDirection::GammaToInf: return "gamma->inf";
  case LimitDirection::GammaToNegInf: return "gamma->-inf";
  }
  return "?";
}

inline constexpr LimitDirection kAllDirections[] = {LimitDirection::OmegaToZero, LimitDirection::OmegaToInf,
                                                    LimitDirection::GammaToInf, LimitDirection::GammaToNegInf};

// Whether a direction stays inside the existence region for the case: large ω needs a
// focusing top power, large γ too; the other two directions are always available.
inline bool direction_supported(const NonlinearityParams& np, LimitDirection d) {
  switch (d) {
  case LimitDirection::OmegaToInf:
  case LimitDirection::GammaToInf: return np.top_focusing();
  default: return true;
  }
}

namespace detail {

inline constexpr double kSevenThirds = 7.0 / 3;

inline LimitClass signed_zero(double s) { return s > 0 ? LimitClass::ZeroPlus : LimitClass::ZeroMinus; }
inline LimitClass signed_inf(double s) { return s > 0 ? LimitClass::PosInfinity : LimitClass::NegInfinity; }
inline LimitClass signed_finite(double s) { return s > 0 ? LimitClass::FinitePositive : LimitClass::FiniteNegative; }

// ω → 0 with a focusing bottom power. The γ = 0, p = 5 sub-table has the opposite sign of a₃.
inline LimitClass omega_to_zero_focusing(const NonlinearityParams& np, double gamma) {
  const double p = np.p, q = np.q, r = np.r;
  if (p > 5) return LimitClass::NegInfinity;
  if (p == 5) {
    if (gamma != 0) {
      if (q > 9) return signed_zero(gamma);
      if (q == 9) return signed_finite(gamma);
      return signed_inf(gamma);
    }
    const double s = -np.a3();
    if (r > 9) return signed_zero(s);
    if (r == 9) return signed_finite(s);
    return signed_inf(s);
  }
  if (p > kSevenThirds) return LimitClass::PosInfinity;
  if (p == kSevenThirds) return LimitClass::FinitePositive;
  return LimitClass::ZeroPlus;
}

// ω → 0 with a defocusing bottom power: a(ω,γ) stays bounded away from 0.
inline LimitClass omega_to_zero_defocusing(const NonlinearityParams& np) {
  const double p = np.p, q = np.q, r = np.r;
  if (p >= kSevenThirds) return LimitClass::NegInfinity;
  if (np.top_focusing()) {
    if (2 * q + r < 7) return LimitClass::FinitePositive;
    if (2 * p + q > 7) return LimitClass::FiniteNegative;
    throw no_statement_error("omega->0: J(0,gamma) is finite but its sign depends on gamma here");
  }
  throw no_statement_error("omega->0: J(0,gamma) is finite but no sign statement covers the DD case with p < 7/3");
}

inline LimitClass omega_to_inf(const NonlinearityParams& np, double gamma) {
  const double r = np.r;
  if (r > 5) return LimitClass::ZeroMinus;
  if (r == 5) {
    // The FF statement puts γ = 0 on the 0⁺ side, the DF statement on the 0⁻ side.
    const bool minus = np.bottom_focusing() ? gamma > 0 : gamma >= 0;
    return minus ? LimitClass::ZeroMinus : LimitClass::ZeroPlus;
  }
  if (r > kSevenThirds) return LimitClass::ZeroPlus;
  if (r == kSevenThirds) return LimitClass::FinitePositive;
  return LimitClass::PosInfinity;
}

inline LimitClass gamma_to_inf(const NonlinearityParams& np) {
  const double q = np.q, r = np.r;
  if (r < kSevenThirds) return LimitClass::PosInfinity;
  if (r == kSevenThirds) return LimitClass::FinitePositive;
  // Only the FF statement carries the q < 7/3 guard on the last three branches.
  if (np.bottom_focusing() && q >= kSevenThirds) return LimitClass::NegInfinity;
  if (r + 2 * q < 7) return LimitClass::ZeroPlus;
  if (r + 2 * q == 7) return LimitClass::ExactZero;
  return LimitClass::ZeroMinus;
}

inline LimitClass gamma_to_neg_inf(const NonlinearityParams& np) {
  if (np.bottom_focusing()) return np.q <= 5 ? LimitClass::ZeroPlus : LimitClass::ZeroMinus;
  return np.q < 5 ? LimitClass::ZeroPlus : LimitClass::ZeroMinus;
}

} // namespace detail

// Limit of J along a direction. For the ω-directions `gamma_or_omega` is the fixed γ; for the
// γ-directions it is the fixed ω, which none of the statements depend on.
inline LimitClass classify_limit(const NonlinearityParams& np, LimitDirection direction, double gamma_or_omega) {
  np.validate();
  if (!direction_supported(np, direction))
    throw unsupported_error(std::string(to_string(direction)) + " leaves the existence region in the " +
                            std::string(to_string(np.label())) + " case");
  switch (direction) {
  case LimitDirection::OmegaToZero:
    return np.bottom_focusing() ? detail::omega_to_zero_focusing(np, gamma_or_omega)
                                : detail::omega_to_zero_defocusing(np);
  case LimitDirection::OmegaToInf: return detail::omega_to_inf(np, gamma_or_omega);
  case LimitDirection::GammaToInf: return detail::gamma_to_inf(np);
  case LimitDirection::GammaToNegInf: return detail::gamma_to_neg_inf(np);
  }
  throw std::domain_error("classify_limit: unknown direction");
}

// Exponent k in J = Θ(a^k) along the direction, when a power law is known.
inline std::optional<double> asymptotic_exponent(const NonlinearityParams& np, LimitDirection direction,
                                                 double gamma = 0) {
  np.validate();
  if (!direction_supported(np, direction)) return std::nullopt;
  const double p = np.p, q = np.q, r = np.r;
  switch (direction) {
  case LimitDirection::OmegaToZero:
    if (!np.bottom_focusing()) return std::nullopt;
    if (p == 5) return gamma != 0 ? (q - 9) / 2 : (r - 9) / 2;
    return (7 - 3 * p) / 4;
  case LimitDirection::OmegaToInf:
    if (r == 5) return gamma != 0 ? (q - 9) / 2 : (p - 9) / 2;
    return (7 - 3 * r) / 4;
  case LimitDirection::GammaToNegInf:
    if (q == 5) return (p + 1) / 2;
    return 1.0;
  case LimitDirection::GammaToInf:
    if (q < 7.0 / 3 && r + 2 * q != 7) return (7 - 3 * r) / 4;
    return std::nullopt;
  }
  return std::nullopt;
}

enum class SignStatement {
  AllStablePositiveJ,
  AllUnstableNegativeJ,
  UnstableForLargeOmega,
  OmegaZeroPositive,
  OmegaZeroNegative,
  OmegaZeroSignChange,
  None
};

inline std::string_view to_string(SignStatement s) {
  switch (s) {
  case SignStatement::AllStablePositiveJ: return "AllStablePositiveJ";
  case SignStatement::AllUnstableNegativeJ: return "AllUnstableNegativeJ";
  case SignStatement::UnstableForLargeOmega: return "UnstableForLargeOmega";
  case SignStatement::OmegaZeroPositive: return "OmegaZeroPositive";
  case SignStatement::OmegaZeroNegative: return "OmegaZeroNegative";
  case SignStatement::OmegaZeroSignChange: return "OmegaZeroSignChange";
  case SignStatement::None: return "None";
  }
  return "?";
}

struct SignGuarantee {
  SignStatement statement = SignStatement::None;
  std::string region;
};

inline std::vector<SignGuarantee> sign_guarantees(const NonlinearityParams& np) {
  np.validate();
  const double p = np.p, q = np.q, r = np.r;
  std::vector<SignGuarantee> out;
  switch (np.label()) {
  case CaseLabel::FF:
    if (q > 5) out.push_back({SignStatement::UnstableForLargeOmega, "J < 0 for all omega > omega_-, uniformly in gamma"});
    break;
  case CaseLabel::FD:
    if (q <= 5) out.push_back({SignStatement::AllStablePositiveJ, "J > 0 on the whole existence region"});
    break;
  case CaseLabel::DF:
    if (q >= 5) out.push_back({SignStatement::AllUnstableNegativeJ, "J < 0 for all omega > 0, gamma real"});
    if (2 * q + r < 7) out.push_back({SignStatement::OmegaZeroPositive, "J(0,gamma) > 0 for all gamma"});
    if (2 * p + q > 7) out.push_back({SignStatement::OmegaZeroNegative, "J(0,gamma) < 0 for all gamma"});
    if (2 * p + q < 7 && 7 < 2 * q + r)
      out.push_back({SignStatement::OmegaZeroSignChange,
                     "J(0,gamma) > 0 for large negative gamma, < 0 for large positive gamma"});
    break;
  case CaseLabel::DD: break;
  }
  if (out.empty()) out.push_back({SignStatement::None, "no guaranteed sign"});
  return out;
}

} // namespace nlsstab
