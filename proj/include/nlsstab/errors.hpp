#pragma once

#include <stdexcept>
#include <string>

namespace nlsstab {

// ω − F₁ has no positive zero, so no profile (or no a₀) exists.
class not_found_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// The requested quantity blows up: the query sits on the nonexistence curve.
class diverging_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Outside the regime where an operation is defined (e.g. J(0,γ) with p ≥ 7/3).
class unsupported_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// No known statement covers the requested limit.
class no_statement_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace nlsstab
