#pragma once

#include <optional>
#include <vector>

#include "symvar/box.hpp"
#include "symvar/univariate.hpp"

namespace symvar {

/// p, p', then negated remainders until the remainder vanishes.  The last
/// element is, up to a constant, gcd(p, p').
struct SturmChain {
  std::vector<UnivariatePoly> seq;

  /// Sign changes at t, zeros skipped.
  unsigned variations_at(const Rational& t) const;
  /// Sign changes just right of t (t + eps) and just left of t (t - eps).
  unsigned variations_right_of(const Rational& t) const;
  unsigned variations_left_of(const Rational& t) const;
  unsigned variations_at_pos_infinity() const;
  unsigned variations_at_neg_infinity() const;
};

SturmChain sturm_chain(const UnivariatePoly& p);

/// Distinct real roots on the whole line.  Throws on the zero polynomial.
unsigned sturm_count(const UnivariatePoly& p);
/// Distinct real roots in the closed interval [lo, hi].
unsigned sturm_count(const UnivariatePoly& p, const Interval& closed);

/// gcd(p, p') is constant.
bool is_squarefree(const UnivariatePoly& p);

/// b^2 - 4ac for quadratics, 18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2 for cubics.
Rational discriminant(const UnivariatePoly& p);

}  // namespace symvar
