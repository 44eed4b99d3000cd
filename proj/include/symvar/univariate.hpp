#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symvar/rational.hpp"

namespace symvar {

/// Dense univariate polynomial, coeffs[k] multiplies t^k.  The leading
/// coefficient is nonzero unless the polynomial is zero (empty vector).
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Rational> coeffs);

  static UnivariatePoly constant(const Rational& c);
  /// t - root
  static UnivariatePoly linear_factor(const Rational& root);
  static UnivariatePoly monomial(const Rational& c, unsigned k);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;
  UnivariatePoly derivative() const;
  UnivariatePoly monic() const;

  UnivariatePoly operator-() const;
  friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator*(const Rational& c, const UnivariatePoly& p);
  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

  std::string to_string(char var = 't') const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<UnivariatePoly, UnivariatePoly> divrem(const UnivariatePoly& a, const UnivariatePoly& b);

/// Monic gcd (zero if both inputs are zero).
UnivariatePoly gcd(UnivariatePoly a, UnivariatePoly b);

}  // namespace symvar
