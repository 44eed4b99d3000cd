#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "symvar/multi_affine.hpp"
#include "symvar/rational.hpp"

namespace symvar {

using Exponents = std::vector<unsigned>;

/// General multivariate polynomial in n variables: exponent vector -> nonzero coefficient.
class SparsePoly {
 public:
  using Terms = std::map<Exponents, Rational>;

  SparsePoly() = default;
  explicit SparsePoly(unsigned n_vars) : n_vars_(n_vars) {}

  static SparsePoly from_terms(unsigned n_vars, const std::vector<std::pair<Exponents, Rational>>& terms);
  static SparsePoly constant(unsigned n_vars, const Rational& c);
  /// X_i, 1-based.
  static SparsePoly variable(unsigned n_vars, unsigned i);
  static SparsePoly from_multi_affine(const MultiAffinePoly& p);

  unsigned n_vars() const { return n_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Exponents& e) const;
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// Largest exponent of X_i (1-based) appearing in any term.
  unsigned degree_in(unsigned i) const;

  SparsePoly operator-() const;
  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const Rational& c, const SparsePoly& p);
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  SparsePoly pow(unsigned e) const;

  std::string to_string() const;

 private:
  unsigned n_vars_ = 0;
  Terms terms_;
};

Rational evaluate(const SparsePoly& p, std::span<const Rational> x);

/// Replaces X_i by q (q lives in the same ring).
SparsePoly substitute(const SparsePoly& p, unsigned i, const SparsePoly& q);

/// Simultaneous substitution X_j -> images[j-1]; all images share one ring.
SparsePoly compose(const SparsePoly& p, std::span<const SparsePoly> images);

/// Exact quotient and remainder of p by (X_i - c): p = (X_i - c) * q + r, r free of X_i.
std::pair<SparsePoly, SparsePoly> divide_linear(const SparsePoly& p, unsigned i, const Rational& c);

}  // namespace symvar
