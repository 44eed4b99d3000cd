#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symvar/box.hpp"
#include "symvar/rational.hpp"

namespace symvar {

/// Variable subset of {1..n}; bit i-1 stands for X_i.
using VarMask = std::uint64_t;

/// Polynomial of degree at most one in every variable, stored as a map from
/// variable subsets to nonzero coefficients.  Supports at most 64 variables.
///
/// Values are immutable once built: every operation returns a new polynomial
/// and the map never holds a zero coefficient, so structural equality is
/// mathematical equality.
class MultiAffinePoly {
 public:
  static constexpr unsigned kMaxVars = 64;
  using Terms = std::map<VarMask, Rational>;

  MultiAffinePoly() = default;
  explicit MultiAffinePoly(unsigned n_vars);

  /// Sums duplicate subsets and drops zeros.
  static MultiAffinePoly from_terms(unsigned n_vars, const std::vector<std::pair<VarMask, Rational>>& terms);
  static MultiAffinePoly constant(unsigned n_vars, const Rational& c);
  /// X_i, 1-based.
  static MultiAffinePoly variable(unsigned n_vars, unsigned i);

  unsigned n_vars() const { return n_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(VarMask s) const;

  /// Maximum subset size; std::nullopt encodes the degree of the zero polynomial.
  std::optional<unsigned> degree() const;
  /// Union of all stored subsets.
  VarMask support() const;

  /// Same polynomial viewed in a ring with more variables.
  MultiAffinePoly embed(unsigned n_vars) const;

  MultiAffinePoly operator-() const;
  friend MultiAffinePoly operator+(const MultiAffinePoly& a, const MultiAffinePoly& b);
  friend MultiAffinePoly operator-(const MultiAffinePoly& a, const MultiAffinePoly& b);
  friend MultiAffinePoly operator*(const Rational& c, const MultiAffinePoly& p);
  friend bool operator==(const MultiAffinePoly&, const MultiAffinePoly&) = default;

  std::string to_string() const;

 private:
  unsigned n_vars_ = 0;
  Terms terms_;
};

VarMask var_bit(unsigned i);
VarMask full_mask(unsigned n_vars);

Rational evaluate(const MultiAffinePoly& p, std::span<const Rational> x);

/// P = X_i * Q + R with neither Q nor R mentioning X_i (all in the same ring).
std::pair<MultiAffinePoly, MultiAffinePoly> decompose(const MultiAffinePoly& p, unsigned i);

/// Substitutes X_i = c and renumbers X_{i+1..n} down by one.
MultiAffinePoly specialize(const MultiAffinePoly& p, unsigned i, const Rational& c);

/// Product of two polynomials whose variable supports are disjoint.
MultiAffinePoly product_disjoint(const MultiAffinePoly& a, const MultiAffinePoly& b);

/// coeff(S) depends only on |S|.
bool is_symmetric(const MultiAffinePoly& p);

/// Swaps X_i and X_j (1-based).
MultiAffinePoly swap_variables(const MultiAffinePoly& p, unsigned i, unsigned j);

struct Range {
  Rational min;
  Rational max;
  bool brackets_zero() const { return sgn(min) <= 0 && sgn(max) >= 0; }
};

/// Exact min and max over a box, taken over its 2^n vertices.
Range box_range(const MultiAffinePoly& p, const Box& box);

}  // namespace symvar
