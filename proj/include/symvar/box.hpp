#pragma once

#include <cstddef>
#include <vector>

#include "symvar/rational.hpp"

namespace symvar {

struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Closed axis-aligned box; every axis satisfies lo <= hi.
class Box {
 public:
  Box() = default;
  explicit Box(std::vector<Interval> axes);

  /// [lo, hi]^n
  static Box cube(std::size_t n, const Rational& lo, const Rational& hi);

  std::size_t dim() const { return axes_.size(); }
  const Interval& axis(std::size_t i) const { return axes_.at(i); }
  const std::vector<Interval>& axes() const { return axes_; }

  /// True when every axis carries the same interval.
  bool is_symmetric() const;
  bool contains(const std::vector<Rational>& x) const;

  friend bool operator==(const Box&, const Box&) = default;

 private:
  std::vector<Interval> axes_;
};

}  // namespace symvar
