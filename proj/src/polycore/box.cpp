#include "symvar/box.hpp"

#include <stdexcept>

namespace symvar {

Box::Box(std::vector<Interval> axes) : axes_(std::move(axes)) {
  for (auto& a : axes_) {
    a.lo.canonicalize();
    a.hi.canonicalize();
    if (a.lo > a.hi) throw std::invalid_argument("box axis has lo > hi");
  }
}

Box Box::cube(std::size_t n, const Rational& lo, const Rational& hi) {
  return Box(std::vector<Interval>(n, Interval{lo, hi}));
}

bool Box::is_symmetric() const {
  for (const auto& a : axes_)
    if (!(a == axes_.front())) return false;
  return true;
}

bool Box::contains(const std::vector<Rational>& x) const {
  if (x.size() != axes_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!axes_[i].contains(x[i])) return false;
  return true;
}

}  // namespace symvar
