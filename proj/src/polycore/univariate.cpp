#include "symvar/univariate.hpp"

#include <sstream>
#include <stdexcept>

namespace symvar {

UnivariatePoly::UnivariatePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

void UnivariatePoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

UnivariatePoly UnivariatePoly::constant(const Rational& c) { return UnivariatePoly({c}); }

UnivariatePoly UnivariatePoly::linear_factor(const Rational& root) { return UnivariatePoly({-root, 1}); }

UnivariatePoly UnivariatePoly::monomial(const Rational& c, unsigned k) {
  std::vector<Rational> v(k + 1, 0);
  v[k] = c;
  return UnivariatePoly(std::move(v));
}

Rational UnivariatePoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UnivariatePoly(std::move(d));
}

UnivariatePoly UnivariatePoly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return inv * *this;
}

UnivariatePoly UnivariatePoly::operator-() const {
  UnivariatePoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
  return UnivariatePoly(std::move(v));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) { return a + (-b); }

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UnivariatePoly(std::move(v));
}

UnivariatePoly operator*(const Rational& c, const UnivariatePoly& p) {
  std::vector<Rational> v = p.coeffs_;
  for (auto& x : v) x *= c;
  return UnivariatePoly(std::move(v));
}

std::string UnivariatePoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (!(mag == 1 && k > 0)) os << mag.get_str();
    if (k > 0) os << var;
    if (k > 1) os << '^' << k;
    first = false;
  }
  return os.str();
}

std::pair<UnivariatePoly, UnivariatePoly> divrem(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.degree() < b.degree()) return {UnivariatePoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(a.coeffs().size() - b.coeffs().size() + 1, 0);
  const Rational& lead = b.leading();
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational f = rem[k + db] / lead;
    quot[k] = f;
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {UnivariatePoly(std::move(quot)), UnivariatePoly(std::move(rem))};
}

UnivariatePoly gcd(UnivariatePoly a, UnivariatePoly b) {
  while (!b.is_zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace symvar
