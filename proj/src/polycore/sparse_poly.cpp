#include "symvar/sparse_poly.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace symvar {

namespace {

void accumulate(SparsePoly::Terms& terms, const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

void require_same_ring(const SparsePoly& a, const SparsePoly& b) {
  if (a.n_vars() != b.n_vars()) throw std::invalid_argument("dimension mismatch in sparse polynomial arithmetic");
}

void check_index(const SparsePoly& p, unsigned i) {
  if (i < 1 || i > p.n_vars()) throw std::out_of_range("variable index out of range");
}

}  // namespace

SparsePoly SparsePoly::from_terms(unsigned n_vars, const std::vector<std::pair<Exponents, Rational>>& terms) {
  SparsePoly p(n_vars);
  for (const auto& [e, c] : terms) {
    if (e.size() != n_vars) throw std::invalid_argument("exponent vector length differs from n_vars");
    Rational canonical = c;
    canonical.canonicalize();
    accumulate(p.terms_, e, canonical);
  }
  return p;
}

SparsePoly SparsePoly::constant(unsigned n_vars, const Rational& c) {
  return from_terms(n_vars, {{Exponents(n_vars, 0), c}});
}

SparsePoly SparsePoly::variable(unsigned n_vars, unsigned i) {
  SparsePoly p(n_vars);
  check_index(p, i);
  Exponents e(n_vars, 0);
  e[i - 1] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

SparsePoly SparsePoly::from_multi_affine(const MultiAffinePoly& p) {
  SparsePoly out(p.n_vars());
  for (const auto& [s, c] : p.terms()) {
    Exponents e(p.n_vars(), 0);
    for (VarMask m = s; m != 0; m &= m - 1) e[std::countr_zero(m)] = 1;
    out.terms_.emplace(std::move(e), c);
  }
  return out;
}

Rational SparsePoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int SparsePoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (unsigned x : e) s += static_cast<int>(x);
    d = std::max(d, s);
  }
  return d;
}

unsigned SparsePoly::degree_in(unsigned i) const {
  check_index(*this, i);
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i - 1]);
  return d;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  require_same_ring(a, b);
  SparsePoly r = a;
  for (const auto& [e, c] : b.terms_) accumulate(r.terms_, e, c);
  return r;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  require_same_ring(a, b);
  SparsePoly r(a.n_vars_);
  Exponents e(a.n_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (unsigned k = 0; k < a.n_vars_; ++k) e[k] = ea[k] + eb[k];
      accumulate(r.terms_, e, ca * cb);
    }
  }
  return r;
}

SparsePoly operator*(const Rational& c, const SparsePoly& p) {
  SparsePoly r(p.n_vars_);
  if (sgn(c) == 0) return r;
  for (const auto& [e, v] : p.terms_) r.terms_.emplace(e, c * v);
  return r;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly result = constant(n_vars_, 1);
  SparsePoly base = *this;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool constant_term = true;
    for (unsigned x : e) constant_term = constant_term && x == 0;
    Rational mag = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = mag == 1 && !constant_term;
    if (!unit) os << mag.get_str();
    bool need_star = !unit;
    for (unsigned k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (need_star) os << '*';
      os << 'X' << k + 1;
      if (e[k] > 1) os << '^' << e[k];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

Rational evaluate(const SparsePoly& p, std::span<const Rational> x) {
  if (x.size() != p.n_vars()) throw std::invalid_argument("point dimension does not match polynomial");
  Rational total = 0;
  Rational power;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (unsigned k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      mpz_pow_ui(mpq_numref(power.get_mpq_t()), mpq_numref(x[k].get_mpq_t()), e[k]);
      mpz_pow_ui(mpq_denref(power.get_mpq_t()), mpq_denref(x[k].get_mpq_t()), e[k]);
      term *= power;
    }
    total += term;
  }
  return total;
}

SparsePoly substitute(const SparsePoly& p, unsigned i, const SparsePoly& q) {
  check_index(p, i);
  require_same_ring(p, q);
  const unsigned n = p.n_vars();
  std::vector<SparsePoly> powers{SparsePoly::constant(n, 1)};
  SparsePoly result(n);
  for (const auto& [e, c] : p.terms()) {
    while (powers.size() <= e[i - 1]) powers.push_back(powers.back() * q);
    Exponents rest = e;
    rest[i - 1] = 0;
    result = result + SparsePoly::from_terms(n, {{rest, c}}) * powers[e[i - 1]];
  }
  return result;
}

SparsePoly compose(const SparsePoly& p, std::span<const SparsePoly> images) {
  if (images.size() != p.n_vars()) throw std::invalid_argument("compose needs one image per variable");
  if (images.empty()) return p;
  const unsigned m = images.front().n_vars();
  for (const auto& q : images)
    if (q.n_vars() != m) throw std::invalid_argument("compose images must share a ring");
  std::vector<std::vector<SparsePoly>> powers(images.size());
  SparsePoly result(m);
  for (const auto& [e, c] : p.terms()) {
    SparsePoly term = SparsePoly::constant(m, c);
    for (unsigned k = 0; k < e.size(); ++k) {
      auto& cache = powers[k];
      if (cache.empty()) cache.push_back(SparsePoly::constant(m, 1));
      while (cache.size() <= e[k]) cache.push_back(cache.back() * images[k]);
      if (e[k] != 0) term = term * cache[e[k]];
    }
    result = result + term;
  }
  return result;
}

std::pair<SparsePoly, SparsePoly> divide_linear(const SparsePoly& p, unsigned i, const Rational& c) {
  check_index(p, i);
  const unsigned n = p.n_vars();
  // Group by the exponent pattern of the other variables, then synthetic division in X_i.
  std::map<Exponents, std::vector<Rational>> columns;
  for (const auto& [e, v] : p.terms()) {
    Exponents rest = e;
    rest[i - 1] = 0;
    auto& col = columns[rest];
    if (col.size() <= e[i - 1]) col.resize(e[i - 1] + 1);
    col[e[i - 1]] = v;
  }
  std::vector<std::pair<Exponents, Rational>> quotient, remainder;
  for (auto& [rest, col] : columns) {
    Rational carry = 0;
    for (std::size_t k = col.size(); k-- > 0;) {
      Rational value = col[k] + carry;
      if (k == 0) {
        remainder.emplace_back(rest, value);
      } else {
        Exponents e = rest;
        e[i - 1] = static_cast<unsigned>(k - 1);
        quotient.emplace_back(std::move(e), value);
        carry = value * c;
      }
    }
  }
  return {SparsePoly::from_terms(n, quotient), SparsePoly::from_terms(n, remainder)};
}

}  // namespace symvar
