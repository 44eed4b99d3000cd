#include "symvar/sturm.hpp"

#include <stdexcept>

namespace symvar {

namespace {

unsigned count_changes(const std::vector<int>& signs) {
  unsigned changes = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

// Sign of q(t + dir * eps) for small eps > 0: first nonzero derivative decides.
int one_sided_sign(const UnivariatePoly& q, const Rational& t, int dir) {
  UnivariatePoly d = q;
  int parity = 1;
  while (!d.is_zero()) {
    int s = sgn(d(t));
    if (s != 0) return s * parity;
    d = d.derivative();
    parity *= dir;
  }
  return 0;
}

}  // namespace

SturmChain sturm_chain(const UnivariatePoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  SturmChain chain;
  chain.seq.push_back(p);
  UnivariatePoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.seq.push_back(d);
  for (;;) {
    const auto& a = chain.seq[chain.seq.size() - 2];
    const auto& b = chain.seq.back();
    UnivariatePoly r = divrem(a, b).second;
    if (r.is_zero()) break;
    chain.seq.push_back(-r);
  }
  return chain;
}

unsigned SturmChain::variations_at(const Rational& t) const {
  std::vector<int> s;
  for (const auto& q : seq) s.push_back(sgn(q(t)));
  return count_changes(s);
}

unsigned SturmChain::variations_right_of(const Rational& t) const {
  std::vector<int> s;
  for (const auto& q : seq) s.push_back(one_sided_sign(q, t, 1));
  return count_changes(s);
}

unsigned SturmChain::variations_left_of(const Rational& t) const {
  std::vector<int> s;
  for (const auto& q : seq) s.push_back(one_sided_sign(q, t, -1));
  return count_changes(s);
}

unsigned SturmChain::variations_at_pos_infinity() const {
  std::vector<int> s;
  for (const auto& q : seq) s.push_back(sgn(q.leading()));
  return count_changes(s);
}

unsigned SturmChain::variations_at_neg_infinity() const {
  std::vector<int> s;
  for (const auto& q : seq) s.push_back(q.degree() % 2 == 0 ? sgn(q.leading()) : -sgn(q.leading()));
  return count_changes(s);
}

unsigned sturm_count(const UnivariatePoly& p) {
  const auto chain = sturm_chain(p);
  return chain.variations_at_neg_infinity() - chain.variations_at_pos_infinity();
}

unsigned sturm_count(const UnivariatePoly& p, const Interval& closed) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  if (closed.lo > closed.hi) throw std::invalid_argument("interval has lo > hi");
  const bool lo_root = sgn(p(closed.lo)) == 0;
  if (closed.lo == closed.hi) return lo_root ? 1 : 0;
  const auto chain = sturm_chain(p);
  unsigned inside = chain.variations_right_of(closed.lo) - chain.variations_left_of(closed.hi);
  return inside + (lo_root ? 1 : 0) + (sgn(p(closed.hi)) == 0 ? 1 : 0);
}

bool is_squarefree(const UnivariatePoly& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() <= 0;
}

Rational discriminant(const UnivariatePoly& p) {
  if (p.degree() == 2) {
    const Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    return b * b - 4 * a * c;
  }
  if (p.degree() == 3) {
    const Rational a = p.coeff(3), b = p.coeff(2), c = p.coeff(1), d = p.coeff(0);
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c - 27 * a * a * d * d;
  }
  throw std::invalid_argument("discriminant implemented for degree 2 and 3 only");
}

}  // namespace symvar
