#include "symvar/multi_affine.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace symvar {

VarMask var_bit(unsigned i) { return VarMask{1} << (i - 1); }

VarMask full_mask(unsigned n_vars) {
  return n_vars >= 64 ? ~VarMask{0} : (VarMask{1} << n_vars) - 1;
}

namespace {

void check_index(const MultiAffinePoly& p, unsigned i) {
  if (i < 1 || i > p.n_vars())
    throw std::out_of_range("variable index " + std::to_string(i) + " outside 1.." + std::to_string(p.n_vars()));
}

void accumulate(MultiAffinePoly::Terms& terms, VarMask s, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

// Drops bit i-1 and shifts the higher bits down.
VarMask remove_var(VarMask s, unsigned i) {
  VarMask low = s & (var_bit(i) - 1);
  VarMask high = i >= 64 ? 0 : (s >> i) << (i - 1);
  return low | high;
}

}  // namespace

MultiAffinePoly::MultiAffinePoly(unsigned n_vars) : n_vars_(n_vars) {
  if (n_vars > kMaxVars) throw std::invalid_argument("multi-affine polynomials support at most 64 variables");
}

MultiAffinePoly MultiAffinePoly::from_terms(unsigned n_vars,
                                            const std::vector<std::pair<VarMask, Rational>>& terms) {
  MultiAffinePoly p(n_vars);
  const VarMask allowed = full_mask(n_vars);
  for (const auto& [s, c] : terms) {
    if ((s & ~allowed) != 0) throw std::invalid_argument("term mentions a variable beyond n_vars");
    Rational canonical = c;
    canonical.canonicalize();
    accumulate(p.terms_, s, canonical);
  }
  return p;
}

MultiAffinePoly MultiAffinePoly::constant(unsigned n_vars, const Rational& c) {
  return from_terms(n_vars, {{0, c}});
}

MultiAffinePoly MultiAffinePoly::variable(unsigned n_vars, unsigned i) {
  MultiAffinePoly p(n_vars);
  check_index(p, i);
  p.terms_.emplace(var_bit(i), Rational(1));
  return p;
}

Rational MultiAffinePoly::coeff(VarMask s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<unsigned> MultiAffinePoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  unsigned d = 0;
  for (const auto& [s, c] : terms_) d = std::max<unsigned>(d, std::popcount(s));
  return d;
}

VarMask MultiAffinePoly::support() const {
  VarMask u = 0;
  for (const auto& [s, c] : terms_) u |= s;
  return u;
}

MultiAffinePoly MultiAffinePoly::embed(unsigned n_vars) const {
  if (n_vars < n_vars_ && (support() & ~full_mask(n_vars)) != 0)
    throw std::invalid_argument("cannot embed: polynomial uses a dropped variable");
  MultiAffinePoly p(n_vars);
  p.terms_ = terms_;
  return p;
}

MultiAffinePoly MultiAffinePoly::operator-() const {
  MultiAffinePoly p = *this;
  for (auto& [s, c] : p.terms_) c = -c;
  return p;
}

MultiAffinePoly operator+(const MultiAffinePoly& a, const MultiAffinePoly& b) {
  if (a.n_vars_ != b.n_vars_) throw std::invalid_argument("dimension mismatch in multi-affine sum");
  MultiAffinePoly r = a;
  for (const auto& [s, c] : b.terms_) accumulate(r.terms_, s, c);
  return r;
}

MultiAffinePoly operator-(const MultiAffinePoly& a, const MultiAffinePoly& b) { return a + (-b); }

MultiAffinePoly operator*(const Rational& c, const MultiAffinePoly& p) {
  MultiAffinePoly r(p.n_vars_);
  if (sgn(c) == 0) return r;
  for (const auto& [s, v] : p.terms_) r.terms_.emplace(s, c * v);
  return r;
}

std::string MultiAffinePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    Rational mag = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = mag == 1 && s != 0;
    if (!unit) os << mag.get_str();
    bool need_star = !unit;
    for (unsigned i = 1; i <= n_vars_; ++i) {
      if (s & var_bit(i)) {
        if (need_star) os << '*';
        os << 'X' << i;
        need_star = true;
      }
    }
    first = false;
  }
  return os.str();
}

Rational evaluate(const MultiAffinePoly& p, std::span<const Rational> x) {
  if (x.size() != p.n_vars()) throw std::invalid_argument("point dimension does not match polynomial");
  Rational total = 0;
  for (const auto& [s, c] : p.terms()) {
    Rational term = c;
    for (VarMask m = s; m != 0; m &= m - 1) term *= x[std::countr_zero(m)];
    total += term;
  }
  return total;
}

std::pair<MultiAffinePoly, MultiAffinePoly> decompose(const MultiAffinePoly& p, unsigned i) {
  check_index(p, i);
  const VarMask bit = var_bit(i);
  std::vector<std::pair<VarMask, Rational>> q, r;
  for (const auto& [s, c] : p.terms()) {
    if (s & bit)
      q.emplace_back(s & ~bit, c);
    else
      r.emplace_back(s, c);
  }
  return {MultiAffinePoly::from_terms(p.n_vars(), q), MultiAffinePoly::from_terms(p.n_vars(), r)};
}

MultiAffinePoly specialize(const MultiAffinePoly& p, unsigned i, const Rational& c) {
  check_index(p, i);
  auto [q, r] = decompose(p, i);
  std::vector<std::pair<VarMask, Rational>> out;
  for (const auto& [s, v] : q.terms()) out.emplace_back(remove_var(s, i), c * v);
  for (const auto& [s, v] : r.terms()) out.emplace_back(remove_var(s, i), v);
  return MultiAffinePoly::from_terms(p.n_vars() - 1, out);
}

MultiAffinePoly product_disjoint(const MultiAffinePoly& a, const MultiAffinePoly& b) {
  if ((a.support() & b.support()) != 0)
    throw std::invalid_argument("overlapping variable supports: product is not multi-affine");
  const unsigned n = std::max(a.n_vars(), b.n_vars());
  std::vector<std::pair<VarMask, Rational>> out;
  out.reserve(a.terms().size() * b.terms().size());
  for (const auto& [sa, ca] : a.terms())
    for (const auto& [sb, cb] : b.terms()) out.emplace_back(sa | sb, ca * cb);
  return MultiAffinePoly::from_terms(n, out);
}

bool is_symmetric(const MultiAffinePoly& p) {
  const unsigned n = p.n_vars();
  std::vector<std::optional<Rational>> by_size(n + 1);
  std::vector<BigInt> seen(n + 1, 0);
  for (const auto& [s, c] : p.terms()) {
    auto k = static_cast<unsigned>(std::popcount(s));
    if (!by_size[k])
      by_size[k] = c;
    else if (*by_size[k] != c)
      return false;
    seen[k] += 1;
  }
  for (unsigned k = 0; k <= n; ++k)
    if (by_size[k] && seen[k] != binomial(n, k)) return false;
  return true;
}

MultiAffinePoly swap_variables(const MultiAffinePoly& p, unsigned i, unsigned j) {
  check_index(p, i);
  check_index(p, j);
  const VarMask bi = var_bit(i), bj = var_bit(j);
  std::vector<std::pair<VarMask, Rational>> out;
  for (const auto& [s, c] : p.terms()) {
    VarMask t = s & ~(bi | bj);
    if (s & bi) t |= bj;
    if (s & bj) t |= bi;
    out.emplace_back(t, c);
  }
  return MultiAffinePoly::from_terms(p.n_vars(), out);
}

Range box_range(const MultiAffinePoly& p, const Box& box) {
  const unsigned n = p.n_vars();
  if (box.dim() != n) throw std::invalid_argument("box dimension does not match polynomial");
  if (n > 30) throw std::invalid_argument("vertex enumeration limited to 30 variables");
  std::vector<Rational> x(n);
  Range out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    for (unsigned a = 0; a < n; ++a) x[a] = (v >> a) & 1 ? box.axis(a).hi : box.axis(a).lo;
    Rational val = evaluate(p, x);
    if (v == 0 || val < out.min) out.min = val;
    if (v == 0 || val > out.max) out.max = val;
  }
  return out;
}

}  // namespace symvar
