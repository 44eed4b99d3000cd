#include <stdexcept>

#include "symvar/symfun.hpp"

namespace symvar {

int SigmaCombination::degree() const {
  for (std::size_t i = coeffs.size(); i-- > 0;)
    if (sgn(coeffs[i]) != 0) return static_cast<int>(i);
  return -1;
}

nlohmann::json to_json(const SigmaCombination& f) {
  nlohmann::json c = nlohmann::json::array();
  for (const auto& a : f.coeffs) c.push_back(to_string(a));
  return {{"coeffs", c}};
}

SigmaCombination sigma_combination_from_json(const nlohmann::json& j) {
  SigmaCombination f;
  for (const auto& c : j.at("coeffs")) f.coeffs.push_back(parse_rational(c.get<std::string>()));
  return f;
}

MultiAffinePoly materialize(const SigmaCombination& f, unsigned n) {
  if (n < 1) throw std::invalid_argument("materialize needs n >= 1");
  if (f.coeffs.empty()) return MultiAffinePoly(n);
  const unsigned top = std::min<unsigned>(static_cast<unsigned>(f.coeffs.size() - 1), n);
  const auto sigma = elementary_table(top, n);
  MultiAffinePoly p(n);
  for (unsigned i = 0; i <= top; ++i) p = p + f.coeffs[i] * sigma[i];
  return p;
}

MultiAffinePoly truncate_last(const MultiAffinePoly& p) {
  if (p.n_vars() < 1) throw std::invalid_argument("truncate_last needs at least one variable");
  return specialize(p, p.n_vars(), 0);
}

DiagonalRestriction diagonal_restriction(const SigmaCombination& f, unsigned n, std::span<const Rational> x) {
  if (x.size() != n) throw std::invalid_argument("base point dimension differs from n");
  const int d = f.degree();
  if (d > static_cast<int>(n)) throw std::invalid_argument("diagonal restriction needs n >= deg f");
  Rational s1 = 0;
  for (const auto& xi : x) s1 += xi;
  if (sgn(s1) != 0) throw std::invalid_argument("diagonal restriction base point must satisfy sigma_1(x) = 0");

  const unsigned top = d < 0 ? 0 : static_cast<unsigned>(d);
  const auto e = elementary_values(x, top);
  std::vector<Rational> coeffs(top + 1, 0);
  for (unsigned l = 0; l <= top && l < f.coeffs.size(); ++l) {
    if (sgn(f.coeffs[l]) == 0) continue;
    for (unsigned j = 0; j <= l; ++j) {
      if (sgn(e[j]) == 0) continue;
      coeffs[l - j] += f.coeffs[l] * Rational(binomial(n - j, l - j)) * e[j];
    }
  }
  return {std::vector<Rational>(x.begin(), x.end()), UnivariatePoly(std::move(coeffs))};
}

}  // namespace symvar
