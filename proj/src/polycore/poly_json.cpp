#include "symvar/poly_json.hpp"

#include <stdexcept>

namespace symvar {

namespace {

Rational coeff_from_json(const nlohmann::json& c) {
  if (c.is_string()) return parse_rational(c.get<std::string>());
  if (c.is_number_integer()) return Rational(c.get<long>());
  throw std::invalid_argument("coefficient must be a \"p/q\" string");
}

unsigned n_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_unsigned())
    throw std::invalid_argument("polynomial JSON needs a nonnegative integer \"n\"");
  return j.at("n").get<unsigned>();
}

}  // namespace

nlohmann::json to_json(const MultiAffinePoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [s, c] : p.terms()) {
    nlohmann::json vars = nlohmann::json::array();
    for (unsigned i = 1; i <= p.n_vars(); ++i)
      if (s & var_bit(i)) vars.push_back(i);
    terms.push_back({{"vars", vars}, {"coeff", to_string(c)}});
  }
  return {{"n", p.n_vars()}, {"terms", terms}};
}

MultiAffinePoly multi_affine_from_json(const nlohmann::json& j) {
  const unsigned n = n_from_json(j);
  if (n > MultiAffinePoly::kMaxVars) throw std::invalid_argument("multi-affine JSON: n exceeds 64");
  std::vector<std::pair<VarMask, Rational>> terms;
  for (const auto& t : j.at("terms")) {
    VarMask s = 0;
    unsigned prev = 0;
    for (const auto& v : t.at("vars")) {
      auto i = v.get<unsigned>();
      if (i < 1 || i > n) throw std::invalid_argument("multi-affine JSON: variable index out of range");
      if (i <= prev) throw std::invalid_argument("multi-affine JSON: \"vars\" must be strictly increasing");
      prev = i;
      s |= var_bit(i);
    }
    terms.emplace_back(s, coeff_from_json(t.at("coeff")));
  }
  return MultiAffinePoly::from_terms(n, terms);
}

nlohmann::json to_json(const SparsePoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exps", e}, {"coeff", to_string(c)}});
  return {{"n", p.n_vars()}, {"terms", terms}};
}

SparsePoly sparse_from_json(const nlohmann::json& j) {
  const unsigned n = n_from_json(j);
  std::vector<std::pair<Exponents, Rational>> terms;
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exps").get<Exponents>();
    if (e.size() != n) throw std::invalid_argument("sparse JSON: exponent vector length differs from n");
    terms.emplace_back(std::move(e), coeff_from_json(t.at("coeff")));
  }
  return SparsePoly::from_terms(n, terms);
}

bool is_sparse_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms")) return false;
  for (const auto& t : j.at("terms"))
    if (t.contains("exps")) return true;
  return false;
}

}  // namespace symvar
