#include <stdexcept>

#include "symvar/repr.hpp"

namespace symvar {

BigInt IsotypicTable::total_dimension() const {
  BigInt total = 0;
  for (const auto& [lambda, m] : mult) total += m * specht_dim(lambda);
  return total;
}

BigInt IsotypicTable::at(const Partition& lambda) const {
  auto it = mult.find(lambda);
  return it == mult.end() ? BigInt(0) : it->second;
}

nlohmann::json to_json(const IsotypicTable& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [lambda, m] : t.mult) {
    nlohmann::json mj = m.fits_slong_p() ? nlohmann::json(m.get_si()) : nlohmann::json(m.get_str());
    out.push_back({{"partition", to_json(lambda)}, {"mult", mj}});
  }
  return out;
}

IsotypicTable young_module_multiplicities(unsigned n, unsigned k) {
  if (2 * k > n) throw std::invalid_argument("young module needs 0 <= k <= n/2");
  const auto classes = conjugacy_classes(n);
  std::vector<BigInt> fix;
  fix.reserve(classes.size());
  for (const auto& c : classes) fix.push_back(fixed_subsets(c.cycle_type, k));
  const BigInt order = factorial(n);

  IsotypicTable table;
  for (const auto& lambda : partitions_of(n)) {
    BigInt inner = 0;
    for (std::size_t c = 0; c < classes.size(); ++c)
      inner += classes[c].size * BigInt(static_cast<long>(mn_character(lambda, classes[c].cycle_type))) * fix[c];
    if (inner % order != 0) throw std::logic_error("character inner product is not an integer");
    BigInt m = inner / order;
    if (m != 0) table.mult.emplace(lambda, m);
  }
  return table;
}

}  // namespace symvar
