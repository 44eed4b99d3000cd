#include <stdexcept>

#include "symvar/repr.hpp"

namespace symvar {

BigInt specht_dim(const Partition& lambda) {
  BigInt hooks = 1;
  for (unsigned i = 1; i <= lambda.length(); ++i)
    for (unsigned j = 1; j <= lambda[i - 1]; ++j) hooks *= lambda.hook(i, j);
  return factorial(lambda.size()) / hooks;
}

BigInt two_row_max_dim(unsigned n) {
  if (n < 2) throw std::invalid_argument("two_row_max_dim needs n >= 2");
  return specht_dim(Partition{n - n / 2, n / 2});
}

Partition pad_partition(const Partition& lambda, unsigned n) {
  const unsigned d = lambda.size();
  if (n < lambda.first_part() + d)
    throw std::invalid_argument("pad_partition needs n >= lambda_1 + |lambda| (got n = " + std::to_string(n) + ")");
  std::vector<unsigned> parts;
  if (n - d > 0) parts.push_back(n - d);
  parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
  return Partition(std::move(parts));
}

std::vector<Partition> restriction_filter(unsigned n, unsigned d, unsigned i) {
  if (d < 2) throw std::invalid_argument("restriction_filter needs d >= 2");
  const unsigned bound = i + 2 * d - 1;
  std::vector<Partition> out;
  for (auto& p : partitions_of(n))
    if (p.length() < bound) out.push_back(std::move(p));
  return out;
}

ClosedFormMultiplicity boolean_cube_multiplicity(const Partition& lambda, unsigned n, unsigned i) {
  const unsigned d = lambda.size();
  ClosedFormMultiplicity out{0, n >= 2 * d};
  if (i == 0 && lambda.length() <= 1) out.value = BigInt(n) - 2 * BigInt(lambda.first_part()) + 1;
  return out;
}

}  // namespace symvar
