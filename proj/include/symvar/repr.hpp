#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "symvar/partition.hpp"
#include "symvar/rational.hpp"

namespace symvar {

/// n! / prod of hook lengths.
BigInt specht_dim(const Partition& lambda);

/// Dimension of the Specht module of (n - floor(n/2), floor(n/2)).
BigInt two_row_max_dim(unsigned n);

/// {lambda}_n = (n - d, lambda_1, ..., lambda_l) for lambda a partition of d; needs n >= lambda_1 + d.
Partition pad_partition(const Partition& lambda, unsigned n);

struct ConjugacyClass {
  Partition cycle_type;
  BigInt size;  // n! / prod_k (k^{m_k} m_k!)
};

ConjugacyClass conjugacy_class(const Partition& cycle_type);
std::vector<ConjugacyClass> conjugacy_classes(unsigned n);

/// Irreducible character chi^lambda evaluated on the class of cycle type mu
/// (Murnaghan-Nakayama rule; memoized per thread).
long long mn_character(const Partition& lambda, const Partition& mu);

/// Number of k-subsets of {1..n} fixed by a permutation of cycle type mu,
/// i.e. k-subsets that are unions of cycles.
BigInt fixed_subsets(const Partition& mu, unsigned k);

/// Irreducible multiplicities of a module, lambda -> m (zero entries omitted).
struct IsotypicTable {
  std::map<Partition, BigInt> mult;

  BigInt total_dimension() const;
  BigInt at(const Partition& lambda) const;
  friend bool operator==(const IsotypicTable&, const IsotypicTable&) = default;
};

nlohmann::json to_json(const IsotypicTable& t);

/// Decomposition of the permutation module on k-subsets of {1..n}, computed by
/// character inner products against the fixed-point character.
IsotypicTable young_module_multiplicities(unsigned n, unsigned k);

/// Partitions of n of length < i + 2d - 1.
std::vector<Partition> restriction_filter(unsigned n, unsigned d, unsigned i);

struct ClosedFormMultiplicity {
  BigInt value;
  bool in_validated_range;  // n >= 2d
};

/// Stable multiplicity of {lambda}_n in H^i of the Boolean cube {0,1}^n:
/// n - 2 lambda_1 + 1 when i = 0 and length(lambda) <= 1, otherwise 0.
ClosedFormMultiplicity boolean_cube_multiplicity(const Partition& lambda, unsigned n, unsigned i);

}  // namespace symvar
