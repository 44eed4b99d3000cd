#include <algorithm>
#include <map>
#include <stdexcept>

#include "symvar/repr.hpp"

namespace symvar {

ConjugacyClass conjugacy_class(const Partition& cycle_type) {
  BigInt denom = 1;
  const auto m = cycle_type.multiplicities();
  for (unsigned k = 1; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    BigInt kpow;
    mpz_ui_pow_ui(kpow.get_mpz_t(), k, m[k]);
    denom *= kpow * factorial(m[k]);
  }
  return {cycle_type, factorial(cycle_type.size()) / denom};
}

std::vector<ConjugacyClass> conjugacy_classes(unsigned n) {
  std::vector<ConjugacyClass> out;
  for (const auto& mu : partitions_of(n)) out.push_back(conjugacy_class(mu));
  return out;
}

namespace {

using Key = std::pair<std::vector<unsigned>, std::vector<unsigned>>;

long long character_rec(const std::vector<unsigned>& lambda, const std::vector<unsigned>& mu, std::size_t mu_pos,
                        std::map<Key, long long>& memo) {
  if (mu_pos == mu.size()) return lambda.empty() ? 1 : 0;
  Key key{lambda, std::vector<unsigned>(mu.begin() + static_cast<std::ptrdiff_t>(mu_pos), mu.end())};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // Beta numbers (first-column hook lengths), strictly decreasing.
  const auto len = static_cast<unsigned>(lambda.size());
  std::vector<unsigned> beta(len);
  for (unsigned i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);

  const unsigned r = mu[mu_pos];
  long long total = 0;
  for (unsigned i = 0; i < len; ++i) {
    if (beta[i] < r) continue;
    const unsigned target = beta[i] - r;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // Removing a rim hook of length r: its height is the number of beads jumped over.
    unsigned jumped = 0;
    for (unsigned b : beta)
      if (b > target && b < beta[i]) ++jumped;
    std::vector<unsigned> moved = beta;
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<unsigned> smaller;
    for (unsigned j = 0; j < len; ++j) {
      unsigned part = moved[j] - (len - 1 - j);
      if (part > 0) smaller.push_back(part);
    }
    const long long sign = (jumped % 2 == 0) ? 1 : -1;
    total += sign * character_rec(smaller, mu, mu_pos + 1, memo);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

long long mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("character needs |lambda| = |mu|");
  thread_local std::map<Key, long long> memo;
  return character_rec(lambda.parts(), mu.parts(), 0, memo);
}

BigInt fixed_subsets(const Partition& mu, unsigned k) {
  // Coefficient of x^k in prod over cycles (1 + x^len).
  std::vector<BigInt> poly(k + 1, 0);
  poly[0] = 1;
  for (unsigned len : mu.parts()) {
    for (unsigned j = k + 1; j-- > len;) poly[j] += poly[j - len];
  }
  return poly[k];
}

}  // namespace symvar
