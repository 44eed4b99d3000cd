#include "lattice_signs.hpp"

#include <stdexcept>

#include "parallel.hpp"

namespace symvar::detail {

namespace {

// Grid coordinate k along one axis is numer[k] / denom.
struct AxisScale {
  std::vector<BigInt> numer;
  BigInt denom;
};

AxisScale scale_axis(const Interval& axis, unsigned res) {
  const Rational step = axis.width() / res;
  AxisScale a;
  mpz_lcm(a.denom.get_mpz_t(), axis.lo.get_den_mpz_t(), step.get_den_mpz_t());
  a.numer.reserve(res + 1);
  for (unsigned k = 0; k <= res; ++k) {
    Rational x = axis.lo + step * k;
    a.numer.push_back(x.get_num() * (a.denom / x.get_den()));
  }
  return a;
}

template <typename Int>
struct Ops;

template <>
struct Ops<__int128> {
  static __int128 from(const BigInt& z) {
    BigInt mag = abs(z);
    BigInt high = mag >> 64;
    BigInt low = mag - (high << 64);
    unsigned __int128 v = (static_cast<unsigned __int128>(mpz_get_ui(high.get_mpz_t())) << 64) |
                          static_cast<unsigned __int128>(mpz_get_ui(low.get_mpz_t()));
    auto s = static_cast<__int128>(v);
    return sgn(z) < 0 ? -s : s;
  }
  static std::int8_t sign(__int128 v) { return static_cast<std::int8_t>((v > 0) - (v < 0)); }
};

template <>
struct Ops<BigInt> {
  static BigInt from(const BigInt& z) { return z; }
  static std::int8_t sign(const BigInt& v) { return static_cast<std::int8_t>(sgn(v)); }
};

template <typename Int>
class Evaluator {
 public:
  Evaluator(const std::vector<AxisScale>& axes, unsigned res) : stride_(res + 1) {
    for (const auto& a : axes) {
      std::vector<Int> v;
      for (const auto& z : a.numer) v.push_back(Ops<Int>::from(z));
      numer_.push_back(std::move(v));
      denom_.push_back(Ops<Int>::from(a.denom));
    }
  }

  // Scaled values P(x) * prod_{i<m} denom_i over the lattice of the first m axes;
  // p (integer coefficients) must only mention X_1..X_m.
  std::vector<Int> values(const MultiAffinePoly& p, unsigned m) const {
    if (m == 0) return {p.is_zero() ? Int(0) : Ops<Int>::from(p.coeff(0).get_num())};
    auto [q, r] = decompose(p, m);
    const std::vector<Int> vq = q.is_zero() ? std::vector<Int>{} : values(q, m - 1);
    const std::vector<Int> vr = values(r, m - 1);
    const std::size_t block = vr.size();
    std::vector<Int> out(block * stride_);
    for (unsigned k = 0; k < stride_; ++k) {
      const Int& a = numer_[m - 1][k];
      const Int& d = denom_[m - 1];
      for (std::size_t j = 0; j < block; ++j) {
        Int v = d * vr[j];
        if (!vq.empty()) v += a * vq[j];
        out[k * block + j] = v;
      }
    }
    return out;
  }

  std::vector<std::int8_t> signs(const MultiAffinePoly& p, unsigned threads) const {
    const unsigned n = p.n_vars();
    if (n == 0) return {Ops<Int>::sign(values(p, 0).front())};
    auto [q, r] = decompose(p, n);
    const std::vector<Int> vq = q.is_zero() ? std::vector<Int>{} : values(q, n - 1);
    const std::vector<Int> vr = values(r, n - 1);
    const std::size_t block = vr.size();
    std::vector<std::int8_t> out(block * stride_);
    parallel_chunks(stride_ * block, threads, [&](std::uint64_t begin, std::uint64_t end) {
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        const std::uint64_t k = idx / block, j = idx % block;
        Int v = denom_[n - 1] * vr[j];
        if (!vq.empty()) v += numer_[n - 1][k] * vq[j];
        out[idx] = Ops<Int>::sign(v);
      }
    });
    return out;
  }

 private:
  unsigned stride_;
  std::vector<std::vector<Int>> numer_;
  std::vector<Int> denom_;
};

}  // namespace

std::vector<std::int8_t> lattice_signs(const MultiAffinePoly& p, const Box& box, unsigned res, unsigned threads) {
  const unsigned n = p.n_vars();
  if (box.dim() != n) throw std::invalid_argument("box dimension does not match polynomial");
  if (res < 1) throw std::invalid_argument("resolution must be positive");

  std::vector<AxisScale> axes;
  for (unsigned i = 0; i < n; ++i) axes.push_back(scale_axis(box.axis(i), res));

  // Clear coefficient denominators.
  BigInt lcm = 1;
  for (const auto& [s, c] : p.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<std::pair<VarMask, Rational>> scaled;
  BigInt coeff_mass = 0;
  for (const auto& [s, c] : p.terms()) {
    Rational v = c * lcm;
    coeff_mass += abs(v.get_num());
    scaled.emplace_back(s, v);
  }
  const MultiAffinePoly integral = MultiAffinePoly::from_terms(n, scaled);

  // |scaled value| <= coeff_mass * prod_i max(|numer_i|, denom_i) at every level.
  BigInt bound = coeff_mass + 1;
  for (const auto& a : axes) {
    BigInt m = a.denom;
    for (const auto& z : a.numer) m = std::max(m, BigInt(abs(z)));
    bound *= m;
  }
  if (mpz_sizeinbase(bound.get_mpz_t(), 2) <= 125)
    return Evaluator<__int128>(axes, res).signs(integral, threads);
  return Evaluator<BigInt>(axes, res).signs(integral, threads);
}

}  // namespace symvar::detail
