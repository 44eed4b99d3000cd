#include "symvar/bounds.hpp"

#include <stdexcept>

namespace symvar {

namespace {

nlohmann::json big_to_json(const BigInt& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

}  // namespace

ComponentBounds bounds(unsigned d, unsigned n) {
  if (d < 1 || n < 1) throw std::invalid_argument("bounds need d >= 1 and n >= 1");
  ComponentBounds b;
  b.degree = d;
  b.n = n;
  mpz_ui_pow_ui(b.hypersurface.get_mpz_t(), 2, d - 1);
  mpz_ui_pow_ui(b.complement.get_mpz_t(), 2, d);
  mpz_ui_pow_ui(b.betti_sum.get_mpz_t(), 2 * d - 1, n - 1);
  b.betti_sum *= d;
  return b;
}

nlohmann::json to_json(const ComponentBounds& b) {
  return {{"ccez", big_to_json(b.hypersurface)},
          {"ccdz", big_to_json(b.complement)},
          {"optm", big_to_json(b.betti_sum)}};
}

}  // namespace symvar
