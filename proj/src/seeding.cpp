#include "powerlaw/seeding.hpp"

#include <cmath>
#include <stdexcept>

namespace powerlaw {

double binary_entropy(double q) {
  if (q <= 0.0 || q >= 1.0) return 0.0;
  return -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
}

Knowledge::Knowledge(std::uint64_t key, double entropy_bits)
    : key_(splitmix64(key ^ 0x5a17afe5a17afe00ULL)), entropy_bits_(entropy_bits) {
  if (!(entropy_bits > 0.0 && entropy_bits <= 1.0)) {
    throw std::invalid_argument("knowledge entropy must lie in (0, 1] bits");
  }
  if (entropy_bits == 1.0) {
    one_probability_ = 0.5;
    return;
  }
  // h is increasing on (0, 1/2]; bisect.
  double lo = 0.0;
  double hi = 0.5;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (binary_entropy(mid) < entropy_bits ? lo : hi) = mid;
  }
  one_probability_ = 0.5 * (lo + hi);
}

}  // namespace powerlaw
