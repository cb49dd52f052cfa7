#pragma once

#include <cstdint>

#include "zdsolve/fields.hpp"

namespace zdsolve {

/// Deterministic 64-bit generator (splitmix64). Fixed for the life of the
/// project: identical seeds must replay identical scalar streams. Random
/// scalars are nonzero by construction: uniform over {1..p-1} for F_p and
/// over {-9..9} minus {0} for QQ.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  long small_nonzero() {  // {-9..9} \ {0}
    std::uint64_t k = below(18);
    return k < 9 ? -static_cast<long>(k + 1) : static_cast<long>(k - 8);
  }
  std::uint64_t nonzero_mod(std::uint64_t p) { return 1 + below(p - 1); }

  template <CoefficientField K>
  typename K::Elem scalar(const K& field) {
    if constexpr (K::is_rationals) {
      return field.from_int(small_nonzero());
    } else {
      return static_cast<typename K::Elem>(nonzero_mod(field.modulus()));
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace zdsolve
