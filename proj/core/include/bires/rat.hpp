#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace bires {

using Int = mpz_class;
/// Always canonical: reduced, positive denominator, zero is 0/1.
using Rat = mpq_class;

Rat parse_rat(std::string_view text);
std::string to_string(const Rat& q);
std::string to_string(const Int& z);

/// Seeded source of small random rationals used for generic specializations.
/// Draws integers uniformly from [-10^4, 10^4]; the mapping is spelled out so that
/// streams are identical across standard libraries.
class RandomRationals {
 public:
  static constexpr std::int64_t kBound = 10000;
  explicit RandomRationals(std::uint64_t seed) : engine_(seed) {}
  Rat next();
  /// Like next() but never zero.
  Rat next_nonzero();
  std::uint64_t next_raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bires
