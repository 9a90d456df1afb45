#include "bires/rat.hpp"

#include "bires/error.hpp"

namespace bires {

Rat parse_rat(std::string_view text) {
  Rat q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0) throw InputError("invalid rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

Rat RandomRationals::next() {
  constexpr std::uint64_t span = 2 * kBound + 1;
  return Rat(static_cast<long>(static_cast<std::int64_t>(engine_() % span) - kBound));
}

Rat RandomRationals::next_nonzero() {
  for (;;) {
    Rat q = next();
    if (q != 0) return q;
  }
}

}  // namespace bires
