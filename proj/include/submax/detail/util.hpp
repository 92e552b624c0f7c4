#ifndef SUBMAX_DETAIL_UTIL_HPP
#define SUBMAX_DETAIL_UTIL_HPP

#include <charconv>
#include <cstdint>
#include <random>
#include <string>
#include <system_error>

namespace submax::detail {

// Shortest round-trip decimal form; keeps report files byte-stable.
inline std::string fmt_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

// Unbiased uniform draw from [0, bound); rejection keeps it exact and
// independent of std::uniform_int_distribution's per-platform quirks.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace submax::detail

#endif  // SUBMAX_DETAIL_UTIL_HPP
