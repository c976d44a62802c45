#ifndef CURVEDIM_RNG_HPP
#define CURVEDIM_RNG_HPP

#include <cstdint>

#include "curvedim/rational.hpp"

namespace curvedim {

// splitmix64. std:: engines/distributions are avoided on purpose: the
// stream must be identical across platforms and standard libraries,
// because seeds are part of the file-level contract.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish in [0, n); modulo bias is irrelevant at the ranges used.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  // Inclusive range.
  long long in_range(long long lo, long long hi) {
    return lo + static_cast<long long>(
                    below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Independent derived stream; advances this one.
  Rng fork(std::uint64_t salt) {
    return Rng(next() ^ (salt * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull));
  }

  // num/den with |num| <= bound, 1 <= den <= max_den.
  Rational rational(long long bound, long long max_den = 8) {
    const long long num = in_range(-bound, bound);
    const long long den = in_range(1, max_den);
    return Rational(BigInt(num), BigInt(den));
  }

 private:
  std::uint64_t state_;
};

}  // namespace curvedim

#endif  // CURVEDIM_RNG_HPP
