#ifndef QFL_RNG_HPP
#define QFL_RNG_HPP

#include "qfl/linalg.hpp"

#include <cstdint>

namespace qfl {

/// Deterministic splitmix64 stream; all randomized tests and reports draw
/// from this so identical seeds give byte-identical results.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n).
  uint64_t below(uint64_t n) { return next() % n; }

  long long int_in(long long lo, long long hi) {  // inclusive
    return lo + (long long)below(uint64_t(hi - lo + 1));
  }

  /// Small rational with numerator in [-bound, bound] and denominator in [1, dmax].
  Rational rational(long long bound = 5, long long dmax = 3) {
    return Rational(int_in(-bound, bound), int_in(1, dmax));
  }

  Scalar scalar(long long bound = 5, long long dmax = 3) { return Scalar(rational(bound, dmax)); }

  Vec vec(int n, long long bound = 5, long long dmax = 3) {
    Vec v(n);
    for (auto& x : v) x = scalar(bound, dmax);
    return v;
  }

private:
  uint64_t state_;
};

}  // namespace qfl

#endif
