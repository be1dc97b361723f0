#ifndef SABRE_RNG_HPP
#define SABRE_RNG_HPP

#include <cstdint>
#include <vector>

namespace sabre {

// Deterministic 64-bit RNG used everywhere a seed appears in a file format
// or a reproducibility guarantee: an xorshift64 generator whose state is
// initialized by one splitmix64 step of the seed. Bounded draws use the
// modulo reduction below. Both are part of the on-disk contract (splits,
// sample subsets) and must not change.
class Rng {
public:
  explicit Rng(uint64_t seed) {
    // splitmix64
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    state_ = z ? z : 0x2545f4914f6cdd1dULL;
  }

  uint64_t next() {
    uint64_t x = state_;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    state_ = x;
    return x;
  }

  // Uniform in [0, n). n must be > 0.
  uint64_t below(uint64_t n) { return next() % n; }

  // Uniform double in [0, 1).
  double uniform() { return double(next() >> 11) * (1.0 / 9007199254740992.0); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; i--) {
      size_t j = size_t(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

private:
  uint64_t state_;
};

// FNV-1a over a byte sequence; the hash behind feature indices and
// model/config fingerprints.
inline uint64_t fnv1a(const void* data, size_t len, uint64_t h = 0xcbf29ce484222325ULL) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; i++) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace sabre

#endif
