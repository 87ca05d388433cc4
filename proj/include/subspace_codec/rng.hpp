#pragma once

#include <cstdint>
#include <random>

namespace subcodec {

/// Deterministic random stream. All randomized operations take one of these
/// explicitly; there is no global random state anywhere in the library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform value in [0, bound) by rejection sampling.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0} >> __builtin_clzll(bound - 1);
        for (;;) {
            std::uint64_t v = gen_() & mask;
            if (v < bound) return v;
        }
    }

    /// Uniform base-field digit in [0, q).
    std::uint32_t digit(std::uint32_t q) { return static_cast<std::uint32_t>(below(q)); }

  private:
    std::mt19937_64 gen_;
};

/// Mixes a master seed with an index into an independent per-task seed
/// (splitmix64 finalizer). Parallel trial workers each get derive_seed(seed, i)
/// so results do not depend on scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace subcodec
