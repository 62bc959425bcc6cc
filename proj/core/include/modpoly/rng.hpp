#ifndef MODPOLY_RNG_HPP
#define MODPOLY_RNG_HPP

#include <cstdint>

namespace modpoly {

/// Deterministic, platform-independent PRNG (splitmix64). Distribution helpers
/// use rejection sampling so streams are reproducible across compilers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * ((~0ULL) / n);
        for (;;) {
            std::uint64_t v = next();
            if (v < limit) return v % n;
        }
    }

    /// Derive an independent child stream (stable mixing, order-insensitive inputs).
    Rng fork(std::uint64_t tag) const {
        Rng child(state_ ^ (0x632be59bd9b4e019ULL * (tag + 1)));
        child.next();
        return child;
    }

private:
    std::uint64_t state_;
};

} // namespace modpoly

#endif
