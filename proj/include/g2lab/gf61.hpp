#ifndef G2LAB_GF61_HPP
#define G2LAB_GF61_HPP

#include <cstdint>
#include <random>

namespace g2lab::gf61 {

/// Arithmetic in GF(p) for the Mersenne prime p = 2⁶¹ − 1.
inline constexpr std::uint64_t MOD = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = a + b;
    return r >= MOD ? r - MOD : r;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) {
    return a >= b ? a - b : a + MOD - b;
}

inline std::uint64_t neg(std::uint64_t a) { return a == 0 ? 0 : MOD - a; }

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(t) & MOD;
    std::uint64_t hi = static_cast<std::uint64_t>(t >> 61);
    std::uint64_t r = lo + hi;
    r = (r & MOD) + (r >> 61);
    return r >= MOD ? r - MOD : r;
}

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t inv(std::uint64_t a) { return pow(a, MOD - 2); }

/// Deterministic uniform sampler on [0, p). mt19937_64 is fully specified by
/// the standard, so streams are reproducible across platforms.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next() {
        for (;;) {
            std::uint64_t r = rng_() >> 3; // top 61 bits
            if (r < MOD) return r;         // rejects only r == MOD
        }
    }

private:
    std::mt19937_64 rng_;
};

/// splitmix64 step, used to derive independent per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace g2lab::gf61

#endif
