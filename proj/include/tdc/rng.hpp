#pragma once

#include <cstdint>

#include "tdc/scalars.hpp"

namespace tdc {

// splitmix64: deterministic across platforms, seedable.
// Default height bound 7 keeps all sampled rationals small; the identities
// under test are polynomial over Q, so violations show up at small height.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, k)
    std::uint64_t below(std::uint64_t k) { return k == 0 ? 0 : next() % k; }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Int zint(long bound = 7) { return Int(range(-bound, bound)); }

    Rat rat(long bound = 7) {
        long num = range(-bound, bound);
        long den = range(1, bound);
        return make_rat(num, den);
    }

    Circle circle(long bound = 7) { return Circle(rat(bound)); }

    IntVec int_vec(std::size_t n, long bound = 7) {
        IntVec v(n);
        for (auto& x : v) x = zint(bound);
        return v;
    }

    RatVec rat_vec(std::size_t n, long bound = 7) {
        RatVec v(n);
        for (auto& x : v) x = rat(bound);
        return v;
    }

    SkewIntMat skew(int n, long bound = 7) {
        SkewIntMat m(n);
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < i; ++j) {
                Int v = zint(bound);
                m.at(i, j) = v;
                m.at(j, i) = -v;
            }
        return m;
    }

    AffChar aff_char(std::size_t n, long bound = 7) { return AffChar(circle(bound), int_vec(n, bound)); }
};

}  // namespace tdc
