#pragma once

#include <cstdint>
#include <random>

#include "hypmaj/scalar.hpp"

namespace hypmaj {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seedable generator with fully specified output on every platform:
/// mt19937_64 is pinned by the standard, and the distributions below are
/// implemented here instead of using the implementation-defined std ones.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream for one trial: seed ⊕ trial index, then mixed.
    static Rng for_trial(std::uint64_t seed, std::uint64_t trial) { return Rng(splitmix64(seed ^ trial)); }

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n == 0 ? 0 : (~std::uint64_t{0} - (~std::uint64_t{0} % n));
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

    /// Uniform integer in [lo, hi].
    long uniform_int(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(below(span));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    bool coin() { return (next() >> 63) != 0; }

    /// Uniform on the grid {k/den : lo <= k/den <= hi}.
    Rational uniform_rational(const Rational& lo, const Rational& hi, long den) {
        const Rational a = lo * den;
        const Rational b = hi * den;
        mpz_class klo, khi;
        mpz_cdiv_q(klo.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
        mpz_fdiv_q(khi.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
        const long k = uniform_int(klo.get_si(), khi.get_si());
        Rational q{mpz_class(k), mpz_class(den)};
        q.canonicalize();
        return q;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace hypmaj
