#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hypmaj/errors.hpp"
#include "hypmaj/hyperbolic.hpp"
#include "hypmaj/rng.hpp"
#include "hypmaj/scalar.hpp"

namespace hypmaj {

/// Grid denominator for rational random roots.
inline constexpr long kRootGrid = 4;

/// Strictly hyperbolic polynomial with roots in [-bound, bound] and every
/// consecutive gap >= min_gap: n sorted uniform draws from
/// [-bound, bound - (n-1)·min_gap], then the i-th shifted up by i·min_gap.
/// Rational mode draws from the grid (1/kRootGrid)·Z. Throws InfeasibleGap
/// when n·min_gap > 2·bound.
template <Scalar T>
HyperbolicPoly<T> random_hyperbolic(Rng& rng, std::size_t n, double bound, double min_gap) {
    if (n == 0) fail(ErrorCode::EmptyTuple, "degree must be positive");
    if (static_cast<double>(n) * min_gap > 2.0 * bound) {
        fail(ErrorCode::InfeasibleGap, "n·min_gap exceeds the root interval");
    }
    const double span = static_cast<double>(n - 1) * min_gap;
    std::vector<T> u(n);
    if constexpr (is_exact_v<T>) {
        const Rational lo(-bound);
        const Rational hi = Rational(bound) - Rational(span);
        for (auto& v : u) v = rng.uniform_rational(lo, hi, kRootGrid);
        std::sort(u.begin(), u.end());
        const Rational gap(min_gap);
        for (std::size_t i = 0; i < n; ++i) u[i] += gap * static_cast<long>(i);
    } else {
        for (auto& v : u) v = rng.uniform(-bound, bound - span);
        std::sort(u.begin(), u.end());
        for (std::size_t i = 0; i < n; ++i) u[i] += min_gap * static_cast<double>(i);
    }
    return HyperbolicPoly<T>::from_roots(std::move(u));
}

/// Random element of the barycenter-0 slice. Rational mode shifts by the grid
/// point nearest the barycenter and lets the largest root absorb the rest, so
/// the roots stay on the grid (and are exact doubles) with sum exactly 0.
template <Scalar T>
HyperbolicPoly<T> random_centered(Rng& rng, std::size_t n, double bound, double min_gap) {
    const auto p = random_hyperbolic<T>(rng, n, bound, min_gap);
    if constexpr (is_exact_v<T>) {
        const Rational step(1, kRootGrid);
        const Rational b = p.barycenter() / step;
        mpz_class k;
        mpz_fdiv_q(k.get_mpz_t(), mpz_class(2 * b.get_num() + b.get_den()).get_mpz_t(),
                   mpz_class(2 * b.get_den()).get_mpz_t());
        std::vector<Rational> r(p.roots().begin(), p.roots().end());
        const Rational shift = Rational(k) * step;
        for (auto& v : r) v -= shift;
        Rational sum(0);
        for (const auto& v : r) sum += v;
        r.back() -= sum;
        return HyperbolicPoly<Rational>::from_roots(std::move(r));
    } else {
        return taylor_shift(p, p.barycenter());
    }
}

}  // namespace hypmaj
