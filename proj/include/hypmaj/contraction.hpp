#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypmaj/errors.hpp"
#include "hypmaj/generators.hpp"
#include "hypmaj/hyperbolic.hpp"
#include "hypmaj/majorization.hpp"
#include "hypmaj/rng.hpp"
#include "hypmaj/scalar.hpp"

namespace hypmaj {

/// Zero transfer T(k, l; t): with roots sorted, x_k moves up by t and x_l
/// moves down by t. Indices are 1-based positions in the sorted root tuple.
template <Scalar T>
struct ContractionStep {
    std::size_t k = 1;
    std::size_t l = 2;
    T t{};

    bool simple() const noexcept { return l == k + 1; }
    friend bool operator==(const ContractionStep&, const ContractionStep&) = default;
};

template <Scalar T>
struct ContractionChain {
    HyperbolicPoly<T> source;
    std::vector<ContractionStep<T>> steps;
    HyperbolicPoly<T> target;
    /// End offsets (exclusive) into `steps` of the inductive stages of a
    /// decomposition; empty for chains built otherwise.
    std::vector<std::size_t> stage_ends;
    /// Set when the pair was made strictly hyperbolic by strict_perturb first.
    std::optional<T> perturbation;
};

/// Whether t is strictly below half the gap x_l - x_k of P.
template <Scalar T>
bool is_nondegenerate(const HyperbolicPoly<T>& p, const ContractionStep<T>& s) {
    const auto r = p.roots();
    return s.k >= 1 && s.k < s.l && s.l <= r.size() && T(2) * s.t < r[s.l - 1] - r[s.k - 1];
}

/// Applies T(k, l; t). Throws InvalidIndices, EqualRoots, CoefficientTooLarge,
/// or PreconditionViolated for t <= 0.
template <Scalar T>
HyperbolicPoly<T> apply_contraction(const HyperbolicPoly<T>& p, const ContractionStep<T>& s) {
    const auto r = p.roots();
    if (!(s.k >= 1 && s.k < s.l && s.l <= r.size())) {
        fail(ErrorCode::InvalidIndices, "need 1 <= k < l <= " + std::to_string(r.size()) + ", got k=" +
                                            std::to_string(s.k) + " l=" + std::to_string(s.l));
    }
    const T& xk = r[s.k - 1];
    const T& xl = r[s.l - 1];
    if (xk == xl) fail(ErrorCode::EqualRoots, "x_k = x_l, nothing to contract");
    if (!(s.t > T(0))) fail(ErrorCode::PreconditionViolated, "contraction coefficient must be positive");
    if (T(2) * s.t > xl - xk) fail(ErrorCode::CoefficientTooLarge, "t exceeds (x_l - x_k)/2");
    std::vector<T> out(r.begin(), r.end());
    out[s.k - 1] += s.t;
    out[s.l - 1] -= s.t;
    return HyperbolicPoly<T>::from_roots(std::move(out));
}

/// Number of positions where the sorted root tuples differ (by more than tol
/// in float mode).
template <Scalar T>
std::size_t discrepancy(const HyperbolicPoly<T>& p, const HyperbolicPoly<T>& q, T tol = T(0)) {
    if (p.degree() != q.degree()) fail(ErrorCode::DegreeMismatch, "discrepancy needs equal degrees");
    std::size_t count = 0;
    for (std::size_t i = 0; i < p.degree(); ++i) {
        if (abs_value(T(p.roots()[i] - q.roots()[i])) > tol) ++count;
    }
    return count;
}

/// Folds apply_contraction over the steps.
template <Scalar T>
HyperbolicPoly<T> replay(const HyperbolicPoly<T>& source, const std::vector<ContractionStep<T>>& steps) {
    HyperbolicPoly<T> cur = source;
    for (const auto& s : steps) cur = apply_contraction(cur, s);
    return cur;
}

inline constexpr std::size_t kDefaultChainCap = 1'000'000;

/// Smallest d >= 1 with sigma < 2^{d-1} · margin.
std::size_t minimal_halving_depth(const Rational& sigma, const Rational& margin);

/// Moves x_i up and x_j down by sigma using only simple nondegenerate
/// contractions: 2^d sweeps of T(k, k+1; sigma/2^d) for k = i..j-1 with d
/// minimal. The p = j-i-1 roots in between must lie in (x_i+sigma, x_j-sigma)
/// and are unchanged at the end. Steps are replayed before returning.
ContractionChain<Rational> expand_transfer(const HyperbolicPoly<Rational>& p, std::size_t i, std::size_t j,
                                           const Rational& sigma, std::size_t cap = kDefaultChainCap);

struct DecomposeOptions {
    std::size_t cap = kDefaultChainCap;
    /// When set, pairs with multiple roots are first moved to
    /// strict_perturb(·, eps) and the perturbed pair is decomposed.
    std::optional<Rational> perturb_eps;
};

/// Chain of simple nondegenerate contractions from P down to Q, for strictly
/// hyperbolic distinct P, Q with Q ≺ P. Built by induction on the
/// discrepancy: an adjacent pair of opposite-sign differences is closed by one
/// contraction, a separated pair by expand_transfer. Throws NotMajorized,
/// NotStrict, NotDistinct, DegreeMismatch, ChainTooLong.
ContractionChain<Rational> decompose_majorization(const HyperbolicPoly<Rational>& p, const HyperbolicPoly<Rational>& q,
                                                  const DecomposeOptions& options = {});

/// Replays a chain and checks that it reaches the recorded target exactly.
bool verify_chain(const ContractionChain<Rational>& chain);

/// Chain of (not necessarily simple) contractions from P to Q for any
/// Q ≺ P, multiple roots allowed: each stage closes the first
/// opposite-sign pair of differences with a single transfer T(i, j; σ).
/// Used for witness construction when the strict decomposition does not apply.
ContractionChain<Rational> transfer_chain(const HyperbolicPoly<Rational>& p, const HyperbolicPoly<Rational>& q);

/// Applies `budget` random simple contractions with t = u·(gap/2), u drawn
/// from {1/8, ..., 7/8}, so every step is nondegenerate and the output stays
/// strictly hyperbolic when the input is.
template <Scalar T>
HyperbolicPoly<T> random_contraction_walk(const HyperbolicPoly<T>& p, Rng& rng, std::size_t budget) {
    HyperbolicPoly<T> cur = p;
    for (std::size_t step = 0; step < budget; ++step) {
        const auto r = cur.roots();
        std::vector<std::size_t> open;
        for (std::size_t k = 0; k + 1 < r.size(); ++k) {
            if (r[k] < r[k + 1]) open.push_back(k + 1);
        }
        if (open.empty()) break;
        const std::size_t k = open[rng.below(open.size())];
        const long u = rng.uniform_int(1, 7);
        T t = (r[k] - r[k - 1]) * from_int<T>(u) / from_int<T>(16);
        cur = apply_contraction(cur, ContractionStep<T>{k, k + 1, t});
    }
    return cur;
}

/// Random strictly hyperbolic P with roots on a 1/4 grid in [-bound, bound],
/// gaps >= 1/2, and Q obtained from P by a random contraction walk, so Q ≺ P
/// by construction.
template <Scalar T>
std::pair<HyperbolicPoly<T>, HyperbolicPoly<T>> random_comparable_pair(std::uint64_t seed, std::size_t n,
                                                                       std::size_t budget, long bound = 10);

template <Scalar T>
std::pair<HyperbolicPoly<T>, HyperbolicPoly<T>> random_comparable_pair(std::uint64_t seed, std::size_t n,
                                                                       std::size_t budget, long bound) {
    if (n < 2) fail(ErrorCode::DegreeTooSmall, "comparable pairs need n >= 2");
    Rng rng(seed);
    auto p = random_hyperbolic<T>(rng, n, static_cast<double>(bound), 0.5);
    auto q = random_contraction_walk(p, rng, budget);
    return {std::move(p), std::move(q)};
}

}  // namespace hypmaj
