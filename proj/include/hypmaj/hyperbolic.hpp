#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "hypmaj/errors.hpp"
#include "hypmaj/polynomial.hpp"
#include "hypmaj/real_roots.hpp"
#include "hypmaj/scalar.hpp"

namespace hypmaj {

/// Monic real-rooted polynomial ∏ (x - x_i), stored as its nondecreasing root
/// tuple. Coefficients are derived on demand.
template <Scalar T>
class HyperbolicPoly {
public:
    using scalar_type = T;

    /// Validates and sorts. Throws EmptyTuple / NonFinite.
    static HyperbolicPoly from_roots(std::vector<T> roots) {
        if (roots.empty()) fail(ErrorCode::EmptyTuple, "a hyperbolic polynomial needs at least one root");
        for (const T& r : roots) {
            if (!is_finite(r)) fail(ErrorCode::NonFinite, "root is NaN or infinite");
        }
        std::sort(roots.begin(), roots.end());
        return HyperbolicPoly(std::move(roots));
    }

    std::size_t degree() const noexcept { return roots_.size(); }
    std::span<const T> roots() const noexcept { return roots_; }
    const T& root(std::size_t i) const { return roots_.at(i); }

    Polynomial<T> coefficients() const { return expand_roots<T>(roots_); }

    T root_sum() const {
        T s(0);
        for (const T& r : roots_) s += r;
        return s;
    }

    T barycenter() const { return root_sum() / T(static_cast<long>(roots_.size())); }

    friend bool operator==(const HyperbolicPoly&, const HyperbolicPoly&) = default;

private:
    explicit HyperbolicPoly(std::vector<T> sorted) : roots_(std::move(sorted)) {}

    std::vector<T> roots_;
};

template <Scalar T>
HyperbolicPoly<T> from_roots(std::vector<T> roots) {
    return HyperbolicPoly<T>::from_roots(std::move(roots));
}

template <Scalar T>
Polynomial<T> to_coefficients(const HyperbolicPoly<T>& p) {
    return p.coefficients();
}

/// Roots of a (caller-asserted) real-rooted polynomial as a HyperbolicPoly.
inline HyperbolicPoly<double> hyperbolic_from_coefficients(const Polynomial<double>& p, double tol = 0.0) {
    return HyperbolicPoly<double>::from_roots(real_roots(p, tol));
}

inline HyperbolicPoly<double> hyperbolic_from_coefficients(const Polynomial<Rational>& p, double tol = 0.0) {
    return HyperbolicPoly<double>::from_roots(real_roots(p, tol));
}

template <Scalar T>
HyperbolicPoly<double> to_float(const HyperbolicPoly<T>& p) {
    std::vector<double> r;
    r.reserve(p.degree());
    for (const T& v : p.roots()) r.push_back(to_double(v));
    return HyperbolicPoly<double>::from_roots(std::move(r));
}

/// The monic normalisation n^{-1} P' of the derivative. Its roots are
/// generally irrational, so the result is always in float mode.
template <Scalar T>
HyperbolicPoly<double> derivative(const HyperbolicPoly<T>& p, double tol = 0.0) {
    if (p.degree() < 2) fail(ErrorCode::DegreeTooSmall, "derivative of a degree-1 polynomial is constant");
    return hyperbolic_from_coefficients(p.coefficients().derivative().monic(), tol);
}

/// P(x + shift): every root moves to x_i - shift. Exact in rational mode.
template <Scalar T>
HyperbolicPoly<T> taylor_shift(const HyperbolicPoly<T>& p, const T& shift) {
    std::vector<T> r(p.roots().begin(), p.roots().end());
    for (T& v : r) v -= shift;
    return HyperbolicPoly<T>::from_roots(std::move(r));
}

/// Displaces x_i by -(n-i)·eps for i < n and x_n by +n(n-1)/2·eps. Every gap
/// grows by eps, so the result is strictly hyperbolic, and the root sum is
/// unchanged.
template <Scalar T>
HyperbolicPoly<T> strict_perturb(const HyperbolicPoly<T>& p, const T& eps) {
    if (!(eps > T(0))) fail(ErrorCode::NonPositiveEps, "perturbation size must be positive");
    const long n = static_cast<long>(p.degree());
    std::vector<T> r(p.roots().begin(), p.roots().end());
    for (long i = 0; i + 1 < n; ++i) r[static_cast<std::size_t>(i)] -= T(n - 1 - i) * eps;
    r.back() += T(n * (n - 1) / 2) * eps;
    return HyperbolicPoly<T>::from_roots(std::move(r));
}

template <Scalar T>
struct StrictnessReport {
    bool is_strict = true;
    std::optional<T> min_gap;  ///< smallest consecutive gap; empty for degree 1
};

template <Scalar T>
StrictnessReport<T> strictness(const HyperbolicPoly<T>& p) {
    StrictnessReport<T> rep;
    auto r = p.roots();
    if (r.size() < 2) return rep;
    T gap = r[1] - r[0];
    for (std::size_t i = 1; i + 1 < r.size(); ++i) gap = std::min<T>(gap, r[i + 1] - r[i]);
    rep.is_strict = gap > T(0);
    rep.min_gap = gap;
    return rep;
}

template <Scalar T>
bool is_strict(const HyperbolicPoly<T>& p) {
    return strictness(p).is_strict;
}

}  // namespace hypmaj
