#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hypmaj/errors.hpp"
#include "hypmaj/hyperbolic.hpp"
#include "hypmaj/scalar.hpp"

namespace hypmaj {

enum class Verdict { Less, Equal, Incomparable, SumMismatch };

std::string_view to_string(Verdict v) noexcept;
Verdict parse_verdict(std::string_view text);

inline bool is_majorized(Verdict v) noexcept { return v == Verdict::Less || v == Verdict::Equal; }

/// Outcome of testing X ≺ Y (X less spread out than Y).
template <Scalar T>
struct MajorizationCertificate {
    Verdict verdict = Verdict::Equal;
    T sum_residual{};       ///< Σx - Σy
    std::vector<T> slacks;  ///< top-k sum of Y minus top-k sum of X, k = 1..n-1
    T tolerance{};

    /// Most negative slack (0 when n = 1).
    T worst_slack() const {
        T w(0);
        for (const T& s : slacks) w = std::min<T>(w, s);
        return w;
    }
};

/// 1e-9 · (1 + max |entry|) in float mode, 0 in rational mode.
template <Scalar T>
T default_majorization_tolerance(std::span<const T> x, std::span<const T> y) {
    if constexpr (is_exact_v<T>) {
        return T(0);
    } else {
        double m = 0.0;
        for (double v : x) m = std::max(m, std::fabs(v));
        for (double v : y) m = std::max(m, std::fabs(v));
        return 1e-9 * (1.0 + m);
    }
}

namespace detail {

template <Scalar T>
std::vector<T> sorted_copy(std::span<const T> v) {
    std::vector<T> out(v.begin(), v.end());
    std::sort(out.begin(), out.end());
    return out;
}

template <Scalar T>
void require_same_length(std::span<const T> x, std::span<const T> y) {
    if (x.size() != y.size()) {
        fail(ErrorCode::LengthMismatch,
             "tuples have lengths " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
    }
    if (x.empty()) fail(ErrorCode::EmptyTuple, "majorization needs non-empty tuples");
}

}  // namespace detail

/// Decides X ≺ Y from descending partial sums: equal totals and
/// top-k(X) <= top-k(Y) for every k. In rational mode the tolerance is
/// forced to zero; in float mode slacks in [-tol, 0) still count as Less.
/// A negative `tol` selects the default.
template <Scalar T>
MajorizationCertificate<T> check_majorization(std::span<const T> x, std::span<const T> y, T tol = T(-1)) {
    detail::require_same_length(x, y);
    if constexpr (is_exact_v<T>) {
        tol = T(0);
    } else {
        if (tol < 0.0) tol = default_majorization_tolerance(x, y);
    }
    const auto xs = detail::sorted_copy(x);
    const auto ys = detail::sorted_copy(y);
    const std::size_t n = xs.size();

    MajorizationCertificate<T> cert;
    cert.tolerance = tol;
    T top_x(0), top_y(0);
    for (std::size_t k = 1; k < n; ++k) {
        top_x += xs[n - k];
        top_y += ys[n - k];
        cert.slacks.push_back(top_y - top_x);
    }
    top_x += xs[0];
    top_y += ys[0];
    cert.sum_residual = top_x - top_y;

    if (abs_value(cert.sum_residual) > tol) {
        cert.verdict = Verdict::SumMismatch;
        return cert;
    }
    bool equal = true;
    for (std::size_t i = 0; i < n && equal; ++i) equal = abs_value(T(xs[i] - ys[i])) <= tol;
    if (equal) {
        cert.verdict = Verdict::Equal;
        return cert;
    }
    const bool all_ok = std::all_of(cert.slacks.begin(), cert.slacks.end(), [&](const T& s) { return s >= -tol; });
    cert.verdict = all_ok ? Verdict::Less : Verdict::Incomparable;
    return cert;
}

template <Scalar T>
MajorizationCertificate<T> check_majorization(const HyperbolicPoly<T>& x, const HyperbolicPoly<T>& y,
                                              T tol = T(-1)) {
    return check_majorization<T>(x.roots(), y.roots(), tol);
}

/// One probe of the convex-function characterisation.
template <Scalar T>
struct ConvexProbe {
    std::string description;
    T value_x{};
    T value_y{};
    bool satisfied = false;
};

template <Scalar T>
struct ConvexProbeReport {
    std::vector<ConvexProbe<T>> probes;

    bool all_satisfied() const {
        return std::all_of(probes.begin(), probes.end(), [](const auto& p) { return p.satisfied; });
    }
};

/// Independent check of X ≺ Y through Σ f(x_i) <= Σ f(y_i) for the hinge
/// functions f_t(u) = max(u - t, 0), t ranging over every entry of X and Y,
/// plus the equality of sums. Both sides are piecewise linear in t with kinks
/// only at those entries, so these probes decide majorization.
template <Scalar T>
ConvexProbeReport<T> hinge_oracle(std::span<const T> x, std::span<const T> y, T tol = T(-1)) {
    detail::require_same_length(x, y);
    if constexpr (is_exact_v<T>) {
        tol = T(0);
    } else {
        if (tol < 0.0) tol = default_majorization_tolerance(x, y);
    }
    ConvexProbeReport<T> rep;
    {
        ConvexProbe<T> sum{"sum", T(0), T(0), false};
        for (const T& v : x) sum.value_x += v;
        for (const T& v : y) sum.value_y += v;
        sum.satisfied = abs_value(T(sum.value_x - sum.value_y)) <= tol;
        rep.probes.push_back(std::move(sum));
    }
    std::vector<T> knots(x.begin(), x.end());
    knots.insert(knots.end(), y.begin(), y.end());
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    for (const T& t : knots) {
        ConvexProbe<T> p;
        if constexpr (is_exact_v<T>) {
            p.description = "hinge(" + format_rational(t) + ")";
        } else {
            p.description = "hinge(" + std::to_string(t) + ")";
        }
        for (const T& v : x) {
            if (v > t) p.value_x += v - t;
        }
        for (const T& v : y) {
            if (v > t) p.value_y += v - t;
        }
        p.satisfied = p.value_x <= p.value_y + tol;
        rep.probes.push_back(std::move(p));
    }
    return rep;
}

/// max_i |x_(i) - y_(i)| on sorted tuples: the optimal matching distance.
template <Scalar T>
T matching_distance(std::span<const T> x, std::span<const T> y) {
    if (x.size() != y.size()) fail(ErrorCode::LengthMismatch, "matching distance needs equal lengths");
    const auto xs = detail::sorted_copy(x);
    const auto ys = detail::sorted_copy(y);
    T d(0);
    for (std::size_t i = 0; i < xs.size(); ++i) d = std::max<T>(d, abs_value(T(xs[i] - ys[i])));
    return d;
}

template <Scalar T>
T matching_distance(const HyperbolicPoly<T>& x, const HyperbolicPoly<T>& y) {
    return matching_distance<T>(x.roots(), y.roots());
}

/// Convex probe functions for Schur-convex sums Σ f(x_i).
namespace probe {
struct Hinge {
    double t;
};
/// Σ x^k, k >= 1. Valid on all of R for k = 1 or even integer k,
/// otherwise only on nonnegative entries.
struct Power {
    double k;
};
/// Σ x log x (natural log), entries > 0.
struct XLogX {};
/// r(r-1) Σ x^r, entries > 0.
struct SignedPower {
    double r;
};
}  // namespace probe

using SchurProbe = std::variant<probe::Hinge, probe::Power, probe::XLogX, probe::SignedPower>;

std::string describe(const SchurProbe& p);

/// Whether the probe is defined (and convex) on every entry of x.
bool probe_valid(const SchurProbe& p, std::span<const double> x);

/// Σ f(x_i) for the probe f. Throws DomainViolation outside the probe's domain.
double schur_eval(std::span<const double> x, const SchurProbe& p);

template <Scalar T>
double schur_eval(const HyperbolicPoly<T>& x, const SchurProbe& p) {
    const auto f = to_float(x);
    return schur_eval(f.roots(), p);
}

}  // namespace hypmaj
