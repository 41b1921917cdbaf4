#pragma once

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace hypmaj {

using Rational = mpq_class;

/// The two scalar modes. A computation picks one and stays in it.
template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double>;

enum class Mode { Rational, Float };

template <Scalar T>
inline constexpr bool is_exact_v = std::same_as<T, Rational>;

template <Scalar T>
inline constexpr Mode mode_of_v = is_exact_v<T> ? Mode::Rational : Mode::Float;

std::string_view to_string(Mode mode) noexcept;
Mode parse_mode(std::string_view text);

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

inline Rational abs_value(const Rational& q) { return abs(q); }
inline double abs_value(double x) { return std::fabs(x); }

inline bool is_finite(const Rational&) { return true; }
inline bool is_finite(double x) { return std::isfinite(x); }

/// Converts a double into scalar type T. The conversion to Rational is exact.
template <Scalar T>
T from_double(double x) {
    if constexpr (is_exact_v<T>) {
        return Rational(x);
    } else {
        return x;
    }
}

template <Scalar T>
T from_int(long v) {
    if constexpr (is_exact_v<T>) {
        return Rational(v);
    } else {
        return static_cast<double>(v);
    }
}

/// Parses "p/q", "p" or a decimal literal such as "-0.125" into an exact rational.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text ("p" when the denominator is 1).
std::string format_rational(const Rational& q);

/// Best rational approximation of x with denominator at most max_den
/// (continued-fraction convergents and semiconvergents).
Rational nearest_rational(double x, std::uint64_t max_den = std::uint64_t{1} << 40);

}  // namespace hypmaj
