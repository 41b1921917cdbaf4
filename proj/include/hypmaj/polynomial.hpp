#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hypmaj/errors.hpp"
#include "hypmaj/scalar.hpp"

namespace hypmaj {

/// Dense univariate polynomial, coefficients stored low degree first.
/// Trailing zero coefficients are trimmed, so the zero polynomial is empty
/// and reports degree -1.
template <Scalar T>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        for (const T& v : c_) {
            if (!is_finite(v)) fail(ErrorCode::NonFinite, "polynomial coefficient is not finite");
        }
        trim();
    }

    static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }

    static Polynomial monomial(std::size_t k, const T& v = T(1)) {
        std::vector<T> c(k + 1, T(0));
        c[k] = v;
        return Polynomial(std::move(c));
    }

    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    std::span<const T> coeffs() const noexcept { return c_; }
    const T& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == T(1); }

    /// Coefficient of x^k (zero beyond the degree).
    T operator[](std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

    T operator()(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// k-th derivative.
    Polynomial derivative(std::size_t k = 1) const {
        if (static_cast<long>(k) > degree()) return {};
        std::vector<T> out(c_.size() - k);
        for (std::size_t i = k; i < c_.size(); ++i) {
            T falling(1);
            for (std::size_t j = 0; j < k; ++j) falling *= T(static_cast<long>(i - j));
            out[i - k] = c_[i] * falling;
        }
        return Polynomial(std::move(out));
    }

    /// P(x + shift), by repeated synthetic division (exact in rational mode).
    Polynomial taylor_shift(const T& shift) const {
        std::vector<T> a = c_;
        const std::size_t n = a.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = n - 1; j > i; --j) a[j - 1] += shift * a[j];
        }
        return Polynomial(std::move(a));
    }

    /// P(s·x).
    Polynomial scale_argument(const T& s) const {
        std::vector<T> a = c_;
        T p(1);
        for (auto& v : a) {
            v *= p;
            p *= s;
        }
        return Polynomial(std::move(a));
    }

    /// x^k · P.
    Polynomial shift_up(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<T> a(k, T(0));
        a.insert(a.end(), c_.begin(), c_.end());
        return Polynomial(std::move(a));
    }

    /// P / x^k; the caller guarantees the low coefficients vanish.
    Polynomial shift_down(std::size_t k) const {
        for (std::size_t i = 0; i < std::min(k, c_.size()); ++i) {
            if (c_[i] != T(0)) fail(ErrorCode::PreconditionViolated, "division by x^k is not exact");
        }
        if (k >= c_.size()) return {};
        return Polynomial(std::vector<T>(c_.begin() + static_cast<long>(k), c_.end()));
    }

    /// Coefficients cut at degree n (terms of degree > n dropped).
    Polynomial truncated(std::size_t n) const {
        if (c_.size() <= n + 1) return *this;
        return Polynomial(std::vector<T>(c_.begin(), c_.begin() + static_cast<long>(n + 1)));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const T& s) {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Divides by the leading coefficient.
    Polynomial monic() const {
        if (is_zero()) fail(ErrorCode::DegreeZero, "the zero polynomial has no monic form");
        const T lead = c_.back();
        std::vector<T> a = c_;
        for (auto& v : a) v /= lead;
        a.back() = T(1);
        return Polynomial(std::move(a));
    }

    template <Scalar U>
    Polynomial<U> convert() const {
        std::vector<U> out;
        out.reserve(c_.size());
        for (const T& v : c_) {
            if constexpr (std::same_as<T, U>) {
                out.push_back(v);
            } else if constexpr (is_exact_v<U>) {
                out.push_back(Rational(v));
            } else {
                out.push_back(to_double(v));
            }
        }
        return Polynomial<U>(std::move(out));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

/// Expanded product ∏ (x - r_i), monic, computed in the roots' scalar mode.
template <Scalar T>
Polynomial<T> expand_roots(std::span<const T> roots) {
    std::vector<T> c{T(1)};
    for (const T& r : roots) {
        c.push_back(T(0));
        for (std::size_t j = c.size() - 1; j > 0; --j) c[j] = c[j - 1] - r * c[j];
        c[0] = -r * c[0];
    }
    c.back() = T(1);
    return Polynomial<T>(std::move(c));
}

}  // namespace hypmaj
