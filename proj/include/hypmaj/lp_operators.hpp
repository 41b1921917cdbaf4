#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hypmaj/errors.hpp"
#include "hypmaj/hyperbolic.hpp"
#include "hypmaj/polynomial.hpp"
#include "hypmaj/scalar.hpp"

namespace hypmaj {

/// c · x^m · exp(-a²x² + bx) · ∏ (1 - α_k x) e^{α_k x} over a finite list of α_k.
template <Scalar T>
struct LPFunction {
    T c = T(1);
    std::size_t m = 0;
    T a = T(0);
    T b = T(0);
    std::vector<T> alphas;

    void validate() const {
        if (c == T(0)) fail(ErrorCode::PreconditionViolated, "LP function needs c != 0");
        if (!is_finite(c) || !is_finite(a) || !is_finite(b)) fail(ErrorCode::NonFinite, "LP parameter not finite");
        for (const T& al : alphas) {
            if (!is_finite(al)) fail(ErrorCode::NonFinite, "LP parameter not finite");
        }
    }
};

namespace detail {

template <Scalar T>
T factorial(std::size_t k) {
    T f(1);
    for (std::size_t i = 2; i <= k; ++i) f *= T(static_cast<long>(i));
    return f;
}

/// n (n-1) ... (n-k+1)
template <Scalar T>
T falling(std::size_t n, std::size_t k) {
    T f(1);
    for (std::size_t i = 0; i < k; ++i) f *= T(static_cast<long>(n - i));
    return f;
}

/// Truncated product of two series, keeping terms of degree <= n.
template <Scalar T>
std::vector<T> series_mul(const std::vector<T>& u, const std::vector<T>& v, std::size_t n) {
    std::vector<T> out(n + 1, T(0));
    for (std::size_t i = 0; i < u.size() && i <= n; ++i) {
        if (u[i] == T(0)) continue;
        for (std::size_t j = 0; j < v.size() && i + j <= n; ++j) out[i + j] += u[i] * v[j];
    }
    return out;
}

}  // namespace detail

/// Exact Maclaurin coefficients a_0..a_N of φ. The exponential factor is
/// exp(g) with g = (b + Σα) x - a² x², expanded by k e_k = Σ j g_j e_{k-j};
/// the linear factors (1 - α x) are then multiplied in.
template <Scalar T>
std::vector<T> maclaurin_prefix(const LPFunction<T>& phi, std::size_t n_max) {
    phi.validate();
    if (n_max < phi.m) fail(ErrorCode::PreconditionViolated, "prefix length must reach the vanishing order");
    const std::size_t len = n_max - phi.m;
    T g1 = phi.b;
    for (const T& al : phi.alphas) g1 += al;
    const T g2 = -(phi.a * phi.a);

    std::vector<T> e(len + 1, T(0));
    e[0] = T(1);
    for (std::size_t k = 1; k <= len; ++k) {
        T acc = g1 * e[k - 1];
        if (k >= 2) acc += T(2) * g2 * e[k - 2];
        e[k] = acc / T(static_cast<long>(k));
    }
    for (const T& al : phi.alphas) e = detail::series_mul(e, std::vector<T>{T(1), T(-al)}, len);

    std::vector<T> out(n_max + 1, T(0));
    for (std::size_t k = 0; k <= len; ++k) out[k + phi.m] = phi.c * e[k];
    return out;
}

/// f(D) = Σ a_k D^k, stored as the Maclaurin prefix a_0..a_N of f with
/// a_k = 0 for k < m and a_m != 0.
template <Scalar T>
class DiffOperator {
public:
    explicit DiffOperator(std::vector<T> prefix) : prefix_(std::move(prefix)) {
        auto first = std::find_if(prefix_.begin(), prefix_.end(), [](const T& v) { return v != T(0); });
        if (first == prefix_.end()) fail(ErrorCode::PreconditionViolated, "operator symbol is identically zero");
        m_ = static_cast<std::size_t>(first - prefix_.begin());
    }

    static DiffOperator from_lp(const LPFunction<T>& phi, std::size_t n_max) {
        return DiffOperator(maclaurin_prefix(phi, n_max));
    }

    std::size_t order() const noexcept { return m_; }
    std::size_t prefix_degree() const noexcept { return prefix_.size() - 1; }
    const std::vector<T>& prefix() const noexcept { return prefix_; }

    /// k_n = 1 / (C(n, m) · f^{(m)}(0)) = 1 / (n!/(n-m)! · a_m).
    T normalization(std::size_t n) const {
        if (n < m_) fail(ErrorCode::DegreeTooSmall, "normalisation needs n >= m");
        return T(1) / (detail::falling<T>(n, m_) * prefix_[m_]);
    }

    /// The operator φ(sD): a_k -> a_k s^k.
    DiffOperator scaled(const T& s) const {
        std::vector<T> out = prefix_;
        T p(1);
        for (auto& v : out) {
            v *= p;
            p *= s;
        }
        return DiffOperator(std::move(out));
    }

private:
    std::vector<T> prefix_;
    std::size_t m_ = 0;
};

/// f(D)[P] = Σ_{k=m}^{deg P} a_k P^{(k)} in coefficient space.
template <Scalar T>
Polynomial<T> apply(const DiffOperator<T>& op, const Polynomial<T>& p) {
    if (p.is_zero()) return {};
    const std::size_t n = static_cast<std::size_t>(p.degree());
    if (op.prefix_degree() < n && op.order() <= n) {
        fail(ErrorCode::InsufficientPrefix, "operator prefix is shorter than the polynomial degree");
    }
    const auto& a = op.prefix();
    std::vector<T> out(n + 1, T(0));
    for (std::size_t j = 0; j <= n; ++j) {
        T acc(0);
        for (std::size_t k = op.order(); j + k <= n && k < a.size(); ++k) {
            if (a[k] == T(0)) continue;
            acc += a[k] * detail::falling<T>(j + k, k) * p[j + k];
        }
        out[j] = acc;
    }
    return Polynomial<T>(std::move(out));
}

/// D(f, n)[P] = k_n(f) · f(D)[P] for P of degree n. For n >= m the output of a
/// monic input is monic of degree n - m (the constant 1 when n = m); for
/// n < m it is the zero polynomial.
template <Scalar T>
Polynomial<T> apply_normalized(const DiffOperator<T>& op, const Polynomial<T>& p) {
    if (p.is_zero()) return {};
    const auto n = static_cast<std::size_t>(p.degree());
    if (n < op.order()) return {};
    return apply(op, p) * op.normalization(n);
}

/// Roots of D(f, n)[P] for a hyperbolic P of degree n >= m + 1.
template <Scalar T>
HyperbolicPoly<double> apply_hyperbolic(const DiffOperator<T>& op, const HyperbolicPoly<T>& p, double tol = 0.0) {
    if (p.degree() < op.order() + 1) {
        fail(ErrorCode::DegreeTooSmall, "image of a degree-n input is constant unless n >= m + 1");
    }
    return hyperbolic_from_coefficients(apply_normalized(op, p.coefficients()), tol);
}

/// g_n*(x) = φ(D)[x^n], optionally scaled by k_n(φ) to be monic.
template <Scalar T>
Polynomial<T> appell(const LPFunction<T>& phi, std::size_t n, bool normalized) {
    if (n < phi.m + 1) fail(ErrorCode::DegreeTooSmall, "Appell polynomial is constant unless n >= m + 1");
    const auto op = DiffOperator<T>::from_lp(phi, n);
    const auto xn = Polynomial<T>::monomial(n);
    return normalized ? apply_normalized(op, xn) : apply(op, xn);
}

/// (1 - λD) e^{λD} P = P(x + λ) - λ P'(x + λ); monic when P is.
template <Scalar T>
Polynomial<T> shift_pencil(const Polynomial<T>& p, const T& lambda) {
    const auto shifted = p.taylor_shift(lambda);
    return shifted - shifted.derivative() * lambda;
}

template <Scalar T>
Polynomial<T> shift_pencil(const HyperbolicPoly<T>& p, const T& lambda) {
    return shift_pencil(p.coefficients(), lambda);
}

/// e^{-a D²}[P] = Σ_k (-a)^k P^{(2k)} / k!. Real-rootedness is guaranteed for
/// a >= 0 only; see gaussian_in_lp.
template <Scalar T>
Polynomial<T> gaussian_op(const Polynomial<T>& p, const T& a) {
    Polynomial<T> out = p;
    Polynomial<T> d = p;
    T coeff(1);
    for (std::size_t k = 1; 2 * k <= static_cast<std::size_t>(std::max(0L, p.degree())); ++k) {
        d = d.derivative(2);
        coeff *= -a;
        coeff /= T(static_cast<long>(k));
        out += d * coeff;
    }
    return out;
}

template <Scalar T>
Polynomial<T> gaussian_op(const HyperbolicPoly<T>& p, const T& a) {
    return gaussian_op(p.coefficients(), a);
}

template <Scalar T>
bool gaussian_in_lp(const T& a) {
    return a >= T(0);
}

/// Bounded real sequence s_0, s_1, ...; entries past the stored ones are 1.
template <Scalar T>
struct DeformationVector {
    std::vector<T> s;

    T at(std::size_t i) const { return i < s.size() ? s[i] : T(1); }
};

/// s ⩽ t iff |s_i| <= |t_i| and s_i t_i >= 0 for every i.
template <Scalar T>
bool deformation_leq(const DeformationVector<T>& s, const DeformationVector<T>& t) {
    const std::size_t n = std::max(s.s.size(), t.s.size());
    for (std::size_t i = 0; i < n; ++i) {
        const T si = s.at(i);
        const T ti = t.at(i);
        if (abs_value(si) > abs_value(ti)) return false;
        if (si * ti < T(0)) return false;
    }
    return true;
}

/// φ^s: a -> s_0·a and α_k -> s_k·α_k; c, m and b are unchanged.
template <Scalar T>
LPFunction<T> deform(const LPFunction<T>& phi, const DeformationVector<T>& s) {
    LPFunction<T> out = phi;
    out.a = s.at(0) * phi.a;
    for (std::size_t k = 0; k < out.alphas.size(); ++k) out.alphas[k] = s.at(k + 1) * phi.alphas[k];
    return out;
}

/// Polynomial approximant
///   φ_j = c x^m (1 - a²x²/j)^j (1 + τ_j x/n_j)^{n_j} ∏_{ν<=j} (1 - α_ν x),
/// τ_j = b + Σ_{ν<=j} α_ν, where (1 - a²x²/j)^j = (1 - ax/√j)^j (1 + ax/√j)^j.
/// α_ν past the stored list are zero.
template <Scalar T>
Polynomial<T> approximant(const LPFunction<T>& phi, std::size_t j, std::size_t n_j) {
    phi.validate();
    if (j < 1 || n_j < 1) fail(ErrorCode::PreconditionViolated, "approximant needs j >= 1 and n_j >= 1");
    T tau = phi.b;
    const std::size_t used = std::min(j, phi.alphas.size());
    for (std::size_t v = 0; v < used; ++v) tau += phi.alphas[v];

    Polynomial<T> out = Polynomial<T>::monomial(phi.m, phi.c);
    const auto gauss = Polynomial<T>(std::vector<T>{T(1), T(0), -(phi.a * phi.a) / T(static_cast<long>(j))});
    for (std::size_t r = 0; r < j; ++r) out = out * gauss;
    const auto drift = Polynomial<T>(std::vector<T>{T(1), tau / T(static_cast<long>(n_j))});
    for (std::size_t r = 0; r < n_j; ++r) out = out * drift;
    for (std::size_t v = 0; v < used; ++v) out = out * Polynomial<T>(std::vector<T>{T(1), -phi.alphas[v]});
    return out;
}

/// Diagonal operator T_Γ[x^k] = γ_k x^k.
template <Scalar T>
struct MultiplierSequence {
    std::vector<T> gammas;
};

/// T_Γ[P]; with `normalized` the n-th normalised truncation (γ_k/γ_n), so a
/// monic input of degree n maps to a monic output. Throws ZeroTopTerm.
template <Scalar T>
Polynomial<T> multiplier_apply(const MultiplierSequence<T>& g, const Polynomial<T>& p, bool normalized) {
    if (p.is_zero()) return {};
    const auto n = static_cast<std::size_t>(p.degree());
    if (g.gammas.size() < n + 1) fail(ErrorCode::InsufficientPrefix, "sequence shorter than degree + 1");
    std::vector<T> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) out[k] = g.gammas[k] * p[k];
    if (normalized) {
        if (g.gammas[n] == T(0)) fail(ErrorCode::ZeroTopTerm, "gamma_n = 0 has no normalised truncation");
        for (auto& v : out) v /= g.gammas[n];
    }
    return Polynomial<T>(std::move(out));
}

/// γ_k = H(k + p) with H(x) = x (x-1) ... (x-m+1), k = 0..length-1.
template <Scalar T>
MultiplierSequence<T> laguerre_ms(std::size_t m, std::size_t p, std::size_t length) {
    if (m < 1) fail(ErrorCode::PreconditionViolated, "laguerre_ms needs m >= 1");
    MultiplierSequence<T> g;
    g.gammas.reserve(length);
    for (std::size_t k = 0; k < length; ++k) {
        T h(1);
        for (std::size_t i = 0; i < m; ++i) h *= T(static_cast<long>(k + p) - static_cast<long>(i));
        g.gammas.push_back(h);
    }
    return g;
}

/// Closed form of the Laguerre-type sequence: x^{m-p} [x^p P]^{(m)}.
template <Scalar T>
Polynomial<T> laguerre_closed_form(std::size_t m, std::size_t p, const Polynomial<T>& poly) {
    const auto d = poly.shift_up(p).derivative(m);
    return m >= p ? d.shift_up(m - p) : d.shift_down(p - m);
}

}  // namespace hypmaj
