#include "hypmaj/real_roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypmaj/errors.hpp"

namespace hypmaj {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_input(std::span<const double> c) {
    if (c.size() < 2) fail(ErrorCode::DegreeZero, "root finding needs degree >= 1");
    if (c.back() == 0.0) fail(ErrorCode::DegreeZero, "leading coefficient is zero");
    for (double v : c) {
        if (!std::isfinite(v)) fail(ErrorCode::NonFinite, "coefficient is not finite");
    }
}

std::vector<double> to_monic(std::span<const double> c) {
    std::vector<double> m(c.begin(), c.end());
    while (m.size() > 1 && m.back() == 0.0) m.pop_back();
    const double lead = m.back();
    for (auto& v : m) v /= lead;
    m.back() = 1.0;
    return m;
}

// Σ |a_k| |x|^k, the scale of rounding errors in evaluating p at x.
double magnitude(std::span<const double> c, double x) {
    double acc = 0.0;
    const double ax = std::fabs(x);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * ax + std::fabs(*it);
    return acc;
}

// Taylor coefficients of p at x: p(x + h) = Σ t_k h^k.
std::vector<double> taylor_at(std::span<const double> c, double x) {
    std::vector<double> a(c.begin(), c.end());
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j > i; --j) a[j - 1] += x * a[j];
    }
    return a;
}

// How far p(x) is from admitting a root within `tol` of x, as a ratio:
// values <= 1 mean a root within tol cannot be excluded numerically.
double vanishing_ratio(std::span<const double> c, double x, double tol) {
    const auto t = taylor_at(c, x);
    double reach = 0.0;
    double h = tol;
    for (std::size_t k = 1; k < t.size(); ++k) {
        reach += std::fabs(t[k]) * h;
        h *= tol;
    }
    const double noise = static_cast<double>(c.size() + 2) * kEps * magnitude(c, x);
    const double allowance = reach + noise;
    const double value = std::fabs(t[0]);
    if (allowance == 0.0) return value == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return value / allowance;
}

// Bisects down to adjacent doubles; the tolerance only governs multiple roots.
double bisect(std::span<const double> c, double lo, double hi, double flo) {
    if (lo < 0.0 && hi > 0.0 && c[0] == 0.0) return 0.0;
    for (;;) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = evaluate_compensated(c, mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> roots_monic(const std::vector<double>& c, double tol, double bound) {
    const std::size_t n = c.size() - 1;
    if (n == 1) return {-c[0]};

    std::vector<double> d(n);
    for (std::size_t k = 1; k <= n; ++k) d[k - 1] = c[k] * static_cast<double>(k) / static_cast<double>(n);
    d.back() = 1.0;
    std::vector<double> crit = roots_monic(d, tol, bound);

    std::vector<double> edges;
    edges.reserve(n + 1);
    edges.push_back(-bound);
    for (double w : crit) edges.push_back(std::clamp(w, edges.back(), bound));
    edges.push_back(bound);

    std::vector<double> roots;
    roots.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = edges[i];
        const double hi = edges[i + 1];
        if (hi - lo <= tol) {
            roots.push_back(0.5 * (lo + hi));
            continue;
        }
        const double flo = evaluate_compensated(c, lo);
        const double fhi = evaluate_compensated(c, hi);
        if (flo == 0.0) {
            roots.push_back(lo);
        } else if (fhi == 0.0) {
            roots.push_back(hi);
        } else if ((flo < 0.0) != (fhi < 0.0)) {
            roots.push_back(bisect(c, lo, hi, flo));
        } else {
            // No sign change: only acceptable when a critical endpoint is
            // (numerically) a root of multiplicity >= 2.
            const double rlo = i > 0 ? vanishing_ratio(c, lo, tol) : std::numeric_limits<double>::infinity();
            const double rhi = i + 1 < n ? vanishing_ratio(c, hi, tol) : std::numeric_limits<double>::infinity();
            if (std::min(rlo, rhi) > 1.0) {
                fail(ErrorCode::NotRealRooted,
                     "bracket [" + std::to_string(lo) + ", " + std::to_string(hi) + "] has no sign change");
            }
            roots.push_back(rlo <= rhi ? lo : hi);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

double evaluate_compensated(std::span<const double> c, double x) {
    // Graillat–Langlois–Louvet compensated Horner scheme.
    if (c.empty()) return 0.0;
    double s = c.back();
    double err = 0.0;
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        const double p = s * x;
        const double pe = std::fma(s, x, -p);
        const double sum = p + c[k];
        const double bb = sum - p;
        const double se = (p - (sum - bb)) + (c[k] - bb);
        s = sum;
        err = err * x + (pe + se);
    }
    return s + err;
}

double cauchy_bound(std::span<const double> coeffs) {
    check_input(coeffs);
    const double lead = coeffs.back();
    double m = 0.0;
    for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) m = std::max(m, std::fabs(coeffs[k] / lead));
    return 1.0 + m;
}

double fujiwara_bound(std::span<const double> coeffs) {
    check_input(coeffs);
    const std::size_t n = coeffs.size() - 1;
    const double lead = coeffs.back();
    double m = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        double ratio = std::fabs(coeffs[n - k] / lead);
        if (k == n) ratio /= 2.0;
        m = std::max(m, std::pow(ratio, 1.0 / static_cast<double>(k)));
    }
    return 2.0 * m;
}

double default_root_tolerance(std::span<const double> coeffs) {
    const double r = std::min(cauchy_bound(coeffs), fujiwara_bound(coeffs));
    return 1e-10 * (1.0 + r);
}

std::vector<double> real_roots(std::span<const double> coeffs, double tol) {
    check_input(coeffs);
    const auto monic = to_monic(coeffs);
    if (!(tol > 0.0)) tol = default_root_tolerance(monic);
    // bracket with a bound that is valid for P and, by Gauss–Lucas, for every derivative
    const double bound = std::min(cauchy_bound(monic), fujiwara_bound(monic)) * (1.0 + 4.0 * kEps) + tol;
    return roots_monic(monic, tol, bound);
}

std::vector<double> real_roots(const Polynomial<Rational>& p, double tol) {
    if (p.degree() < 1) fail(ErrorCode::DegreeZero, "root finding needs degree >= 1");
    // normalise exactly first so that rounding happens once on the monic form
    return real_roots(p.monic().convert<double>(), tol);
}

namespace {

int sign_of(const Rational& v) { return sgn(v); }

std::optional<RootBracket> bracket_with_sign_change(const Polynomial<Rational>& p, double center,
                                                    double half_width) {
    RootBracket b{nearest_rational(center - half_width), nearest_rational(center + half_width)};
    if (!(b.lo < b.hi)) return std::nullopt;
    const int slo = sign_of(p(b.lo));
    const int shi = sign_of(p(b.hi));
    if (slo == 0 || shi == 0 || slo == shi) return std::nullopt;
    return b;
}

}  // namespace

std::optional<std::vector<RootBracket>> certify_roots(const Polynomial<Rational>& p,
                                                      std::span<const double> estimates) {
    if (p.degree() < 1 || static_cast<long>(estimates.size()) != p.degree()) return std::nullopt;
    std::vector<double> r(estimates.begin(), estimates.end());
    std::sort(r.begin(), r.end());
    const std::size_t n = r.size();

    std::vector<RootBracket> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double gap = std::numeric_limits<double>::infinity();
        if (i > 0) gap = std::min(gap, r[i] - r[i - 1]);
        if (i + 1 < n) gap = std::min(gap, r[i + 1] - r[i]);
        if (!std::isfinite(gap)) gap = 1.0 + std::fabs(r[i]);
        if (!(gap > 0.0)) return std::nullopt;

        // try the sharpest bracket first; widen while the sign change is not visible
        const double scale = 1.0 + std::fabs(r[i]);
        std::optional<RootBracket> found;
        for (double h = 1e-11 * scale; h < gap / 3.0; h *= 16.0) {
            found = bracket_with_sign_change(p, r[i], h);
            if (found) break;
        }
        if (!found) found = bracket_with_sign_change(p, r[i], gap / 3.0);
        if (!found) return std::nullopt;
        if (!out.empty() && !(out.back().hi < found->lo)) return std::nullopt;
        out.push_back(*std::move(found));
    }
    return out;
}

namespace {

Polynomial<Rational> remainder(const Polynomial<Rational>& a, const Polynomial<Rational>& b) {
    std::vector<Rational> r(a.coeffs().begin(), a.coeffs().end());
    const auto db = static_cast<std::size_t>(b.degree());
    const Rational lead = b.leading();
    while (r.size() > db) {
        if (r.back() != 0) {
            const Rational f = r.back() / lead;
            const std::size_t off = r.size() - 1 - db;
            for (std::size_t k = 0; k <= db; ++k) r[off + k] -= f * b[k];
        }
        r.pop_back();
    }
    return Polynomial<Rational>(std::move(r));
}

struct SturmChain {
    std::vector<Polynomial<Rational>> seq;
};

SturmChain sturm_chain(const Polynomial<Rational>& p) {
    SturmChain c;
    c.seq.push_back(p);
    c.seq.push_back(p.derivative());
    while (!c.seq.back().is_zero() && c.seq.back().degree() > 0) {
        auto r = remainder(c.seq[c.seq.size() - 2], c.seq.back());
        if (r.is_zero()) break;
        c.seq.push_back(r * Rational(-1));
    }
    return c;
}

// Sign changes of the chain at -inf (at_plus = false) or +inf.
std::size_t variations_at_infinity(const SturmChain& c, bool at_plus) {
    std::size_t v = 0;
    int prev = 0;
    for (const auto& q : c.seq) {
        if (q.is_zero()) continue;
        int s = sgn(q.leading());
        if (!at_plus && q.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

std::size_t count_distinct_real_roots(const Polynomial<Rational>& p) {
    if (p.degree() < 1) return 0;
    const auto c = sturm_chain(p);
    return variations_at_infinity(c, false) - variations_at_infinity(c, true);
}

bool is_real_rooted(const Polynomial<Rational>& p) {
    if (p.degree() < 1) return true;
    const auto c = sturm_chain(p);
    // the last element is gcd(p, p'), so deg p - deg gcd counts the distinct roots
    const long distinct = p.degree() - c.seq.back().degree();
    return static_cast<long>(variations_at_infinity(c, false) - variations_at_infinity(c, true)) == distinct;
}

}  // namespace hypmaj
