#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hypmaj/polynomial.hpp"
#include "hypmaj/scalar.hpp"

namespace hypmaj {

/// Cauchy bound 1 + max |a_k / a_n|: every root lies in [-bound, bound].
double cauchy_bound(std::span<const double> coeffs);

/// Fujiwara bound 2 · max |a_{n-k}/a_n|^{1/k}; usually much tighter than Cauchy.
double fujiwara_bound(std::span<const double> coeffs);

/// Default root tolerance 1e-10 · (1 + R) where R is the tighter of the two bounds.
double default_root_tolerance(std::span<const double> coeffs);

/// Roots of a polynomial the caller knows to be real-rooted, sorted ascending.
///
/// Works by recursive interlacing: the roots of P' split the Cauchy interval
/// into brackets that each hold exactly one root of P, which is then found by
/// bisection until the bracket is narrower than `tol`. A bracket without a
/// sign change is accepted only when P can vanish within `tol` of the critical
/// endpoint (a multiple or clustered root); otherwise NotRealRooted is raised.
/// `tol <= 0` selects default_root_tolerance.
std::vector<double> real_roots(std::span<const double> coeffs, double tol = 0.0);

inline std::vector<double> real_roots(const Polynomial<double>& p, double tol = 0.0) {
    return real_roots(p.coeffs(), tol);
}

/// Float root extraction for a rational polynomial (coefficients rounded once).
std::vector<double> real_roots(const Polynomial<Rational>& p, double tol = 0.0);

/// Value of the polynomial at x by compensated Horner evaluation.
double evaluate_compensated(std::span<const double> coeffs, double x);

/// A rational interval [lo, hi] known to contain exactly one root.
struct RootBracket {
    Rational lo;
    Rational hi;
};

/// Turns approximate roots into an exact isolation certificate: each estimate
/// is widened to a rational bracket (endpoints rounded with denominators up to
/// 2^40) and the sign change of p is checked exactly. Disjoint brackets with
/// sign changes, one per unit of degree, certify that every root is simple,
/// real and inside its bracket. Returns nullopt when no certificate is found
/// (clustered or multiple roots, or estimates that are too poor).
std::optional<std::vector<RootBracket>> certify_roots(const Polynomial<Rational>& p,
                                                      std::span<const double> estimates);

/// Number of distinct real roots, by a Sturm sequence in exact arithmetic.
std::size_t count_distinct_real_roots(const Polynomial<Rational>& p);

/// Exact test that every root is real, multiplicities allowed.
bool is_real_rooted(const Polynomial<Rational>& p);

}  // namespace hypmaj
