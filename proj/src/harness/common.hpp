#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include "hypmaj/contraction.hpp"
#include "hypmaj/generators.hpp"
#include "hypmaj/harness.hpp"
#include "hypmaj/json_io.hpp"
#include "hypmaj/lp_operators.hpp"
#include "hypmaj/majorization.hpp"
#include "hypmaj/rng.hpp"

namespace hypmaj::harness::detail {

struct Context {
    Mode mode = Mode::Rational;
    double tol = 1e-7;  ///< relative slack factor
    std::size_t min_degree = 2;
    std::size_t max_degree = 8;
    std::size_t chain_cap = kDefaultChainCap;
    std::string family;
};

struct TrialOutcome {
    bool ok = true;
    bool skipped = false;
    double worst_slack = 0.0;
    json certificate = json::object();
    std::string message;
    json counters = json::object();  ///< summed into the report evidence
};

struct TrialKind {
    std::string name;
    std::size_t min_degree;
    std::size_t max_degree;
    double default_tol;
    bool exact_only;
    std::function<json(Rng&, const Context&)> generate;
    std::function<TrialOutcome(const json&, const Context&)> check;
};

const std::vector<TrialKind>& suites();
const std::vector<TrialKind>& hunts();

template <Scalar T>
T cast(const Rational& q) {
    if constexpr (is_exact_v<T>) {
        return q;
    } else {
        return to_double(q);
    }
}

template <Scalar T>
std::vector<T> cast_all(const std::vector<Rational>& v) {
    std::vector<T> out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(cast<T>(q));
    return out;
}

template <Scalar T>
HyperbolicPoly<T> cast_poly(const HyperbolicPoly<Rational>& p) {
    return HyperbolicPoly<T>::from_roots(cast_all<T>({p.roots().begin(), p.roots().end()}));
}

template <Scalar T>
LPFunction<T> cast_lp(const LPFunction<Rational>& phi) {
    return {cast<T>(phi.c), phi.m, cast<T>(phi.a), cast<T>(phi.b), cast_all<T>(phi.alphas)};
}

/// Calls f.template operator()<T>() with T chosen by the mode.
template <class F>
decltype(auto) dispatch(Mode mode, F&& f) {
    if (mode == Mode::Rational) return f.template operator()<Rational>();
    return f.template operator()<double>();
}

inline Mode inputs_mode(const json& inputs) { return parse_mode(inputs.at("mode").get<std::string>()); }

inline Rational ratio(long num, long den) {
    Rational q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
}

/// Uniform k/den with lo <= k/den <= hi, lo and hi given as integers.
inline Rational grid(Rng& rng, long lo, long hi, long den) {
    return ratio(rng.uniform_int(lo * den, hi * den), den);
}

inline std::size_t pick_degree(Rng& rng, const Context& ctx) {
    return static_cast<std::size_t>(rng.uniform_int(static_cast<long>(ctx.min_degree), static_cast<long>(ctx.max_degree)));
}

/// Random strict P with grid roots in [-bound, bound] and Q from a random
/// walk of simple nondegenerate contractions, so Q ⪯ P.
std::pair<HyperbolicPoly<Rational>, HyperbolicPoly<Rational>> comparable_pair(Rng& rng, std::size_t n,
                                                                             double bound = 5.0);

/// Random LP function with rational parameters: vanishing order up to
/// max_m, Gaussian parameter and drift on a 1/4 grid, up to max_alphas
/// nonzero alphas. `prime` drops the drift and fixes φ(0) = 1.
LPFunction<Rational> random_lp(Rng& rng, std::size_t max_m, std::size_t max_alphas, bool prime);

/// Roots of a polynomial known to be real-rooted, via its monic form.
template <Scalar T>
HyperbolicPoly<double> image_roots(const Polynomial<T>& p) {
    if (p.degree() < 1) fail(ErrorCode::DegreeZero, "image is constant");
    return hyperbolic_from_coefficients(p.monic());
}

/// Checks Z(lower) ⪯ Z(upper) with slack tol·(1 + max|entry|).
TrialOutcome compare(const HyperbolicPoly<double>& lower, const HyperbolicPoly<double>& upper, double tol,
                     const std::string& label);

/// Keeps the first failure and the most negative slack.
void merge(TrialOutcome& into, TrialOutcome part);

void add_counter(json& counters, const std::string& key, long amount = 1);

template <Scalar T>
json to_json_poly(const HyperbolicPoly<T>& p) {
    return io::poly_to_json(p);
}

}  // namespace hypmaj::harness::detail
