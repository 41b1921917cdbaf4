#include <cmath>

#include "common.hpp"
#include "hypmaj/pencil.hpp"

namespace hypmaj::harness::detail {

namespace {

using io::poly_as;
using io::scalar_from_json;
using io::scalars_from_json;
using io::scalars_to_json;

template <Scalar T>
json pair_inputs(const HyperbolicPoly<Rational>& p, const HyperbolicPoly<Rational>& q) {
    return json{{"mode", std::string(to_string(mode_of_v<T>))},
                {"p", to_json_poly(cast_poly<T>(p))},
                {"q", to_json_poly(cast_poly<T>(q))}};
}

json base_inputs(Mode mode) { return json{{"mode", std::string(to_string(mode))}}; }

json poly_in_mode(const HyperbolicPoly<Rational>& p, Mode mode) {
    return dispatch(mode, [&]<Scalar T>() { return to_json_poly(cast_poly<T>(p)); });
}

json lp_in_mode(const LPFunction<Rational>& phi, Mode mode) {
    return dispatch(mode, [&]<Scalar T>() { return io::lp_to_json(cast_lp<T>(phi)); });
}

json scalar_in_mode(const Rational& q, Mode mode) {
    return dispatch(mode, [&]<Scalar T>() { return io::to_json_value(cast<T>(q)); });
}

json comparable_inputs(Rng& rng, const Context& ctx, std::size_t n) {
    auto [p, q] = comparable_pair(rng, n);
    json in = base_inputs(ctx.mode);
    in["p"] = poly_in_mode(p, ctx.mode);
    in["q"] = poly_in_mode(q, ctx.mode);
    return in;
}

template <Scalar T>
HyperbolicPoly<double> normalized_image(const LPFunction<T>& phi, const HyperbolicPoly<T>& p) {
    return apply_hyperbolic(DiffOperator<T>::from_lp(phi, p.degree()), p);
}

// ---- oracle ---------------------------------------------------------------

json oracle_generate(Rng& rng, const Context& ctx) {
    const std::size_t n = pick_degree(rng, ctx);
    std::vector<long> x(n), y(n);
    for (auto& v : x) v = rng.uniform_int(-20, 20);
    const auto kind = rng.below(10);
    if (kind < 5) {
        // spread X out by reverse transfers, so X ≺ Y
        y = x;
        const long moves = rng.uniform_int(0, 2 * static_cast<long>(n));
        for (long m = 0; m < moves && n >= 2; ++m) {
            auto i = rng.below(n), j = rng.below(n);
            if (i == j) continue;
            if (y[i] > y[j]) std::swap(i, j);
            const long d = rng.uniform_int(0, 5);
            if (y[i] - d < -20 || y[j] + d > 20) continue;
            y[i] -= d;
            y[j] += d;
        }
    } else {
        for (auto& v : y) v = rng.uniform_int(-20, 20);
        if (kind < 9) {
            long diff = 0;
            for (std::size_t i = 0; i < n; ++i) diff += x[i] - y[i];
            for (int guard = 0; diff != 0 && guard < 10000; ++guard) {
                const auto i = rng.below(n);
                const long step = diff > 0 ? 1 : -1;
                if (y[i] + step < -20 || y[i] + step > 20) continue;
                y[i] += step;
                diff -= step;
            }
        }
    }
    json in = base_inputs(ctx.mode);
    in["x"] = json::array();
    in["y"] = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        in["x"].push_back(scalar_in_mode(Rational(x[i]), ctx.mode));
        in["y"].push_back(scalar_in_mode(Rational(y[i]), ctx.mode));
    }
    return in;
}

TrialOutcome oracle_check(const json& in, const Context&) {
    return dispatch(inputs_mode(in), [&]<Scalar T>() {
        const auto x = scalars_from_json<T>(in.at("x"));
        const auto y = scalars_from_json<T>(in.at("y"));
        const auto cert = check_majorization<T>(x, y);
        const auto oracle = hinge_oracle<T>(x, y);
        const auto reverse = check_majorization<T>(y, x);
        TrialOutcome out;
        const bool agree = is_majorized(cert.verdict) == oracle.all_satisfied();
        const bool antisym = !(cert.verdict == Verdict::Less && reverse.verdict == Verdict::Less);
        if (!agree || !antisym) {
            out.ok = false;
            out.message = !agree ? "partial-sum verdict disagrees with the hinge oracle"
                                 : "X ≺ Y and Y ≺ X without equality";
            out.certificate = json{{"certificate", io::certificate_to_json(cert)},
                                   {"oracle_satisfied", oracle.all_satisfied()},
                                   {"reverse_verdict", std::string(to_string(reverse.verdict))}};
        }
        add_counter(out.counters, std::string("verdict_") + std::string(to_string(cert.verdict)));
        return out;
    });
}

// ---- chain ----------------------------------------------------------------

json chain_generate(Rng& rng, const Context& ctx) { return comparable_inputs(rng, ctx, pick_degree(rng, ctx)); }

TrialOutcome chain_check(const json& in, const Context& ctx) {
    const auto p = poly_as<Rational>(in.at("p"));
    const auto q = poly_as<Rational>(in.at("q"));
    TrialOutcome out;
    if (p == q) return out;
    const auto chain = decompose_majorization(p, q, {ctx.chain_cap, std::nullopt});
    auto bad = [&](std::size_t index, const std::string& why) {
        out.ok = false;
        out.message = "step " + std::to_string(index) + ": " + why;
        out.certificate = json{{"steps", chain.steps.size()}, {"failed_step", index}};
        return out;
    };
    HyperbolicPoly<Rational> cur = p;
    std::size_t delta = discrepancy(p, q);
    std::size_t stage = 0;
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const auto& s = chain.steps[i];
        if (!s.simple()) return bad(i, "not simple");
        if (!is_nondegenerate(cur, s)) return bad(i, "degenerate");
        auto next = apply_contraction(cur, s);
        if (!is_strict(next)) return bad(i, "intermediate not strictly hyperbolic");
        if (!is_majorized(check_majorization(next, cur).verdict)) return bad(i, "no descent");
        cur = std::move(next);
        if (stage < chain.stage_ends.size() && chain.stage_ends[stage] == i + 1) {
            const std::size_t d = discrepancy(cur, q);
            if (d >= delta) return bad(i, "discrepancy did not decrease over the stage");
            delta = d;
            ++stage;
        }
    }
    if (!(cur == q)) return bad(chain.steps.size(), "replay does not reach Q");
    add_counter(out.counters, "steps", static_cast<long>(chain.steps.size()));
    add_counter(out.counters, "stages", static_cast<long>(chain.stage_ends.size()));
    return out;
}

// ---- main1 ----------------------------------------------------------------

json main1_generate(Rng& rng, const Context& ctx) {
    json in = comparable_inputs(rng, ctx, pick_degree(rng, ctx));
    in["lambdas"] = json::array();
    for (int i = 0; i < 11; ++i) in["lambdas"].push_back(scalar_in_mode(grid(rng, -10, 10, 4), ctx.mode));
    return in;
}

TrialOutcome main1_check(const json& in, const Context& ctx) {
    return dispatch(inputs_mode(in), [&]<Scalar T>() {
        const auto p = poly_as<T>(in.at("p"));
        const auto q = poly_as<T>(in.at("q"));
        const auto pc = p.coefficients();
        const auto qc = q.coefficients();
        TrialOutcome out;
        for (const auto& lj : in.at("lambdas")) {
            const T lam = scalar_from_json<T>(lj);
            merge(out, compare(image_roots(pencil_polynomial(qc, lam)), image_roots(pencil_polynomial(pc, lam)),
                               ctx.tol, "pencil at lambda=" + lj.dump()));
        }
        return out;
    });
}

// ---- main2 ----------------------------------------------------------------

json main2_generate(Rng& rng, const Context& ctx) {
    const auto p = random_hyperbolic<Rational>(rng, pick_degree(rng, ctx), 5.0, 0.5);
    const Rational l2 = grid(rng, -5, 5, 4);
    const Rational l1 = l2 * grid(rng, 0, 1, 8);
    json in = base_inputs(ctx.mode);
    in["p"] = poly_in_mode(p, ctx.mode);
    in["lambda1"] = scalar_in_mode(l1, ctx.mode);
    in["lambda2"] = scalar_in_mode(l2, ctx.mode);
    return in;
}

TrialOutcome main2_check(const json& in, const Context& ctx) {
    return dispatch(inputs_mode(in), [&]<Scalar T>() {
        const auto p = poly_as<T>(in.at("p"));
        const T l1 = scalar_from_json<T>(in.at("lambda1"));
        const T l2 = scalar_from_json<T>(in.at("lambda2"));
        if (l1 * l2 < T(0) || abs_value(l1) > abs_value(l2)) fail(ErrorCode::PreconditionViolated, "need l1·l2 >= 0, |l1| <= |l2|");
        return compare(image_roots(shift_pencil(p, l1)), image_roots(shift_pencil(p, l2)), ctx.tol, "shift pencils");
    });
}

// ---- deriv ----------------------------------------------------------------

json deriv_generate(Rng& rng, const Context& ctx) { return comparable_inputs(rng, ctx, pick_degree(rng, ctx)); }

TrialOutcome deriv_check(const json& in, const Context& ctx) {
    return dispatch(inputs_mode(in), [&]<Scalar T>() {
        const auto p = poly_as<T>(in.at("p"));
        const auto q = poly_as<T>(in.at("q"));
        return compare(derivative(q), derivative(p), ctx.tol, "derivatives");
    });
}

// ---- iso ------------------------------------------------------------------

json iso_generate(Rng& rng, const Context& ctx) {
    const auto phi = random_lp(rng, 2, 4, false);
    const std::size_t n = std::max(pick_degree(rng, ctx), phi.m + 1);
    json in = comparable_inputs(rng, ctx, n);
    in["phi"] = lp_in_mode(phi, ctx.mode);
    return in;
}

TrialOutcome iso_check(const json& in, const Context& ctx) {
    return dispatch(inputs_mode(in), [&]<Scalar T>() {
        const auto p = poly_as<T>(in.at("p"));
        const auto q = poly_as<T>(in.at("q"));
        const auto phi = io::lp_from_json<T>(in.at("phi"));
        return compare(normalized_image(phi, q), normalized_image(phi, p), ctx.tol, "operator images");
    });
}

// ---- appell-min -----------------------------------------------------------

json appell_generate(Rng& rng, const Context& ctx) {
    const auto phi = random_lp(rng, 2, 4, false);
    const std::size_t n = std::max(pick_degree(rng, ctx), phi.m + 1);
    const auto p = random_centered<Rational>(rng, n, 5.0, 0.5);
    json in = base_inputs(ctx.mode);
    in["p"] = poly_in_mode(p, ctx.mode);
    in["phi"] = lp_in_mode(phi, ctx.mode);
    return in;
}

TrialOutcome appell_check(const json& in, const Context& ctx) {
    return dispatch(inputs_mode(in), [&]<Scalar T>() {
        const auto p = poly_as<T>(in.at("p"));
        const auto phi = io::lp_from_json<T>(in.at("phi"));
        const std::size_t n = p.degree();
        TrialOutcome out;
        // x^n ⪯ P on the barycenter-0 slice
        const std::vector<T> zeros(n, T(0));
        if constexpr (is_exact_v<T>) {
            if (p.root_sum() != 0) fail(ErrorCode::PreconditionViolated, "P must have barycenter 0");
            const auto cert = check_majorization<T>(zeros, p.roots());
            if (!is_majorized(cert.verdict)) {
                out.ok = false;
                out.message = "x^n is not below P";
                out.certificate = io::certificate_to_json(cert);
            }
        } else {
            merge(out, compare(HyperbolicPoly<double>::from_roots(zeros), p, ctx.tol, "x^n below P"));
        }
        merge(out, compare(image_roots(appell(phi, n, true)), normalized_image(phi, p), ctx.tol,
                           "Appell polynomial below the image"));
        return out;
    });
}

// ---- extensive ------------------------------------------------------------

json extensive_generate(Rng& rng, const Context& ctx) {
    const auto phi = random_lp(rng, 0, 4, true);
    const auto p = random_hyperbolic<Rational>(rng, pick_degree(rng, ctx), 5.0, 0.5);
    json in = base_inputs(ctx.mode);
    in["p"] = poly_in_mode(p, ctx.mode);
    in["phi"] = lp_in_mode(phi, ctx.mode);
    return in;
}

template <Scalar T>
void require_unit_prime(const LPFunction<T>& phi) {
    if (phi.m != 0 || phi.c != T(1) || phi.b != T(0)) {
        fail(ErrorCode::PreconditionViolated, "needs b = 0, m = 0 and phi(0) = 1");
    }
}

TrialOutcome extensive_check(const json& in, const Context& ctx) {
    return dispatch(inputs_mode(in), [&]<Scalar T>() {
        const auto p = poly_as<T>(in.at("p"));
        const auto phi = io::lp_from_json<T>(in.at("phi"));
        require_unit_prime(phi);
        return compare(to_float(p), normalized_image(phi, p), ctx.tol, "P below its image");
    });
}

// ---- scaled ---------------------------------------------------------------

json scaled_generate(Rng& rng, const Context& ctx) {
    json in = extensive_generate(rng, ctx);
    const Rational t = grid(rng, -2, 2, 4);
    const Rational s = t * grid(rng, 0, 1, 8);
    in["s"] = scalar_in_mode(s, ctx.mode);
    in["t"] = scalar_in_mode(t, ctx.mode);
    return in;
}

TrialOutcome scaled_check(const json& in, const Context& ctx) {
    return dispatch(inputs_mode(in), [&]<Scalar T>() {
        const auto p = poly_as<T>(in.at("p"));
        const auto phi = io::lp_from_json<T>(in.at("phi"));
        require_unit_prime(phi);
        const T s = scalar_from_json<T>(in.at("s"));
        const T t = scalar_from_json<T>(in.at("t"));
        if (s * t < T(0) || abs_value(s) > abs_value(t)) fail(ErrorCode::PreconditionViolated, "need st >= 0, |s| <= |t|");
        const auto op = DiffOperator<T>::from_lp(phi, p.degree());
        return compare(apply_hyperbolic(op.scaled(s), p), apply_hyperbolic(op.scaled(t), p), ctx.tol,
                       "phi(sD)P below phi(tD)P");
    });
}

// ---- deform ---------------------------------------------------------------

json deform_generate(Rng& rng, const Context& ctx) {
    const auto phi = random_lp(rng, 2, 4, false);
    const std::size_t n = std::max(pick_degree(rng, ctx), phi.m + 1);
    const auto p = random_hyperbolic<Rational>(rng, n, 5.0, 0.5);
    std::vector<Rational> s, t;
    for (std::size_t i = 0; i <= phi.alphas.size(); ++i) {
        t.push_back(grid(rng, -2, 2, 4));
        s.push_back(t.back() * grid(rng, 0, 1, 4));
    }
    json in = base_inputs(ctx.mode);
    in["p"] = poly_in_mode(p, ctx.mode);
    in["phi"] = lp_in_mode(phi, ctx.mode);
    in["s"] = json::array();
    in["t"] = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        in["s"].push_back(scalar_in_mode(s[i], ctx.mode));
        in["t"].push_back(scalar_in_mode(t[i], ctx.mode));
    }
    return in;
}

TrialOutcome deform_check(const json& in, const Context& ctx) {
    return dispatch(inputs_mode(in), [&]<Scalar T>() {
        const auto p = poly_as<T>(in.at("p"));
        const auto phi = io::lp_from_json<T>(in.at("phi"));
        const DeformationVector<T> s{scalars_from_json<T>(in.at("s"))};
        const DeformationVector<T> t{scalars_from_json<T>(in.at("t"))};
        if (!deformation_leq(s, t)) fail(ErrorCode::PreconditionViolated, "s is not below t");
        return compare(normalized_image(deform(phi, s), p), normalized_image(deform(phi, t), p), ctx.tol,
                       "deformed images");
    });
}

// ---- allincr --------------------------------------------------------------

json allincr_generate(Rng& rng, const Context& ctx) {
    const auto p = random_hyperbolic<Rational>(rng, pick_degree(rng, ctx), 5.0, 0.5);
    json in = base_inputs(ctx.mode);
    in["p"] = poly_in_mode(p, ctx.mode);
    in["points"] = 201;
    return in;
}

TrialOutcome allincr_check(const json& in, const Context& ctx) {
    const auto p = dispatch(inputs_mode(in), [&]<Scalar T>() { return to_float(poly_as<T>(in.at("p"))); });
    const auto points = in.value("points", std::size_t{201});
    const auto g = default_grid(p, points);
    double scale = 1.0;
    for (double x : p.roots()) scale = std::max(scale, 1.0 + std::fabs(x));

    TrialOutcome out;
    const auto rep = scan_monotonicity(p, g, ctx.tol);
    for (const auto& e : rep.entries) out.worst_slack = std::min(out.worst_slack, -e.worst_violation);
    add_counter(out.counters, "concavity_flags", rep.worst_concavity > ctx.tol * scale ? 1 : 0);
    const bool strict = is_strict(p);
    std::size_t interlace_breaks = 0;
    if (strict) {
        for (double lam : g) {
            const auto s = pencil_at(p, lam);
            const double slack = ctx.tol * (1.0 + std::fabs(s.roots.back()) + std::fabs(s.roots.front()));
            for (std::size_t j = 0; j < s.critical.size(); ++j) {
                if (s.critical[j] < s.roots[j] - slack || s.critical[j] > s.roots[j + 1] + slack) ++interlace_breaks;
            }
        }
    }
    if (rep.total_violations() > 0 || rep.constancy_error > 0.1 * ctx.tol * scale || interlace_breaks > 0) {
        out.ok = false;
        json entries = json::array();
        for (const auto& e : rep.entries) {
            entries.push_back({{"m", e.m}, {"violations", e.violations}, {"worst", e.worst_violation}});
        }
        out.certificate = json{{"entries", entries},
                               {"constancy_error", rep.constancy_error},
                               {"interlacing_breaks", interlace_breaks}};
        out.message = rep.total_violations() > 0 ? "partial sums not monotone"
                      : interlace_breaks > 0     ? "pencil roots do not interlace critical points"
                                                 : "f_n is not constant";
    }
    return out;
}

// ---- schur ----------------------------------------------------------------

// Positive-rooted pair, optionally mapped through a type-I operator
// c x^m e^{bx} ∏(1 - αx) with b <= 0, α >= 0.
json schur_generate(Rng& rng, const Context& ctx) {
    const std::size_t n = pick_degree(rng, ctx);
    auto [p, q] = comparable_pair(rng, n);
    const Rational shift(-6);  // roots move into [1, 11]
    p = taylor_shift(p, shift);
    q = taylor_shift(q, shift);
    json in = base_inputs(ctx.mode);
    in["p"] = poly_in_mode(p, ctx.mode);
    in["q"] = poly_in_mode(q, ctx.mode);
    if (rng.coin()) {
        LPFunction<Rational> phi;
        phi.m = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(n) - 1));
        const Rational b_true = grid(rng, -2, 0, 4);
        Rational sum(0);
        const auto count = rng.uniform_int(0, 3);
        for (long k = 0; k < count; ++k) {
            phi.alphas.push_back(grid(rng, 0, 1, 4));
            sum += phi.alphas.back();
        }
        phi.b = b_true - sum;  // cancels the e^{αx} factors
        in["phi"] = lp_in_mode(phi, ctx.mode);
    }
    return in;
}

std::vector<SchurProbe> schur_probes(const HyperbolicPoly<double>& upper) {
    std::vector<SchurProbe> probes{probe::Power{1.0},       probe::Power{2.0},        probe::Power{3.0},
                                   probe::Power{2.5},       probe::XLogX{},           probe::SignedPower{-1.0},
                                   probe::SignedPower{0.5}, probe::SignedPower{3.0}};
    for (double t : upper.roots()) probes.push_back(probe::Hinge{t});
    return probes;
}

TrialOutcome schur_check(const json& in, const Context& ctx) {
    const auto [lower, upper] = dispatch(inputs_mode(in), [&]<Scalar T>() {
        const auto p = poly_as<T>(in.at("p"));
        const auto q = poly_as<T>(in.at("q"));
        if (in.contains("phi")) {
            const auto phi = io::lp_from_json<T>(in.at("phi"));
            return std::pair{normalized_image(phi, q), normalized_image(phi, p)};
        }
        return std::pair{to_float(q), to_float(p)};
    });
    TrialOutcome out = compare(lower, upper, ctx.tol, "images");
    for (const auto& pr : schur_probes(upper)) {
        if (!probe_valid(pr, lower.roots()) || !probe_valid(pr, upper.roots())) {
            add_counter(out.counters, "probes_skipped");
            continue;
        }
        const double lo = schur_eval(lower.roots(), pr);
        const double hi = schur_eval(upper.roots(), pr);
        const double slack = ctx.tol * (1.0 + std::fabs(lo) + std::fabs(hi));
        if (lo > hi + slack && out.ok) {
            out.ok = false;
            out.message = describe(pr) + " decreased";
            out.certificate = json{{"probe", describe(pr)}, {"lower_value", lo}, {"upper_value", hi}};
        }
    }
    return out;
}

// ---- lag-ms ---------------------------------------------------------------

json lagms_generate(Rng& rng, const Context& ctx) {
    const auto m = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const auto p_shift = static_cast<std::size_t>(rng.uniform_int(0, 4));
    const std::size_t floor_n = m > p_shift ? m - p_shift : 1;
    const std::size_t n = std::max(pick_degree(rng, ctx), floor_n);
    json in = comparable_inputs(rng, ctx, n);
    in["m"] = m;
    in["p_shift"] = p_shift;
    std::vector<Rational> coeffs;
    const auto deg = rng.uniform_int(0, static_cast<long>(ctx.max_degree));
    for (long k = 0; k <= deg; ++k) coeffs.push_back(grid(rng, -5, 5, 4));
    in["poly"] = json::array();
    for (const auto& c : coeffs) in["poly"].push_back(scalar_in_mode(c, ctx.mode));
    return in;
}

TrialOutcome lagms_check(const json& in, const Context& ctx) {
    return dispatch(inputs_mode(in), [&]<Scalar T>() {
        const auto m = in.at("m").get<std::size_t>();
        const auto ps = in.at("p_shift").get<std::size_t>();
        const auto poly = io::coeffs_from_json<T>(in.at("poly"));
        TrialOutcome out;
        const auto len = static_cast<std::size_t>(std::max(0L, poly.degree())) + 1;
        const auto seq = laguerre_ms<T>(m, ps, len);
        const auto closed = laguerre_closed_form(m, ps, poly);
        const auto direct = multiplier_apply(seq, poly, false);
        bool same = closed == direct;
        if constexpr (!is_exact_v<T>) {
            const auto diff = closed - direct;
            same = true;
            for (std::size_t k = 0; k < diff.coeffs().size(); ++k) {
                same = same && std::fabs(diff[k]) <= 1e-12 * (1.0 + std::fabs(direct[k]));
            }
        }
        if (!same) {
            out.ok = false;
            out.message = "closed form differs from the multiplier action";
            out.certificate = json{{"closed_form", io::coeffs_to_json(closed)}, {"multiplier", io::coeffs_to_json(direct)}};
            return out;
        }
        const auto p = poly_as<T>(in.at("p"));
        const auto q = poly_as<T>(in.at("q"));
        const std::size_t n = p.degree();
        const auto gam = laguerre_ms<T>(m, ps, n + 1);
        merge(out, compare(image_roots(multiplier_apply(gam, q.coefficients(), true)),
                           image_roots(multiplier_apply(gam, p.coefficients(), true)), ctx.tol,
                           "normalised truncation images"));
        return out;
    });
}

}  // namespace

const std::vector<TrialKind>& suites() {
    static const std::vector<TrialKind> kinds{
        {"oracle", 1, 10, 0.0, false, oracle_generate, oracle_check},
        {"chain", 2, 8, 0.0, true, chain_generate, chain_check},
        {"main1", 2, 10, 1e-7, false, main1_generate, main1_check},
        {"main2", 2, 10, 1e-7, false, main2_generate, main2_check},
        {"deriv", 2, 10, 1e-7, false, deriv_generate, deriv_check},
        {"iso", 2, 8, 1e-7, false, iso_generate, iso_check},
        {"appell-min", 2, 8, 1e-7, false, appell_generate, appell_check},
        {"extensive", 2, 8, 1e-7, false, extensive_generate, extensive_check},
        {"scaled", 2, 8, 1e-7, false, scaled_generate, scaled_check},
        {"deform", 2, 8, 1e-7, false, deform_generate, deform_check},
        {"allincr", 2, 10, 1e-7, false, allincr_generate, allincr_check},
        {"schur", 2, 8, 1e-7, false, schur_generate, schur_check},
        {"lag-ms", 1, 8, 1e-7, false, lagms_generate, lagms_check},
    };
    return kinds;
}

}  // namespace hypmaj::harness::detail
