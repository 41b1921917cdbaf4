#include <cmath>

#include "common.hpp"

namespace hypmaj::harness {

std::optional<std::vector<RootBracket>> certified_real_roots(const Polynomial<Rational>& p) {
    if (p.degree() < 1) return std::vector<RootBracket>{};
    std::size_t zeros = 0;
    while (p[zeros] == 0) ++zeros;
    const auto rest = p.shift_down(zeros).monic();
    std::vector<RootBracket> out;
    if (rest.degree() >= 1) {
        std::vector<double> estimates;
        try {
            estimates = real_roots(rest);
        } catch (const Error&) {
            return std::nullopt;
        }
        auto br = certify_roots(rest, estimates);
        if (!br) return std::nullopt;
        out = std::move(*br);
    }
    if (zeros > 0) {
        for (const auto& b : out) {
            if (b.lo <= 0 && 0 <= b.hi) return std::nullopt;  // cannot order against the zero root
        }
        const auto pos = std::find_if(out.begin(), out.end(), [](const RootBracket& b) { return b.lo > 0; });
        out.insert(pos, zeros, RootBracket{Rational(0), Rational(0)});
    }
    return out;
}

namespace {

json brackets_json(const std::vector<RootBracket>& b) {
    json out = json::array();
    for (const auto& r : b) out.push_back(json::array({format_rational(r.lo), format_rational(r.hi)}));
    return out;
}

}  // namespace

std::optional<json> confirm_violation(const Polynomial<Rational>& lower, const Polynomial<Rational>& upper) {
    if (lower.degree() != upper.degree()) {
        return json{{"reason", "degree_mismatch"}, {"lower_degree", lower.degree()}, {"upper_degree", upper.degree()}};
    }
    if (lower.degree() < 1) return std::nullopt;
    const auto n = static_cast<std::size_t>(lower.degree());
    const auto l = lower.monic();
    const auto u = upper.monic();
    const Rational residual = u[n - 1] - l[n - 1];  // Σ lower - Σ upper
    if (residual != 0) return json{{"reason", "sum_mismatch"}, {"sum_residual", format_rational(residual)}};
    const auto bl = certified_real_roots(l);
    const auto bu = certified_real_roots(u);
    if (!bl || !bu) return std::nullopt;
    Rational low_top(0), up_top(0);
    for (std::size_t k = 1; k < n; ++k) {
        low_top += (*bl)[n - k].lo;
        up_top += (*bu)[n - k].hi;
        if (low_top > up_top) {
            return json{{"reason", "partial_sum"},
                        {"k", k},
                        {"lower_topk_at_least", format_rational(low_top)},
                        {"upper_topk_at_most", format_rational(up_top)},
                        {"lower_brackets", brackets_json(*bl)},
                        {"upper_brackets", brackets_json(*bu)}};
        }
    }
    return std::nullopt;
}

namespace detail {

namespace {

using io::poly_as;
using io::scalar_from_json;
using io::scalars_from_json;

json scalar_in_mode(const Rational& q, Mode mode) {
    return dispatch(mode, [&]<Scalar T>() { return io::to_json_value(cast<T>(q)); });
}

json scalars_in_mode(const std::vector<Rational>& v, Mode mode) {
    json out = json::array();
    for (const auto& q : v) out.push_back(scalar_in_mode(q, mode));
    return out;
}

json poly_in_mode(const HyperbolicPoly<Rational>& p, Mode mode) {
    return dispatch(mode, [&]<Scalar T>() { return to_json_poly(cast_poly<T>(p)); });
}

// Exact value nearest to a recorded scalar (identity for rational text).
Rational exact_scalar(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    return nearest_rational(j.get<double>());
}

std::vector<Rational> exact_scalars(const json& j) {
    std::vector<Rational> out;
    for (const auto& e : j) out.push_back(exact_scalar(e));
    return out;
}

// Rational witness nearest to a recorded pair; the last root of Q absorbs
// the rounding so that the sums agree exactly.
std::optional<std::pair<HyperbolicPoly<Rational>, HyperbolicPoly<Rational>>> exact_pair(const json& in) {
    auto pr = exact_scalars(in.at("p").at("roots"));
    auto qr = exact_scalars(in.at("q").at("roots"));
    std::sort(pr.begin(), pr.end());
    std::sort(qr.begin(), qr.end());
    Rational diff(0);
    for (std::size_t i = 0; i < pr.size(); ++i) diff += pr[i] - qr[i];
    qr.back() += diff;
    auto p = HyperbolicPoly<Rational>::from_roots(std::move(pr));
    auto q = HyperbolicPoly<Rational>::from_roots(std::move(qr));
    if (!is_majorized(check_majorization(q, p).verdict)) return std::nullopt;
    return std::pair{std::move(p), std::move(q)};
}

// ---- operator descriptions ------------------------------------------------
// {"factors": [ {"kind": "multiplier", "gammas": [...]},
//               {"kind": "lp", "phi": {...}},   // φ(0) = 1
//               {"kind": "dilate", "s": ...},   // P(sx)/s^n
//               {"kind": "shift", "b": ...} ]}  // e^{bD}

template <Scalar T>
T read(const json& j) {
    if constexpr (is_exact_v<T>) {
        return exact_scalar(j);
    } else {
        return scalar_from_json<T>(j);
    }
}

template <Scalar T>
std::vector<T> read_all(const json& j) {
    std::vector<T> out;
    for (const auto& e : j) out.push_back(read<T>(e));
    return out;
}

template <Scalar T>
Polynomial<T> apply_factor(const json& f, const Polynomial<T>& p) {
    const std::string kind = f.at("kind").get<std::string>();
    const auto n = static_cast<std::size_t>(p.degree());
    if (kind == "multiplier") {
        return multiplier_apply(MultiplierSequence<T>{read_all<T>(f.at("gammas"))}, p, true);
    }
    if (kind == "lp") {
        const json& j = f.at("phi");
        LPFunction<T> phi;
        phi.a = read<T>(j.at("a"));
        phi.b = read<T>(j.at("b"));
        phi.alphas = read_all<T>(j.at("alphas"));
        return apply_normalized(DiffOperator<T>::from_lp(phi, n), p);
    }
    if (kind == "dilate") {
        const T s = read<T>(f.at("s"));
        T sn(1);
        for (std::size_t i = 0; i < n; ++i) sn *= s;
        return p.scale_argument(s) * (T(1) / sn);
    }
    if (kind == "shift") return p.taylor_shift(read<T>(f.at("b")));
    fail(ErrorCode::Parse, "unknown operator factor '" + kind + "'");
}

template <Scalar T>
Polynomial<T> apply_operator(const json& op, Polynomial<T> p) {
    for (const auto& f : op.at("factors")) p = apply_factor(f, p);
    return p;
}

template <Scalar T>
Polynomial<T> poly_coeffs(const json& doc) {
    if constexpr (is_exact_v<T>) {
        return expand_roots<Rational>(exact_scalars(doc.at("roots")));
    } else {
        return poly_as<T>(doc).coefficients();
    }
}

// Float screen of T[Q] ⪯ T[P], then exact confirmation of any violation.
TrialOutcome order_check(const json& in, const json& op, const Context& ctx) {
    TrialOutcome out;
    bool screened = false;
    bool violated = false;
    try {
        const auto [lo, up] = dispatch(inputs_mode(in), [&]<Scalar T>() {
            return std::pair{image_roots(apply_operator(op, poly_coeffs<T>(in.at("q")))),
                             image_roots(apply_operator(op, poly_coeffs<T>(in.at("p"))))};
        });
        auto cmp = compare(lo, up, ctx.tol, "operator images");
        out.worst_slack = cmp.worst_slack;
        screened = true;
        violated = !cmp.ok;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotRealRooted) throw;
    }
    if (screened && !violated) return out;

    const auto pair = exact_pair(in);
    if (!pair) {
        add_counter(out.counters, "unconfirmed");
        return out;
    }
    const auto lo = apply_operator(op, pair->second.coefficients());
    const auto up = apply_operator(op, pair->first.coefficients());
    if (!screened && (!certified_real_roots(lo.monic()) || !certified_real_roots(up.monic()))) {
        add_counter(out.counters, "inadmissible_images");
        out.skipped = true;
        return out;
    }
    if (auto cert = confirm_violation(lo, up)) {
        out.ok = false;
        out.message = "exactly confirmed order violation";
        out.certificate = json{{"exact", *cert},
                               {"p", io::poly_to_json(pair->first)},
                               {"q", io::poly_to_json(pair->second)}};
        return out;
    }
    add_counter(out.counters, "unconfirmed");
    return out;
}

// ---- multiplier-sequence families ------------------------------------------

std::vector<Rational> family_gammas(const std::string& family, Rng& rng, std::size_t n, json& meta) {
    std::vector<Rational> g(n + 1);
    if (family == "k") {
        for (std::size_t k = 0; k <= n; ++k) g[k] = static_cast<long>(k);
    } else if (family == "laguerre") {
        const auto m = static_cast<std::size_t>(rng.uniform_int(1, 4));
        const std::size_t lo_p = m > n ? m - n : 0;  // keeps n >= m - p
        const auto p = static_cast<std::size_t>(rng.uniform_int(static_cast<long>(lo_p), 4 + static_cast<long>(lo_p)));
        g = laguerre_ms<Rational>(m, p, n + 1).gammas;
        meta["m"] = m;
        meta["p"] = p;
    } else if (family == "negative-roots") {
        // γ_k = H(k) for H with real roots in [-4, 0]
        std::vector<Rational> roots;
        const auto d = rng.uniform_int(1, 3);
        for (long i = 0; i < d; ++i) roots.push_back(grid(rng, -4, 0, 4));
        const auto h = expand_roots<Rational>(roots);
        for (std::size_t k = 0; k <= n; ++k) g[k] = h(Rational(static_cast<long>(k)));
        meta["h_roots"] = scalars_in_mode(roots, Mode::Rational);
    } else if (family == "factorial") {
        Rational f(1);
        for (std::size_t k = 0; k <= n; ++k) {
            if (k > 0) f /= static_cast<long>(k);
            g[k] = f;
        }
    } else if (family == "gauss") {
        const Rational q = ratio(rng.uniform_int(1, 3), 4);
        for (std::size_t k = 0; k <= n; ++k) {
            Rational v(1);
            for (std::size_t i = 0; i < k * k; ++i) v *= q;
            g[k] = v;
        }
        meta["q"] = format_rational(q);
    } else {
        fail(ErrorCode::Config, "unknown pb1 family '" + family + "'");
    }
    return g;
}

const std::vector<std::string> kPb1Families{"k", "laguerre", "negative-roots", "factorial", "gauss"};

std::string pick_family(Rng& rng, const std::string& requested, const std::vector<std::string>& all) {
    if (requested.empty() || requested == "all") return all[rng.below(all.size())];
    return requested;
}

json pb1_generate(Rng& rng, const Context& ctx) {
    const std::string family = pick_family(rng, ctx.family, kPb1Families);
    const std::size_t n = pick_degree(rng, ctx);
    json meta = json::object();
    const auto gammas = family_gammas(family, rng, n, meta);
    auto [p, q] = comparable_pair(rng, n);
    json in{{"mode", std::string(to_string(ctx.mode))}, {"family", family}, {"family_params", meta}};
    in["operator"] = json{{"factors", json::array({json{{"kind", "multiplier"}, {"gammas", scalars_in_mode(gammas, ctx.mode)}}})}};
    in["p"] = poly_in_mode(p, ctx.mode);
    in["q"] = poly_in_mode(q, ctx.mode);
    return in;
}

TrialOutcome pb1_check(const json& in, const Context& ctx) {
    auto out = order_check(in, in.at("operator"), ctx);
    add_counter(out.counters, "family_" + in.value("family", std::string("custom")));
    return out;
}

// ---- pb2 --------------------------------------------------------------------

// λ_k = j_k / C(n, k) for a Jensen polynomial Σ C(n,k) λ_k x^k = ∏ (x - r_i)
// with all r_i of one sign; such finite sequences map real-rooted
// polynomials of degree <= n to real-rooted ones.
std::vector<Rational> jensen_lambdas(Rng& rng, std::size_t n) {
    std::vector<Rational> roots;
    const bool negative = rng.coin();
    for (std::size_t i = 0; i < n; ++i) {
        const Rational r = grid(rng, 0, 4, 4) + ratio(1, 4);
        roots.push_back(negative ? Rational(-r) : r);
    }
    const auto j = expand_roots<Rational>(roots);
    std::vector<Rational> lam(n + 1);
    mpz_class binom = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) binom = binom * static_cast<unsigned long>(n - k + 1) / static_cast<unsigned long>(k);
        lam[k] = j[k] / Rational(binom);
    }
    return lam;
}

// Σ C(n,k) γ_k x^k real-rooted with all roots of one sign: exactly the
// finite sequences preserving real-rootedness on polynomials of degree <= n.
bool jensen_admissible(const std::vector<Rational>& lam, std::size_t n) {
    std::vector<Rational> c(n + 1);
    Rational binom(1);
    for (std::size_t k = 0; k <= n; ++k) {
        c[k] = binom * lam[k];
        binom = binom * static_cast<long>(n - k) / static_cast<long>(k + 1);
    }
    const Polynomial<Rational> g(c);
    if (g.degree() < 1) return g.degree() == 0;
    if (!is_real_rooted(g)) return false;
    int same = 0;
    int alternating = 0;
    bool ok_same = true;
    bool ok_alt = true;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(g.degree()); ++k) {
        const int s = sgn(g[k]);
        if (s == 0) continue;
        const int a = k % 2 == 0 ? s : -s;
        if (same == 0) same = s;
        if (alternating == 0) alternating = a;
        ok_same = ok_same && s == same;
        ok_alt = ok_alt && a == alternating;
    }
    return ok_same || ok_alt;
}

bool passes_probes(const std::vector<Rational>& lam, Rng& rng, std::size_t n) {
    const MultiplierSequence<Rational> seq{lam};
    std::vector<Polynomial<Rational>> probes;
    probes.push_back(expand_roots<Rational>(std::vector<Rational>(n, Rational(-1))));
    probes.push_back(expand_roots<Rational>(std::vector<Rational>(n, Rational(1))));
    {
        std::vector<Rational> r(n, Rational(0));
        r[0] = -1;
        if (n >= 2) r[1] = 1;
        probes.push_back(expand_roots<Rational>(r));
    }
    {
        std::vector<Rational> r;
        for (std::size_t i = 0; i < n; ++i) r.push_back(ratio(2 * static_cast<long>(i) - static_cast<long>(n) + 1, 2));
        probes.push_back(expand_roots<Rational>(r));
    }
    for (int i = 0; i < 4; ++i) probes.push_back(random_hyperbolic<Rational>(rng, n, 5.0, 0.25).coefficients());
    for (const auto& pr : probes) {
        const auto img = multiplier_apply(seq, pr, true);
        if (img.degree() != static_cast<long>(n) || !certified_real_roots(img)) return false;
    }
    return true;
}

json pb2_generate(Rng& rng, const Context& ctx) {
    const std::size_t n = pick_degree(rng, ctx);
    static const std::vector<std::string> kSources{"uniform", "jensen", "jensen-perturbed"};
    const std::string requested = ctx.family.empty() || ctx.family == "all" ? "" : ctx.family;
    if (!requested.empty() && std::find(kSources.begin(), kSources.end(), requested) == kSources.end()) {
        fail(ErrorCode::Config, "unknown pb2 family '" + requested + "'");
    }
    for (int attempt = 0; attempt < 500; ++attempt) {
        const std::string source = requested.empty() ? kSources[rng.below(3)] : requested;
        std::vector<Rational> lam;
        if (source == "uniform") {
            lam.resize(n + 1);
            for (std::size_t k = 0; k < n; ++k) lam[k] = grid(rng, -2, 2, 4);
            lam[n] = 1;
        } else {
            lam = jensen_lambdas(rng, n);
            if (source == "jensen-perturbed" && n >= 1) {
                const auto k = rng.below(n);
                lam[k] += grid(rng, -1, 1, 8) * (lam[k] == 0 ? Rational(1) : abs(lam[k]));
            }
        }
        if (!passes_probes(lam, rng, n) || !jensen_admissible(lam, n)) continue;
        auto [p, q] = comparable_pair(rng, n);
        json in{{"mode", std::string(to_string(ctx.mode))}, {"family", source}, {"attempts", attempt + 1}};
        in["operator"] = json{{"factors", json::array({json{{"kind", "multiplier"}, {"gammas", scalars_in_mode(lam, ctx.mode)}}})}};
        in["p"] = poly_in_mode(p, ctx.mode);
        in["q"] = poly_in_mode(q, ctx.mode);
        return in;
    }
    fail(ErrorCode::GeneratorExhausted, "no admissible diagonal operator after 500 candidates");
}

TrialOutcome pb2_check(const json& in, const Context& ctx) {
    auto out = order_check(in, in.at("operator"), ctx);
    add_counter(out.counters, "source_" + in.value("family", std::string("custom")));
    return out;
}

// ---- pb3 --------------------------------------------------------------------

json random_factor(Rng& rng, std::size_t n, Mode mode) {
    switch (rng.below(5)) {
        case 0: {
            json meta;
            const std::string family = kPb1Families[rng.below(kPb1Families.size())];
            return json{{"kind", "multiplier"}, {"family", family}, {"gammas", scalars_in_mode(family_gammas(family, rng, n, meta), mode)}};
        }
        case 1:
        case 2: {
            // φ(D) with φ(0) = 1; a nonzero drift moves the barycenter
            auto phi = random_lp(rng, 0, 3, true);
            if (rng.below(4) == 0) phi.b = grid(rng, -2, 2, 4);
            return json{{"kind", "lp"},
                        {"phi", json{{"a", scalar_in_mode(phi.a, mode)},
                                     {"b", scalar_in_mode(phi.b, mode)},
                                     {"alphas", scalars_in_mode(phi.alphas, mode)}}}};
        }
        case 3: {
            Rational s(0);
            while (s == 0) s = grid(rng, -2, 2, 4);
            return json{{"kind", "dilate"}, {"s", scalar_in_mode(s, mode)}};
        }
        default: {
            Rational b(0);
            while (b == 0) b = grid(rng, -2, 2, 4);
            return json{{"kind", "shift"}, {"b", scalar_in_mode(b, mode)}};
        }
    }
}

json pb3_generate(Rng& rng, const Context& ctx) {
    const std::size_t n = pick_degree(rng, ctx);
    json factors = json::array();
    const auto count = rng.uniform_int(1, 3);
    for (long i = 0; i < count; ++i) factors.push_back(random_factor(rng, n, ctx.mode));
    auto [p, q] = comparable_pair(rng, n);
    json in{{"mode", std::string(to_string(ctx.mode))}, {"operator", json{{"factors", factors}}}};
    in["p"] = poly_in_mode(p, ctx.mode);
    in["q"] = poly_in_mode(q, ctx.mode);
    in["slice_probes"] = json::array();
    for (int i = 0; i < 3; ++i) in["slice_probes"].push_back(poly_in_mode(random_centered<Rational>(rng, n, 5.0, 0.5), ctx.mode));
    return in;
}

TrialOutcome pb3_check(const json& in, const Context& ctx) {
    const json& op = in.at("operator");
    // membership in A_n^0, sampled exactly on barycenter-0 probes
    bool keeps_slice = true;
    for (const auto& doc : in.at("slice_probes")) {
        const auto img = apply_operator(op, poly_coeffs<Rational>(doc));
        const auto n = static_cast<std::size_t>(img.degree());
        if (img.degree() < 1 || img[n - 1] != 0) keeps_slice = false;
    }
    auto out = order_check(in, op, ctx);
    if (keeps_slice) {
        add_counter(out.counters, "in_a0");
        return out;
    }
    // outside A_n^0: violations are expected and are evidence, not counterexamples
    add_counter(out.counters, "outside_a0");
    add_counter(out.counters, out.ok ? "outside_a0_order_kept" : "outside_a0_order_broken");
    out.ok = true;
    out.certificate = json::object();
    out.message.clear();
    return out;
}

}  // namespace

const std::vector<TrialKind>& hunts() {
    static const std::vector<TrialKind> kinds{
        {"pb1", 1, 8, 1e-9, false, pb1_generate, pb1_check},
        {"pb2", 1, 6, 1e-9, false, pb2_generate, pb2_check},
        {"pb3", 1, 6, 1e-9, false, pb3_generate, pb3_check},
    };
    return kinds;
}

}  // namespace detail

}  // namespace hypmaj::harness
