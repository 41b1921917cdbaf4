#include "common.hpp"

namespace hypmaj::harness::detail {

std::pair<HyperbolicPoly<Rational>, HyperbolicPoly<Rational>> comparable_pair(Rng& rng, std::size_t n, double bound) {
    auto p = random_hyperbolic<Rational>(rng, n, bound, 0.5);
    const auto budget = static_cast<std::size_t>(rng.uniform_int(1, 2 * static_cast<long>(n)));
    auto q = random_contraction_walk(p, rng, budget);
    return {std::move(p), std::move(q)};
}

LPFunction<Rational> random_lp(Rng& rng, std::size_t max_m, std::size_t max_alphas, bool prime) {
    static const Rational kConstants[] = {Rational(1), Rational(-1), Rational(2), ratio(-1, 2), ratio(3, 2)};
    LPFunction<Rational> phi;
    if (!prime) {
        phi.c = kConstants[rng.below(5)];
        phi.m = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(max_m)));
        phi.b = grid(rng, -2, 2, 4);
    }
    phi.a = rng.below(3) == 0 ? Rational(0) : grid(rng, -1, 1, 4);
    const auto count = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(max_alphas)));
    for (std::size_t k = 0; k < count; ++k) {
        Rational al = 0;
        while (al == 0) al = grid(rng, -2, 2, 4);
        phi.alphas.push_back(al);
    }
    return phi;
}

TrialOutcome compare(const HyperbolicPoly<double>& lower, const HyperbolicPoly<double>& upper, double tol,
                     const std::string& label) {
    double scale = 1.0;
    for (double v : lower.roots()) scale = std::max(scale, 1.0 + std::fabs(v));
    for (double v : upper.roots()) scale = std::max(scale, 1.0 + std::fabs(v));
    const auto cert = check_majorization<double>(lower.roots(), upper.roots(), tol * scale);
    TrialOutcome out;
    out.worst_slack = std::min(cert.worst_slack(), -std::fabs(cert.sum_residual));
    if (!is_majorized(cert.verdict)) {
        out.ok = false;
        out.message = label + ": verdict " + std::string(to_string(cert.verdict));
        out.certificate = json{{"check", label},
                               {"certificate", io::certificate_to_json(cert)},
                               {"lower_roots", io::scalars_to_json<double>(lower.roots())},
                               {"upper_roots", io::scalars_to_json<double>(upper.roots())}};
    }
    return out;
}

void add_counter(json& counters, const std::string& key, long amount) {
    counters[key] = counters.value(key, 0L) + amount;
}

void merge(TrialOutcome& into, TrialOutcome part) {
    if (into.ok && !part.ok) {
        into.ok = false;
        into.certificate = std::move(part.certificate);
        into.message = std::move(part.message);
    }
    into.skipped = into.skipped || part.skipped;
    into.worst_slack = std::min(into.worst_slack, part.worst_slack);
    for (const auto& [key, value] : part.counters.items()) add_counter(into.counters, key, value.get<long>());
}

}  // namespace hypmaj::harness::detail
