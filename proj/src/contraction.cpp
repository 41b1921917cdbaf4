#include "hypmaj/contraction.hpp"

#include <string>

namespace hypmaj {

std::size_t minimal_halving_depth(const Rational& sigma, const Rational& margin) {
    if (!(margin > 0)) fail(ErrorCode::PreconditionViolated, "transfer margin must be positive");
    std::size_t d = 1;
    Rational scaled = margin;  // 2^{d-1} · margin
    while (!(sigma < scaled)) {
        scaled *= 2;
        ++d;
    }
    return d;
}

namespace {

// Simple nondegenerate step applied in place on a sorted root vector; the
// order of the roots cannot change, so no re-sort is needed.
void apply_simple_in_place(std::vector<Rational>& r, std::size_t k, const Rational& t) {
    if (!(2 * t < r[k] - r[k - 1])) {
        fail(ErrorCode::ReplayMismatch, "generated step T(" + std::to_string(k) + "," + std::to_string(k + 1) +
                                            ") is degenerate");
    }
    r[k - 1] += t;
    r[k] -= t;
}

std::vector<Rational> roots_of(const HyperbolicPoly<Rational>& p) { return {p.roots().begin(), p.roots().end()}; }

// Appends the steps of the two-point transfer to `steps`, updating `r`.
void emit_transfer(std::vector<Rational>& r, std::size_t i, std::size_t j, const Rational& sigma, std::size_t cap,
                   std::vector<ContractionStep<Rational>>& steps) {
    const std::size_t n = r.size();
    if (!(i >= 1 && i < j && j <= n)) fail(ErrorCode::InvalidIndices, "need 1 <= i < j <= n");
    const Rational a = r[i - 1];
    const Rational b = r[j - 1];
    if (!(sigma > 0)) fail(ErrorCode::PreconditionViolated, "sigma must be positive");
    if (!(2 * sigma < b - a)) fail(ErrorCode::SigmaTooLarge, "sigma must be below (x_j - x_i)/2");
    for (std::size_t k = i; k + 1 < j; ++k) {
        if (!(r[k - 1] < r[k])) fail(ErrorCode::PreconditionViolated, "roots in the window must be simple");
    }
    const std::size_t p = j - i - 1;
    if (p == 0) {
        if (steps.size() + 1 > cap) fail(ErrorCode::ChainTooLong, "chain cap reached");
        steps.push_back({i, j, sigma});
        apply_simple_in_place(r, i, sigma);
        return;
    }
    const Rational& z_first = r[i];
    const Rational& z_last = r[j - 2];
    if (!(a + sigma < z_first && z_last < b - sigma)) {
        fail(ErrorCode::PreconditionViolated, "interior roots must lie in (x_i + sigma, x_j - sigma)");
    }
    Rational margin = z_first - a - sigma;
    margin = std::min(margin, Rational(b - z_last - sigma));
    for (std::size_t k = i; k + 1 < j - 1; ++k) margin = std::min(margin, Rational(r[k + 1] - r[k]));

    const std::size_t d = minimal_halving_depth(sigma, margin);
    if (d >= 40) fail(ErrorCode::ChainTooLong, "transfer needs 2^" + std::to_string(d) + " sweeps");
    const std::size_t sweeps = std::size_t{1} << d;
    const std::size_t total = (p + 1) * sweeps;
    if (steps.size() + total > cap) {
        fail(ErrorCode::ChainTooLong,
             "transfer needs " + std::to_string(total) + " steps, cap is " + std::to_string(cap));
    }
    Rational t = sigma;
    t /= Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(d));
    steps.reserve(steps.size() + total);
    for (std::size_t sweep = 0; sweep < sweeps; ++sweep) {
        for (std::size_t k = i; k < j; ++k) {
            apply_simple_in_place(r, k, t);
            steps.push_back({k, k + 1, t});
        }
    }
    if (!(r[i - 1] == a + sigma && r[j - 1] == b - sigma)) {
        fail(ErrorCode::ReplayMismatch, "transfer sweep did not reach its target");
    }
}

}  // namespace

ContractionChain<Rational> expand_transfer(const HyperbolicPoly<Rational>& p, std::size_t i, std::size_t j,
                                           const Rational& sigma, std::size_t cap) {
    if (!is_strict(p)) fail(ErrorCode::PreconditionViolated, "expand_transfer needs a strictly hyperbolic input");
    auto r = roots_of(p);
    std::vector<ContractionStep<Rational>> steps;
    emit_transfer(r, i, j, sigma, cap, steps);
    auto target = HyperbolicPoly<Rational>::from_roots(std::move(r));
    ContractionChain<Rational> chain{p, std::move(steps), std::move(target), {}, std::nullopt};
    chain.stage_ends.push_back(chain.steps.size());
    if (!verify_chain(chain)) fail(ErrorCode::ReplayMismatch, "expanded transfer does not replay");
    return chain;
}

namespace {

// First pair of consecutive nonzero differences with x_i < y_i then x_j > y_j
// (1-based). Exists whenever Q ≺ P and P ≠ Q.
std::pair<std::size_t, std::size_t> first_sign_flip(const std::vector<Rational>& x, const std::vector<Rational>& y) {
    std::size_t prev = 0;
    for (std::size_t k = 1; k <= x.size(); ++k) {
        if (x[k - 1] == y[k - 1]) continue;
        if (prev != 0 && x[prev - 1] < y[prev - 1] && x[k - 1] > y[k - 1]) return {prev, k};
        prev = k;
    }
    fail(ErrorCode::NotMajorized, "no opposite-sign pair of root differences");
}

}  // namespace

ContractionChain<Rational> decompose_majorization(const HyperbolicPoly<Rational>& p_in,
                                                  const HyperbolicPoly<Rational>& q_in,
                                                  const DecomposeOptions& options) {
    if (p_in.degree() != q_in.degree()) fail(ErrorCode::DegreeMismatch, "P and Q must have equal degree");
    HyperbolicPoly<Rational> p = p_in;
    HyperbolicPoly<Rational> q = q_in;
    std::optional<Rational> used_eps;
    if (options.perturb_eps && (!is_strict(p) || !is_strict(q))) {
        p = strict_perturb(p, *options.perturb_eps);
        q = strict_perturb(q, *options.perturb_eps);
        used_eps = options.perturb_eps;
    }
    if (!is_strict(p) || !is_strict(q)) {
        fail(ErrorCode::NotStrict, "decomposition needs strictly hyperbolic P and Q (retry with a perturbation)");
    }
    if (p == q) fail(ErrorCode::NotDistinct, "P and Q coincide");
    const auto cert = check_majorization(q, p);
    if (!is_majorized(cert.verdict)) fail(ErrorCode::NotMajorized, "Q is not majorized by P");

    auto x = roots_of(p);
    const auto y = roots_of(q);
    std::vector<ContractionStep<Rational>> steps;
    std::vector<std::size_t> stage_ends;
    std::size_t delta = discrepancy(p, q);
    while (delta > 0) {
        const auto [i, j] = first_sign_flip(x, y);
        if (j == i + 1) {
            Rational t = std::min(Rational(y[i - 1] - x[i - 1]), Rational(x[j - 1] - y[j - 1]));
            if (steps.size() + 1 > options.cap) fail(ErrorCode::ChainTooLong, "chain cap reached");
            apply_simple_in_place(x, i, t);
            steps.push_back({i, j, t});
        } else {
            Rational sigma = std::min(Rational(y[i - 1] - x[i - 1]), Rational(x[j - 1] - y[j - 1]));
            emit_transfer(x, i, j, sigma, options.cap, steps);
        }
        stage_ends.push_back(steps.size());
        std::size_t next = 0;
        for (std::size_t k = 0; k < x.size(); ++k) next += x[k] != y[k] ? 1 : 0;
        if (next >= delta) fail(ErrorCode::ReplayMismatch, "discrepancy did not decrease");
        delta = next;
    }

    ContractionChain<Rational> chain{p, std::move(steps), q, std::move(stage_ends), used_eps};
    if (!verify_chain(chain)) fail(ErrorCode::ReplayMismatch, "decomposition does not replay to Q");
    return chain;
}

bool verify_chain(const ContractionChain<Rational>& chain) {
    try {
        return replay(chain.source, chain.steps) == chain.target;
    } catch (const Error&) {
        return false;
    }
}

ContractionChain<Rational> transfer_chain(const HyperbolicPoly<Rational>& p, const HyperbolicPoly<Rational>& q) {
    if (p.degree() != q.degree()) fail(ErrorCode::DegreeMismatch, "P and Q must have equal degree");
    const auto cert = check_majorization(q, p);
    if (!is_majorized(cert.verdict)) fail(ErrorCode::NotMajorized, "Q is not majorized by P");

    ContractionChain<Rational> chain{p, {}, q, {}, std::nullopt};
    HyperbolicPoly<Rational> cur = p;
    const auto y = roots_of(q);
    // Each transfer zeroes one of the two differences it touches, so at most n stages.
    for (std::size_t guard = 0; guard <= p.degree() && !(cur == q); ++guard) {
        const auto x = roots_of(cur);
        const auto [i, j] = first_sign_flip(x, y);
        Rational sigma = std::min(Rational(y[i - 1] - x[i - 1]), Rational(x[j - 1] - y[j - 1]));
        ContractionStep<Rational> step{i, j, sigma};
        cur = apply_contraction(cur, step);
        chain.steps.push_back(step);
        chain.stage_ends.push_back(chain.steps.size());
    }
    if (!(cur == q)) fail(ErrorCode::ReplayMismatch, "transfer chain did not reach Q");
    return chain;
}

}  // namespace hypmaj
