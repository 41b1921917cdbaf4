#include "hypmaj/witness.hpp"

#include <algorithm>
#include <numeric>

#include "hypmaj/contraction.hpp"
#include "hypmaj/majorization.hpp"

namespace hypmaj {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix identity(std::size_t n) {
    Matrix a(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
    return a;
}

ContractionChain<Rational> chain_for(const HyperbolicPoly<Rational>& from, const HyperbolicPoly<Rational>& to) {
    if (is_strict(from) && is_strict(to) && !(from == to)) {
        try {
            return decompose_majorization(from, to);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ChainTooLong) throw;
        }
    }
    return transfer_chain(from, to);
}

}  // namespace

DoublyStochasticWitness build_witness(std::span<const Rational> x, std::span<const Rational> y) {
    const auto cert = check_majorization<Rational>(x, y);
    if (!is_majorized(cert.verdict)) fail(ErrorCode::NotMajorized, "X is not majorized by Y");
    const auto px = HyperbolicPoly<Rational>::from_roots({x.begin(), x.end()});
    const auto py = HyperbolicPoly<Rational>::from_roots({y.begin(), y.end()});
    const std::size_t n = px.degree();

    DoublyStochasticWitness w{identity(n), 0};
    if (px == py) return w;

    const auto chain = chain_for(py, px);
    // Invariant: sorted(current) = A · Ỹ. A contraction T(k,l;t) is the
    // T-transform with μ = 1 - t/(v_l - v_k) on rows k, l; re-sorting is a
    // permutation of rows.
    std::vector<Rational> v(py.roots().begin(), py.roots().end());
    Matrix& a = w.matrix;
    for (const auto& s : chain.steps) {
        const std::size_t k = s.k - 1;
        const std::size_t l = s.l - 1;
        const Rational lambda = s.t / (v[l] - v[k]);
        const Rational mu = 1 - lambda;
        for (std::size_t c = 0; c < n; ++c) {
            const Rational rk = a[k][c];
            const Rational rl = a[l][c];
            a[k][c] = mu * rk + lambda * rl;
            a[l][c] = lambda * rk + mu * rl;
        }
        const Rational vk = v[k];
        const Rational vl = v[l];
        v[k] = mu * vk + lambda * vl;
        v[l] = lambda * vk + mu * vl;
        ++w.t_transforms;

        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) { return v[p] < v[q]; });
        if (!std::is_sorted(order.begin(), order.end())) {
            Matrix a2(n);
            std::vector<Rational> v2(n);
            for (std::size_t r = 0; r < n; ++r) {
                a2[r] = a[order[r]];
                v2[r] = v[order[r]];
            }
            a = std::move(a2);
            v = std::move(v2);
        }
    }
    if (!check_witness(w, x, y)) fail(ErrorCode::ReplayMismatch, "witness product does not map Y to X");
    return w;
}

DoublyStochasticWitness build_witness(std::span<const double>, std::span<const double>) {
    fail(ErrorCode::FloatModeUnsupported, "witness construction requires rational mode");
}

bool check_witness(const DoublyStochasticWitness& w, std::span<const Rational> x, std::span<const Rational> y) {
    const std::size_t n = x.size();
    if (y.size() != n || w.matrix.size() != n) return false;
    std::vector<Rational> xs(x.begin(), x.end());
    std::vector<Rational> ys(y.begin(), y.end());
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    std::vector<Rational> col(n, Rational(0));
    for (std::size_t r = 0; r < n; ++r) {
        if (w.matrix[r].size() != n) return false;
        Rational row(0), image(0);
        for (std::size_t c = 0; c < n; ++c) {
            const Rational& e = w.matrix[r][c];
            if (e < 0) return false;
            row += e;
            col[c] += e;
            image += e * ys[c];
        }
        if (row != 1 || image != xs[r]) return false;
    }
    return std::all_of(col.begin(), col.end(), [](const Rational& s) { return s == 1; });
}

}  // namespace hypmaj
