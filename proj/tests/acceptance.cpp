// Acceptance run: one PASS/FAIL line per criterion at pinned tolerances.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "hypmaj/harness.hpp"
#include "hypmaj/lp_operators.hpp"
#include "hypmaj/real_roots.hpp"
#include "hypmaj/witness.hpp"

using namespace hypmaj;
using harness::ExperimentConfig;
using harness::SuiteReport;

namespace {

struct Line {
    bool ok;
    std::string detail;
};

std::size_t worker_count() { return std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8); }

SuiteReport suite(const std::string& name, std::size_t trials, std::size_t threads = 1, double tol = -1) {
    ExperimentConfig c;
    c.suite = name;
    c.trials = trials;
    c.seed = 20240601;
    c.threads = threads;
    if (tol >= 0) c.tol = tol;
    return harness::run_suite(c);
}

SuiteReport hunt(const std::string& name, std::size_t trials, std::size_t degree, const std::string& family) {
    ExperimentConfig c;
    c.trials = trials;
    c.seed = 20240601;
    c.threads = worker_count();
    c.min_degree = c.max_degree = degree;
    c.family = family;
    return harness::run_hunt(name, c);
}

std::string describe(const SuiteReport& r) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s: %zu trials, %zu failures, %zu skipped, %.2f s", r.suite.c_str(), r.trials,
                  r.failures.size(), r.skipped, r.wall_seconds);
    return buf;
}

Line combine(const std::vector<SuiteReport>& reps, double max_seconds = 0.0) {
    Line l{true, ""};
    for (const auto& r : reps) {
        l.ok = l.ok && r.passed() && r.skipped == 0 && (max_seconds <= 0 || r.wall_seconds < max_seconds);
        if (!l.detail.empty()) l.detail += "; ";
        l.detail += describe(r);
    }
    return l;
}

Polynomial<Rational> coeffs(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Polynomial<Rational>(std::move(v));
}

Line fixtures() {
    std::vector<std::string> bad;
    const auto r = real_roots(coeffs({-6, 11, -6, 1}));
    for (int i = 0; i < 3; ++i) {
        if (std::fabs(r[i] - (i + 1)) > 1e-10) bad.push_back("roots of x^3-6x^2+11x-6");
    }
    // e^{-D²/2} has a² = 1/2, not a rational square, so the prefix is given directly
    const DiffOperator<Rational> hermite(std::vector<Rational>{1, 0, Rational(-1, 2), 0});
    if (apply(hermite, Polynomial<Rational>::monomial(3)) != coeffs({0, -3, 0, 1})) bad.push_back("e^{-D^2/2}[x^3]");
    const LPFunction<Rational> one_minus{Rational(1), 0, Rational(0), Rational(0), {Rational(1)}};
    if (apply(DiffOperator<Rational>::from_lp(one_minus, 2), Polynomial<Rational>::monomial(2)) != coeffs({-1, 0, 1})) {
        bad.push_back("(1-D)e^D[x^2]");
    }
    const LPFunction<Rational> gauss{Rational(1), 0, Rational(1), Rational(0), {}};
    if (appell(gauss, 2, false) != coeffs({-2, 0, 1})) bad.push_back("Appell of e^{-x^2}");
    const std::vector<Rational> x{1, 3};
    const std::vector<Rational> y{0, 4};
    const auto w = build_witness(x, y);
    const std::vector<std::vector<Rational>> expect{{Rational(3, 4), Rational(1, 4)}, {Rational(1, 4), Rational(3, 4)}};
    if (w.matrix != expect || !check_witness(w, x, y)) bad.push_back("witness (0,4)->(1,3)");
    Line l{bad.empty(), "5 fixtures"};
    for (const auto& b : bad) l.detail += "; mismatch: " + b;
    return l;
}

Line chain_fixture_and_suite() {
    const auto p = HyperbolicPoly<Rational>::from_roots({0, 2, 4});
    const auto q = HyperbolicPoly<Rational>::from_roots({1, 2, 3});
    const auto c = decompose_majorization(p, q);
    Line l = combine({suite("chain", 1000)}, 60.0);
    const bool fixture = c.steps.size() == 8 && verify_chain(c);
    l.ok = l.ok && fixture;
    l.detail += "; (0,2,4)->(1,2,3) steps: " + std::to_string(c.steps.size());
    return l;
}

}  // namespace

int main() {
    const std::size_t threads = worker_count();
    const std::vector<std::pair<std::string, std::function<Line()>>> criteria{
        {"1 partial sums agree with the hinge oracle", [] { return combine({suite("oracle", 10000)}, 5.0); }},
        {"2 contraction chains replay exactly", chain_fixture_and_suite},
        {"3 pencil images stay ordered", [] { return combine({suite("main1", 1000, 1, 1e-7)}, 120.0); }},
        {"4 shift-pencil images stay ordered", [] { return combine({suite("main2", 1000, 1, 1e-7)}); }},
        {"5 operator and derivative images stay ordered",
         [] { return combine({suite("iso", 1000, 1, 1e-7), suite("deriv", 1000, 1, 1e-7)}); }},
        {"6 Appell polynomial is the minimum", [] { return combine({suite("appell-min", 500, 1, 1e-7)}); }},
        {"7 scaling, extensivity and deformation monotony",
         [] {
             return combine({suite("scaled", 500, 1, 1e-7), suite("extensive", 500, 1, 1e-7),
                             suite("deform", 500, 1, 1e-7)});
         }},
        {"8 pencil partial sums are monotone", [threads] { return combine({suite("allincr", 500, threads, 1e-7)}); }},
        {"9 Laguerre-type closed form and order", [] { return combine({suite("lag-ms", 1000, 1, 1e-7)}); }},
        {"10 hand-derived fixtures", fixtures},
        {"11 anchor hunts find nothing",
         [] {
             return combine({hunt("pb2", 10000, 2, ""), hunt("pb1", 1000, 0, "k"), hunt("pb1", 1000, 0, "laguerre")});
         }},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Line l{false, ""};
        try {
            l = run();
        } catch (const std::exception& e) {
            l = {false, std::string("exception: ") + e.what()};
        }
        if (!l.ok) ++failed;
        std::printf("[%s] %s | %s\n", l.ok ? "PASS" : "FAIL", name.c_str(), l.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
