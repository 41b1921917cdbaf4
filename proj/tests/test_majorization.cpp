#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypmaj/majorization.hpp"
#include "hypmaj/rng.hpp"
#include "hypmaj/witness.hpp"
#include "support.hpp"

using namespace hypmaj;
using namespace hypmaj::test;

namespace {

MajorizationCertificate<Rational> check(std::initializer_list<const char*> x, std::initializer_list<const char*> y) {
    const auto a = qs(x);
    const auto b = qs(y);
    return check_majorization<Rational>(a, b);
}

bool hinge_ok(std::initializer_list<const char*> x, std::initializer_list<const char*> y) {
    const auto a = qs(x);
    const auto b = qs(y);
    return hinge_oracle<Rational>(a, b).all_satisfied();
}

}  // namespace

TEST_CASE("partial-sum verdicts") {
    const auto c = check({"1", "1", "2"}, {"0", "2", "2"});
    CHECK(c.verdict == Verdict::Less);
    CHECK(c.slacks == qs({"0", "1"}));
    CHECK(c.sum_residual == 0);
    CHECK(check({"0", "5"}, {"5", "0"}).verdict == Verdict::Equal);
    const auto m = check({"0", "1"}, {"0", "2"});
    CHECK(m.verdict == Verdict::SumMismatch);
    CHECK(m.sum_residual == -1);
    CHECK(check({"0", "4"}, {"1", "3"}).verdict == Verdict::Incomparable);
    CHECK(check({"7"}, {"7"}).verdict == Verdict::Equal);
    CHECK(check({"7"}, {"8"}).verdict == Verdict::SumMismatch);
}

TEST_CASE("verdict strings round-trip") {
    for (auto v : {Verdict::Less, Verdict::Equal, Verdict::Incomparable, Verdict::SumMismatch}) {
        CHECK(parse_verdict(to_string(v)) == v);
    }
    CHECK(to_string(Verdict::SumMismatch) == "NotComparable_SumMismatch");
}

TEST_CASE("length mismatch and empty tuples raise") {
    const auto a = qs({"1", "2"});
    const auto b = qs({"3"});
    CHECK_THROWS_AS(check_majorization<Rational>(a, b), Error);
    const std::vector<Rational> empty;
    CHECK_THROWS_AS(check_majorization<Rational>(empty, empty), Error);
}

TEST_CASE("float tolerance absorbs rounding") {
    const std::vector<double> x{0.1 + 0.2, 0.7};
    const std::vector<double> y{0.3, 0.7};
    CHECK(is_majorized(check_majorization<double>(x, y).verdict));
    CHECK(check_majorization<double>(std::vector<double>{0.0, 1.0}, std::vector<double>{0.0, 1.0 + 1e-6}).verdict ==
          Verdict::SumMismatch);
}

TEST_CASE("hinge oracle") {
    CHECK(hinge_ok({"1", "1"}, {"0", "2"}));
    CHECK(hinge_ok({"3", "-1"}, {"3", "-1"}));
    CHECK_FALSE(hinge_ok({"0", "2"}, {"1", "1"}));
    const auto x = qs({"0", "2"});
    const auto y = qs({"1", "1"});
    const auto rep = hinge_oracle<Rational>(x, y);
    bool t1_failed = false;
    for (const auto& p : rep.probes) {
        if (!p.satisfied && p.value_x == 1 && p.value_y == 0) t1_failed = true;
    }
    CHECK(t1_failed);
}

TEST_CASE("hinge oracle agrees with partial sums on random integer pairs") {
    Rng rng(11);
    for (int t = 0; t < 2000; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform_int(1, 6));
        std::vector<Rational> x(n), y(n);
        for (auto& v : x) v = rng.uniform_int(-3, 3);
        for (auto& v : y) v = rng.uniform_int(-3, 3);
        const bool by_sums = is_majorized(check_majorization<Rational>(x, y).verdict);
        CHECK(by_sums == hinge_oracle<Rational>(x, y).all_satisfied());
    }
}

TEST_CASE("matching distance") {
    const auto a = qs({"0", "4"});
    const auto b = qs({"3", "1"});
    CHECK(matching_distance<Rational>(a, b) == 1);
    CHECK(matching_distance<Rational>(a, a) == 0);
    CHECK(matching_distance<Rational>(qs({"0"}), qs({"7"})) == 7);
}

TEST_CASE("Schur-convex probes") {
    CHECK(schur_eval(std::vector<double>{1, 1}, probe::Power{2}) == doctest::Approx(2));
    CHECK(schur_eval(std::vector<double>{1, 2}, probe::XLogX{}) == doctest::Approx(2 * std::log(2.0)));
    CHECK(schur_eval(std::vector<double>{2, 2}, probe::Hinge{1}) == doctest::Approx(2));
    CHECK_FALSE(probe_valid(probe::XLogX{}, std::vector<double>{-1, 2}));
    CHECK(probe_valid(probe::Power{2}, std::vector<double>{-1, 2}));
    CHECK_FALSE(probe_valid(probe::Power{2.5}, std::vector<double>{-1, 2}));
    CHECK(probe_valid(probe::SignedPower{-1}, std::vector<double>{1, 2}));
    CHECK_FALSE(describe(probe::Hinge{1}).empty());
}

TEST_CASE("Schur-convex sums are monotone along the order") {
    const std::vector<double> lo{2, 2, 2};
    const std::vector<double> hi{1, 2, 3};
    for (const SchurProbe& p : std::vector<SchurProbe>{probe::Power{2}, probe::Power{3}, probe::XLogX{},
                                                       probe::SignedPower{-1}, probe::SignedPower{0.5},
                                                       probe::Hinge{1.5}}) {
        CHECK(schur_eval(lo, p) <= schur_eval(hi, p) + 1e-12);
    }
}

TEST_CASE("witness for a single transfer") {
    const auto x = qs({"1", "3"});
    const auto y = qs({"0", "4"});
    const auto w = build_witness(x, y);
    REQUIRE(w.size() == 2);
    CHECK(w.matrix[0] == qs({"3/4", "1/4"}));
    CHECK(w.matrix[1] == qs({"1/4", "3/4"}));
    CHECK(check_witness(w, x, y));
}

TEST_CASE("witness edge cases") {
    const auto x = qs({"1", "5", "2"});
    const auto id = build_witness(x, x);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) CHECK(id.matrix[i][j] == (i == j ? 1 : 0));
    }
    const auto a = qs({"1", "1", "1"});
    const auto b = qs({"0", "1", "2"});
    const auto w = build_witness(a, b);
    CHECK(check_witness(w, a, b));
    CHECK(w.t_transforms >= 1);
    CHECK_THROWS_AS(build_witness(b, a), Error);
    CHECK_THROWS_AS(build_witness(std::vector<double>{1.0}, std::vector<double>{1.0}), Error);
}

TEST_CASE("witnesses for random comparable integer pairs") {
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform_int(2, 6));
        std::vector<Rational> y(n);
        for (auto& v : y) v = rng.uniform_int(-5, 5);
        std::vector<Rational> x = y;
        for (int m = 0; m < 4; ++m) {
            auto i = rng.below(n), j = rng.below(n);
            if (x[i] > x[j]) std::swap(i, j);
            const Rational move = (x[j] - x[i]) * Rational(rng.uniform_int(0, 2)) / 4;
            x[i] += move;
            x[j] -= move;
        }
        const auto w = build_witness(x, y);
        CHECK(check_witness(w, x, y));
    }
}
