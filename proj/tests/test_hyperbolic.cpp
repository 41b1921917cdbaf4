#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypmaj/generators.hpp"
#include "hypmaj/real_roots.hpp"
#include "support.hpp"

using namespace hypmaj;
using namespace hypmaj::test;

TEST_CASE("rational parsing and formatting") {
    CHECK(q("6/4") == Rational(3, 2));
    CHECK(q("-0.25") == Rational(-1, 4));
    CHECK(q("7") == Rational(7));
    CHECK(format_rational(q("-3/6")) == "-1/2");
    CHECK(format_rational(Rational(4)) == "4");
    CHECK_THROWS_AS(q("1/0"), Error);
    CHECK_THROWS_AS(q("abc"), Error);
    CHECK(parse_mode("float") == Mode::Float);
    CHECK_THROWS_AS(parse_mode("quad"), Error);
}

TEST_CASE("nearest_rational respects the denominator cap") {
    CHECK(nearest_rational(0.5) == Rational(1, 2));
    const Rational third = nearest_rational(1.0 / 3.0, 1000);
    CHECK(third == Rational(1, 3));
    const Rational pi = nearest_rational(M_PI, 1u << 20);
    CHECK(pi.get_den() <= (1u << 20));
    CHECK(std::fabs(pi.get_d() - M_PI) < 1e-10);
}

TEST_CASE("from_roots expands and sorts") {
    const auto p = rpoly({"3", "1", "2"});
    CHECK(p.roots()[0] == 1);
    CHECK(p.roots()[2] == 3);
    CHECK(p.coefficients() == rcoeffs({"-6", "11", "-6", "1"}));
    CHECK(rpoly({"0"}).coefficients() == rcoeffs({"0", "1"}));
    CHECK(rpoly({"-1", "1"}).coefficients() == rcoeffs({"-1", "0", "1"}));
    CHECK(rpoly({"0", "0", "0"}).coefficients() == rcoeffs({"0", "0", "0", "1"}));
    const auto dbl = rpoly({"5/2", "5/2"});
    CHECK(dbl.degree() == 2);
    CHECK(dbl.coefficients() == rcoeffs({"25/4", "-5", "1"}));
}

TEST_CASE("from_roots rejects bad input") {
    CHECK_THROWS_AS(HyperbolicPoly<double>::from_roots({}), Error);
    CHECK_THROWS_AS(HyperbolicPoly<double>::from_roots({1.0, NAN}), Error);
}

TEST_CASE("real_roots recovers hand-factored polynomials") {
    const std::vector<double> c{-6, 11, -6, 1};
    const auto r = real_roots(c);
    REQUIRE(r.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(r[i] == doctest::Approx(i + 1).epsilon(1e-12));
    CHECK(real_roots(std::vector<double>{0, 1}) == std::vector<double>{0.0});
    const auto s = real_roots(std::vector<double>{-1, 0, 1});
    CHECK(s[0] == doctest::Approx(-1));
    CHECK(s[1] == doctest::Approx(1));
}

TEST_CASE("real_roots handles multiple roots and rejects complex ones") {
    const auto r = real_roots(rpoly({"2", "2", "-1"}).coefficients());
    REQUIRE(r.size() == 3);
    CHECK(r[0] == doctest::Approx(-1));
    CHECK(r[1] == doctest::Approx(2).epsilon(1e-6));
    CHECK(r[2] == doctest::Approx(2).epsilon(1e-6));
    CHECK_THROWS_AS(real_roots(std::vector<double>{1, 0, 1}), Error);
    CHECK_THROWS_AS(real_roots(std::vector<double>{3}), Error);
}

TEST_CASE("real_roots is accurate to rounding on simple roots") {
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        const auto p = random_hyperbolic<Rational>(rng, 8, 10.0, 0.5);
        const auto r = real_roots(p.coefficients());
        for (std::size_t i = 0; i < r.size(); ++i) CHECK(std::fabs(r[i] - p.roots()[i].get_d()) < 1e-10);
    }
}

TEST_CASE("hyperbolic_from_coefficients normalises to monic") {
    const auto p = hyperbolic_from_coefficients(Polynomial<double>(std::vector<double>{-2, 0, 2}));
    CHECK(p.roots()[0] == doctest::Approx(-1));
    CHECK(p.roots()[1] == doctest::Approx(1));
}

TEST_CASE("derivative") {
    const auto d = derivative(rpoly({"0", "4"}));
    REQUIRE(d.degree() == 1);
    CHECK(d.roots()[0] == doctest::Approx(2));
    CHECK(derivative(rpoly({"3", "3"})).roots()[0] == doctest::Approx(3));
    const auto e = derivative(rpoly({"-1", "0", "1"}));
    CHECK(e.roots()[0] == doctest::Approx(-1 / std::sqrt(3.0)));
    CHECK(e.roots()[1] == doctest::Approx(1 / std::sqrt(3.0)));
}

TEST_CASE("taylor_shift moves roots by -lambda") {
    CHECK(taylor_shift(rpoly({"1", "2"}), Rational(1)) == rpoly({"0", "1"}));
    CHECK(taylor_shift(rpoly({"0"}), Rational(-3)) == rpoly({"3"}));
    CHECK(taylor_shift(rpoly({"1", "5/2"}), Rational(0)) == rpoly({"1", "5/2"}));
    const auto c = rcoeffs({"-6", "11", "-6", "1"}).taylor_shift(Rational(1));
    CHECK(c == rpoly({"0", "1", "2"}).coefficients());
}

TEST_CASE("strict_perturb") {
    CHECK(strict_perturb(rpoly({"0", "0"}), Rational(1)) == rpoly({"-1", "1"}));
    CHECK(strict_perturb(rpoly({"0", "0", "0"}), Rational(1)) == rpoly({"-2", "-1", "3"}));
    const auto p = rpoly({"1", "1", "2", "5"});
    const auto s = strict_perturb(p, q("1/1000"));
    CHECK(is_strict(s));
    CHECK(s.root_sum() == p.root_sum());
    CHECK_THROWS_AS(strict_perturb(p, Rational(0)), Error);
}

TEST_CASE("strictness report") {
    CHECK(is_strict(rpoly({"0", "1", "3"})));
    CHECK_FALSE(is_strict(rpoly({"0", "1", "1"})));
}

TEST_CASE("exact real-rootedness by Sturm sequences") {
    CHECK(is_real_rooted(rpoly({"1", "1", "2", "-3"}).coefficients()));
    CHECK_FALSE(is_real_rooted(rcoeffs({"1", "0", "1"})));
    CHECK_FALSE(is_real_rooted(rcoeffs({"0", "1", "0", "1"})));
    CHECK(count_distinct_real_roots(rpoly({"1", "1", "2"}).coefficients()) == 2);
    CHECK(count_distinct_real_roots(rcoeffs({"-2", "0", "1"})) == 2);
}

TEST_CASE("certify_roots brackets simple roots exactly") {
    const auto p = rcoeffs({"-2", "0", "1"});
    const auto b = certify_roots(p, std::vector<double>{-std::sqrt(2.0), std::sqrt(2.0)});
    REQUIRE(b.has_value());
    CHECK((*b)[1].lo * (*b)[1].lo < 2);
    CHECK((*b)[1].hi * (*b)[1].hi > 2);
    CHECK_FALSE(certify_roots(rpoly({"1", "1"}).coefficients(), std::vector<double>{1.0, 1.0}).has_value());
}

TEST_CASE("random_hyperbolic honours gaps and seeds") {
    Rng a(42), b(42);
    for (std::size_t n : {1u, 3u, 8u}) {
        const auto p = random_hyperbolic<Rational>(a, n, 5.0, 0.5);
        const auto r = random_hyperbolic<Rational>(b, n, 5.0, 0.5);
        CHECK(p == r);
        for (std::size_t i = 0; i + 1 < n; ++i) CHECK(p.roots()[i + 1] - p.roots()[i] >= q("1/2"));
        CHECK(abs(p.roots().front()) <= 5);
        CHECK(abs(p.roots().back()) <= 5);
    }
    Rng c(1);
    CHECK_THROWS_AS(random_hyperbolic<double>(c, 30, 1.0, 0.5), Error);
}

TEST_CASE("random_centered lies on the barycenter-0 slice") {
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        const auto p = random_centered<Rational>(rng, 2 + t % 7, 5.0, 0.5);
        CHECK(p.root_sum() == 0);
        for (const auto& r : p.roots()) CHECK(Rational(r * 4).get_den() == 1);
    }
}
