#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypmaj/lp_operators.hpp"
#include "hypmaj/majorization.hpp"
#include "hypmaj/real_roots.hpp"
#include "support.hpp"

using namespace hypmaj;
using namespace hypmaj::test;

namespace {

LPFunction<Rational> lp(const char* c, std::size_t m, const char* a, const char* b,
                        std::initializer_list<const char*> alphas = {}) {
    return {q(c), m, q(a), q(b), qs(alphas)};
}

}  // namespace

TEST_CASE("Maclaurin prefixes") {
    CHECK(maclaurin_prefix(lp("1", 0, "0", "1"), 3) == qs({"1", "1", "1/2", "1/6"}));
    CHECK(maclaurin_prefix(lp("1", 0, "1", "0"), 4) == qs({"1", "0", "-1", "0", "1/2"}));
    CHECK(maclaurin_prefix(lp("1", 1, "0", "0", {"1"}), 3) == qs({"0", "1", "0", "-1/2"}));
    CHECK(maclaurin_prefix(lp("3", 2, "0", "0"), 3) == qs({"0", "0", "3", "0"}));
    CHECK_THROWS_AS(maclaurin_prefix(lp("1", 3, "0", "0"), 2), Error);
    CHECK_THROWS_AS(maclaurin_prefix(lp("0", 0, "0", "0"), 2), Error);
}

TEST_CASE("operator application") {
    const auto shift = DiffOperator<Rational>::from_lp(lp("1", 0, "0", "1"), 2);
    CHECK(apply(shift, rcoeffs({"0", "0", "1"})) == rcoeffs({"1", "2", "1"}));
    const auto hermite = DiffOperator<Rational>::from_lp(lp("1", 0, "1/2", "0"), 3);
    // e^{-a²D²} with a² = 1/2 gives the Hermite polynomial He_3
    CHECK(apply(hermite, rcoeffs({"0", "0", "0", "1"})) == rcoeffs({"0", "-3/2", "0", "1"}));
    const auto half = DiffOperator<Rational>::from_lp(lp("1", 0, "0", "0"), 3).scaled(Rational(2));
    CHECK(apply(half, rcoeffs({"1", "1"})) == rcoeffs({"1", "1"}));
    const auto e2 = DiffOperator<Rational>(qs({"1", "0", "-1/2", "0"}));
    CHECK(apply(e2, rcoeffs({"0", "0", "0", "1"})) == rcoeffs({"0", "-3", "0", "1"}));
    CHECK_THROWS_AS(apply(DiffOperator<Rational>(qs({"1", "0", "-1/2"})), rcoeffs({"0", "0", "0", "1"})), Error);
    const auto one_minus_d = DiffOperator<Rational>::from_lp(lp("1", 0, "0", "0", {"1"}), 2);
    CHECK(apply(one_minus_d, rcoeffs({"0", "0", "1"})) == rcoeffs({"-1", "0", "1"}));
}

TEST_CASE("normalised application") {
    const auto op = DiffOperator<Rational>::from_lp(lp("1", 1, "0", "1"), 2);
    CHECK(op.order() == 1);
    CHECK(op.normalization(2) == q("1/2"));
    CHECK(apply(op, rcoeffs({"-1", "0", "1"})) == rcoeffs({"2", "2"}));
    CHECK(apply_normalized(op, rcoeffs({"-1", "0", "1"})) == rcoeffs({"1", "1"}));
    CHECK(apply_normalized(op, rcoeffs({"5", "1"})) == rcoeffs({"1"}));
    CHECK(apply_normalized(op, rcoeffs({"5"})).is_zero());
    CHECK_THROWS_AS(op.normalization(0), Error);
    CHECK_THROWS_AS(DiffOperator<Rational>(qs({"0", "0"})), Error);
}

TEST_CASE("apply_hyperbolic") {
    const auto op = DiffOperator<Rational>::from_lp(lp("1", 0, "1", "0"), 2);
    const auto r = apply_hyperbolic(op, rpoly({"0", "0"}));
    CHECK(r.roots()[0] == doctest::Approx(-std::sqrt(2.0)));
    CHECK(r.roots()[1] == doctest::Approx(std::sqrt(2.0)));
    const auto d = DiffOperator<Rational>::from_lp(lp("1", 1, "0", "0"), 1);
    CHECK_THROWS_AS(apply_hyperbolic(d, rpoly({"1"})), Error);
}

TEST_CASE("Appell polynomials") {
    CHECK(appell(lp("1", 0, "1", "0"), 2, false) == rcoeffs({"-2", "0", "1"}));
    CHECK(appell(lp("1", 0, "1", "0"), 3, false) == rcoeffs({"0", "-6", "0", "1"}));
    CHECK(appell(lp("1", 0, "0", "5/2"), 1, false) == rcoeffs({"5/2", "1"}));
    CHECK(appell(lp("2", 1, "0", "0"), 3, true) == rcoeffs({"0", "0", "1"}));
    CHECK_THROWS_AS(appell(lp("1", 2, "0", "0"), 2, true), Error);
}

TEST_CASE("shift pencil") {
    CHECK(shift_pencil(rcoeffs({"0", "0", "1"}), Rational(1)) == rcoeffs({"-1", "0", "1"}));
    CHECK(shift_pencil(rcoeffs({"0", "0", "1"}), Rational(2)) == rcoeffs({"-4", "0", "1"}));
    CHECK(shift_pencil(rcoeffs({"3", "1", "1"}), Rational(0)) == rcoeffs({"3", "1", "1"}));
    CHECK(shift_pencil(rpoly({"0", "4"}), Rational(1)).is_monic());
}

TEST_CASE("Gaussian operator") {
    CHECK(gaussian_op(rcoeffs({"0", "0", "1"}), q("1/2")) == rcoeffs({"-1", "0", "1"}));
    CHECK(gaussian_op(rcoeffs({"0", "0", "0", "1"}), q("1/2")) == rcoeffs({"0", "-3", "0", "1"}));
    CHECK(gaussian_op(rcoeffs({"2", "0", "0", "1"}), Rational(0)) == rcoeffs({"2", "0", "0", "1"}));
    CHECK(gaussian_in_lp(Rational(1)));
    CHECK_FALSE(gaussian_in_lp(Rational(-1)));
}

TEST_CASE("deformations") {
    const auto phi = lp("3", 1, "1", "2", {"2", "-1"});
    CHECK(deform(phi, DeformationVector<Rational>{}).alphas == phi.alphas);
    const auto zero = deform(phi, DeformationVector<Rational>{qs({"0", "0", "0"})});
    CHECK(zero.a == 0);
    CHECK(zero.alphas == qs({"0", "0"}));
    CHECK(zero.c == 3);
    CHECK(zero.b == 2);
    const auto d = deform(lp("1", 0, "1", "0", {"2"}), DeformationVector<Rational>{qs({"1/2", "1/3"})});
    CHECK(d.a == q("1/2"));
    CHECK(d.alphas == qs({"2/3"}));
    // deformed prefix: e^{-x²/4}(1 - 2x/3)e^{2x/3}
    CHECK(maclaurin_prefix(d, 2) == qs({"1", "0", "-17/36"}));
}

TEST_CASE("deformation order") {
    const DeformationVector<Rational> s{qs({"1/2", "-1/3"})};
    const DeformationVector<Rational> t{qs({"1", "-1"})};
    CHECK(deformation_leq(s, t));
    CHECK_FALSE(deformation_leq(t, s));
    CHECK_FALSE(deformation_leq(DeformationVector<Rational>{qs({"1/2", "1/3"})}, t));
}

TEST_CASE("approximants") {
    const auto e = approximant(lp("1", 0, "0", "1"), 1, 4);
    CHECK(e == rcoeffs({"1", "1", "3/8", "1/16", "1/256"}));
    CHECK(approximant(lp("1", 1, "0", "0"), 3, 2) == rcoeffs({"0", "1"}));
    const auto g = approximant(lp("1", 0, "1", "0"), 2, 1);
    CHECK(g == rcoeffs({"1", "0", "-1", "0", "1/4"}));
    // prefixes converge to the exponential series
    const auto far = approximant(lp("1", 0, "0", "1"), 1, 200);
    CHECK(far[2].get_d() == doctest::Approx(0.5).epsilon(1e-2));
    CHECK(far[3].get_d() == doctest::Approx(1.0 / 6).epsilon(1e-2));
    CHECK(is_real_rooted(approximant(lp("2", 1, "1/2", "1", {"1", "-2"}), 4, 3)));
}

TEST_CASE("multiplier sequences") {
    const auto k = laguerre_ms<Rational>(1, 0, 3);
    CHECK(k.gammas == qs({"0", "1", "2"}));
    CHECK(multiplier_apply(k, rcoeffs({"-1", "0", "1"}), true) == rcoeffs({"0", "0", "1"}));
    CHECK(multiplier_apply(MultiplierSequence<Rational>{qs({"1", "1", "1"})}, rcoeffs({"-1", "3", "1"}), false) ==
          rcoeffs({"-1", "3", "1"}));
    const auto k1 = laguerre_ms<Rational>(1, 1, 3);
    CHECK(k1.gammas == qs({"1", "2", "3"}));
    CHECK(multiplier_apply(k1, rcoeffs({"0", "0", "1"}), true) == rcoeffs({"0", "0", "1"}));
    CHECK(laguerre_ms<Rational>(2, 0, 4).gammas == qs({"0", "0", "2", "6"}));
    CHECK_THROWS_AS(laguerre_ms<Rational>(0, 0, 3), Error);
    CHECK_THROWS_AS(multiplier_apply(laguerre_ms<Rational>(2, 0, 3), rcoeffs({"0", "1"}), true), Error);
    CHECK_THROWS_AS(multiplier_apply(k, rcoeffs({"1", "1", "1", "1"}), true), Error);
}

TEST_CASE("Laguerre-type closed form") {
    const auto p = rpoly({"-2", "1/2", "3"}).coefficients();
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t pp = 0; pp <= 3; ++pp) {
            if (m > pp + 3) continue;
            CHECK(multiplier_apply(laguerre_ms<Rational>(m, pp, 4), p, false) == laguerre_closed_form(m, pp, p));
        }
    }
}

TEST_CASE("operator images keep the order") {
    const auto op = DiffOperator<Rational>::from_lp(lp("1", 1, "1/2", "-1", {"1/2"}), 4);
    const auto p = rpoly({"-3", "-1", "2", "6"});
    const auto qq = rpoly({"-2", "-1", "2", "5"});
    CHECK(is_majorized(check_majorization(apply_hyperbolic(op, qq), apply_hyperbolic(op, p)).verdict));
}
