#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "hypmaj/generators.hpp"
#include "hypmaj/pencil.hpp"
#include "support.hpp"

using namespace hypmaj;
using namespace hypmaj::test;

TEST_CASE("pencil polynomial") {
    CHECK(pencil_polynomial(rcoeffs({"0", "0", "1"}), Rational(1)) == rcoeffs({"0", "-2", "1"}));
    CHECK(pencil_polynomial(rcoeffs({"-1", "0", "1"}), Rational(1)) == rcoeffs({"-1", "-2", "1"}));
}

TEST_CASE("pencil samples of x^2") {
    const auto p = fpoly({0, 0});
    for (double lambda : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
        const auto s = pencil_at(p, lambda);
        CHECK(s.roots[0] == doctest::Approx(std::min(0.0, 2 * lambda)));
        CHECK(s.roots[1] == doctest::Approx(std::max(0.0, 2 * lambda)));
        CHECK(s.partial_sums[0] == doctest::Approx(-std::fabs(lambda)));
        CHECK(s.partial_sums[1] == doctest::Approx(0).epsilon(1e-12));
    }
}

TEST_CASE("pencil at zero gives the roots of P") {
    const auto s = pencil_at(fpoly({-1, 2, 5}), 0.0);
    CHECK(s.roots[0] == doctest::Approx(-1));
    CHECK(s.roots[2] == doctest::Approx(5));
    CHECK(s.partial_sums[1] == doctest::Approx(1));
    CHECK(s.critical.size() == 2);
}

TEST_CASE("pencil of x^2 - 1 at one") {
    const auto s = pencil_at(fpoly({-1, 1}), 1.0);
    CHECK(s.roots[0] == doctest::Approx(1 - std::sqrt(2.0)));
    CHECK(s.roots[1] == doctest::Approx(1 + std::sqrt(2.0)));
    CHECK(std::fabs(s.partial_sums[1]) < 1e-12);
}

TEST_CASE("grids") {
    const auto g = uniform_grid(2.0, 5);
    CHECK(g == std::vector<double>{-2, -1, 0, 1, 2});
    const auto d = default_grid(fpoly({-3, 1}));
    CHECK(d.size() == 201);
    CHECK(d.front() == doctest::Approx(-7));
    CHECK(d[100] == 0.0);
}

TEST_CASE("monotonicity scan") {
    const auto rep = scan_monotonicity(fpoly({0, 0}), uniform_grid(2.0, 5));
    CHECK(rep.total_violations() == 0);
    CHECK(rep.constancy_error < 1e-12);
    CHECK_THROWS_AS(scan_monotonicity(fpoly({0, 0}), std::vector<double>{1, 0, 2}), Error);
    CHECK_THROWS_AS(scan_monotonicity(fpoly({0, 0}), std::vector<double>{-1, 1}), Error);
}

TEST_CASE("monotonicity on random strict polynomials") {
    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        const auto p = random_hyperbolic<double>(rng, 2 + t % 9, 5.0, 0.3);
        const auto rep = scan_monotonicity(p, uniform_grid(5.0, 101));
        CHECK(rep.total_violations() == 0);
        CHECK(rep.constancy_error < 1e-8 * 6);
    }
}

TEST_CASE("pencil majorization check") {
    const auto c = pencil_majorization_check(fpoly({0, 4}), fpoly({1, 3}), 1.0);
    CHECK(c.verdict == Verdict::Less);
    // P - P' = x² - 6x + 4 and Q - Q' = x² - 6x + 7
    CHECK(c.slacks[0] == doctest::Approx(std::sqrt(5.0) - std::sqrt(2.0)));
    const auto p = fpoly({-1, 0, 2});
    for (double lambda : {-3.0, 0.0, 0.5, 7.0}) {
        CHECK(pencil_majorization_check(p, p, lambda).verdict == Verdict::Equal);
    }
    CHECK(pencil_majorization_check(fpoly({0, 4}), fpoly({1, 3}), 0.0).verdict == Verdict::Less);
    CHECK_THROWS_AS(pencil_majorization_check(fpoly({0, 4}), fpoly({1}), 1.0), Error);
}

TEST_CASE("pencil CSV") {
    std::ostringstream os;
    write_pencil_csv(os, fpoly({0, 0}), uniform_grid(1.0, 3));
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "lambda,x_1,x_2,f_1,f_2");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 3);
}
