#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hypmaj/harness.hpp"
#include "hypmaj/json_io.hpp"
#include "support.hpp"

using namespace hypmaj;
using namespace hypmaj::test;
using json = nlohmann::json;

TEST_CASE("polynomial documents") {
    const auto r = io::poly_from_json(json::parse(R"({"mode":"rational","roots":["3","1/2","-1"]})"));
    REQUIRE(io::mode_of(r) == Mode::Rational);
    CHECK(std::get<HyperbolicPoly<Rational>>(r) == rpoly({"-1", "1/2", "3"}));
    const auto f = io::poly_from_json(json::parse(R"({"roots":[1.5, -2]})"));
    CHECK(io::mode_of(f) == Mode::Float);
    const auto c = io::poly_as<Rational>(json::parse(R"({"mode":"rational","coeffs":["-6","11","-6","1"]})"));
    CHECK(c == rpoly({"1", "2", "3"}));
    const auto fc = io::poly_as<double>(json::parse(R"({"coeffs":[-6,11,-6,1]})"));
    CHECK(fc.roots()[1] == doctest::Approx(2));
    const auto p = rpoly({"-1", "1/3"});
    CHECK(io::poly_as<Rational>(io::poly_to_json(p)) == p);
}

TEST_CASE("polynomial document errors") {
    CHECK_THROWS_AS(io::poly_from_json(json::parse(R"({"roots":[1],"coeffs":[1,1]})")), Error);
    CHECK_THROWS_AS(io::poly_from_json(json::parse(R"({"roots":[1],"extra":1})")), Error);
    CHECK_THROWS_AS(io::poly_from_json(json::parse(R"({"mode":"float","roots":[1]})"), Mode::Rational), Error);
    CHECK_THROWS_AS(io::poly_as<Rational>(json::parse(R"({"coeffs":["-2","0","1"]})")), Error);
    CHECK_THROWS_AS(io::poly_from_json(json::parse(R"({"roots":[]})")), Error);
    CHECK_THROWS_AS(io::poly_from_json(json::parse(R"({"coeffs":[1,0,1]})")), Error);
}

TEST_CASE("certificate, witness, chain and LP round trips") {
    const auto x = qs({"1", "3"});
    const auto y = qs({"0", "4"});
    const auto cert = check_majorization<Rational>(x, y);
    const auto cj = io::certificate_to_json(cert);
    CHECK(cj["verdict"] == "Less");
    CHECK(cj["slacks"] == json::array({"1"}));
    const auto back = io::certificate_from_json<Rational>(cj);
    CHECK(back.verdict == cert.verdict);
    CHECK(back.slacks == cert.slacks);

    const auto w = build_witness(x, y);
    const auto wj = io::witness_to_json(w);
    CHECK(wj == json::parse(R"([["3/4","1/4"],["1/4","3/4"]])"));
    CHECK(io::witness_from_json(wj).matrix == w.matrix);
    CHECK_THROWS_AS(io::witness_from_json(json::parse(R"([["1","0"]])")), Error);

    const auto chain = decompose_majorization(rpoly({"0", "2", "4"}), rpoly({"1", "2", "3"}));
    const auto chj = io::chain_to_json(chain);
    CHECK(chj["steps"].size() == 8);
    CHECK(chj["steps"][0]["t"] == "1/4");
    const auto rt = io::chain_from_json(chj);
    CHECK(rt.steps == chain.steps);
    CHECK(verify_chain(rt));

    const auto phi = io::lp_from_json<Rational>(json::parse(R"({"c":"2","m":1,"a":"1/2","alphas":["1","-3/4"]})"));
    CHECK(phi.c == 2);
    CHECK(phi.b == 0);
    CHECK(io::lp_from_json<Rational>(io::lp_to_json(phi)).alphas == phi.alphas);
    CHECK_THROWS_AS(io::lp_from_json<Rational>(json::parse(R"({"c":0})")), Error);
    CHECK_THROWS_AS(io::lp_from_json<Rational>(json::parse(R"({"m":-1})")), Error);
    CHECK_THROWS_AS(io::lp_from_json<Rational>(json::parse(R"({"d":1})")), Error);
}

TEST_CASE("load_document") {
    CHECK(io::load_document(R"({"a":1})")["a"] == 1);
    CHECK_THROWS_AS(io::load_document("/nonexistent/file.json"), Error);
    CHECK_THROWS_AS(io::load_document("{broken"), Error);
}

TEST_CASE("config parsing") {
    const auto c = harness::config_from_json(json::parse(R"({"suite":"main1","trials":7,"seed":3,"mode":"float","tol":1e-6,"degree":4})"));
    CHECK(c.suite == "main1");
    CHECK(c.trials == 7);
    CHECK(c.seed == 3);
    CHECK(c.mode == Mode::Float);
    CHECK(c.tol == doctest::Approx(1e-6));
    CHECK(c.min_degree == 4);
    CHECK(c.max_degree == 4);
    CHECK(harness::config_from_json(harness::config_to_json(c)).trials == 7);
    CHECK_THROWS_AS(harness::config_from_json(json::parse(R"({"trails":7})")), Error);
    CHECK_THROWS_AS(harness::config_from_json(json::parse(R"({"trials":"7"})")), Error);
    CHECK_THROWS_AS(harness::config_from_json(json::parse(R"({"mode":"quad"})")), Error);
}

TEST_CASE("suites and hunts are listed") {
    const auto s = harness::suite_names();
    CHECK(std::find(s.begin(), s.end(), "main1") != s.end());
    CHECK(std::find(s.begin(), s.end(), "lag-ms") != s.end());
    CHECK(harness::hunt_names() == std::vector<std::string>{"pb1", "pb2", "pb3"});
}

TEST_CASE("empty and unknown runs") {
    harness::ExperimentConfig c;
    c.suite = "main1";
    c.trials = 0;
    const auto rep = harness::run_suite(c);
    CHECK(rep.passed());
    CHECK(rep.trials == 0);
    c.suite = "nope";
    CHECK_THROWS_AS(harness::run_suite(c), Error);
    c.suite = "chain";
    c.mode = Mode::Float;
    c.trials = 1;
    CHECK_THROWS_AS(harness::run_suite(c), Error);
    c.mode.reset();
    c.min_degree = 5;
    c.max_degree = 3;
    CHECK_THROWS_AS(harness::run_suite(c), Error);
}

TEST_CASE("every suite passes a short run") {
    for (const auto& name : harness::suite_names()) {
        CAPTURE(name);
        harness::ExperimentConfig c;
        c.suite = name;
        c.trials = name == "allincr" ? 5 : 40;
        const auto rep = harness::run_suite(c);
        CHECK(rep.passed());
        CHECK(rep.skipped == 0);
    }
}

TEST_CASE("reports are deterministic across runs and thread counts") {
    harness::ExperimentConfig c;
    c.suite = "main1";
    c.trials = 60;
    c.seed = 99;
    std::ostringstream a, b;
    harness::run_suite(c).write_jsonl(a);
    c.threads = 4;
    harness::run_suite(c).write_jsonl(b);
    CHECK(a.str() == b.str());
    CHECK(harness::generate_inputs("main1", c, 5) == harness::generate_inputs("main1", c, 5));
    CHECK(harness::generate_inputs("main1", c, 5) != harness::generate_inputs("main1", c, 6));
}

TEST_CASE("summary line layout") {
    harness::ExperimentConfig c;
    c.suite = "oracle";
    c.trials = 3;
    std::ostringstream os;
    harness::run_suite(c).write_jsonl(os);
    const auto j = json::parse(os.str());
    CHECK(j["type"] == "summary");
    CHECK(j["suite"] == "oracle");
    CHECK(j["passed"] == true);
    CHECK(j["failures"] == 0);
    CHECK_FALSE(j.contains("wall_seconds"));
}

TEST_CASE("recheck recorded inputs") {
    harness::ExperimentConfig c;
    c.suite = "chain";
    const json in{{"mode", "rational"},
                  {"p", io::poly_to_json(rpoly({"0", "2", "4"}))},
                  {"q", io::poly_to_json(rpoly({"1", "2", "3"}))}};
    const auto ok = harness::recheck("chain", in, c);
    CHECK(ok.ok);
    const json bad{{"mode", "rational"},
                   {"p", io::poly_to_json(rpoly({"0", "4"}))},
                   {"q", io::poly_to_json(rpoly({"-1", "5"}))}};
    CHECK_FALSE(harness::recheck("chain", bad, c).ok);
    const json x2{{"mode", "float"}, {"p", io::poly_to_json(fpoly({0, 0}))}, {"points", 201}};
    CHECK(harness::recheck("allincr", x2, c).ok);
}

TEST_CASE("exact violation certificates") {
    const auto lower = rpoly({"0", "4"}).coefficients();
    const auto upper = rpoly({"1", "3"}).coefficients();
    const auto cert = harness::confirm_violation(lower, upper);
    REQUIRE(cert.has_value());
    CHECK_FALSE(harness::confirm_violation(upper, lower).has_value());
    const auto sum = harness::confirm_violation(rpoly({"0", "5"}).coefficients(), upper);
    REQUIRE(sum.has_value());
    CHECK((*sum)["reason"] == "sum_mismatch");
    const auto br = harness::certified_real_roots(rpoly({"0", "-2", "3"}).coefficients());
    REQUIRE(br.has_value());
    CHECK(br->size() == 3);
    CHECK_FALSE(harness::certified_real_roots(rcoeffs({"1", "0", "1"})).has_value());
}

TEST_CASE("anchor hunts stay clean at small scale") {
    harness::ExperimentConfig c;
    c.trials = 200;
    c.min_degree = c.max_degree = 2;
    CHECK(harness::run_hunt("pb2", c).passed());
    c.min_degree = c.max_degree = 0;
    c.family = "k";
    CHECK(harness::run_hunt("pb1", c).passed());
    c.family = "laguerre";
    CHECK(harness::run_hunt("pb1", c).passed());
    c.family = "bogus";
    CHECK_THROWS_AS(harness::run_hunt("pb1", c), Error);
    CHECK_THROWS_AS(harness::run_hunt("pb9", c), Error);
}
