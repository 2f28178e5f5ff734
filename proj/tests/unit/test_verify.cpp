#include <doctest.h>

#include <json.hpp>

#include "efrac/errors.hpp"
#include "efrac/verify.hpp"

TEST_CASE("binary linearity at small length") {
    const auto r = efrac::verify_prop_sum2(3);
    CHECK(r.pass());
    CHECK(r.checked == 64);
    CHECK(r.counts.at("linear_pairs") == 27);
    for (int n = 0; n <= 6; ++n) {
        std::uint64_t three = 1;
        for (int i = 0; i < n; ++i) three *= 3;
        REQUIRE(efrac::verify_prop_sum2(n).counts.at("linear_pairs") == three);
    }
}

TEST_CASE("ternary linearity at small length") {
    const auto r = efrac::verify_prop_sum3(2);
    CHECK(r.pass());
    CHECK(r.checked == 81);
    CHECK(r.counts.at("z_empty_pairs") == 49);
    CHECK(r.counts.at("linear_pairs") >= 49);
    CHECK(r.counts.at("converse_probe_nonlinear") == 0);
}

TEST_CASE("fractal theorems at small length") {
    const auto t1 = efrac::verify_theorem_main(4, 2);
    CHECK(t1.pass());
    CHECK(t1.counts.at("linear_points") == 81);
    CHECK(t1.counts.at("nonlinear_pairs") == 256 - 81);
    const auto t2 = efrac::verify_theorem_snowflake(2, 1);
    CHECK(t2.pass());
    CHECK(t2.counts.at("z_empty_points") == 49);
    const auto l = efrac::verify_lemma_oracles(4, 2);
    CHECK(l.pass());
    CHECK(l.counts.at("sierpinski_pairs") == 256);
    CHECK(l.counts.at("snowflake_pairs") == 81);
}

TEST_CASE("reports do not depend on the worker count") {
    const auto a = efrac::verify_prop_sum3(3, 1);
    const auto b = efrac::verify_prop_sum3(3, 4);
    CHECK(a.checked == b.checked);
    CHECK(a.counts == b.counts);
    CHECK(a.violations == b.violations);
    const auto c = efrac::verify_lemma_oracles(3, 2, 3);
    CHECK(c.counts == efrac::verify_lemma_oracles(3, 2, 1).counts);
}

TEST_CASE("length guards") {
    CHECK_THROWS_AS(efrac::verify_prop_sum2(efrac::kMaxSum2Len + 1), efrac::ResourceError);
    CHECK_THROWS_AS(efrac::verify_prop_sum3(efrac::kMaxSum3Len + 1), efrac::ResourceError);
    CHECK_THROWS_AS(efrac::verify_theorem_main(efrac::kMaxTheoremMainLen + 1), efrac::ResourceError);
    CHECK_THROWS_AS(efrac::verify_theorem_snowflake(efrac::kMaxTheoremSnowflakeLen + 1), efrac::ResourceError);
    CHECK_THROWS_AS(efrac::verify_lemma_oracles(efrac::kMaxLemmaLen2 + 1, 1), efrac::ResourceError);
    CHECK_THROWS_AS(efrac::verify_prop_sum2(-1), efrac::DomainError);
}

TEST_CASE("report serialization") {
    efrac::VerificationReport r{"p", "s"};
    r.checked = 5;
    r.counts["k"] = 2;
    CHECK(r.to_text().find("checked: 5\n") != std::string::npos);
    CHECK(r.to_text().find("result: PASS\n") != std::string::npos);
    for (int i = 0; i < 60; ++i) {
        r.add_violation("v" + std::to_string(i));
    }
    CHECK_FALSE(r.pass());
    CHECK(r.violation_count == 60);
    CHECK(r.violations.size() == efrac::VerificationReport::kMaxListedViolations);
    const auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["property"] == "p");
    CHECK(j["space"] == "s");
    CHECK(j["checked"] == 5);
    CHECK(j["violations"] == 60);
    CHECK(j["pass"] == false);
    CHECK(j["counts"]["k"] == 2);
    CHECK(j.contains("millis"));
}
