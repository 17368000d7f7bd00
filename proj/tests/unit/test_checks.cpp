#include <doctest.h>

#include "autoseq/catalog.hpp"
#include "autoseq/checks.hpp"
#include "autoseq/io.hpp"

using namespace autoseq;
using io::Json;

TEST_CASE("series JSON round trip") {
    const auto d = catalog::period_doubling_series(64);
    const Json j = io::series_to_json(d);
    CHECK(j["p"] == 2);
    CHECK(j["coeffs"].size() == 64);
    CHECK(io::series_from_json(j) == d);
    CHECK(io::series_from_json(Json::parse(R"({"p": 3, "coeffs": [-1, 4, 2]})")) == TruncatedSeries(3, {2, 1, 2}));
    CHECK_THROWS_AS(io::series_from_json(Json::parse(R"({"p": 4, "coeffs": [1]})")), std::invalid_argument);
    CHECK_THROWS_AS(io::series_from_json(Json::parse(R"({"coeffs": [1]})")), std::invalid_argument);
    CHECK_THROWS_AS(io::series_from_json(Json::parse(R"({"p": 2, "coeffs": "01"})")), std::invalid_argument);
}

TEST_CASE("relation JSON round trip") {
    for (const PolyRelation& r : {catalog::period_doubling_relation(), catalog::inverse_frobenius_relation(),
                                  catalog::thue_morse_relation(5)}) {
        const Json j = io::relation_to_json(r);
        CHECK(j.contains("text"));
        CHECK(io::relation_from_json(j) == r);
    }
    CHECK_THROWS_AS(io::relation_from_json(Json::parse(R"({"p": 2, "terms": [{"coeffs": [1], "kind": "twist", "value": 0}]})")),
                    std::invalid_argument);
}

TEST_CASE("DFAO JSON round trip") {
    for (const Dfao& m : {catalog::period_doubling_dfao(), catalog::inverse_period_doubling_dfao(),
                          catalog::fibonacci_indicator_dfao()}) {
        const Dfao back = io::dfao_from_json(io::dfao_to_json(m));
        CHECK(back.size() == m.size());
        CHECK(back.read_order() == m.read_order());
        CHECK(isomorphic(back, m));
        CHECK(back.state_name(0) == m.state_name(0));
    }
    Json bad = io::dfao_to_json(catalog::period_doubling_dfao());
    bad["transitions"][0][1] = 9;
    CHECK_THROWS_AS(io::dfao_from_json(bad), std::invalid_argument);
}

TEST_CASE("kernel report lists new classes per depth") {
    const auto seq = [](std::size_t n) { return catalog::prefix("d", n); };
    const Kernel K = compute_kernel(seq, 2, 4, 64);
    const RankProfile rp = rank_profile(seq, 2, 4, 64);
    const Json j = io::kernel_report("d", K, rp);
    CHECK(j["status"] == "closed at depth 2");
    CHECK(j["depths"].size() == 5);
    std::size_t listed = 0;
    for (const auto& row : j["depths"]) listed += row["new"].size();
    CHECK(listed == K.classes.size());
    CHECK(j["depths"][0]["new"][0]["prefix"].size() == 32);

    const auto p = [](std::size_t n) { return catalog::prefix("p", n); };
    const Json open = io::kernel_report("p", compute_kernel(p, 2, 3, 32), rank_profile(p, 2, 3, 32));
    CHECK(open["closed"] == false);
    bool has_null = false;
    for (const auto& row : open["closure"])
        for (const auto& t : row) has_null = has_null || t.is_null();
    CHECK(has_null);
}

TEST_CASE("check catalog") {
    const auto& cat = check_catalog();
    REQUIRE(cat.size() == 14);
    CHECK(cat.front().id == "reversion");
    CHECK(cat.back().id == "numeration");
    for (const auto& c : cat) {
        CHECK(is_check_id(c.id));
        CHECK(c.budget_seconds > 0);
        CHECK(c.default_horizon > 0);
    }
    CHECK_FALSE(is_check_id("all"));
}

TEST_CASE("running checks") {
    const CheckResult skipped = run_check("eigenvalues", 0);
    CHECK(skipped.status == CheckStatus::skipped);
    CHECK_FALSE(skipped.mismatch);

    const CheckResult ok = run_check("complexity", 12);
    CHECK(ok.status == CheckStatus::pass);
    CHECK(ok.horizon == 12);
    CHECK_FALSE(ok.detail.empty());

    const CheckResult bad = run_check("eigenvalues");
    CHECK(bad.status == CheckStatus::fail);
    CHECK(bad.mismatch);

    CHECK_THROWS_AS(run_check("nope"), std::invalid_argument);
    CHECK_THROWS_AS(run_checks({"complexity", "nope"}), std::invalid_argument);
}

TEST_CASE("parallel runs keep suite order and reproducible reports") {
    const std::vector<std::string> sel{"numeration", "complexity", "delta-vs-x", "reversion"};
    const std::map<std::string, std::size_t> h{{"numeration", 5000}, {"delta-vs-x", 5000}, {"reversion", 256},
                                               {"complexity", 12}};
    const auto serial = run_checks(sel, h, 1);
    const auto parallel = run_checks(sel, h, 4);
    REQUIRE(serial.size() == 4);
    CHECK(serial[0].id == "reversion");
    CHECK(serial[1].id == "complexity");
    CHECK(serial[2].id == "delta-vs-x");
    CHECK(serial[3].id == "numeration");

    Json a = io::check_report(serial), b = io::check_report(parallel);
    CHECK(a["summary"]["pass"] == 4);
    a.erase("timing");
    b.erase("timing");
    CHECK(a.dump() == b.dump());
    std::map<std::string, std::size_t> none;
    for (const auto& c : check_catalog()) none[c.id] = 0;
    const auto skipped = run_checks({"all"}, none, 2);
    CHECK(skipped.size() == 14);
    CHECK(io::check_report(skipped)["summary"]["skipped"] == 14);
    CHECK_THROWS_AS(run_checks({}, {{"nope", 1}}), std::invalid_argument);
}
