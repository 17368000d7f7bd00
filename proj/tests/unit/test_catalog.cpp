#include <doctest.h>

#include <bit>

#include "autoseq/catalog.hpp"

using namespace autoseq;

TEST_CASE("every definition of every sequence agrees") {
    std::vector<std::string> names;
    for (const auto& s : catalog::sequences()) names.push_back(s.name);
    names.insert(names.end(), {"tp2", "tp3", "tp5", "tp7"});
    for (const auto& name : names) {
        CAPTURE(name);
        // F leaves 64 bits after 92 terms
        const auto report = catalog::cross_check(name, name == "F" ? 92 : 2000);
        CHECK(report.pass());
        CHECK_FALSE(report.checks.empty());
    }
}

TEST_CASE("leading terms") {
    using V = std::vector<std::int64_t>;
    CHECK(catalog::prefix("d", 12) == V{0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0});
    CHECK(catalog::prefix("t", 8) == V{0, 1, 1, 0, 1, 0, 0, 1});
    CHECK(catalog::prefix("tp3", 6) == V{0, 1, 2, 1, 2, 0});
    CHECK(catalog::prefix("p", 8) == V{1, 2, 1, 1, 2, 2, 2, 1});
    CHECK(catalog::prefix("u", 8) == V{0, 1, 0, 0, 0, 1, 0, 1});
    CHECK(catalog::prefix("a", 4) == V{1, 5, 7, 13});
    CHECK(catalog::prefix("F", 8) == V{1, 1, 2, 3, 5, 8, 13, 21});
    CHECK(catalog::prefix("x", 9) == V{0, 1, 1, 1, 0, 1, 0, 0, 1});
    CHECK(catalog::term("d", 1023) == std::countr_zero(1024u) % 2);
    CHECK(catalog::term("F", 90) == catalog::fib(90));
}

TEST_CASE("name lookup") {
    CHECK(catalog::is_known("delta"));
    CHECK(catalog::is_known("tp11"));
    CHECK_FALSE(catalog::is_known("tp4"));
    CHECK_FALSE(catalog::is_known("q"));
    CHECK(catalog::thue_morse_prime("tp13") == 13u);
    CHECK_FALSE(catalog::thue_morse_prime("t"));
    CHECK_THROWS_AS(catalog::prefix("q", 3), std::invalid_argument);
    CHECK_THROWS_AS(catalog::definitions("tp9"), std::invalid_argument);
    CHECK_THROWS_AS(catalog::fib(92), std::overflow_error);
}

TEST_CASE("a corrupted definition is caught at the first differing index") {
    auto defs = catalog::definitions("u");
    const auto good = defs.back().prefix;
    defs.push_back({"corrupted", [good](std::size_t n) {
                        auto v = good(n);
                        if (v.size() > 777) v[777] ^= 1;
                        return v;
                    }});
    const auto report = catalog::compare_definitions("u", defs, 1000);
    REQUIRE(report.mismatch);
    CHECK(report.mismatch->index == 777);
    REQUIRE(report.mismatch->values.size() == defs.size());
    CHECK(report.mismatch->values.back().first == "corrupted");
    CHECK(report.mismatch->values.back().second != report.mismatch->values.front().second);
    CHECK(catalog::compare_definitions("u", catalog::definitions("u"), 1000).pass());
}

TEST_CASE("b-file output") {
    CHECK(catalog::bfile("F", 3) == "0 1\n1 1\n2 2\n");
    CHECK(catalog::bfile("a", 2, 1) == "1 1\n2 5\n");
}

TEST_CASE("positions of a value in a stream") {
    const auto ones = catalog::positions_of(catalog::period_doubling_stream(), 1, 5);
    CHECK(ones == std::vector<std::int64_t>{1, 5, 7, 9, 13});
    const auto u_ones = catalog::positions_of(catalog::inverse_period_doubling_stream(), 1, 4);
    CHECK(u_ones == catalog::prefix("a", 4));
}
