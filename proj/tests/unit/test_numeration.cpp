#include <doctest.h>

#include <random>

#include "autoseq/catalog.hpp"
#include "autoseq/numeration.hpp"

using namespace autoseq;

namespace {

// Greedy Zeckendorf expansion over 1, 2, 3, 5, ... computed from scratch.
std::string greedy_zeckendorf(std::uint64_t n) {
    if (n == 0) return "";
    std::vector<std::uint64_t> w{1, 2};
    while (w.back() <= n) w.push_back(w[w.size() - 1] + w[w.size() - 2]);
    w.pop_back();
    std::string out;
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i] <= n) {
            out += '1';
            n -= w[i];
        } else {
            out += '0';
        }
    }
    return out;
}

}  // namespace

TEST_CASE("base-k representations") {
    const auto b2 = NumerationSystem::base(2);
    CHECK(word_to_string(b2.rep(0)).empty());
    CHECK(word_to_string(b2.rep(5)) == "101");
    CHECK(word_to_string(NumerationSystem::base(10).rep(907)) == "907");
    std::mt19937_64 rng(1);
    for (unsigned k : {2u, 3u, 7u, 10u, 36u}) {
        const auto s = NumerationSystem::base(k);
        for (int i = 0; i < 200; ++i) {
            const std::uint64_t n = rng() >> (rng() % 64);
            CHECK(s.val(s.rep(n)) == n);
        }
    }
    CHECK_THROWS_AS(b2.val(word_from_string("012")), std::invalid_argument);
    CHECK_THROWS_AS(b2.val(word_from_string("01")), std::invalid_argument);  // leading zero
    CHECK_THROWS_AS(NumerationSystem::base(1), std::invalid_argument);
}

TEST_CASE("Zeckendorf representations") {
    const auto z = NumerationSystem::zeckendorf();
    CHECK(word_to_string(z.rep(4)) == "101");
    CHECK(word_to_string(z.rep(5)) == "1000");
    CHECK(word_to_string(z.rep(12)) == "10101");
    const Dfa lf = catalog::fibonacci_language_dfa();
    bool all = true;
    for (std::uint64_t n = 0; n < 100000; ++n) {
        const DigitWord w = z.rep(n);
        const std::string s = word_to_string(w);
        all = all && s == greedy_zeckendorf(n) && s.find("11") == std::string::npos && lf.accepts(w) &&
              z.val(w) == n;
    }
    CHECK(all);
    const std::uint64_t big = 18446744073709551615ull;
    CHECK(z.val(z.rep(big)) == big);
    CHECK(FibBasis::weight(0) == 1);
    CHECK(FibBasis::weight(4) == 8);
    CHECK(FibBasis::top_index(8) == 4);
    CHECK_THROWS_AS(z.val(word_from_string("110")), std::invalid_argument);
}

TEST_CASE("Fibonacci numbers are exact") {
    CHECK(fibonacci(0) == 1);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(10) == 89);
    CHECK(fibonacci(100) == BigInt("573147844013817084101"));
}

TEST_CASE("abstract numeration over the Fibonacci language is Zeckendorf") {
    const auto ans = NumerationSystem::ans(catalog::fibonacci_language_dfa());
    const auto z = NumerationSystem::zeckendorf();
    bool all = true;
    for (std::uint64_t n = 0; n < 20000; ++n) all = all && ans.rep(n) == z.rep(n) && ans.val(z.rep(n)) == n;
    CHECK(all);
    CHECK(ans.words_of_length(10) == count_length_n(catalog::fibonacci_language_dfa(), 10));
}

TEST_CASE("abstract numeration over L_a") {
    const auto ans = NumerationSystem::ans(catalog::language_la());
    CHECK(word_to_string(ans.rep(0)) == "1");
    CHECK(word_to_string(ans.rep(1)) == "101");
    CHECK(word_to_string(ans.rep(2)) == "111");
    CHECK(word_to_string(ans.rep(3)) == "1101");
    // unranking L_a lists the positions of 1 in u in increasing order
    const auto a = catalog::prefix("a", 3000);
    const auto binary = NumerationSystem::base(2);
    bool all = true;
    for (std::size_t i = 0; i < a.size(); ++i) all = all && ans.rep(i) == binary.rep(static_cast<std::uint64_t>(a[i]));
    CHECK(all);
    CHECK_THROWS_AS(ans.rank(word_from_string("11")), std::invalid_argument);
}

TEST_CASE("genealogical order honors the letter order and stays exact") {
    const Dfa all(2, {{0, 0}}, {true}, 0);
    const auto swapped = NumerationSystem::ans(all, {1, 0});
    CHECK(word_to_string(swapped.rep(0)).empty());
    CHECK(word_to_string(swapped.rep(1)) == "1");
    CHECK(word_to_string(swapped.rep(2)) == "0");
    CHECK(word_to_string(swapped.rep(3)) == "11");

    const auto plain = NumerationSystem::ans(all);
    CHECK(plain.rank(DigitWord(70, 1)) == (BigInt(1) << 71) - 2);
    CHECK(plain.words_of_length(80) == (BigInt(1) << 80));
}

TEST_CASE("abstract numeration rejects unusable languages") {
    const Dfa finite(2, {{1, 1}, {2, 2}, {2, 2}}, {false, true, false}, 0);
    CHECK_THROWS_AS(NumerationSystem::ans(finite), std::invalid_argument);
    const Dfa lsd(2, {{0, 0}}, {true}, 0, ReadOrder::lsd_first);
    CHECK_THROWS_AS(NumerationSystem::ans(lsd), std::invalid_argument);
    CHECK_THROWS_AS(NumerationSystem::base(2).rank(DigitWord{1}), std::logic_error);
}

TEST_CASE("Zeckendorf evaluation of the Fibonacci indicator") {
    const auto z = NumerationSystem::zeckendorf();
    const Dfao m = catalog::fibonacci_indicator_dfao();
    CHECK(automatic_eval(z, m, 5) == 1);
    CHECK(automatic_eval(z, m, 4) == 0);
    CHECK(automatic_eval(z, m, 6) == 0);
    CHECK(automatic_eval(z, m, 0) == 0);
}
