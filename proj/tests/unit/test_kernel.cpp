#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "autoseq/catalog.hpp"
#include "autoseq/kernel.hpp"
#include "autoseq/numeration.hpp"

using namespace autoseq;

namespace {

SequencePrefix named(const std::string& name) {
    return [name](std::size_t n) { return catalog::prefix(name, n); };
}

// Rank over Q by fraction-exact Gaussian elimination.
std::size_t exact_rank(const std::vector<std::vector<std::int64_t>>& rows) {
    using Q = boost::multiprecision::cpp_rational;
    std::vector<std::vector<Q>> m;
    for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            const Q f = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("2-kernel of the period-doubling sequence") {
    const Kernel K = compute_kernel(named("d"), 2, 8, 64);
    REQUIRE(K.closed);
    // d, the zero sequence, the complement of d, and the ones sequence
    CHECK(K.classes.size() == 4);
    CHECK(kernel_status(K) == "closed at depth 2");
    CHECK(K.verified_merges > 0);
    const Dfao m = synthesize_dfao(K);
    CHECK(m.read_order() == ReadOrder::lsd_first);
    const auto binary = NumerationSystem::base(2);
    const auto d = catalog::prefix("d", 1 << 16);
    bool all = true;
    for (std::uint64_t n = 0; n < d.size(); ++n) all = all && eval(m, n, binary) == d[n];
    CHECK(all);
}

TEST_CASE("kernel of u reproduces the inverse period-doubling automaton") {
    const Kernel K = compute_kernel(named("u"), 2, 10, 512);
    REQUIRE(K.closed);
    const Dfao m = minimize(synthesize_dfao(K));
    CHECK(m.size() == 5);
    CHECK(isomorphic(m, minimize(catalog::inverse_period_doubling_dfao())));
}

TEST_CASE("generalized Thue-Morse kernels") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const std::string name = "tp" + std::to_string(p);
        const Kernel K = compute_kernel(named(name), p, 4, 64);
        REQUIRE(K.closed);
        CHECK(K.classes.size() == p);
        CHECK(K.depth == 1);
    }
}

TEST_CASE("non-automatic sequences leave the kernel open") {
    const Kernel K = compute_kernel(named("p"), 2, 4, 64);
    CHECK_FALSE(K.closed);
    CHECK(kernel_status(K) == "open at depth 4");
    bool unexplored = false;
    for (const auto& row : K.closure)
        for (std::size_t t : row) unexplored = unexplored || t == Kernel::unexplored;
    CHECK(unexplored);
    CHECK_THROWS_AS(synthesize_dfao(K), std::invalid_argument);
}

TEST_CASE("a horizon that merges distinct subsequences is reported") {
    // s_n = [n == 20]: with H = 8 every subsequence looks like zero, but 4H terms tell s and s_2n apart
    std::vector<std::int64_t> s(kernel_prefix_length(2, 3, 8), 0);
    s[20] = 1;
    CHECK_THROWS_AS(compute_kernel(s, 2, 3, 8), std::runtime_error);
    CHECK(kernel_prefix_length(2, 3, 10) == 640);
    CHECK_THROWS_AS(compute_kernel(s, 1, 3, 8), std::invalid_argument);
    CHECK_THROWS_AS(compute_kernel(s, 2, 3, 0), std::invalid_argument);
    const std::vector<std::int64_t> short_prefix(10, 0);
    CHECK_THROWS_AS(compute_kernel(short_prefix, 2, 3, 8), std::runtime_error);
}

TEST_CASE("rational rank agrees with exact elimination") {
    CHECK(rational_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(rational_rank({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 3);
    CHECK(rational_rank({}) == 0);
    CHECK(rational_rank({{0, 0}, {0, 0}}) == 0);
    // rank 1 over Q though every entry is huge
    const std::int64_t big = 3037000493;
    CHECK(rational_rank({{big, big * 2}, {big * 3, big * 6}}) == 1);
    CHECK_THROWS_AS(rational_rank({{1, 2}, {3}}), std::invalid_argument);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
        std::vector<std::vector<std::int64_t>> m(r, std::vector<std::int64_t>(c));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<std::int64_t>(rng() % 7) - 3;
        // force dependent rows now and then
        if (r > 2 && trial % 2)
            for (std::size_t j = 0; j < c; ++j) m[r - 1][j] = m[0][j] - 2 * m[1][j];
        CHECK(rational_rank(m) == exact_rank(m));
    }
}

TEST_CASE("rank profile of automatic and non-automatic sequences") {
    const RankProfile t = rank_profile(named("t"), 2, 6, 128);
    REQUIRE(t.rows.size() == 7);
    CHECK(t.rows.back().distinct == 2);
    CHECK(t.rows.back().rank == 2);

    const RankProfile a = rank_profile(named("a"), 2, 4, 128);
    for (const RankRow& row : a.rows) CHECK(row.rank == (std::size_t{2} << row.depth) - 1);
}
