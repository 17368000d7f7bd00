#include <doctest.h>

#include <random>

#include "autoseq/catalog.hpp"
#include "autoseq/series.hpp"

using namespace autoseq;

namespace {

TruncatedSeries random_series(std::uint32_t p, std::size_t n, std::mt19937& rng, bool zero_constant = false) {
    std::uniform_int_distribution<std::uint32_t> pick(0, p - 1);
    std::vector<Residue> c(n);
    for (auto& x : c) x = pick(rng);
    if (zero_constant) c[0] = 0;
    return TruncatedSeries(p, c);
}

// Schoolbook product, truncated.
TruncatedSeries naive_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::uint32_t p = a.modulus();
    const std::size_t n = std::min(a.precision(), b.precision());
    std::vector<std::uint64_t> c(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) c[i + j] = (c[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    return TruncatedSeries(p, std::vector<Residue>(c.begin(), c.end()));
}

// a(b) by Horner's rule on the schoolbook product.
TruncatedSeries naive_compose(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.precision(), b.precision());
    TruncatedSeries acc = TruncatedSeries::zero(a.modulus(), n);
    for (std::size_t i = n; i-- > 0;)
        acc = naive_mul(acc, b.truncated(n)) + TruncatedSeries::monomial(a.modulus(), 0, a[i], n);
    return acc;
}

}  // namespace

TEST_CASE("construction reduces and validates") {
    const std::vector<std::int64_t> v{-1, 4, 7};
    const auto s = TruncatedSeries::from_integers(3, v);
    CHECK(s.coefficients()[0] == 2);
    CHECK(s[1] == 1);
    CHECK(s[2] == 1);
    CHECK_THROWS_AS(TruncatedSeries(4, {1}), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries(5, {5}), std::invalid_argument);
    CHECK(TruncatedSeries::zero(7, 4).valuation() == 4);
    CHECK(TruncatedSeries::monomial(7, 2, 3, 5).valuation() == 2);
}

TEST_CASE("products agree with the schoolbook product") {
    std::mt19937 rng(11);
    for (std::uint32_t p : {2u, 3u, 5u, 101u})
        for (std::size_t n : {1u, 7u, 64u, 200u}) {
            const auto a = random_series(p, n, rng), b = random_series(p, n, rng);
            CHECK(mul(a, b) == naive_mul(a, b));
            CHECK(pow(a, 3) == naive_mul(naive_mul(a, a), a));
        }
}

TEST_CASE("p-th power equals the Frobenius twist") {
    std::mt19937 rng(5);
    for (std::uint32_t p : {2u, 3u, 7u}) {
        const auto a = random_series(p, 300, rng);
        CHECK(pow(a, p) == a.frobenius(1));
        CHECK(pow(a, std::uint64_t{p} * p) == a.frobenius(2));
    }
}

TEST_CASE("composition matches Horner evaluation") {
    std::mt19937 rng(3);
    for (std::uint32_t p : {2u, 5u}) {
        const auto a = random_series(p, 40, rng);
        const auto b = random_series(p, 40, rng, true);
        CHECK(compose(a, b) == naive_compose(a, b));
        CHECK(compose(a, TruncatedSeries::variable(p, 40)) == a);
    }
    CHECK_THROWS_AS(compose(TruncatedSeries::variable(2, 4), TruncatedSeries(2, {1, 1, 0, 0})), std::invalid_argument);
}

TEST_CASE("reversion is a two-sided compositional inverse") {
    std::mt19937 rng(17);
    for (std::uint32_t p : {2u, 3u, 5u, 13u})
        for (std::size_t n : {2u, 33u, 129u}) {
            auto a = random_series(p, n, rng, true);
            if (a[1] == 0) a = a + TruncatedSeries::monomial(p, 1, 1, n);
            const auto v = reversion(a);
            const auto x = TruncatedSeries::variable(p, n);
            CHECK(compose(a, v) == x);
            CHECK(compose(v, a) == x);
        }
    CHECK_THROWS_AS(reversion(TruncatedSeries(2, {1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(reversion(TruncatedSeries(2, {0, 0, 1})), std::invalid_argument);
}

TEST_CASE("reversion of the period-doubling series begins with the printed listing of u") {
    const std::string listing = "01000101000001000100000100000101000001000";
    const auto u = catalog::inverse_period_doubling_series(64);
    for (std::size_t i = 0; i < listing.size(); ++i) CHECK(u[i] == static_cast<Residue>(listing[i] - '0'));
}

TEST_CASE("relations vanish on their series") {
    const auto d = catalog::period_doubling_series(1024);
    const auto u = catalog::inverse_period_doubling_series(1024);
    CHECK(relation_residual(catalog::period_doubling_relation(), d).is_zero());
    CHECK(relation_residual(catalog::inverse_cubic_relation(), u).is_zero());
    CHECK(relation_residual(catalog::inverse_frobenius_relation(), u).is_zero());
    CHECK_FALSE(relation_residual(catalog::inverse_cubic_relation(), d).is_zero());
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        CHECK(relation_residual(catalog::thue_morse_relation(p), catalog::thue_morse_series(p, 2000)).is_zero());
}

TEST_CASE("relation normalization and equivalence") {
    const PolyRelation r(3, {{{0, 2}, ExponentPattern::power(2)}, {{1, 1}, ExponentPattern::power(0)}});
    const PolyRelation scaled(3, {{{2, 2}, ExponentPattern::power(0)}, {{0, 1}, ExponentPattern::power(2)}});
    CHECK(equivalent_relations(r, scaled));
    CHECK(r.normalized().terms().front().coefficient == std::vector<Residue>{0, 1});
    // frobenius(1) and power(3) have the same effective exponent over F_3
    const PolyRelation twisted(3, {{{0, 1}, ExponentPattern::frobenius(0)}, {{1, 1}, ExponentPattern::power(0)}});
    const PolyRelation plain(3, {{{0, 1}, ExponentPattern::power(1)}, {{1, 1}, ExponentPattern::power(0)}});
    CHECK(equivalent_relations(twisted, plain));
    CHECK_FALSE(equivalent_relations(r, plain));
    CHECK_THROWS_AS(PolyRelation(2, {{{0}, ExponentPattern::power(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(PolyRelation(2, {{{1}, ExponentPattern::power(2)}, {{1}, ExponentPattern::frobenius(1)}}),
                    std::invalid_argument);
}

TEST_CASE("relation search recovers the known relations") {
    const auto u = catalog::inverse_period_doubling_series(512);
    const auto found = power_relation_search(u, 2, 3);
    REQUIRE(found);
    CHECK(equivalent_relations(*found, catalog::inverse_frobenius_relation()));

    // D satisfies X + (1 + X^2) D + (X + X^3) D(X^2) = 0, the quadratic relation with D^2 = D(X^2)
    const auto d = catalog::period_doubling_series(512);
    const auto fd = power_relation_search(d, 1, 3);
    REQUIRE(fd);
    const PolyRelation expected(2, {{{0, 1}, ExponentPattern::power(0)},
                                    {{1, 0, 1}, ExponentPattern::frobenius(0)},
                                    {{0, 1, 0, 1}, ExponentPattern::frobenius(1)}});
    CHECK(equivalent_relations(*fd, expected));
    CHECK(relation_residual(*fd, d).is_zero());

    std::mt19937 rng(23);
    CHECK_FALSE(power_relation_search(random_series(2, 512, rng), 1, 1));
    CHECK_THROWS_AS(power_relation_search(TruncatedSeries::variable(2, 8), 2, 3), std::invalid_argument);
}
