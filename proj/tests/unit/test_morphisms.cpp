#include <doctest.h>

#include <cmath>
#include <random>

#include "autoseq/catalog.hpp"
#include "autoseq/morphisms.hpp"

using namespace autoseq;

namespace {

// f^omega(seed) by iterating until the word is long enough.
Word oracle_prefix(const Morphism& f, Letter seed, std::size_t n) {
    Word w{seed};
    while (w.size() < n) w = f.apply(w);
    w.resize(n);
    return w;
}

// Spectral radius by power iteration, for strictly positive matrices.
double power_iteration(const std::vector<std::vector<std::uint64_t>>& m) {
    const std::size_t n = m.size();
    std::vector<double> v(n, 1.0);
    double lambda = 0;
    for (int it = 0; it < 2000; ++it) {
        std::vector<double> w(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) w[i] += static_cast<double>(m[i][j]) * v[j];
        double norm = 0;
        for (double x : w) norm = std::max(norm, x);
        for (auto& x : w) x /= norm;
        lambda = norm;
        v = std::move(w);
    }
    return lambda;
}

std::string images_of(const Morphism& f) {
    std::string out;
    for (Letter a = 0; a < f.domain().size(); ++a)
        out += f.domain().name(a) + "->" + f.codomain().render(f.image(a)) + ";";
    return out;
}

}  // namespace

TEST_CASE("alphabets parse and render words") {
    const Alphabet a({"a0", "a1", "z"});
    CHECK(a.parse("z a0  a1") == Word{2, 0, 1});
    CHECK(a.render(Word{2, 0, 1}) == "z a0 a1");
    CHECK(a.render(Word{0, 1}, "") == "a0a1");
    CHECK(a.index_of("a1") == 1);
    CHECK_FALSE(a.contains("a2"));
    CHECK_THROWS_AS(a.parse("a2"), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet({"x", "x"}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet({""}), std::invalid_argument);
    std::vector<std::string> many;
    for (int i = 0; i < 256; ++i) many.push_back("l" + std::to_string(i));
    CHECK_THROWS_AS(Alphabet{many}, std::invalid_argument);
}

TEST_CASE("morphism basics") {
    const Morphism h = catalog::period_doubling_morphism();
    CHECK(h.domain().render(h.iterate(Word{0}, 3), "") == "01000101");
    CHECK(h.uniform_length() == 2);
    CHECK(h.non_erasing());
    CHECK_FALSE(h.is_coding());
    CHECK(catalog::exchange_morphism().is_coding());

    const Morphism f = catalog::run_length_morphism();
    CHECK_FALSE(f.uniform_length());
    CHECK(f.codomain().render(fixed_point_prefix(f, 0, 8), "") == "12112221");
    const IncidenceMatrix m = f.incidence();
    CHECK(m.entries == std::vector<std::vector<std::uint64_t>>{{2, 2}, {1, 3}});

    CHECK_THROWS_AS(Morphism(Alphabet({"a", "b"}), Alphabet({"a", "b"}), {Word{0}}), std::invalid_argument);
    CHECK_THROWS_AS(Morphism(Alphabet({"a"}), Alphabet({"a"}), {Word{1}}), std::invalid_argument);
    const Morphism g = catalog::golden_coding();
    CHECK_THROWS_AS(g.iterate(Word{0}, 2), std::logic_error);
    CHECK_THROWS_AS(g.incidence(), std::logic_error);
}

TEST_CASE("fixed-point stream agrees with iteration") {
    std::vector<std::pair<Morphism, Letter>> cases{
        {catalog::period_doubling_morphism(), 0},
        {catalog::thue_morse_morphism(), 0},
        {catalog::run_length_morphism(), 0},
        {catalog::golden_morphism(), 0},
        {Morphism::endomorphism(Alphabet({"a", "b", "c"}), {"a b c", "", "c c"}), 0},
        {catalog::fibonacci_product_morphism(), 0},
    };
    for (const auto& [f, seed] : cases) {
        const Word expected = oracle_prefix(f, seed, 5000);
        FixedPointStream s(f, seed);
        Word got;
        for (std::size_t i = 0; i < expected.size(); ++i) got.push_back(s.next());
        CHECK(got == expected);
        CHECK(fixed_point_prefix(f, seed, 5000) == expected);
    }

    // copies continue from the same position independently
    FixedPointStream a(catalog::thue_morse_morphism(), 0);
    for (int i = 0; i < 10; ++i) a.next();
    FixedPointStream b = a;
    Word wa, wb;
    for (int i = 0; i < 100; ++i) wa.push_back(a.next());
    for (int i = 0; i < 100; ++i) wb.push_back(b.next());
    CHECK(wa == wb);
}

TEST_CASE("prolongability") {
    const Morphism h = catalog::period_doubling_morphism();
    CHECK(h.prolongable_on(0));
    CHECK_FALSE(h.prolongable_on(1));
    CHECK_THROWS_AS(fixed_point_prefix(h, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(fixed_point_prefix(h, 0, 0), std::invalid_argument);
    // f(a) = a b with b erased: |f^n(a)| stays bounded
    const Morphism bounded = Morphism::endomorphism(Alphabet({"a", "b"}), {"a b", ""});
    CHECK_FALSE(bounded.prolongable_on(0));
    const Morphism identity = Morphism::endomorphism(Alphabet({"a"}), {"a"});
    CHECK_FALSE(identity.prolongable_on(0));
}

TEST_CASE("Perron-Frobenius eigenvalues are exact") {
    const PfEigenvalue golden = pf_eigenvalue(catalog::golden_morphism().incidence());
    REQUIRE(golden.exact);
    CHECK(*golden.exact == AlgebraicNumber::quadratic(-1, -1));
    CHECK(golden.value == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));

    const PfEigenvalue runs = pf_eigenvalue(catalog::run_length_morphism().incidence());
    REQUIRE(runs.exact);
    CHECK(*runs.exact == AlgebraicNumber::integer(4));

    CHECK(pf_eigenvalue(catalog::thue_morse_morphism().incidence()).exact == AlgebraicNumber::integer(2));
    const Morphism reducible = Morphism::endomorphism(Alphabet({"a", "b"}), {"a b", "b b b"});
    CHECK(pf_eigenvalue(reducible.incidence()).exact == AlgebraicNumber::integer(3));

    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint64_t> pick(1, 9);
    for (std::size_t n : {2u, 3u, 4u, 6u}) {
        IncidenceMatrix m;
        m.entries.assign(n, std::vector<std::uint64_t>(n));
        for (auto& row : m.entries)
            for (auto& x : row) x = pick(rng);
        CHECK(pf_eigenvalue(m).value == doctest::Approx(power_iteration(m.entries)).epsilon(1e-9));
    }
}

TEST_CASE("multiplicative independence") {
    using A = AlgebraicNumber;
    const A phi = A::quadratic(-1, -1);
    CHECK(multiplicatively_independent(A::integer(2), phi));
    CHECK(multiplicatively_independent(phi, A::integer(2)));
    CHECK_FALSE(multiplicatively_independent(A::integer(2), A::integer(8)));
    CHECK_FALSE(multiplicatively_independent(A::integer(4), A::integer(8)));
    CHECK(multiplicatively_independent(A::integer(2), A::integer(3)));
    CHECK(multiplicatively_independent(A::integer(6), A::integer(12)));
    CHECK_FALSE(multiplicatively_independent(phi, phi));
    CHECK_FALSE(multiplicatively_independent(A::quadratic(0, -2), A::integer(2)));  // sqrt 2
    CHECK(multiplicatively_independent(A::quadratic(0, -2), A::integer(3)));
    CHECK_THROWS_AS(multiplicatively_independent(phi, A::quadratic(-2, -1)), std::domain_error);
    CHECK_THROWS_AS(multiplicatively_independent(A::integer(1), A::integer(2)), std::invalid_argument);
}

TEST_CASE("run lengths and eventual periods") {
    const Word t = fixed_point_prefix(catalog::thue_morse_morphism(), 0, 16);
    CHECK(run_lengths<Letter>(t, 5) == std::vector<std::size_t>{1, 2, 1, 1, 2});
    // the last block is incomplete until a different letter follows
    const Word tail{0, 0, 1, 1};
    CHECK_THROWS_AS(run_lengths<Letter>(tail, 2), std::invalid_argument);

    std::vector<int> w{5, 5, 5};
    for (int i = 0; i < 60; ++i) w.push_back(i % 3);
    const auto e = find_eventual_period<int>(w, 4, 5);
    REQUIRE(e);
    CHECK(e->period == 3);
    CHECK(e->preperiod == 3);
    CHECK_FALSE(find_eventual_period<int>(w, 2, 5));
    CHECK_FALSE(find_eventual_period<Letter>(fixed_point_prefix(catalog::thue_morse_morphism(), 0, 400), 10, 10));
    CHECK_THROWS_AS(find_eventual_period<int>(w, 10, 10), std::invalid_argument);
}

TEST_CASE("erasure removal and trimming of the Fibonacci product presentation") {
    const Morphism f = catalog::fibonacci_product_morphism();
    const Morphism g = catalog::fibonacci_product_coding();
    const auto [fe, ge] = remove_erasure(f, g, {"a1", "a4", "a7"});
    CHECK(fe.domain().names() == std::vector<std::string>{"z", "a0", "a2", "a3", "a5", "a6"});
    CHECK(images_of(fe) == "z->z a0;a0->a2;a2->a3;a3->a3 a6;a5->a5 a6;a6->a5;");
    CHECK(catalog::coded_prefix(fe, 0, ge, 300) == catalog::coded_prefix(f, 0, g, 300));

    const MorphicPresentation t = trim_to_prolongable(fe, ge, 0);
    CHECK(t.f.domain().name(t.seed) == "a0");
    CHECK(t.f.codomain().render(t.f.image(t.seed)) == "a0 a2");
    CHECK(catalog::coded_prefix(t.f, t.seed, t.g, 300) == catalog::coded_prefix(f, 0, g, 300));

    const Morphism phi = catalog::golden_morphism();
    const Morphism mu = catalog::golden_coding();
    const auto pi = equivalent_up_to_renaming(t.f, t.g, t.seed, phi, mu, 0);
    REQUIRE(pi);
    std::string renaming;
    for (Letter x = 0; x < pi->size(); ++x) renaming += t.f.domain().name(x) + phi.domain().name((*pi)[x]) + " ";
    CHECK(renaming == "a0a a2b a3c a5d a6e ");

    // a different coding breaks the equivalence
    const Morphism other = Morphism::mapping(phi.domain(), mu.codomain(), {"0", "1", "1", "0", "1"});
    CHECK_FALSE(equivalent_up_to_renaming(t.f, t.g, t.seed, phi, other, 0));

    CHECK_THROWS_AS(remove_erasure(f, g, {"a0"}), std::invalid_argument);  // not erased by g
    CHECK_THROWS_AS(remove_erasure(f, g, {"a1"}), std::invalid_argument);  // f(a1) leaves C
    CHECK_THROWS_AS(trim_to_prolongable(fe, ge, 1), std::invalid_argument);
}

TEST_CASE("text format round trip") {
    const auto parsed = parse_morphism("# period doubling\nseed 0\n0 -> 0 1\n1 -> 0 0   # comment\n");
    CHECK(parsed.seed == "0");
    CHECK(parsed.morphism == catalog::period_doubling_morphism());
    for (const Morphism& m : {catalog::golden_morphism(), catalog::golden_coding(), catalog::fibonacci_product_morphism(),
                              catalog::fibonacci_product_coding()}) {
        const auto back = parse_morphism(format_morphism(m, m.domain().name(0)));
        CHECK(back.morphism == m);
        CHECK(back.seed == m.domain().name(0));
    }
    CHECK_THROWS_AS(parse_morphism(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_morphism("a b c"), std::invalid_argument);
    CHECK_THROWS_AS(parse_morphism("a -> a\na -> b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_morphism("seed q\na -> a b\nb -> a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_morphism("codomain 0 1\na -> 2"), std::invalid_argument);
}
