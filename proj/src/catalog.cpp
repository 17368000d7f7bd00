#include "autoseq/catalog.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

namespace autoseq::catalog {

namespace {

using Prefix = std::function<std::vector<std::int64_t>(std::size_t)>;

std::vector<std::int64_t> letters_as_integers(const Word& w, const Alphabet& alphabet) {
    std::vector<std::int64_t> out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(std::stoll(alphabet.name(l)));
    return out;
}

std::vector<std::int64_t> fixed_point_values(const Morphism& f, const std::string& seed, std::size_t n) {
    if (n == 0) return {};
    return letters_as_integers(fixed_point_prefix(f, f.domain().index_of(seed), n), f.domain());
}

std::vector<std::int64_t> automaton_values(const Dfao& m, const NumerationSystem& s, std::size_t n) {
    std::vector<std::int64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = eval(m, i, s);
    return out;
}

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t base) {
    std::uint64_t s = 0;
    for (; n; n /= base) s += n % base;
    return s;
}

std::vector<std::int64_t> period_doubling_formula(std::size_t n) {
    std::vector<std::int64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = std::countr_zero(static_cast<std::uint64_t>(i) + 1) % 2;
    return out;
}

std::vector<std::int64_t> thue_morse_formula(std::uint32_t p, std::size_t n) {
    std::vector<std::int64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::int64_t>(digit_sum(i, p) % p);
    return out;
}

std::vector<std::int64_t> partial_sums(std::int64_t start, const std::vector<std::int64_t>& steps, std::size_t n) {
    std::vector<std::int64_t> out;
    out.reserve(n);
    std::int64_t v = start;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(v);
        if (i < steps.size()) v += steps[i];
    }
    return out;
}

std::vector<std::int64_t> fibonacci_membership(std::size_t n) {
    std::vector<std::int64_t> out(n, 0);
    for (std::size_t k = 0; k <= 91; ++k) {
        const auto f = static_cast<std::uint64_t>(fib(k));
        if (f >= n) break;
        out[f] = 1;
    }
    return out;
}

std::vector<std::int64_t> run_lengths_of_thue_morse(std::size_t n) {
    // runs of t have length 1 or 2, so 2n + 2 letters always complete n runs
    const auto t = thue_morse_formula(2, 2 * n + 2);
    const auto runs = run_lengths(std::span<const std::int64_t>(t), n);
    return std::vector<std::int64_t>(runs.begin(), runs.end());
}

std::vector<std::int64_t> ans_values(const NumerationSystem& s, std::size_t n) {
    std::vector<std::int64_t> out(n);
    const NumerationSystem binary = NumerationSystem::base(2);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::int64_t>(binary.val(s.rep(i)));
    return out;
}

std::vector<std::int64_t> delta_from_a(std::size_t n) {
    const auto a = positions_of(inverse_period_doubling_stream(), 1, n + 1);
    std::vector<std::int64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = (a[i + 1] - a[i]) % 3 != 0 ? 1 : 0;
    return out;
}

std::vector<std::int64_t> fib_prefix(std::size_t n) {
    std::vector<std::int64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = fib(i);
    return out;
}

std::vector<std::int64_t> fib_by_counting(std::size_t n) {
    std::vector<std::int64_t> out;
    if (n == 0) return out;
    for (const BigInt& c : count_lengths(language_l_prime(), n - 1)) {
        if (c > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("F(n) does not fit in 64 bits");
        out.push_back(static_cast<std::int64_t>(c));
    }
    return out;
}

Alphabet digits(std::uint32_t count) {
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < count; ++i) names.push_back(std::to_string(i));
    return Alphabet(names);
}

}  // namespace

// --- names ---------------------------------------------------------------------

const std::vector<SequenceInfo>& sequences() {
    static const std::vector<SequenceInfo> list = {
        {"d", "period-doubling sequence, nu_2(n+1) mod 2", ValueKind::residue},
        {"t", "Thue-Morse sequence, binary digit sum mod 2", ValueKind::residue},
        {"p", "run lengths of t, fixed point of 1 -> 121, 2 -> 12221", ValueKind::letter},
        {"u", "inverse period-doubling sequence (coefficients of the reverted series)", ValueKind::residue},
        {"o", "positions of 1 in d", ValueKind::integer},
        {"z", "positions of 0 in d", ValueKind::integer},
        {"a", "positions of 1 in u", ValueKind::integer},
        {"b", "positions of 0 in u", ValueKind::integer},
        {"delta", "1 when (a_{n+1} - a_n) mod 3 != 0", ValueKind::residue},
        {"x", "characteristic sequence of the Fibonacci numbers", ValueKind::residue},
        {"F", "Fibonacci numbers with F(0) = F(1) = 1", ValueKind::integer},
    };
    return list;
}

std::optional<std::uint32_t> thue_morse_prime(const std::string& name) {
    if (name.size() < 3 || name.compare(0, 2, "tp") != 0) return std::nullopt;
    const std::string digits_part = name.substr(2);
    if (!std::all_of(digits_part.begin(), digits_part.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        digits_part.size() > 3 || digits_part[0] == '0')
        return std::nullopt;
    const auto p = static_cast<std::uint32_t>(std::stoul(digits_part));
    if (!is_supported_prime(p) || p > 251) return std::nullopt;
    return p;
}

bool is_known(const std::string& name) {
    const auto& list = sequences();
    return thue_morse_prime(name) ||
           std::any_of(list.begin(), list.end(), [&](const SequenceInfo& s) { return s.name == name; });
}

// --- streams -----------------------------------------------------------------------

std::int64_t fib(std::size_t n) {
    if (n > 91) throw std::overflow_error("F(" + std::to_string(n) + ") does not fit in 64 bits");
    std::int64_t a = 1, b = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t c = a + b;
        a = b;
        b = c;
    }
    return a;
}

std::vector<std::int64_t> positions_of(TermStream stream, std::int64_t value, std::size_t count) {
    std::vector<std::int64_t> out;
    out.reserve(count);
    for (std::int64_t m = 0; out.size() < count; ++m)
        if (stream() == value) out.push_back(m);
    return out;
}

TermStream period_doubling_stream() {
    auto n = std::make_shared<std::uint64_t>(0);
    return [n]() -> std::int64_t { return std::countr_zero(++*n) % 2; };
}

TermStream inverse_period_doubling_stream() {
    // bit history; the recurrences only look back to indices below m/2
    auto history = std::make_shared<std::vector<bool>>();
    return [history]() -> std::int64_t {
        auto& u = *history;
        const std::size_t m = u.size();
        bool v;
        if (m % 2 == 0)
            v = false;
        else if (m == 1)
            v = true;
        else if (m % 4 == 1)
            v = u[(m - 1) / 2 - 1];
        else
            v = u[(m - 3) / 4];
        u.push_back(v);
        return v ? 1 : 0;
    };
}

std::vector<std::int64_t> u_by_recurrence(std::size_t n) {
    std::vector<std::int64_t> u(n, 0);
    for (std::size_t m = 1; m < n; ++m) {
        if (m % 2 == 0) continue;
        if (m == 1)
            u[m] = 1;
        else if (m % 4 == 1)
            u[m] = u[(m - 1) / 2 - 1];
        else
            u[m] = u[(m - 3) / 4];
    }
    return u;
}

std::vector<std::int64_t> coded_prefix(const Morphism& f, Letter seed, const Morphism& g, std::size_t n) {
    std::vector<std::int64_t> out;
    out.reserve(n);
    if (n == 0) return out;
    std::vector<std::int64_t> value;
    for (const auto& name : g.codomain().names()) value.push_back(std::stoll(name));
    FixedPointStream s(f, seed);
    while (out.size() < n)
        for (Letter c : g.image(s.next())) {
            out.push_back(value[c]);
            if (out.size() == n) break;
        }
    return out;
}

// --- automata ------------------------------------------------------------------------

Dfao period_doubling_dfao() {
    // the drawn transitions track the parity of the final block of 1s, which
    // needs the most significant digit first
    return Dfao(2, {{0, 1}, {0, 0}}, {0, 1}, 0, ReadOrder::msd_first, {"0", "1"});
}

Dfao inverse_period_doubling_dfao() {
    // q0 is the initial state; outputs 0, 0, 1, 1, 1
    return Dfao(2, {{1, 2}, {1, 1}, {3, 0}, {4, 3}, {3, 1}}, {0, 0, 1, 1, 1}, 0, ReadOrder::lsd_first,
                {"q0", "q1", "q2", "q3", "q4"});
}

Dfa fibonacci_language_dfa() {
    return Dfa(2, {{4, 1}, {2, 4}, {2, 3}, {2, 4}, {4, 4}}, {true, true, true, true, false}, 0, ReadOrder::msd_first,
               {"A", "B", "C", "D", "E"});
}

Dfao fibonacci_indicator_dfao() {
    return Dfao(2, {{0, 1}, {1, 2}, {2, 2}}, {0, 1, 0}, 0, ReadOrder::msd_first, {"0_0", "1", "0_1"});
}

Dfa language_l_prime() {
    return Dfa(2, {{1, 0}, {0, 2}, {2, 2}}, {true, false, false}, 0, ReadOrder::msd_first, {"s", "h", "dead"});
}

Dfa language_la1() {
    return Dfa(2, {{2, 1}, {2, 0}, {2, 2}}, {false, true, false}, 0, ReadOrder::msd_first, {"even", "odd", "dead"});
}

Dfa language_la2() {
    // start, inside 1{1,00}*, odd block of zeros, odd/even ones after the separator, dead
    return Dfa(2, {{5, 1}, {2, 1}, {1, 3}, {5, 4}, {5, 3}, {5, 5}}, {false, false, false, true, false, false}, 0,
               ReadOrder::msd_first, {"start", "prefix", "zeros", "ones_odd", "ones_even", "dead"});
}

Dfa language_la() { return Dfa(minimize(language_union(language_la1(), language_la2()).machine())); }

// --- morphisms -------------------------------------------------------------------------

Morphism period_doubling_morphism() { return Morphism::endomorphism(digits(2), {"0 1", "0 0"}); }
Morphism period_doubling_complement() { return Morphism::endomorphism(digits(2), {"1 1", "1 0"}); }
Morphism thue_morse_morphism() { return Morphism::endomorphism(digits(2), {"0 1", "1 0"}); }
Morphism exchange_morphism() { return Morphism::endomorphism(digits(2), {"1", "0"}); }

Morphism run_length_morphism() { return Morphism::endomorphism(Alphabet({"1", "2"}), {"1 2 1", "1 2 2 2 1"}); }
Morphism pd_block_morphism() { return Morphism::endomorphism(Alphabet({"2", "4"}), {"2 4 2", "2 4 4 4 2"}); }
Morphism pd_block_coding() { return Morphism::mapping(Alphabet({"2", "4"}), digits(2), {"0 1", "0 0 0 1"}); }

Morphism generalized_thue_morse_morphism(std::uint32_t p) {
    if (!is_supported_prime(p) || p > 251) throw std::invalid_argument("generalized Thue-Morse needs a prime <= 251");
    std::vector<Word> images(p);
    for (std::uint32_t i = 0; i < p; ++i)
        for (std::uint32_t j = 0; j < p; ++j) images[i].push_back(static_cast<Letter>((i + j) % p));
    const Alphabet a = digits(p);
    return Morphism(a, a, std::move(images));
}

Morphism fibonacci_product_morphism() {
    const Alphabet a({"z", "a0", "a1", "a2", "a3", "a4", "a5", "a6", "a7"});
    return Morphism::endomorphism(
        a, {"z a0", "a1 a2", "a1 a4", "a3 a7", "a3 a6", "a4 a7", "a5 a6", "a5 a7", "a7 a7"});
}

Morphism fibonacci_product_coding() {
    const Alphabet a({"z", "a0", "a1", "a2", "a3", "a4", "a5", "a6", "a7"});
    return Morphism::mapping(a, digits(2), {"", "0", "", "1", "1", "", "0", "0", ""});
}

Morphism golden_morphism() {
    return Morphism::endomorphism(Alphabet({"a", "b", "c", "d", "e"}), {"a b", "c", "c e", "d e", "d"});
}

Morphism golden_coding() {
    return Morphism::mapping(Alphabet({"a", "b", "c", "d", "e"}), digits(2), {"0", "1", "1", "0", "0"});
}

// --- series ------------------------------------------------------------------------

TruncatedSeries period_doubling_series(std::size_t precision) {
    const auto d = period_doubling_formula(precision);
    return TruncatedSeries::from_integers(2, d);
}

TruncatedSeries inverse_period_doubling_series(std::size_t precision) {
    return reversion(period_doubling_series(precision));
}

TruncatedSeries thue_morse_series(std::uint32_t p, std::size_t precision) {
    const auto t = thue_morse_formula(p, precision);
    return TruncatedSeries::from_integers(p, t);
}

PolyRelation period_doubling_relation() {
    return PolyRelation(2, {{{0, 1, 0, 1}, ExponentPattern::power(2)},
                            {{1, 0, 1}, ExponentPattern::power(1)},
                            {{0, 1}, ExponentPattern::power(0)}});
}

PolyRelation inverse_cubic_relation() {
    return PolyRelation(2, {{{0, 0, 1}, ExponentPattern::power(3)},
                            {{0, 1}, ExponentPattern::power(2)},
                            {{1, 0, 1}, ExponentPattern::power(1)},
                            {{0, 1}, ExponentPattern::power(0)}});
}

PolyRelation inverse_frobenius_relation() {
    return PolyRelation(2, {{{0, 0, 0, 1}, ExponentPattern::frobenius(2)},
                            {{0, 0, 0, 1}, ExponentPattern::frobenius(1)},
                            {{1}, ExponentPattern::frobenius(0)},
                            {{0, 1}, ExponentPattern::power(0)}});
}

PolyRelation thue_morse_relation(std::uint32_t p) {
    if (!is_supported_prime(p)) throw std::invalid_argument("modulus must be prime");
    // (1 - X)^(p+1) by repeated multiplication mod p
    std::vector<Residue> c{1};
    for (std::uint32_t k = 0; k <= p; ++k) {
        std::vector<Residue> next(c.size() + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] = static_cast<Residue>((next[i] + c[i]) % p);
            next[i + 1] = static_cast<Residue>((next[i + 1] + p - c[i]) % p);
        }
        c = std::move(next);
    }
    // -(1 - X)^2 = -1 + 2X - X^2
    std::vector<Residue> neg_sq(3);
    neg_sq[0] = p - 1;
    neg_sq[1] = static_cast<Residue>(2 % p);
    neg_sq[2] = p - 1;
    return PolyRelation(p, {{c, ExponentPattern::power(p)},
                            {neg_sq, ExponentPattern::power(1)},
                            {{0, 1}, ExponentPattern::power(0)}});
}

// --- definitions -------------------------------------------------------------------

std::vector<Definition> definitions(const std::string& name) {
    const NumerationSystem binary = NumerationSystem::base(2);
    if (const auto p = thue_morse_prime(name)) {
        const std::uint32_t q = *p;
        return {
            {"digit sum mod p", [q](std::size_t n) { return thue_morse_formula(q, n); }},
            {"fixed point of the p-uniform morphism",
             [q](std::size_t n) { return fixed_point_values(generalized_thue_morse_morphism(q), "0", n); }},
        };
    }
    if (name == "d")
        return {
            {"nu_2(n+1) mod 2", period_doubling_formula},
            {"fixed point of h", [](std::size_t n) { return fixed_point_values(period_doubling_morphism(), "0", n); }},
            {"period-doubling DFAO",
             [binary](std::size_t n) { return automaton_values(period_doubling_dfao(), binary, n); }},
            {"g(f^omega(2))",
             [](std::size_t n) {
                 const Morphism f = pd_block_morphism();
                 return coded_prefix(f, f.domain().index_of("2"), pd_block_coding(), n);
             }},
            {"complement of the first difference of t mod 2",
             [](std::size_t n) {
                 const auto t = thue_morse_formula(2, n + 1);
                 std::vector<std::int64_t> out(n);
                 for (std::size_t i = 0; i < n; ++i) out[i] = 1 - ((t[i + 1] - t[i] + 2) % 2);
                 return out;
             }},
        };
    if (name == "t")
        return {
            {"binary digit sum mod 2", [](std::size_t n) { return thue_morse_formula(2, n); }},
            {"fixed point of tau", [](std::size_t n) { return fixed_point_values(thue_morse_morphism(), "0", n); }},
        };
    if (name == "p")
        return {
            {"fixed point of 1 -> 121, 2 -> 12221",
             [](std::size_t n) { return fixed_point_values(run_length_morphism(), "1", n); }},
            {"run lengths of t", run_lengths_of_thue_morse},
        };
    if (name == "u")
        return {
            {"recurrences", u_by_recurrence},
            {"reversion of the period-doubling series",
             [](std::size_t n) {
                 std::vector<std::int64_t> out;
                 if (n == 0) return out;
                 const auto s = inverse_period_doubling_series(std::max<std::size_t>(n, 2));
                 for (std::size_t i = 0; i < n; ++i) out.push_back(s[i]);
                 return out;
             }},
            {"inverse period-doubling DFAO",
             [binary](std::size_t n) { return automaton_values(inverse_period_doubling_dfao(), binary, n); }},
        };
    if (name == "o")
        return {
            {"positions of 1 in d", [](std::size_t n) { return positions_of(period_doubling_stream(), 1, n); }},
            {"partial sums of f^omega(2) without its first term",
             [](std::size_t n) {
                 const auto w = n ? fixed_point_values(pd_block_morphism(), "2", n + 1) : std::vector<std::int64_t>{};
                 return partial_sums(1, std::vector<std::int64_t>(w.begin() + (n ? 1 : 0), w.end()), n);
             }},
        };
    if (name == "z")
        return {
            {"positions of 0 in d", [](std::size_t n) { return positions_of(period_doubling_stream(), 0, n); }},
            {"partial sums of p without its first term",
             [](std::size_t n) {
                 const auto w = n ? fixed_point_values(run_length_morphism(), "1", n + 1) : std::vector<std::int64_t>{};
                 return partial_sums(0, std::vector<std::int64_t>(w.begin() + (n ? 1 : 0), w.end()), n);
             }},
            {"positions of 1 in the fixed point of h'",
             [](std::size_t n) {
                 const Morphism hp = period_doubling_complement();
                 auto s = std::make_shared<FixedPointStream>(hp, hp.domain().index_of("1"));
                 return positions_of([s]() -> std::int64_t { return s->next(); }, 1, n);
             }},
        };
    if (name == "a")
        return {
            {"positions of 1 in u", [](std::size_t n) { return positions_of(inverse_period_doubling_stream(), 1, n); }},
            {"genealogical unranking in L_a",
             [](std::size_t n) { return ans_values(NumerationSystem::ans(language_la()), n); }},
        };
    if (name == "b")
        return {
            {"positions of 0 in u", [](std::size_t n) { return positions_of(inverse_period_doubling_stream(), 0, n); }},
            {"positions of output 0 in the inverse period-doubling DFAO",
             [binary](std::size_t n) {
                 const Dfao m = inverse_period_doubling_dfao();
                 auto i = std::make_shared<std::uint64_t>(0);
                 return positions_of([m, binary, i]() -> std::int64_t { return eval(m, (*i)++, binary); }, 0, n);
             }},
        };
    if (name == "delta")
        return {
            {"(a_{n+1} - a_n) mod 3 != 0", delta_from_a},
            {"x_{n+2} via Zeckendorf and the indicator DFAO",
             [](std::size_t n) {
                 const auto x = automaton_values(fibonacci_indicator_dfao(), NumerationSystem::zeckendorf(), n + 2);
                 return std::vector<std::int64_t>(x.begin() + 2, x.end());
             }},
        };
    if (name == "x")
        return {
            {"membership in {F(m)}", fibonacci_membership},
            {"Zeckendorf indicator DFAO",
             [](std::size_t n) {
                 return automaton_values(fibonacci_indicator_dfao(), NumerationSystem::zeckendorf(), n);
             }},
            {"mu(phi^omega(a))",
             [](std::size_t n) {
                 const Morphism f = golden_morphism();
                 return coded_prefix(f, f.domain().index_of("a"), golden_coding(), n);
             }},
            {"g(f^omega(z)) from the product automaton",
             [](std::size_t n) {
                 const Morphism f = fibonacci_product_morphism();
                 return coded_prefix(f, f.domain().index_of("z"), fibonacci_product_coding(), n);
             }},
        };
    if (name == "F")
        return {
            {"F(n) = F(n-1) + F(n-2)", fib_prefix},
            {"words of length n in {1,00}*", fib_by_counting},
        };
    throw std::invalid_argument("unknown sequence \"" + name + "\"");
}

std::vector<std::int64_t> prefix(const std::string& name, std::size_t n) { return definitions(name).front().prefix(n); }

std::int64_t term(const std::string& name, std::uint64_t n) {
    if (name == "d") return std::countr_zero(n + 1) % 2;
    if (name == "t") return std::popcount(n) % 2;
    if (const auto p = thue_morse_prime(name)) return static_cast<std::int64_t>(digit_sum(n, *p) % *p);
    if (name == "F") return fib(n);
    if (name == "u") return eval(inverse_period_doubling_dfao(), n, NumerationSystem::base(2));
    if (name == "x") return eval(fibonacci_indicator_dfao(), n, NumerationSystem::zeckendorf());
    if (!is_known(name)) throw std::invalid_argument("unknown sequence \"" + name + "\"");
    return prefix(name, n + 1).back();
}

// --- cross checks ------------------------------------------------------------------

CrossCheckReport compare_definitions(const std::string& name, const std::vector<Definition>& defs, std::size_t n) {
    CrossCheckReport r;
    r.name = name;
    r.horizon = n;
    if (defs.empty()) return r;
    std::vector<std::vector<std::int64_t>> values;
    for (const auto& d : defs) values.push_back(d.prefix(n));
    std::size_t first = n;
    for (std::size_t j = 1; j < defs.size(); ++j) {
        r.checks.push_back(defs[0].label + " == " + defs[j].label);
        for (std::size_t i = 0; i < std::min(first, n); ++i)
            if (values[j][i] != values[0][i]) {
                first = i;
                break;
            }
    }
    if (first < n) {
        Mismatch m;
        m.check = "definitions agree";
        m.index = first;
        for (std::size_t j = 0; j < defs.size(); ++j) m.values.emplace_back(defs[j].label, values[j][first]);
        r.mismatch = std::move(m);
    }
    return r;
}

namespace {

std::optional<Mismatch> compare_sequences(const std::string& check, const std::string& left_label,
                                          const std::vector<std::int64_t>& left, const std::string& right_label,
                                          const std::vector<std::int64_t>& right) {
    const std::size_t n = std::min(left.size(), right.size());
    for (std::size_t i = 0; i < n; ++i)
        if (left[i] != right[i]) return Mismatch{check, i, {{left_label, left[i]}, {right_label, right[i]}}};
    if (left.size() != right.size())
        return Mismatch{check, n, {{left_label, static_cast<std::int64_t>(left.size())},
                                   {right_label, static_cast<std::int64_t>(right.size())}}};
    return std::nullopt;
}

std::vector<std::int64_t> first_difference(const std::vector<std::int64_t>& v) {
    std::vector<std::int64_t> out;
    for (std::size_t i = 1; i < v.size(); ++i) out.push_back(v[i] - v[i - 1]);
    return out;
}

}  // namespace

CrossCheckReport cross_check(const std::string& name, std::size_t n) {
    CrossCheckReport r = compare_definitions(name, definitions(name), n);
    if (!r.pass() || n < 2) return r;

    if (name == "z") {
        // z_0 = 0 closes the first run of t, so the differences start at p_1
        r.checks.push_back("first difference of z == p without its first term");
        const auto dz = first_difference(prefix("z", n));
        const auto pp = prefix("p", n);
        r.mismatch = compare_sequences(r.checks.back(), "z_{n+1} - z_n", dz, "p_{n+1}",
                                       std::vector<std::int64_t>(pp.begin() + 1, pp.end()));
    } else if (name == "o") {
        r.checks.push_back("first difference of o == f^omega(2) without its first term");
        const auto dox = first_difference(prefix("o", n));
        const auto w = fixed_point_values(pd_block_morphism(), "2", n);
        r.mismatch = compare_sequences(r.checks.back(), "o_{n+1} - o_n", dox, "f^omega(2)_{n+1}",
                                       std::vector<std::int64_t>(w.begin() + 1, w.end()));
    } else if (name == "a") {
        r.checks.push_back("runs of a_n mod 3 are 1^F(0) 2^F(1) 1^F(2) ...");
        const auto a = prefix("a", n);
        std::vector<std::int64_t> mod3;
        for (auto v : a) mod3.push_back(v % 3);
        // the last run may be cut off by the horizon
        std::vector<std::int64_t> runs, labels;
        std::size_t start = 0;
        for (std::size_t i = 1; i < mod3.size(); ++i)
            if (mod3[i] != mod3[i - 1]) {
                runs.push_back(static_cast<std::int64_t>(i - start));
                labels.push_back(mod3[start]);
                start = i;
            }
        std::vector<std::int64_t> expected_runs, expected_labels;
        for (std::size_t m = 0; m < runs.size(); ++m) {
            expected_runs.push_back(fib(m));
            expected_labels.push_back(m % 2 == 0 ? 1 : 2);
        }
        r.mismatch = compare_sequences(r.checks.back(), "run length", runs, "F(m)", expected_runs);
        if (!r.mismatch)
            r.mismatch = compare_sequences(r.checks.back(), "run value", labels, "1 or 2 alternating", expected_labels);
    }
    return r;
}

std::string bfile(const std::string& name, std::size_t n, std::int64_t offset) {
    std::ostringstream os;
    const auto v = prefix(name, n);
    for (std::size_t i = 0; i < v.size(); ++i) os << static_cast<std::int64_t>(i) + offset << ' ' << v[i] << '\n';
    return os.str();
}

}  // namespace autoseq::catalog
