#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "autoseq/automata.hpp"
#include "autoseq/morphisms.hpp"
#include "autoseq/numeration.hpp"
#include "autoseq/series.hpp"

namespace autoseq::catalog {

enum class ValueKind { residue, integer, letter };

struct SequenceInfo {
    std::string name;
    std::string description;
    ValueKind kind;
};

/// Fixed names: d t p u o z a b delta x F. Generalized Thue-Morse sequences
/// are named tp<prime> (tp2, tp3, ...) and are not listed here.
const std::vector<SequenceInfo>& sequences();
bool is_known(const std::string& name);
/// p for "tp<p>", nullopt for any other name.
std::optional<std::uint32_t> thue_morse_prime(const std::string& name);

/// First n terms by the primary definition. Throws std::invalid_argument for
/// unknown names.
std::vector<std::int64_t> prefix(const std::string& name, std::size_t n);
std::int64_t term(const std::string& name, std::uint64_t n);

struct Definition {
    std::string label;
    std::function<std::vector<std::int64_t>(std::size_t)> prefix;
};

/// Primary definition first, then every alternate one.
std::vector<Definition> definitions(const std::string& name);

struct Mismatch {
    std::string check;
    std::size_t index = 0;
    std::vector<std::pair<std::string, std::int64_t>> values;
};

struct CrossCheckReport {
    std::string name;
    std::size_t horizon = 0;
    std::vector<std::string> checks;  // what was compared, in order
    std::optional<Mismatch> mismatch;

    bool pass() const noexcept { return !mismatch; }
};

/// Compares all definitions termwise on n terms, then the derived identities
/// tied to the sequence (first differences of o and z, runs of a mod 3).
CrossCheckReport cross_check(const std::string& name, std::size_t n);
/// Termwise comparison of arbitrary definitions; the first one is the reference.
CrossCheckReport compare_definitions(const std::string& name, const std::vector<Definition>& defs, std::size_t n);

/// OEIS b-file text: "<n> <value>" per line, indices starting at `offset`.
std::string bfile(const std::string& name, std::size_t n, std::int64_t offset = 0);

// --- sequence helpers ----------------------------------------------------------

/// Streams a sequence one term at a time, starting at index 0.
using TermStream = std::function<std::int64_t()>;

/// The first `count` indices m (ascending) with seq_m == value, drawing terms
/// from the stream until enough have appeared.
std::vector<std::int64_t> positions_of(TermStream stream, std::int64_t value, std::size_t count);

/// Streams of d and u; independent per call.
TermStream period_doubling_stream();
TermStream inverse_period_doubling_stream();

/// u_0..u_{n-1} from u_0 = 0, u_1 = 1, u_2n = 0, u_4n+1 = u_2n-1, u_4n+3 = u_n.
std::vector<std::int64_t> u_by_recurrence(std::size_t n);

/// Letters of g(f^omega(seed)) as integers parsed from g's codomain names,
/// skipping erased letters.
std::vector<std::int64_t> coded_prefix(const Morphism& f, Letter seed, const Morphism& g, std::size_t n);

/// F(n) with F(0) = F(1) = 1; throws std::overflow_error for n > 91.
std::int64_t fib(std::size_t n);

// --- automata --------------------------------------------------------------------

/// Period-doubling DFAO, MSD first, 2 states.
Dfao period_doubling_dfao();
/// Inverse period-doubling DFAO, LSD first, 5 states.
Dfao inverse_period_doubling_dfao();
/// DFA for {empty} u 1{0,01}*, MSD first.
Dfa fibonacci_language_dfa();
/// Zeckendorf DFAO for the Fibonacci-number indicator, MSD first.
Dfao fibonacci_indicator_dfao();
/// {1,00}*
Dfa language_l_prime();
/// {11}*1
Dfa language_la1();
/// 1{1,00}*0{11}*1
Dfa language_la2();
/// Binary expansions of the positions of 1 in u.
Dfa language_la();

// --- morphisms -------------------------------------------------------------------

Morphism period_doubling_morphism();      // h: 0 -> 01, 1 -> 00
Morphism period_doubling_complement();    // h': 0 -> 11, 1 -> 10
Morphism thue_morse_morphism();           // tau: 0 -> 01, 1 -> 10
Morphism exchange_morphism();             // E: 0 -> 1, 1 -> 0
Morphism run_length_morphism();           // 1 -> 121, 2 -> 12221
Morphism pd_block_morphism();             // 2 -> 242, 4 -> 24442
Morphism pd_block_coding();               // 2 -> 01, 4 -> 0001
/// p-uniform morphism i -> i, i+1, ..., i+p-1 (mod p) with fixed point t_p.
Morphism generalized_thue_morse_morphism(std::uint32_t p);
/// Morphism f on {z, a0..a7} built from the product of the Fibonacci language
/// DFA and the indicator DFAO, with its erasing coding g.
Morphism fibonacci_product_morphism();
Morphism fibonacci_product_coding();
Morphism golden_morphism();  // phi on {a,b,c,d,e}
Morphism golden_coding();    // mu

// --- series and relations ------------------------------------------------------

TruncatedSeries period_doubling_series(std::size_t precision);
/// Compositional inverse of the period-doubling series over F_2.
TruncatedSeries inverse_period_doubling_series(std::size_t precision);
TruncatedSeries thue_morse_series(std::uint32_t p, std::size_t precision);

/// X(1+X^2) D^2 + (1+X^2) D + X = 0 over F_2.
PolyRelation period_doubling_relation();
/// X^2 U^3 + X U^2 + (X^2+1) U + X = 0 over F_2.
PolyRelation inverse_cubic_relation();
/// X^3 U^4 + X^3 U^2 + U + X = 0 over F_2, in Frobenius form.
PolyRelation inverse_frobenius_relation();
/// (1-X)^(p+1) T^p - (1-X)^2 T + X = 0 over F_p.
PolyRelation thue_morse_relation(std::uint32_t p);

}  // namespace autoseq::catalog
