#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "autoseq/bigint.hpp"

namespace autoseq {

class NumerationSystem;

using Digit = std::uint8_t;
/// Digit strings are always stored most-significant digit first, as written.
using DigitWord = std::vector<Digit>;
using State = std::uint32_t;
using Output = std::int64_t;

/// Which end of a written digit string an automaton consumes first.
enum class ReadOrder { lsd_first, msd_first };

std::string to_string(ReadOrder order);
ReadOrder read_order_from_string(const std::string& text);

/// Deterministic finite automaton with output over the digits 0..k-1.
///
/// The transition table is total and every state carries an output letter.
class Dfao {
public:
    Dfao(unsigned alphabet_size, std::vector<std::vector<State>> transitions, std::vector<Output> outputs,
         State initial, ReadOrder order, std::vector<std::string> state_names = {});

    std::size_t size() const noexcept { return outputs_.size(); }
    unsigned alphabet_size() const noexcept { return alphabet_size_; }
    State initial() const noexcept { return initial_; }
    ReadOrder read_order() const noexcept { return order_; }
    State next(State q, Digit d) const { return transitions_.at(q).at(d); }
    Output output(State q) const { return outputs_.at(q); }
    const std::string& state_name(State q) const { return names_.at(q); }
    const std::vector<std::vector<State>>& transitions() const noexcept { return transitions_; }
    const std::vector<Output>& outputs() const noexcept { return outputs_; }
    const std::vector<std::string>& state_names() const noexcept { return names_; }

    /// Feeds `letters` in the given order, starting from `from`.
    State run(std::span<const Digit> letters, State from) const;
    /// State reached on a written (MSD-first) word, honoring read_order().
    State state_for(std::span<const Digit> written) const;
    Output evaluate(std::span<const Digit> written) const { return output(state_for(written)); }

    /// Copy with reachable states renumbered in BFS order (digits ascending).
    Dfao canonical() const;

private:
    unsigned alphabet_size_;
    std::vector<std::vector<State>> transitions_;
    std::vector<Output> outputs_;
    State initial_;
    ReadOrder order_;
    std::vector<std::string> names_;
};

/// Deterministic finite automaton with acceptance; a Dfao with outputs in {0, 1}.
class Dfa {
public:
    Dfa(unsigned alphabet_size, std::vector<std::vector<State>> transitions, const std::vector<bool>& accepting,
        State initial, ReadOrder order = ReadOrder::msd_first, std::vector<std::string> state_names = {});
    explicit Dfa(Dfao machine);

    const Dfao& machine() const noexcept { return machine_; }
    std::size_t size() const noexcept { return machine_.size(); }
    unsigned alphabet_size() const noexcept { return machine_.alphabet_size(); }
    bool accepting(State q) const { return machine_.output(q) != 0; }
    bool accepts(std::span<const Digit> written) const { return machine_.evaluate(written) != 0; }

private:
    Dfao machine_;
};

/// Symbol of x_n = mu(delta(q0, rep(n))). Throws if rep(n) uses a digit the
/// automaton does not read.
Output eval(const Dfao& m, std::uint64_t n, const NumerationSystem& numeration);

struct ProductDfao {
    /// Output of a pair (qa, qb) is out_a(qa) * radix + out_b(qb).
    Dfao automaton;
    std::vector<std::pair<State, State>> components;
    Output radix = 1;
};

/// Reachable part of the synchronous product. Operands must agree on alphabet
/// and read order; outputs of `b` must be nonnegative.
ProductDfao product(const Dfao& a, const Dfao& b);
ProductDfao product(const Dfa& a, const Dfao& b);

Dfa language_union(const Dfa& a, const Dfa& b);
Dfa language_intersection(const Dfa& a, const Dfa& b);

/// Moore partition refinement seeded by outputs, then BFS-canonical numbering.
Dfao minimize(const Dfao& m);

/// Same structure up to state renaming (state names ignored).
bool isomorphic(const Dfao& a, const Dfao& b);

/// Number of accepted words of length exactly n.
BigInt count_length_n(const Dfa& d, std::size_t n);
/// Counts for every length 0..max_length.
std::vector<BigInt> count_lengths(const Dfa& d, std::size_t max_length);

/// Graphviz rendering; states labeled "name/output", edges by digit sets.
std::string to_dot(const Dfao& m, const std::string& graph_name = "dfao");
std::string to_dot(const Dfa& d, const std::string& graph_name = "dfa");

}  // namespace autoseq
