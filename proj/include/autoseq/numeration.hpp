#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "autoseq/automata.hpp"
#include "autoseq/bigint.hpp"

namespace autoseq {

/// Zeckendorf weights 1, 2, 3, 5, 8, ... (initial conditions 1 and 2).
///
/// Distinct from fibonacci(), which uses F(0) = F(1) = 1.
class FibBasis {
public:
    /// weight(0) = 1, weight(1) = 2, weight(i+1) = weight(i) + weight(i-1).
    static std::uint64_t weight(std::size_t i);
    /// Largest i with weight(i) <= n; requires n >= 1.
    static std::size_t top_index(std::uint64_t n);
    static constexpr std::size_t max_index = 91;  // weight(91) < 2^64 <= weight(92)
};

/// F(0) = F(1) = 1, F(n) = F(n-1) + F(n-2). Exact for every n.
BigInt fibonacci(std::size_t n);

/// Integer representations: base k, Zeckendorf, or an abstract numeration
/// system given by a DFA whose language is ranked genealogically.
///
/// Words are MSD-first digit strings. rep(0) is the empty word in base k and
/// Zeckendorf; in an abstract system it is the first word of the language.
class NumerationSystem {
public:
    enum class Kind { base_k, zeckendorf, ans };

    static NumerationSystem base(unsigned k);
    static NumerationSystem zeckendorf();
    /// `letter_order` lists digits from smallest to largest; defaults to 0 < 1 < ...
    /// The language must be infinite.
    static NumerationSystem ans(Dfa language, std::vector<Digit> letter_order = {});

    Kind kind() const noexcept { return kind_; }
    unsigned alphabet_size() const noexcept;
    unsigned base_k() const noexcept { return k_; }

    DigitWord rep(std::uint64_t n) const;
    /// Inverse of rep; throws if `w` is not a representation in this system.
    std::uint64_t val(std::span<const Digit> w) const;
    bool in_language(std::span<const Digit> w) const;

    /// Genealogical rank of any accepted word, exact (ans only).
    BigInt rank(std::span<const Digit> w) const;
    /// Number of accepted words of length exactly `length` (ans only).
    BigInt words_of_length(std::size_t length) const;

private:
    struct AnsTables;

    NumerationSystem(Kind kind, unsigned k, std::shared_ptr<AnsTables> ans);

    Kind kind_;
    unsigned k_ = 0;
    std::shared_ptr<AnsTables> ans_;
};

/// Value of the S-automatic sequence generated by `m` at n.
Output automatic_eval(const NumerationSystem& s, const Dfao& m, std::uint64_t n);

/// Digit string as text, MSD first ("" for the empty word).
std::string word_to_string(std::span<const Digit> w);
DigitWord word_from_string(const std::string& text);

}  // namespace autoseq
