#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace autoseq {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

/// Ordered set of named letters (at most 255).
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(Letter a) const { return names_.at(a); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    Letter index_of(const std::string& name) const;
    bool contains(const std::string& name) const;

    /// Whitespace-separated letter names to a word.
    Word parse(const std::string& text) const;
    std::string render(std::span<const Letter> w, const std::string& sep = " ") const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> names_;
};

/// Square nonnegative matrix; entry (a, b) counts occurrences of a in image(b).
struct IncidenceMatrix {
    std::vector<std::vector<std::uint64_t>> entries;

    std::size_t size() const noexcept { return entries.size(); }
};

/// Letter-to-word map from `domain` to words over `codomain`.
class Morphism {
public:
    Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images);
    /// Endomorphism; images are given as whitespace-separated letter names.
    static Morphism endomorphism(const Alphabet& alphabet, const std::vector<std::string>& images);
    static Morphism mapping(const Alphabet& domain, const Alphabet& codomain, const std::vector<std::string>& images);

    const Alphabet& domain() const noexcept { return domain_; }
    const Alphabet& codomain() const noexcept { return codomain_; }
    const Word& image(Letter a) const { return images_.at(a); }
    const std::vector<Word>& images() const noexcept { return images_; }

    bool is_endomorphism() const noexcept { return domain_ == codomain_; }
    bool non_erasing() const noexcept;
    bool is_coding() const noexcept;
    /// k when every image has length k.
    std::optional<std::size_t> uniform_length() const noexcept;

    Word apply(std::span<const Letter> w) const;
    /// f^times(w); requires an endomorphism.
    Word iterate(Word w, unsigned times) const;

    IncidenceMatrix incidence() const;
    /// f(a) = a u with u nonempty and |f^n(a)| unbounded.
    bool prolongable_on(Letter a) const;

    friend bool operator==(const Morphism&, const Morphism&) = default;

private:
    Alphabet domain_;
    Alphabet codomain_;
    std::vector<Word> images_;
};

/// Lazy left-to-right generator of the fixed point f^omega(seed).
///
/// Letters are produced by a depth-first expansion of seed, u, f(u), f^2(u), ...
/// where f(seed) = seed u; memory is proportional to the expansion depth.
/// Copies iterate independently.
class FixedPointStream {
public:
    FixedPointStream(const Morphism& f, Letter seed);

    Letter next();

private:
    struct Frame {
        const Word* word;
        std::size_t pos;
        unsigned depth;
    };

    std::shared_ptr<const Morphism> f_;
    std::shared_ptr<const Word> tail_;
    Letter seed_;
    bool seed_emitted_ = false;
    unsigned level_ = 0;
    std::vector<Frame> frames_;
};

/// First n letters of f^omega(seed). Throws if f is not prolongable on seed.
Word fixed_point_prefix(const Morphism& f, Letter seed, std::size_t n);

/// Drops the letters of C (all erased by g, closed under f) from a morphic
/// presentation: returns (f_eps, g_eps) on the remaining letters.
std::pair<Morphism, Morphism> remove_erasure(const Morphism& f, const Morphism& g,
                                             const std::vector<std::string>& erased);

struct MorphicPresentation {
    Morphism f;
    Morphism g;
    Letter seed;
};

/// Given g(seed) = empty and f(seed) = seed w, removes the seed and makes f
/// prolongable on the first letter a of w by setting f'(a) = w f(a).
/// Requires that neither seed nor a occur in any other image and that a
/// occurs once in w.
MorphicPresentation trim_to_prolongable(const Morphism& f, const Morphism& g, Letter seed);

/// Exact Perron-Frobenius eigenvalue of a strongly connected block when it is
/// an integer or a quadratic irrational.
struct AlgebraicNumber {
    enum class Kind { integer, quadratic };
    Kind kind = Kind::integer;
    std::int64_t value = 0;  // integer case
    std::int64_t b = 0;      // quadratic case: largest real root of x^2 + b x + c
    std::int64_t c = 0;

    static AlgebraicNumber integer(std::int64_t v) { return {Kind::integer, v, 0, 0}; }
    static AlgebraicNumber quadratic(std::int64_t b, std::int64_t c) { return {Kind::quadratic, 0, b, c}; }

    double approx() const;
    std::string to_string() const;

    friend bool operator==(const AlgebraicNumber&, const AlgebraicNumber&) = default;
};

struct PfEigenvalue {
    double value = 0.0;
    std::optional<AlgebraicNumber> exact;
};

/// Maximum over strongly connected blocks of the block spectral radius,
/// from exact characteristic polynomials and Sturm-sequence bisection.
PfEigenvalue pf_eigenvalue(const IncidenceMatrix& m);

/// Throws std::domain_error for pairs this routine cannot decide (two
/// different quadratic irrationals) and std::invalid_argument for values <= 1.
bool multiplicatively_independent(const AlgebraicNumber& alpha, const AlgebraicNumber& beta);

/// Lengths of the first `count` maximal blocks of equal letters. A block is
/// only complete once a different letter follows it.
template <typename T>
std::vector<std::size_t> run_lengths(std::span<const T> w, std::size_t count) {
    std::vector<std::size_t> out;
    out.reserve(count);
    std::size_t start = 0;
    for (std::size_t i = 1; i < w.size() && out.size() < count; ++i)
        if (!(w[i] == w[i - 1])) {
            out.push_back(i - start);
            start = i;
        }
    if (out.size() < count) throw std::invalid_argument("run_lengths: stream ends before the requested runs complete");
    return out;
}

struct EventualPeriod {
    std::size_t period;
    std::size_t preperiod;
};

/// Smallest period p <= max_period such that w[i] = w[i+p] for every
/// max_preperiod-admissible start i within the prefix, with the least
/// preperiod for that p. This is a bounded check on a finite prefix: an empty
/// result means "no small period", not aperiodicity.
template <typename T>
std::optional<EventualPeriod> find_eventual_period(std::span<const T> w, std::size_t max_period,
                                                   std::size_t max_preperiod) {
    if (w.size() < 4 * (max_period + max_preperiod))
        throw std::invalid_argument("find_eventual_period: prefix shorter than 4 (max_period + max_preperiod)");
    for (std::size_t p = 1; p <= max_period; ++p) {
        std::size_t pre = 0;
        for (std::size_t i = w.size() - p; i-- > 0;)
            if (!(w[i] == w[i + p])) {
                pre = i + 1;
                break;
            }
        if (pre <= max_preperiod) return EventualPeriod{p, pre};
    }
    return std::nullopt;
}

/// Letter bijection pi (indexed by letters of f1's alphabet) with
/// f2(pi(x)) = pi(f1(x)), g2(pi(x)) = g1(x) and pi(seed1) = seed2.
std::optional<std::vector<Letter>> equivalent_up_to_renaming(const Morphism& f1, const Morphism& g1, Letter seed1,
                                                             const Morphism& f2, const Morphism& g2, Letter seed2);

/// Text form: optional "seed <letter>" and "codomain <letters...>" header
/// lines, then one rule "a -> b c" per line; '#' starts a comment.
struct MorphismText {
    Morphism morphism;
    std::optional<std::string> seed;
};
MorphismText parse_morphism(const std::string& text);
std::string format_morphism(const Morphism& m, const std::optional<std::string>& seed = std::nullopt);

}  // namespace autoseq
