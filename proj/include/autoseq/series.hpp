#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace autoseq {

using Residue = std::uint32_t;

/// True when `p` is a prime that fits the residue arithmetic (p < 2^31).
bool is_supported_prime(std::uint64_t p);

/// Power series over F_p known up to (but excluding) X^precision.
///
/// Coefficient n is stored at index n. All entries are reduced mod p and the
/// precision is at least one. Values are immutable once built.
class TruncatedSeries {
public:
    TruncatedSeries(std::uint32_t p, std::vector<Residue> coeffs);

    /// Reduces arbitrary integers mod p.
    static TruncatedSeries from_integers(std::uint32_t p, std::span<const std::int64_t> values);
    static TruncatedSeries zero(std::uint32_t p, std::size_t precision);
    static TruncatedSeries monomial(std::uint32_t p, std::size_t exponent, Residue coeff,
                                    std::size_t precision);
    /// The series X.
    static TruncatedSeries variable(std::uint32_t p, std::size_t precision);

    std::uint32_t modulus() const noexcept { return p_; }
    std::size_t precision() const noexcept { return coeffs_.size(); }
    Residue operator[](std::size_t n) const { return coeffs_[n]; }
    std::span<const Residue> coefficients() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    /// Index of the first nonzero coefficient, or precision() for the zero series.
    std::size_t valuation() const noexcept;

    TruncatedSeries truncated(std::size_t precision) const;
    /// a(X^(p^i)).
    TruncatedSeries frobenius(unsigned i) const;
    TruncatedSeries scaled(Residue c) const;
    /// X^k * a, keeping the precision.
    TruncatedSeries shifted(std::size_t k) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::uint32_t p_;
    std::vector<Residue> coeffs_;
};

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries pow(const TruncatedSeries& a, std::uint64_t e);

/// a(b(X)). Requires b to have zero constant term.
TruncatedSeries compose(const TruncatedSeries& a, const TruncatedSeries& b);

/// Compositional inverse V with a(V(X)) = X = V(a(X)), solved one coefficient
/// at a time. Requires a_0 = 0 and a_1 != 0.
TruncatedSeries reversion(const TruncatedSeries& a);

// --- algebraic relations ---------------------------------------------------

/// How a relation term uses the series: a^e, or a(X^(p^i)).
struct ExponentPattern {
    enum class Kind { power, frobenius };
    Kind kind = Kind::power;
    std::uint32_t value = 0;

    static ExponentPattern power(std::uint32_t e) { return {Kind::power, e}; }
    static ExponentPattern frobenius(std::uint32_t i) { return {Kind::frobenius, i}; }

    friend bool operator==(const ExponentPattern&, const ExponentPattern&) = default;
};

struct RelationTerm {
    std::vector<Residue> coefficient;  // polynomial in X, lowest degree first
    ExponentPattern pattern;

    friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

/// sum_j c_j(X) * pattern_j(A) = 0 over F_p.
///
/// A power-0 term carries the inhomogeneous part. At least one coefficient
/// polynomial is nonzero and effective exponents (e, or p^i) are distinct.
class PolyRelation {
public:
    PolyRelation(std::uint32_t p, std::vector<RelationTerm> terms);

    std::uint32_t modulus() const noexcept { return p_; }
    const std::vector<RelationTerm>& terms() const noexcept { return terms_; }

    /// Same relation scaled so that the first nonzero coefficient of the first
    /// nonzero term is 1; zero coefficient polynomials are dropped.
    PolyRelation normalized() const;

    std::string to_string(const std::string& series_name = "A") const;

    friend bool operator==(const PolyRelation&, const PolyRelation&) = default;

private:
    std::uint32_t p_;
    std::vector<RelationTerm> terms_;
};

/// True when `a` and `b` agree up to a nonzero scalar, matching terms by
/// effective exponent (power e, or p^i for a Frobenius twist).
bool equivalent_relations(const PolyRelation& a, const PolyRelation& b);

/// Left-hand side of `r` evaluated at `a`, truncated to a's precision.
TruncatedSeries relation_residual(const PolyRelation& r, const TruncatedSeries& a);

/// Searches polynomials c_(-1), c_0, ..., c_depth of degree <= max_coeff_degree with
/// c_(-1)(X) + sum_i c_i(X) a(X^(p^i)) = 0 to the precision of `a`.
///
/// The linear system is solved on the first half of the known coefficients and
/// the candidate is then re-verified on all of them; anything that fails is
/// discarded. Throws if precision < 2 * number of unknowns.
std::optional<PolyRelation> power_relation_search(const TruncatedSeries& a,
                                                  unsigned max_frobenius_depth,
                                                  unsigned max_coeff_degree);

namespace detail {
Residue inverse_mod(Residue a, std::uint32_t p);
Residue pow_mod(Residue a, std::uint64_t e, std::uint32_t p);
}  // namespace detail

}  // namespace autoseq
