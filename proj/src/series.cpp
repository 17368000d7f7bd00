#include "autoseq/series.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace autoseq {

bool is_supported_prime(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31)) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace detail {

Residue pow_mod(Residue a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t base = a % p, acc = 1 % p;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<Residue>(acc);
}

Residue inverse_mod(Residue a, std::uint32_t p) {
    if (a % p == 0) throw std::invalid_argument("zero has no inverse mod p");
    return pow_mod(a, p - 2, p);
}

}  // namespace detail

namespace {

void require_same_modulus(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                                    std::to_string(b.modulus()));
}

// Bit-packed series over F_2; used internally when p == 2.
class Gf2Series {
public:
    explicit Gf2Series(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    explicit Gf2Series(const TruncatedSeries& s) : Gf2Series(s.precision()) {
        for (std::size_t i = 0; i < n_; ++i)
            if (s[i]) words_[i / 64] |= std::uint64_t{1} << (i % 64);
    }

    std::size_t size() const { return n_; }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    std::size_t valuation() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return n_;
    }

    void xor_with(const Gf2Series& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    }

    // this ^= (src << shift), truncated; src words below src_lo are known zero.
    void xor_shifted(const Gf2Series& src, std::size_t shift, std::size_t src_lo = 0) {
        const std::size_t ws = shift / 64, bs = shift % 64;
        const std::size_t count = words_.size();
        for (std::size_t k = src_lo; k + ws < count; ++k) {
            std::uint64_t v = src.words_[k] << bs;
            if (bs && k > 0) v |= src.words_[k - 1] >> (64 - bs);
            words_[k + ws] ^= v;
        }
        mask_tail();
    }

    Gf2Series times(const Gf2Series& b) const {
        Gf2Series out(n_);
        const std::size_t bval = b.valuation();
        if (bval >= n_) return out;
        const std::size_t lo = bval / 64;
        for (std::size_t j = 0; j + bval < n_; ++j)
            if (test(j)) out.xor_shifted(b, j, lo);
        return out;
    }

    TruncatedSeries to_series() const {
        std::vector<Residue> c(n_);
        for (std::size_t i = 0; i < n_; ++i) c[i] = test(i) ? 1 : 0;
        return TruncatedSeries(2, std::move(c));
    }

private:
    void mask_tail() {
        if (n_ % 64) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }

    std::size_t n_;
    std::vector<std::uint64_t> words_;
};

// Truncated product with lazy reduction; skips zero coefficients of a and
// the known-zero prefix of b.
std::vector<Residue> mul_coeffs(std::span<const Residue> a, std::span<const Residue> b,
                                std::size_t n, std::uint32_t p) {
    std::vector<Residue> out(n, 0);
    std::size_t bval = 0;
    while (bval < b.size() && b[bval] == 0) ++bval;
    if (bval >= n) return out;
    const bool lazy = p < (1u << 16);
    if (lazy) {
        // p^2 < 2^32, so up to 2^32 products fit in 64 bits
        std::vector<std::uint64_t> acc(n, 0);
        for (std::size_t i = 0; i + bval < n && i < a.size(); ++i) {
            const std::uint64_t ai = a[i];
            if (!ai) continue;
            const std::size_t jmax = std::min(b.size(), n - i);
            for (std::size_t j = bval; j < jmax; ++j) acc[i + j] += ai * b[j];
        }
        for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<Residue>(acc[k] % p);
    } else {
        for (std::size_t i = 0; i + bval < n && i < a.size(); ++i) {
            const std::uint64_t ai = a[i];
            if (!ai) continue;
            const std::size_t jmax = std::min(b.size(), n - i);
            for (std::size_t j = bval; j < jmax; ++j)
                out[i + j] = static_cast<Residue>((out[i + j] + ai * b[j]) % p);
        }
    }
    return out;
}

}  // namespace

// --- TruncatedSeries -------------------------------------------------------

TruncatedSeries::TruncatedSeries(std::uint32_t p, std::vector<Residue> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
    if (!is_supported_prime(p)) throw std::invalid_argument("modulus must be a prime below 2^31");
    if (coeffs_.empty()) throw std::invalid_argument("precision must be at least 1");
    for (Residue c : coeffs_)
        if (c >= p) throw std::invalid_argument("coefficient not reduced mod p");
}

TruncatedSeries TruncatedSeries::from_integers(std::uint32_t p, std::span<const std::int64_t> values) {
    std::vector<Residue> c(values.size());
    const auto m = static_cast<std::int64_t>(p);
    for (std::size_t i = 0; i < values.size(); ++i) c[i] = static_cast<Residue>(((values[i] % m) + m) % m);
    return TruncatedSeries(p, std::move(c));
}

TruncatedSeries TruncatedSeries::zero(std::uint32_t p, std::size_t precision) {
    return TruncatedSeries(p, std::vector<Residue>(precision, 0));
}

TruncatedSeries TruncatedSeries::monomial(std::uint32_t p, std::size_t exponent, Residue coeff,
                                          std::size_t precision) {
    std::vector<Residue> c(precision, 0);
    if (exponent < precision) c[exponent] = coeff % p;
    return TruncatedSeries(p, std::move(c));
}

TruncatedSeries TruncatedSeries::variable(std::uint32_t p, std::size_t precision) {
    return monomial(p, 1, 1, precision);
}

bool TruncatedSeries::is_zero() const noexcept { return valuation() == precision(); }

std::size_t TruncatedSeries::valuation() const noexcept {
    auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c != 0; });
    return static_cast<std::size_t>(it - coeffs_.begin());
}

TruncatedSeries TruncatedSeries::truncated(std::size_t precision) const {
    if (precision == 0 || precision > coeffs_.size())
        throw std::invalid_argument("truncation must keep between 1 and precision() terms");
    return TruncatedSeries(p_, std::vector<Residue>(coeffs_.begin(), coeffs_.begin() + precision));
}

TruncatedSeries TruncatedSeries::frobenius(unsigned i) const {
    const std::size_t n = coeffs_.size();
    std::uint64_t step = 1;
    for (unsigned k = 0; k < i && step < n; ++k) step *= p_;
    std::vector<Residue> c(n, 0);
    for (std::size_t m = 0; m * step < n; ++m) c[m * step] = coeffs_[m];
    return TruncatedSeries(p_, std::move(c));
}

TruncatedSeries TruncatedSeries::scaled(Residue c) const {
    std::vector<Residue> out(coeffs_.size());
    const std::uint64_t k = c % p_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Residue>(coeffs_[i] * k % p_);
    return TruncatedSeries(p_, std::move(out));
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const {
    std::vector<Residue> out(coeffs_.size(), 0);
    for (std::size_t i = 0; i + k < out.size(); ++i) out[i + k] = coeffs_[i];
    return TruncatedSeries(p_, std::move(out));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_modulus(a, b);
    const std::size_t n = std::min(a.precision(), b.precision());
    std::vector<Residue> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = (a[i] + b[i]) % a.modulus();
    return TruncatedSeries(a.modulus(), std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_modulus(a, b);
    const std::size_t n = std::min(a.precision(), b.precision());
    const std::uint32_t p = a.modulus();
    std::vector<Residue> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = (a[i] + p - b[i]) % p;
    return TruncatedSeries(p, std::move(c));
}

// --- operations --------------------------------------------------------------

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_modulus(a, b);
    const std::size_t n = std::min(a.precision(), b.precision());
    if (a.modulus() == 2) {
        Gf2Series x(a.truncated(n)), y(b.truncated(n));
        return x.times(y).to_series();
    }
    return TruncatedSeries(a.modulus(), mul_coeffs(a.coefficients(), b.coefficients(), n, a.modulus()));
}

TruncatedSeries pow(const TruncatedSeries& a, std::uint64_t e) {
    TruncatedSeries acc = TruncatedSeries::monomial(a.modulus(), 0, 1, a.precision());
    TruncatedSeries base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

TruncatedSeries compose(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_modulus(a, b);
    if (b[0] != 0) throw std::invalid_argument("compose: inner series must have zero constant term");
    const std::size_t n = std::min(a.precision(), b.precision());
    const std::uint32_t p = a.modulus();

    if (p == 2) {
        Gf2Series inner(b.truncated(n)), power(n), acc(n);
        power.flip(0);
        for (std::size_t k = 0; k < n && power.valuation() < n; ++k) {
            if (a[k]) acc.xor_with(power);
            power = power.times(inner);
        }
        return acc.to_series();
    }

    std::vector<Residue> acc(n, 0), power(n, 0);
    power[0] = 1;
    const auto inner = b.coefficients().first(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (const std::uint64_t ak = a[k]) {
            for (std::size_t i = k; i < n; ++i)  // b^k has valuation >= k
                acc[i] = static_cast<Residue>((acc[i] + ak * power[i]) % p);
        }
        if (k + 1 < n) power = mul_coeffs(inner, power, n, p);
    }
    return TruncatedSeries(p, std::move(acc));
}

TruncatedSeries reversion(const TruncatedSeries& a) {
    if (a[0] != 0) throw std::invalid_argument("reversion: constant term must be zero");
    if (a.precision() < 2 || a[1] == 0)
        throw std::invalid_argument("reversion: linear coefficient must be invertible");
    const std::size_t n = a.precision();
    const std::uint32_t p = a.modulus();

    // V = sum_k v_k a^k must equal X; at step k every power below k has been
    // added to `partial`, and a^k starts at X^k with coefficient a_1^k.
    if (p == 2) {
        Gf2Series base(a), power(a), partial(n), result(n);
        for (std::size_t k = 1; k < n; ++k) {
            const bool target = (k == 1);
            if (target != partial.test(k)) {
                result.flip(k);
                partial.xor_with(power);
            }
            if (k + 1 < n) power = power.times(base);
        }
        return result.to_series();
    }

    const Residue inv_a1 = detail::inverse_mod(a[1], p);
    std::vector<Residue> partial(n, 0), result(n, 0);
    std::vector<Residue> power(a.coefficients().begin(), a.coefficients().end());
    for (std::size_t k = 1; k < n; ++k) {
        const Residue target = (k == 1) ? 1 : 0;
        const std::uint64_t missing = (target + p - partial[k]) % p;
        const auto vk = static_cast<Residue>(missing * detail::pow_mod(inv_a1, k, p) % p);
        result[k] = vk;
        if (vk)
            for (std::size_t i = k; i < n; ++i)
                partial[i] = static_cast<Residue>((partial[i] + std::uint64_t{vk} * power[i]) % p);
        if (k + 1 < n) power = mul_coeffs(a.coefficients(), power, n, p);
    }
    return TruncatedSeries(p, std::move(result));
}

// --- relations ---------------------------------------------------------------

namespace {

std::uint64_t effective_exponent(const ExponentPattern& pat, std::uint32_t p) {
    if (pat.kind == ExponentPattern::Kind::power) return pat.value;
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i < pat.value; ++i) {
        if (e > (std::uint64_t{1} << 40)) return ~std::uint64_t{0} - pat.value;
        e *= p;
    }
    return e;
}

bool is_zero_poly(const std::vector<Residue>& c) {
    return std::all_of(c.begin(), c.end(), [](Residue r) { return r == 0; });
}

std::string monomial_text(std::size_t k) {
    if (k == 0) return "";
    if (k == 1) return "X";
    return "X^" + std::to_string(k);
}

std::string poly_text(const std::vector<Residue>& c) {
    std::vector<std::string> parts;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!c[k]) continue;
        std::string m = monomial_text(k);
        if (m.empty())
            parts.push_back(std::to_string(c[k]));
        else
            parts.push_back(c[k] == 1 ? m : std::to_string(c[k]) + "*" + m);
    }
    if (parts.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
    return out;
}

}  // namespace

PolyRelation::PolyRelation(std::uint32_t p, std::vector<RelationTerm> terms)
    : p_(p), terms_(std::move(terms)) {
    if (!is_supported_prime(p)) throw std::invalid_argument("modulus must be a prime below 2^31");
    bool any_nonzero = false;
    std::vector<std::uint64_t> seen;
    for (const auto& t : terms_) {
        for (Residue c : t.coefficient)
            if (c >= p) throw std::invalid_argument("relation coefficient not reduced mod p");
        any_nonzero = any_nonzero || !is_zero_poly(t.coefficient);
        const auto e = effective_exponent(t.pattern, p);
        if (std::find(seen.begin(), seen.end(), e) != seen.end())
            throw std::invalid_argument("relation exponents must be distinct");
        seen.push_back(e);
    }
    if (!any_nonzero) throw std::invalid_argument("relation needs a nonzero coefficient polynomial");
}

PolyRelation PolyRelation::normalized() const {
    std::vector<RelationTerm> kept;
    for (const auto& t : terms_) {
        if (is_zero_poly(t.coefficient)) continue;
        RelationTerm copy = t;
        while (!copy.coefficient.empty() && copy.coefficient.back() == 0) copy.coefficient.pop_back();
        kept.push_back(std::move(copy));
    }
    Residue lead = 0;
    for (Residue c : kept.front().coefficient)
        if (c) {
            lead = c;
            break;
        }
    const std::uint64_t inv = detail::inverse_mod(lead, p_);
    for (auto& t : kept)
        for (auto& c : t.coefficient) c = static_cast<Residue>(c * inv % p_);
    return PolyRelation(p_, std::move(kept));
}

std::string PolyRelation::to_string(const std::string& series_name) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (is_zero_poly(t.coefficient)) continue;
        if (!first) os << " + ";
        first = false;
        std::string factor;
        if (t.pattern.kind == ExponentPattern::Kind::power) {
            if (t.pattern.value == 1)
                factor = series_name;
            else if (t.pattern.value > 1)
                factor = series_name + "^" + std::to_string(t.pattern.value);
        } else {
            const auto e = effective_exponent(t.pattern, p_);
            factor = e == 1 ? series_name : series_name + "(X^" + std::to_string(e) + ")";
        }
        const std::string coeff = poly_text(t.coefficient);
        const bool unit = coeff == "1";
        const bool compound = coeff.find(" + ") != std::string::npos;
        if (factor.empty())
            os << coeff;
        else if (unit)
            os << factor;
        else
            os << (compound ? "(" + coeff + ")" : coeff) << "*" << factor;
    }
    os << " = 0";
    return os.str();
}

bool equivalent_relations(const PolyRelation& a, const PolyRelation& b) {
    if (a.modulus() != b.modulus()) return false;
    const std::uint32_t p = a.modulus();
    auto table = [p](const PolyRelation& r) {
        std::map<std::uint64_t, std::vector<Residue>> t;
        for (const auto& term : r.terms()) {
            if (is_zero_poly(term.coefficient)) continue;
            auto c = term.coefficient;
            while (c.back() == 0) c.pop_back();
            t.emplace(effective_exponent(term.pattern, p), std::move(c));
        }
        return t;
    };
    const auto ta = table(a), tb = table(b);
    if (ta.size() != tb.size() || ta.empty()) return false;
    // scalar s with s * a = b, read off the first nonzero coefficient
    const auto& [e0, ca] = *ta.begin();
    const auto it = tb.find(e0);
    if (it == tb.end() || it->second.size() != ca.size()) return false;
    const std::uint64_t s = std::uint64_t{it->second.back()} * detail::inverse_mod(ca.back(), p) % p;
    for (const auto& [e, c] : ta) {
        const auto jt = tb.find(e);
        if (jt == tb.end() || jt->second.size() != c.size()) return false;
        for (std::size_t k = 0; k < c.size(); ++k)
            if (s * c[k] % p != jt->second[k]) return false;
    }
    return true;
}

TruncatedSeries relation_residual(const PolyRelation& r, const TruncatedSeries& a) {
    if (r.modulus() != a.modulus())
        throw std::invalid_argument("modulus mismatch between relation and series");
    const std::uint32_t p = a.modulus();
    const std::size_t n = a.precision();
    TruncatedSeries total = TruncatedSeries::zero(p, n);
    for (const auto& t : r.terms()) {
        if (is_zero_poly(t.coefficient)) continue;
        const TruncatedSeries s = t.pattern.kind == ExponentPattern::Kind::power
                                      ? pow(a, t.pattern.value)
                                      : a.frobenius(t.pattern.value);
        std::vector<Residue> c(n, 0);
        for (std::size_t k = 0; k < n && k < t.coefficient.size(); ++k) c[k] = t.coefficient[k];
        total = total + mul(TruncatedSeries(p, std::move(c)), s);
    }
    return total;
}

std::optional<PolyRelation> power_relation_search(const TruncatedSeries& a, unsigned max_frobenius_depth,
                                                  unsigned max_coeff_degree) {
    const std::uint32_t p = a.modulus();
    const std::size_t n = a.precision();
    const std::size_t blocks = max_frobenius_depth + 2;  // constant column + depth+1 Frobenius twists
    const std::size_t width = max_coeff_degree + 1;
    const std::size_t unknowns = blocks * width;
    if (n < 2 * unknowns)
        throw std::invalid_argument("power_relation_search: precision " + std::to_string(n) +
                                    " is below twice the " + std::to_string(unknowns) + " unknowns");

    std::vector<TruncatedSeries> basis;
    basis.push_back(TruncatedSeries::monomial(p, 0, 1, n));
    for (unsigned i = 0; i <= max_frobenius_depth; ++i) basis.push_back(a.frobenius(i));

    // unknown (degree e, block s) lives in column e * blocks + s: low-degree
    // relations come first in the echelon form
    const std::size_t rows = n / 2;
    std::vector<std::vector<Residue>> m(rows, std::vector<Residue>(unknowns, 0));
    for (std::size_t row = 0; row < rows; ++row)
        for (std::size_t e = 0; e < width && e <= row; ++e)
            for (std::size_t s = 0; s < blocks; ++s) m[row][e * blocks + s] = basis[s][row - e];

    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < unknowns && rank < rows; ++col) {
        std::size_t pr = rank;
        while (pr < rows && m[pr][col] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[rank]);
        const std::uint64_t inv = detail::inverse_mod(m[rank][col], p);
        for (auto& v : m[rank]) v = static_cast<Residue>(v * inv % p);
        for (std::size_t r2 = 0; r2 < rows; ++r2) {
            if (r2 == rank || m[r2][col] == 0) continue;
            const std::uint64_t f = m[r2][col];
            for (std::size_t c = col; c < unknowns; ++c)
                m[r2][c] = static_cast<Residue>((m[r2][c] + (p - f) * m[rank][c]) % p);
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    if (rank == unknowns) return std::nullopt;

    std::size_t free_col = 0;
    for (std::size_t k = 0; k < unknowns; ++k)
        if (std::find(pivot_cols.begin(), pivot_cols.end(), k) == pivot_cols.end()) {
            free_col = k;
            break;
        }
    std::vector<Residue> x(unknowns, 0);
    x[free_col] = 1;
    for (std::size_t r2 = 0; r2 < pivot_cols.size(); ++r2)
        x[pivot_cols[r2]] = (p - m[r2][free_col]) % p;

    std::vector<RelationTerm> terms;
    for (std::size_t s = 0; s < blocks; ++s) {
        RelationTerm t;
        t.coefficient.resize(width);
        for (std::size_t e = 0; e < width; ++e) t.coefficient[e] = x[e * blocks + s];
        t.pattern = s == 0 ? ExponentPattern::power(0) : ExponentPattern::frobenius(static_cast<std::uint32_t>(s - 1));
        terms.push_back(std::move(t));
    }
    PolyRelation found = PolyRelation(p, std::move(terms)).normalized();
    if (!relation_residual(found, a).is_zero()) return std::nullopt;
    return found;
}

}  // namespace autoseq
