#include "autoseq/morphisms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace autoseq {

using Rational = boost::multiprecision::cpp_rational;

// --- Alphabet ----------------------------------------------------------------

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > 255) throw std::invalid_argument("alphabets hold at most 255 letters");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty() || n.find_first_of(" \t\r\n") != std::string::npos)
            throw std::invalid_argument("letter names must be nonempty and contain no whitespace");
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate letter \"" + n + "\"");
    }
}

Letter Alphabet::index_of(const std::string& name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw std::invalid_argument("unknown letter \"" + name + "\"");
    return static_cast<Letter>(it - names_.begin());
}

bool Alphabet::contains(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

Word Alphabet::parse(const std::string& text) const {
    std::istringstream is(text);
    Word w;
    for (std::string tok; is >> tok;) w.push_back(index_of(tok));
    return w;
}

std::string Alphabet::render(std::span<const Letter> w, const std::string& sep) const {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += sep;
        s += name(w[i]);
    }
    return s;
}

// --- Morphism ----------------------------------------------------------------

Morphism::Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
    if (domain_.size() == 0) throw std::invalid_argument("morphism needs a nonempty alphabet");
    if (images_.size() != domain_.size()) throw std::invalid_argument("one image per letter required");
    for (const Word& w : images_)
        for (Letter l : w)
            if (l >= codomain_.size()) throw std::invalid_argument("image letter outside the codomain");
}

Morphism Morphism::endomorphism(const Alphabet& alphabet, const std::vector<std::string>& images) {
    return mapping(alphabet, alphabet, images);
}

Morphism Morphism::mapping(const Alphabet& domain, const Alphabet& codomain, const std::vector<std::string>& images) {
    std::vector<Word> ws;
    for (const auto& s : images) ws.push_back(codomain.parse(s));
    return Morphism(domain, codomain, std::move(ws));
}

bool Morphism::non_erasing() const noexcept {
    return std::none_of(images_.begin(), images_.end(), [](const Word& w) { return w.empty(); });
}

bool Morphism::is_coding() const noexcept {
    return std::all_of(images_.begin(), images_.end(), [](const Word& w) { return w.size() == 1; });
}

std::optional<std::size_t> Morphism::uniform_length() const noexcept {
    const std::size_t k = images_.front().size();
    for (const Word& w : images_)
        if (w.size() != k) return std::nullopt;
    return k;
}

Word Morphism::apply(std::span<const Letter> w) const {
    Word out;
    for (Letter l : w) {
        if (l >= images_.size()) throw std::invalid_argument("letter outside the morphism domain");
        const Word& img = images_[l];
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

Word Morphism::iterate(Word w, unsigned times) const {
    if (!is_endomorphism()) throw std::logic_error("iterate needs an endomorphism");
    for (unsigned i = 0; i < times; ++i) w = apply(w);
    return w;
}

IncidenceMatrix Morphism::incidence() const {
    if (!is_endomorphism()) throw std::logic_error("incidence matrices are defined for endomorphisms");
    const std::size_t n = domain_.size();
    IncidenceMatrix m{std::vector<std::vector<std::uint64_t>>(n, std::vector<std::uint64_t>(n, 0))};
    for (std::size_t b = 0; b < n; ++b)
        for (Letter a : images_[b]) ++m.entries[a][b];
    return m;
}

bool Morphism::prolongable_on(Letter a) const {
    if (!is_endomorphism() || a >= domain_.size()) return false;
    const Word& img = images_[a];
    if (img.size() < 2 || img.front() != a) return false;

    const std::size_t n = domain_.size();
    // mortal letters: some iterate erases them
    std::vector<bool> mortal(n, false);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t b = 0; b < n; ++b)
            if (!mortal[b] && std::all_of(images_[b].begin(), images_[b].end(), [&](Letter c) { return mortal[c]; }))
                mortal[b] = changed = true;
    }
    if (mortal[a]) return false;

    // reach[x][y]: y occurs in some f^j(x), j >= 1, through immortal letters
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x)
        for (Letter y : images_[x])
            if (!mortal[y]) reach[x][y] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = true;

    // lengths are unbounded iff a reachable letter on a cycle has two immortal
    // occurrences in its image
    for (std::size_t c = 0; c < n; ++c) {
        if (mortal[c] || !(c == a || reach[a][c]) || !reach[c][c]) continue;
        const auto live = std::count_if(images_[c].begin(), images_[c].end(), [&](Letter y) { return !mortal[y]; });
        if (live >= 2) return true;
    }
    return false;
}

// --- fixed points ------------------------------------------------------------

FixedPointStream::FixedPointStream(const Morphism& f, Letter seed)
    : f_(std::make_shared<const Morphism>(f)), seed_(seed) {
    if (!f_->prolongable_on(seed))
        throw std::invalid_argument("morphism is not prolongable on letter \"" +
                                    (seed < f.domain().size() ? f.domain().name(seed) : std::to_string(seed)) + "\"");
    const Word& img = f_->image(seed);
    tail_ = std::make_shared<const Word>(img.begin() + 1, img.end());
}

Letter FixedPointStream::next() {
    if (!seed_emitted_) {
        seed_emitted_ = true;
        return seed_;
    }
    for (;;) {
        while (!frames_.empty()) {
            Frame& top = frames_.back();
            if (top.pos == top.word->size()) {
                frames_.pop_back();
                continue;
            }
            const Letter l = (*top.word)[top.pos++];
            const unsigned d = top.depth;
            if (d == 0) return l;
            frames_.push_back(Frame{&f_->image(l), 0, d - 1});
        }
        // the fixed point is seed u f(u) f^2(u) ...; start the next block
        frames_.push_back(Frame{tail_.get(), 0, level_++});
    }
}

Word fixed_point_prefix(const Morphism& f, Letter seed, std::size_t n) {
    if (n == 0) throw std::invalid_argument("prefix length must be at least 1");
    FixedPointStream s(f, seed);
    Word w(n);
    for (auto& l : w) l = s.next();
    return w;
}

// --- presentation rewrites ---------------------------------------------------

std::pair<Morphism, Morphism> remove_erasure(const Morphism& f, const Morphism& g,
                                             const std::vector<std::string>& erased) {
    if (!f.is_endomorphism()) throw std::invalid_argument("remove_erasure: f must be an endomorphism");
    if (g.domain() != f.domain()) throw std::invalid_argument("remove_erasure: f and g must share the alphabet");
    const Alphabet& alpha = f.domain();
    std::vector<bool> in_c(alpha.size(), false);
    for (const auto& name : erased) in_c[alpha.index_of(name)] = true;
    for (Letter b = 0; b < alpha.size(); ++b) {
        if (!in_c[b]) continue;
        if (!g.image(b).empty())
            throw std::invalid_argument("remove_erasure: g does not erase \"" + alpha.name(b) + "\"");
        for (Letter c : f.image(b))
            if (!in_c[c])
                throw std::invalid_argument("remove_erasure: f(" + alpha.name(b) +
                                            ") leaves the erased subalphabet (submorphism condition)");
    }

    std::vector<std::string> kept_names;
    std::vector<int> index(alpha.size(), -1);
    for (Letter b = 0; b < alpha.size(); ++b)
        if (!in_c[b]) {
            index[b] = static_cast<int>(kept_names.size());
            kept_names.push_back(alpha.name(b));
        }
    if (kept_names.empty()) throw std::invalid_argument("remove_erasure: nothing left after removing C");
    Alphabet kept(kept_names);
    std::vector<Word> fi, gi;
    for (Letter b = 0; b < alpha.size(); ++b) {
        if (in_c[b]) continue;
        Word w;
        for (Letter c : f.image(b))
            if (!in_c[c]) w.push_back(static_cast<Letter>(index[c]));
        fi.push_back(std::move(w));
        gi.push_back(g.image(b));
    }
    return {Morphism(kept, kept, std::move(fi)), Morphism(kept, g.codomain(), std::move(gi))};
}

MorphicPresentation trim_to_prolongable(const Morphism& f, const Morphism& g, Letter seed) {
    if (!f.is_endomorphism() || g.domain() != f.domain())
        throw std::invalid_argument("trim_to_prolongable: f must be an endomorphism sharing g's alphabet");
    const Alphabet& alpha = f.domain();
    if (seed >= alpha.size()) throw std::invalid_argument("trim_to_prolongable: seed outside the alphabet");
    if (!g.image(seed).empty()) throw std::invalid_argument("trim_to_prolongable: g must erase the seed");
    const Word& fs = f.image(seed);
    if (fs.size() < 2 || fs.front() != seed)
        throw std::invalid_argument("trim_to_prolongable: f(seed) must be seed followed by a nonempty word");
    const Word w(fs.begin() + 1, fs.end());
    const Letter a = w.front();

    // f^omega(seed) = seed w f(w) f^2(w) ...; this equals f'^omega(a) for
    // f'(a) = w f(a) when seed and a occur nowhere else.
    if (a == seed || std::count(w.begin(), w.end(), a) != 1 || std::count(w.begin(), w.end(), seed) != 0)
        throw std::invalid_argument("trim_to_prolongable: first letter after the seed must occur once in f(seed)");
    for (Letter b = 0; b < alpha.size(); ++b) {
        if (b == seed) continue;
        const Word& img = f.image(b);
        if (std::find(img.begin(), img.end(), seed) != img.end() || std::find(img.begin(), img.end(), a) != img.end())
            throw std::invalid_argument("trim_to_prolongable: \"" + alpha.name(b) + "\" maps onto the seed or the new seed");
    }

    std::vector<std::string> names;
    std::vector<int> index(alpha.size(), -1);
    for (Letter b = 0; b < alpha.size(); ++b)
        if (b != seed) {
            index[b] = static_cast<int>(names.size());
            names.push_back(alpha.name(b));
        }
    Alphabet kept(names);
    auto remap = [&](const Word& src) {
        Word out;
        for (Letter c : src) out.push_back(static_cast<Letter>(index[c]));
        return out;
    };
    std::vector<Word> fi, gi;
    for (Letter b = 0; b < alpha.size(); ++b) {
        if (b == seed) continue;
        Word img = remap(f.image(b));
        if (b == a) {
            Word lead = remap(w);
            lead.insert(lead.end(), img.begin(), img.end());
            img = std::move(lead);
        }
        fi.push_back(std::move(img));
        gi.push_back(g.image(b));
    }
    MorphicPresentation out{Morphism(kept, kept, std::move(fi)), Morphism(kept, g.codomain(), std::move(gi)),
                            static_cast<Letter>(index[a])};
    if (!out.f.prolongable_on(out.seed))
        throw std::invalid_argument("trim_to_prolongable: the rewritten morphism is not prolongable on \"" +
                                    alpha.name(a) + "\"");
    return out;
}

// --- eigenvalues -------------------------------------------------------------

namespace {

using Poly = std::vector<Rational>;  // coefficient of x^i at index i

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Rational evaluate(const Poly& p, const Rational& x) {
    Rational v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
    trim(d);
    return d;
}

// Remainder of a / b; b nonzero.
Poly remainder(Poly a, const Poly& b, Poly* quotient = nullptr) {
    trim(a);
    if (quotient) quotient->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        const Rational q = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        if (quotient) (*quotient)[shift] = q;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Characteristic polynomial det(xI - A), monic, by Faddeev-LeVerrier.
Poly characteristic_polynomial(const std::vector<std::vector<Rational>>& a) {
    const std::size_t n = a.size();
    Poly c(n + 1, Rational(0));
    c[n] = 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l) next[i][j] += a[i][l] * m[l][j];
            next[i][i] += c[n - k + 1];
        }
        m = std::move(next);
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
        c[n - k] = -tr / static_cast<int>(k);
    }
    return c;
}

class SturmSequence {
public:
    explicit SturmSequence(const Poly& squarefree) {
        seq_.push_back(squarefree);
        Poly d = derivative(squarefree);
        if (d.empty()) return;
        seq_.push_back(d);
        for (;;) {
            Poly r = remainder(seq_[seq_.size() - 2], seq_.back());
            if (r.empty()) break;
            for (auto& x : r) x = -x;
            seq_.push_back(std::move(r));
        }
    }

    // Sign variations at x; for a squarefree polynomial, V(a) - V(b) counts the
    // distinct real roots in (a, b].
    int variations(const Rational& x) const {
        int count = 0, last = 0;
        for (const Poly& p : seq_) {
            const Rational v = evaluate(p, x);
            const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

private:
    std::vector<Poly> seq_;
};

double to_double(const Rational& r) { return static_cast<double>(r); }

std::optional<AlgebraicNumber> exact_root(const Poly& charpoly, double value, const Rational& lo, const Rational& hi) {
    const auto r = static_cast<std::int64_t>(std::llround(value));
    const Rational rr(r);
    if (rr > lo && rr <= hi && evaluate(charpoly, rr) == 0) return AlgebraicNumber::integer(r);

    // x^2 + b x + c with the value as larger root: b = -(value + conjugate),
    // and the conjugate is no larger than the value in modulus.
    const auto bound = static_cast<std::int64_t>(std::ceil(2 * std::abs(value))) + 1;
    for (std::int64_t b = -bound; b <= bound; ++b) {
        const auto c = static_cast<std::int64_t>(std::llround(-(value * value + b * value)));
        const std::int64_t disc = b * b - 4 * c;
        if (disc <= 0) continue;
        const auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(disc))));
        if (s * s == disc) continue;
        const double root = (-static_cast<double>(b) + std::sqrt(static_cast<double>(disc))) / 2;
        if (std::abs(root - value) > 1e-6 * std::max(1.0, value)) continue;
        Poly q{Rational(c), Rational(b), Rational(1)};
        if (remainder(charpoly, q).empty()) return AlgebraicNumber::quadratic(b, c);
    }
    return std::nullopt;
}

// Spectral radius of an irreducible block with at least one edge.
PfEigenvalue block_radius(const std::vector<std::vector<Rational>>& block) {
    const Poly chi = characteristic_polynomial(block);
    Poly sf;
    const Poly g = gcd(chi, derivative(chi));
    remainder(chi, g, &sf);
    trim(sf);

    Rational bound = 0;  // max column sum bounds the spectral radius
    for (std::size_t j = 0; j < block.size(); ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < block.size(); ++i) s += block[i][j];
        bound = std::max(bound, s);
    }
    Rational hi = bound + 1, lo = -hi;
    const SturmSequence sturm(sf);
    const int v_hi = sturm.variations(hi);
    if (sturm.variations(lo) - v_hi == 0) return PfEigenvalue{0.0, AlgebraicNumber::integer(0)};
    const Rational eps = Rational(1, 1) / (Rational(1ll << 50));
    while (hi - lo > eps * (1 + bound)) {
        const Rational mid = (lo + hi) / 2;
        if (sturm.variations(mid) - v_hi >= 1)
            lo = mid;
        else
            hi = mid;
    }
    const double value = to_double((lo + hi) / 2);
    return PfEigenvalue{value, exact_root(chi, value, lo, hi)};
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> f;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

bool integers_independent(std::uint64_t x, std::uint64_t y) {
    const auto fx = factorize(x), fy = factorize(y);
    if (fx.size() != fy.size()) return true;
    for (std::size_t i = 0; i < fx.size(); ++i) {
        if (fx[i].first != fy[i].first) return true;
        // exponent vectors proportional: e_x[i] * e_y[0] == e_y[i] * e_x[0]
        if (static_cast<std::uint64_t>(fx[i].second) * fy[0].second !=
            static_cast<std::uint64_t>(fy[i].second) * fx[0].second)
            return true;
    }
    return false;
}

}  // namespace

double AlgebraicNumber::approx() const {
    if (kind == Kind::integer) return static_cast<double>(value);
    const double disc = static_cast<double>(b) * static_cast<double>(b) - 4.0 * static_cast<double>(c);
    return (-static_cast<double>(b) + std::sqrt(disc)) / 2;
}

std::string AlgebraicNumber::to_string() const {
    if (kind == Kind::integer) return std::to_string(value);
    std::string s = "x^2";
    auto term = [&](std::int64_t coef, const std::string& mono) {
        if (coef == 0) return;
        s += coef < 0 ? " - " : " + ";
        const std::int64_t m = coef < 0 ? -coef : coef;
        if (m != 1 || mono.empty()) s += std::to_string(m);
        s += mono;
    };
    term(b, "x");
    term(c, "");
    return s;
}

PfEigenvalue pf_eigenvalue(const IncidenceMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m.entries)
        if (row.size() != n) throw std::invalid_argument("incidence matrix must be square");

    // adjacency b -> a when a occurs in the image of b
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (m.entries[a][b]) reach[b][a] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = true;

    PfEigenvalue best{0.0, AlgebraicNumber::integer(0)};
    std::vector<bool> done(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (done[s]) continue;
        std::vector<std::size_t> comp{s};
        done[s] = true;
        for (std::size_t t = s + 1; t < n; ++t)
            if (!done[t] && reach[s][t] && reach[t][s]) {
                comp.push_back(t);
                done[t] = true;
            }
        if (!reach[s][s]) continue;  // single letter without a loop: radius 0
        std::vector<std::vector<Rational>> block(comp.size(), std::vector<Rational>(comp.size()));
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = 0; j < comp.size(); ++j) block[i][j] = Rational(m.entries[comp[i]][comp[j]]);
        PfEigenvalue r = block_radius(block);
        const double tol = 1e-12 * std::max(1.0, best.value);
        if (r.value > best.value + tol || (std::abs(r.value - best.value) <= tol && !best.exact && r.exact))
            best = std::move(r);
    }
    return best;
}

bool multiplicatively_independent(const AlgebraicNumber& alpha, const AlgebraicNumber& beta) {
    if (alpha.approx() <= 1 || beta.approx() <= 1)
        throw std::invalid_argument("multiplicative independence is decided for values greater than 1");
    using K = AlgebraicNumber::Kind;
    if (alpha.kind == K::integer && beta.kind == K::integer)
        return integers_independent(static_cast<std::uint64_t>(alpha.value), static_cast<std::uint64_t>(beta.value));
    if (alpha.kind == K::quadratic && beta.kind == K::quadratic) {
        if (alpha == beta) return false;
        throw std::domain_error("independence of two different quadratic irrationals is not supported");
    }
    const AlgebraicNumber& k = alpha.kind == K::integer ? alpha : beta;
    const AlgebraicNumber& q = alpha.kind == K::integer ? beta : alpha;
    // q^l rational with l != 0 forces the conjugate to be -q, i.e. q = sqrt(-c);
    // then q^2 = -c is an integer and the question reduces to integers.
    if (q.b != 0) return true;
    return integers_independent(static_cast<std::uint64_t>(k.value), static_cast<std::uint64_t>(-q.c));
}

// --- renaming ----------------------------------------------------------------

std::optional<std::vector<Letter>> equivalent_up_to_renaming(const Morphism& f1, const Morphism& g1, Letter seed1,
                                                             const Morphism& f2, const Morphism& g2, Letter seed2) {
    const std::size_t n = f1.domain().size();
    if (n != f2.domain().size() || !f1.is_endomorphism() || !f2.is_endomorphism() || g1.domain() != f1.domain() ||
        g2.domain() != f2.domain() || seed1 >= n || seed2 >= n)
        return std::nullopt;

    auto same_g = [&](Letter x, Letter y) {
        const Word& a = g1.image(x);
        const Word& b = g2.image(y);
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (g1.codomain().name(a[i]) != g2.codomain().name(b[i])) return false;
        return true;
    };

    std::vector<Letter> others;
    for (std::size_t y = 0; y < n; ++y)
        if (y != seed2) others.push_back(static_cast<Letter>(y));
    std::vector<Letter> pi(n);
    do {
        for (std::size_t x = 0, j = 0; x < n; ++x) pi[x] = x == seed1 ? seed2 : others[j++];
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
            const Word& a = f1.image(static_cast<Letter>(x));
            const Word& b = f2.image(pi[x]);
            ok = a.size() == b.size() && same_g(static_cast<Letter>(x), pi[x]);
            for (std::size_t i = 0; ok && i < a.size(); ++i) ok = pi[a[i]] == b[i];
        }
        if (ok) return pi;
    } while (std::next_permutation(others.begin(), others.end()));
    return std::nullopt;
}

// --- text format -------------------------------------------------------------

MorphismText parse_morphism(const std::string& text) {
    std::istringstream in(text);
    std::optional<std::string> seed;
    std::optional<std::vector<std::string>> codomain;
    std::vector<std::string> lhs;
    std::vector<std::vector<std::string>> rhs;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (toks[0] == "seed") {
            if (toks.size() != 2) throw std::invalid_argument(where + "expected \"seed <letter>\"");
            seed = toks[1];
        } else if (toks[0] == "codomain") {
            codomain.emplace(toks.begin() + 1, toks.end());
        } else {
            if (toks.size() < 2 || toks[1] != "->") throw std::invalid_argument(where + "expected \"<letter> -> <letters>\"");
            if (std::find(lhs.begin(), lhs.end(), toks[0]) != lhs.end())
                throw std::invalid_argument(where + "letter \"" + toks[0] + "\" defined twice");
            lhs.push_back(toks[0]);
            rhs.emplace_back(toks.begin() + 2, toks.end());
        }
    }
    if (lhs.empty()) throw std::invalid_argument("no rules found");
    const Alphabet domain(lhs);
    if (!codomain) {
        std::set<std::string> used;
        for (const auto& r : rhs) used.insert(r.begin(), r.end());
        const bool endo = std::all_of(used.begin(), used.end(), [&](const std::string& s) { return domain.contains(s); });
        codomain = endo ? lhs : std::vector<std::string>(used.begin(), used.end());
    }
    const Alphabet cod(*codomain);
    std::vector<Word> images;
    for (const auto& r : rhs) {
        Word w;
        for (const auto& s : r) w.push_back(cod.index_of(s));
        images.push_back(std::move(w));
    }
    if (seed && !domain.contains(*seed)) throw std::invalid_argument("seed \"" + *seed + "\" is not a letter");
    return MorphismText{Morphism(domain, cod, std::move(images)), seed};
}

std::string format_morphism(const Morphism& m, const std::optional<std::string>& seed) {
    std::ostringstream os;
    if (!m.is_endomorphism()) {
        os << "codomain";
        for (const auto& name : m.codomain().names()) os << " " << name;
        os << "\n";
    }
    if (seed) os << "seed " << *seed << "\n";
    for (Letter a = 0; a < m.domain().size(); ++a) {
        os << m.domain().name(a) << " ->";
        if (!m.image(a).empty()) os << " " << m.codomain().render(m.image(a));
        os << "\n";
    }
    return os.str();
}

}  // namespace autoseq
