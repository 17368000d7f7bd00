#include "autoseq/numeration.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>

namespace autoseq {

// --- Fibonacci ---------------------------------------------------------------

std::uint64_t FibBasis::weight(std::size_t i) {
    if (i > max_index) throw std::overflow_error("Zeckendorf weight does not fit in 64 bits");
    std::uint64_t a = 1, b = 2;
    for (std::size_t k = 0; k < i; ++k) {
        const std::uint64_t c = a + b;
        a = b;
        b = c;
    }
    return a;
}

std::size_t FibBasis::top_index(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("top_index needs n >= 1");
    std::size_t i = 0;
    std::uint64_t a = 1, b = 2;
    while (i < max_index && b <= n) {
        const std::uint64_t c = a + b;
        a = b;
        b = c;
        ++i;
    }
    return i;
}

BigInt fibonacci(std::size_t n) {
    BigInt a = 1, b = 1;
    for (std::size_t k = 0; k < n; ++k) {
        BigInt c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return a;
}

// --- text helpers --------------------------------------------------------------

std::string word_to_string(std::span<const Digit> w) {
    std::string s;
    for (Digit d : w) s += d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10);
    return s;
}

DigitWord word_from_string(const std::string& text) {
    DigitWord w;
    for (char c : text) {
        if (c >= '0' && c <= '9')
            w.push_back(static_cast<Digit>(c - '0'));
        else if (c >= 'a' && c <= 'z')
            w.push_back(static_cast<Digit>(c - 'a' + 10));
        else
            throw std::invalid_argument(std::string("not a digit: '") + c + "'");
    }
    return w;
}

// --- abstract systems ----------------------------------------------------------

struct NumerationSystem::AnsTables {
    Dfa language;
    std::vector<Digit> order;  // smallest letter first

    // suffix[len][q] = accepted words of length len readable from q; grown on demand
    std::mutex mutex;
    std::vector<std::vector<BigInt>> suffix;

    AnsTables(Dfa d, std::vector<Digit> o) : language(std::move(d)), order(std::move(o)) {}

    const Dfao& m() const { return language.machine(); }

    // Returns a reference that stays valid: rows are only appended, and the
    // outer vector is reserved before any reader can observe it.
    const std::vector<BigInt>& row(std::size_t len) {
        std::lock_guard lock(mutex);
        if (suffix.empty()) {
            suffix.reserve(4096);
            std::vector<BigInt> base(m().size());
            for (State q = 0; q < m().size(); ++q) base[q] = language.accepting(q) ? 1 : 0;
            suffix.push_back(std::move(base));
        }
        if (len >= suffix.capacity()) throw std::length_error("word length beyond the rank-table capacity");
        while (suffix.size() <= len) {
            const auto& prev = suffix.back();
            std::vector<BigInt> cur(m().size());
            for (State q = 0; q < m().size(); ++q)
                for (unsigned d = 0; d < m().alphabet_size(); ++d) cur[q] += prev[m().next(q, static_cast<Digit>(d))];
            suffix.push_back(std::move(cur));
        }
        return suffix[len];
    }
};

namespace {

bool language_is_infinite(const Dfa& d) {
    const Dfao& m = d.machine();
    const std::size_t n = m.size();
    std::vector<bool> reach(n, false), coreach(n, false);
    std::vector<State> stack{m.initial()};
    reach[m.initial()] = true;
    while (!stack.empty()) {
        const State q = stack.back();
        stack.pop_back();
        for (State t : m.transitions()[q])
            if (!reach[t]) {
                reach[t] = true;
                stack.push_back(t);
            }
    }
    for (State q = 0; q < n; ++q) coreach[q] = d.accepting(q);
    for (bool changed = true; changed;) {
        changed = false;
        for (State q = 0; q < n; ++q) {
            if (coreach[q]) continue;
            for (State t : m.transitions()[q])
                if (coreach[t]) {
                    coreach[q] = changed = true;
                    break;
                }
        }
    }
    // a useful state lying on a cycle of useful states makes the language infinite
    std::vector<int> color(n, 0);
    std::function<bool(State)> cyclic = [&](State q) {
        color[q] = 1;
        for (State t : m.transitions()[q]) {
            if (!reach[t] || !coreach[t]) continue;
            if (color[t] == 1) return true;
            if (color[t] == 0 && cyclic(t)) return true;
        }
        color[q] = 2;
        return false;
    };
    for (State q = 0; q < n; ++q)
        if (reach[q] && coreach[q] && color[q] == 0 && cyclic(q)) return true;
    return false;
}

std::uint64_t to_u64(const BigInt& v) {
    if (v > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("value does not fit in 64 bits");
    return static_cast<std::uint64_t>(v);
}

}  // namespace

NumerationSystem::NumerationSystem(Kind kind, unsigned k, std::shared_ptr<AnsTables> ans)
    : kind_(kind), k_(k), ans_(std::move(ans)) {}

NumerationSystem NumerationSystem::base(unsigned k) {
    if (k < 2 || k > 36) throw std::invalid_argument("base must be in 2..36");
    return NumerationSystem(Kind::base_k, k, nullptr);
}

NumerationSystem NumerationSystem::zeckendorf() { return NumerationSystem(Kind::zeckendorf, 2, nullptr); }

NumerationSystem NumerationSystem::ans(Dfa language, std::vector<Digit> letter_order) {
    const unsigned k = language.alphabet_size();
    if (letter_order.empty())
        for (unsigned d = 0; d < k; ++d) letter_order.push_back(static_cast<Digit>(d));
    std::vector<Digit> sorted = letter_order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() != k || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.back() >= k)
        throw std::invalid_argument("letter order must list each alphabet letter once");
    if (!language_is_infinite(language)) throw std::invalid_argument("an abstract numeration system needs an infinite language");
    if (language.machine().read_order() != ReadOrder::msd_first)
        throw std::invalid_argument("numeration languages are read most significant digit first");
    return NumerationSystem(Kind::ans, k, std::make_shared<AnsTables>(std::move(language), std::move(letter_order)));
}

unsigned NumerationSystem::alphabet_size() const noexcept { return k_; }

bool NumerationSystem::in_language(std::span<const Digit> w) const {
    switch (kind_) {
        case Kind::base_k:
            if (!w.empty() && w.front() == 0) return false;
            return std::all_of(w.begin(), w.end(), [&](Digit d) { return d < k_; });
        case Kind::zeckendorf:
            if (!w.empty() && w.front() != 1) return false;
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (w[i] > 1) return false;
                if (i && w[i] == 1 && w[i - 1] == 1) return false;
            }
            return true;
        case Kind::ans:
            if (std::any_of(w.begin(), w.end(), [&](Digit d) { return d >= k_; })) return false;
            return ans_->language.accepts(w);
    }
    return false;
}

BigInt NumerationSystem::words_of_length(std::size_t length) const {
    if (kind_ != Kind::ans) throw std::logic_error("words_of_length is defined for abstract systems");
    return ans_->row(length)[ans_->m().initial()];
}

BigInt NumerationSystem::rank(std::span<const Digit> w) const {
    if (kind_ != Kind::ans) throw std::logic_error("rank is defined for abstract systems");
    if (!in_language(w)) throw std::invalid_argument("word \"" + word_to_string(w) + "\" is not in the language");
    AnsTables& t = *ans_;
    const Dfao& m = t.m();
    BigInt r = 0;
    for (std::size_t len = 0; len < w.size(); ++len) r += t.row(len)[m.initial()];
    State q = m.initial();
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto& below = t.row(w.size() - i - 1);
        for (Digit letter : t.order) {
            if (letter == w[i]) break;
            r += below[m.next(q, letter)];
        }
        q = m.next(q, w[i]);
    }
    return r;
}

DigitWord NumerationSystem::rep(std::uint64_t n) const {
    DigitWord w;
    switch (kind_) {
        case Kind::base_k:
            while (n) {
                w.push_back(static_cast<Digit>(n % k_));
                n /= k_;
            }
            std::reverse(w.begin(), w.end());
            return w;
        case Kind::zeckendorf: {
            if (n == 0) return w;
            std::size_t top = FibBasis::top_index(n);
            for (std::size_t i = top + 1; i-- > 0;) {
                const std::uint64_t wt = FibBasis::weight(i);
                if (wt <= n) {
                    w.push_back(1);
                    n -= wt;
                } else {
                    w.push_back(0);
                }
            }
            return w;
        }
        case Kind::ans: {
            AnsTables& t = *ans_;
            const Dfao& m = t.m();
            BigInt remaining = n;
            std::size_t len = 0;
            for (;; ++len) {
                const BigInt& c = t.row(len)[m.initial()];
                if (remaining < c) break;
                remaining -= c;
            }
            State q = m.initial();
            for (std::size_t i = 0; i < len; ++i) {
                const auto& below = t.row(len - i - 1);
                for (Digit letter : t.order) {
                    const BigInt& c = below[m.next(q, letter)];
                    if (remaining < c) {
                        w.push_back(letter);
                        q = m.next(q, letter);
                        break;
                    }
                    remaining -= c;
                }
            }
            return w;
        }
    }
    return w;
}

std::uint64_t NumerationSystem::val(std::span<const Digit> w) const {
    if (!in_language(w))
        throw std::invalid_argument("\"" + word_to_string(w) + "\" is not a representation in this system");
    switch (kind_) {
        case Kind::base_k: {
            BigInt v = 0;
            for (Digit d : w) v = v * k_ + d;
            return to_u64(v);
        }
        case Kind::zeckendorf: {
            BigInt v = 0;
            for (std::size_t i = 0; i < w.size(); ++i)
                if (w[i]) v += FibBasis::weight(w.size() - 1 - i);
            return to_u64(v);
        }
        case Kind::ans:
            return to_u64(rank(w));
    }
    return 0;
}

Output automatic_eval(const NumerationSystem& s, const Dfao& m, std::uint64_t n) { return eval(m, n, s); }

}  // namespace autoseq
