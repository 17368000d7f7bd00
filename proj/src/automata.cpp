#include "autoseq/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "autoseq/numeration.hpp"

namespace autoseq {

std::string to_string(ReadOrder order) { return order == ReadOrder::lsd_first ? "lsd" : "msd"; }

ReadOrder read_order_from_string(const std::string& text) {
    if (text == "lsd") return ReadOrder::lsd_first;
    if (text == "msd") return ReadOrder::msd_first;
    throw std::invalid_argument("read order must be \"lsd\" or \"msd\", got \"" + text + "\"");
}

// --- Dfao --------------------------------------------------------------------

Dfao::Dfao(unsigned alphabet_size, std::vector<std::vector<State>> transitions, std::vector<Output> outputs,
           State initial, ReadOrder order, std::vector<std::string> state_names)
    : alphabet_size_(alphabet_size),
      transitions_(std::move(transitions)),
      outputs_(std::move(outputs)),
      initial_(initial),
      order_(order),
      names_(std::move(state_names)) {
    if (alphabet_size_ == 0 || alphabet_size_ > 256) throw std::invalid_argument("alphabet size must be in 1..256");
    if (outputs_.empty()) throw std::invalid_argument("automaton needs at least one state");
    if (transitions_.size() != outputs_.size())
        throw std::invalid_argument("every state needs a transition row and an output");
    if (initial_ >= outputs_.size()) throw std::invalid_argument("initial state out of range");
    for (const auto& row : transitions_) {
        if (row.size() != alphabet_size_) throw std::invalid_argument("transition table is not total");
        for (State t : row)
            if (t >= outputs_.size()) throw std::invalid_argument("transition target out of range");
    }
    if (names_.empty())
        for (std::size_t q = 0; q < outputs_.size(); ++q) names_.push_back(std::to_string(q));
    if (names_.size() != outputs_.size()) throw std::invalid_argument("one name per state required");
}

State Dfao::run(std::span<const Digit> letters, State from) const {
    State q = from;
    for (Digit d : letters) {
        if (d >= alphabet_size_)
            throw std::invalid_argument("digit " + std::to_string(d) + " is outside the automaton alphabet");
        q = transitions_[q][d];
    }
    return q;
}

State Dfao::state_for(std::span<const Digit> written) const {
    if (order_ == ReadOrder::msd_first) return run(written, initial_);
    DigitWord reversed(written.rbegin(), written.rend());
    return run(reversed, initial_);
}

Dfao Dfao::canonical() const {
    std::vector<State> index(size(), static_cast<State>(-1));
    std::vector<State> order{initial_};
    index[initial_] = 0;
    for (std::size_t head = 0; head < order.size(); ++head)
        for (State t : transitions_[order[head]])
            if (index[t] == static_cast<State>(-1)) {
                index[t] = static_cast<State>(order.size());
                order.push_back(t);
            }
    std::vector<std::vector<State>> trans;
    std::vector<Output> outs;
    std::vector<std::string> names;
    for (State q : order) {
        std::vector<State> row;
        for (State t : transitions_[q]) row.push_back(index[t]);
        trans.push_back(std::move(row));
        outs.push_back(outputs_[q]);
        names.push_back(names_[q]);
    }
    return Dfao(alphabet_size_, std::move(trans), std::move(outs), 0, order_, std::move(names));
}

// --- Dfa ---------------------------------------------------------------------

namespace {

std::vector<Output> acceptance_outputs(const std::vector<bool>& accepting) {
    std::vector<Output> out;
    for (bool b : accepting) out.push_back(b ? 1 : 0);
    return out;
}

}  // namespace

Dfa::Dfa(unsigned alphabet_size, std::vector<std::vector<State>> transitions, const std::vector<bool>& accepting,
         State initial, ReadOrder order, std::vector<std::string> state_names)
    : machine_(alphabet_size, std::move(transitions), acceptance_outputs(accepting), initial, order,
               std::move(state_names)) {}

Dfa::Dfa(Dfao machine) : machine_(std::move(machine)) {
    for (Output o : machine_.outputs())
        if (o != 0 && o != 1) throw std::invalid_argument("a DFA needs outputs in {0, 1}");
}

// --- evaluation --------------------------------------------------------------

Output eval(const Dfao& m, std::uint64_t n, const NumerationSystem& numeration) {
    const DigitWord w = numeration.rep(n);
    return m.evaluate(w);
}

// --- product -----------------------------------------------------------------

ProductDfao product(const Dfao& a, const Dfao& b) {
    if (a.alphabet_size() != b.alphabet_size()) throw std::invalid_argument("product: alphabet mismatch");
    if (a.read_order() != b.read_order()) throw std::invalid_argument("product: read order mismatch");
    Output radix = 1;
    for (Output o : b.outputs()) {
        if (o < 0) throw std::invalid_argument("product: right operand outputs must be nonnegative");
        radix = std::max(radix, o + 1);
    }

    std::map<std::pair<State, State>, State> index;
    std::vector<std::pair<State, State>> pairs{{a.initial(), b.initial()}};
    index[pairs[0]] = 0;
    std::vector<std::vector<State>> trans;
    for (std::size_t head = 0; head < pairs.size(); ++head) {
        const auto [qa, qb] = pairs[head];
        std::vector<State> row;
        for (unsigned d = 0; d < a.alphabet_size(); ++d) {
            const std::pair<State, State> next{a.next(qa, static_cast<Digit>(d)), b.next(qb, static_cast<Digit>(d))};
            auto [it, inserted] = index.try_emplace(next, static_cast<State>(pairs.size()));
            if (inserted) pairs.push_back(next);
            row.push_back(it->second);
        }
        trans.push_back(std::move(row));
    }
    std::vector<Output> outs;
    std::vector<std::string> names;
    for (const auto& [qa, qb] : pairs) {
        outs.push_back(a.output(qa) * radix + b.output(qb));
        names.push_back("(" + a.state_name(qa) + "," + b.state_name(qb) + ")");
    }
    return ProductDfao{Dfao(a.alphabet_size(), std::move(trans), std::move(outs), 0, a.read_order(), std::move(names)),
                       std::move(pairs), radix};
}

ProductDfao product(const Dfa& a, const Dfao& b) { return product(a.machine(), b); }

namespace {

Dfa combine(const Dfa& a, const Dfa& b, bool want_both) {
    const ProductDfao p = product(a.machine(), b.machine());
    std::vector<bool> accepting;
    for (const auto& [qa, qb] : p.components)
        accepting.push_back(want_both ? (a.accepting(qa) && b.accepting(qb)) : (a.accepting(qa) || b.accepting(qb)));
    const Dfao& m = p.automaton;
    return Dfa(m.alphabet_size(), m.transitions(), accepting, m.initial(), m.read_order(), m.state_names());
}

}  // namespace

Dfa language_union(const Dfa& a, const Dfa& b) { return combine(a, b, false); }
Dfa language_intersection(const Dfa& a, const Dfa& b) { return combine(a, b, true); }

// --- minimization ------------------------------------------------------------

Dfao minimize(const Dfao& m) {
    const Dfao reach = m.canonical();
    const std::size_t n = reach.size();
    const unsigned k = reach.alphabet_size();

    std::vector<std::size_t> cls(n);
    {
        std::map<Output, std::size_t> seed;
        for (State q = 0; q < n; ++q) cls[q] = seed.try_emplace(reach.output(q), seed.size()).first->second;
    }
    std::size_t classes = 0;
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> sig_index;
        std::vector<std::size_t> refined(n);
        for (State q = 0; q < n; ++q) {
            std::vector<std::size_t> sig{cls[q]};
            for (unsigned d = 0; d < k; ++d) sig.push_back(cls[reach.next(q, static_cast<Digit>(d))]);
            refined[q] = sig_index.try_emplace(std::move(sig), sig_index.size()).first->second;
        }
        const std::size_t count = sig_index.size();
        cls = std::move(refined);
        if (count == classes) break;
        classes = count;
    }

    std::vector<State> rep(classes, static_cast<State>(-1));
    for (State q = 0; q < n; ++q)
        if (rep[cls[q]] == static_cast<State>(-1)) rep[cls[q]] = q;
    std::vector<std::vector<State>> trans(classes);
    std::vector<Output> outs(classes);
    std::vector<std::string> names(classes);
    for (std::size_t c = 0; c < classes; ++c) {
        const State q = rep[c];
        for (unsigned d = 0; d < k; ++d) trans[c].push_back(static_cast<State>(cls[reach.next(q, static_cast<Digit>(d))]));
        outs[c] = reach.output(q);
        names[c] = reach.state_name(q);
    }
    return Dfao(k, std::move(trans), std::move(outs), static_cast<State>(cls[reach.initial()]), reach.read_order(),
                std::move(names))
        .canonical();
}

bool isomorphic(const Dfao& a, const Dfao& b) {
    const Dfao ca = a.canonical(), cb = b.canonical();
    return ca.alphabet_size() == cb.alphabet_size() && ca.read_order() == cb.read_order() &&
           ca.transitions() == cb.transitions() && ca.outputs() == cb.outputs();
}

// --- counting ----------------------------------------------------------------

std::vector<BigInt> count_lengths(const Dfa& d, std::size_t max_length) {
    const Dfao& m = d.machine();
    std::vector<BigInt> occupancy(m.size()), next(m.size());
    occupancy[m.initial()] = 1;
    std::vector<BigInt> counts;
    counts.reserve(max_length + 1);
    for (std::size_t len = 0;; ++len) {
        BigInt accepted = 0;
        for (State q = 0; q < m.size(); ++q)
            if (d.accepting(q)) accepted += occupancy[q];
        counts.push_back(accepted);
        if (len == max_length) break;
        std::fill(next.begin(), next.end(), BigInt(0));
        for (State q = 0; q < m.size(); ++q) {
            if (occupancy[q] == 0) continue;
            for (unsigned c = 0; c < m.alphabet_size(); ++c) next[m.next(q, static_cast<Digit>(c))] += occupancy[q];
        }
        std::swap(occupancy, next);
    }
    return counts;
}

BigInt count_length_n(const Dfa& d, std::size_t n) { return count_lengths(d, n).back(); }

// --- DOT ---------------------------------------------------------------------

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string render_dot(const Dfao& m, const std::string& graph_name, const std::vector<bool>* accepting) {
    std::ostringstream os;
    os << "digraph \"" << dot_escape(graph_name) << "\" {\n";
    os << "  rankdir=LR;\n  __start [shape=point];\n";
    for (State q = 0; q < m.size(); ++q) {
        os << "  s" << q << " [label=\"" << dot_escape(m.state_name(q)) << "/" << m.output(q) << "\"";
        os << ", shape=" << ((accepting && (*accepting)[q]) ? "doublecircle" : "circle") << "];\n";
    }
    os << "  __start -> s" << m.initial() << ";\n";
    for (State q = 0; q < m.size(); ++q) {
        std::map<State, std::string> labels;
        for (unsigned d = 0; d < m.alphabet_size(); ++d) {
            auto& l = labels[m.next(q, static_cast<Digit>(d))];
            l += (l.empty() ? "" : ",") + std::to_string(d);
        }
        for (const auto& [t, l] : labels) os << "  s" << q << " -> s" << t << " [label=\"" << l << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace

std::string to_dot(const Dfao& m, const std::string& graph_name) { return render_dot(m, graph_name, nullptr); }

std::string to_dot(const Dfa& d, const std::string& graph_name) {
    std::vector<bool> acc;
    for (State q = 0; q < d.size(); ++q) acc.push_back(d.accepting(q));
    return render_dot(d.machine(), graph_name, &acc);
}

}  // namespace autoseq
