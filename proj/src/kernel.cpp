#include "autoseq/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

namespace autoseq {

namespace {

// Grows a prefix on demand from the source, doubling each time.
class Terms {
public:
    explicit Terms(const SequencePrefix& src) : src_(src) {}

    void ensure(std::size_t length) {
        if (data_.size() >= length) return;
        const std::size_t want = std::max(length, 2 * data_.size());
        data_ = src_(want);
        if (data_.size() < length)
            throw std::runtime_error("sequence source returned " + std::to_string(data_.size()) + " terms, " +
                                     std::to_string(length) + " needed");
    }

    std::int64_t operator[](std::size_t i) const { return data_[i]; }

private:
    const SequencePrefix& src_;
    std::vector<std::int64_t> data_;
};

std::uint64_t power(unsigned k, unsigned i) {
    std::uint64_t v = 1;
    for (unsigned j = 0; j < i; ++j) {
        if (v > std::numeric_limits<std::uint64_t>::max() / k) throw std::overflow_error("k^i overflows 64 bits");
        v *= k;
    }
    return v;
}

struct Node {
    unsigned scale;
    std::uint64_t residue;
};

// Fingerprints of several subsequences; evaluated concurrently, returned in input order.
std::vector<std::vector<std::int64_t>> fingerprints(Terms& terms, unsigned k, const std::vector<Node>& nodes,
                                                    std::size_t length) {
    std::size_t need = 0;
    for (const Node& n : nodes) need = std::max<std::size_t>(need, power(k, n.scale) * (length - 1) + n.residue + 1);
    terms.ensure(need);

    std::vector<std::vector<std::int64_t>> out(nodes.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            const std::uint64_t step = power(k, nodes[j].scale);
            auto& fp = out[j];
            fp.resize(length);
            for (std::size_t n = 0; n < length; ++n) fp[n] = terms[step * n + nodes[j].residue];
        }
    };
    const std::size_t threads = nodes.size() < 64 ? 1 : std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    if (threads == 1) {
        work(0, nodes.size());
        return out;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (nodes.size() + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
        const std::size_t b = t * chunk, e = std::min(nodes.size(), b + chunk);
        if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
    return out;
}

SequencePrefix from_vector(const std::vector<std::int64_t>& prefix) {
    return [&prefix](std::size_t length) {
        const std::size_t n = std::min(length, prefix.size());
        return std::vector<std::int64_t>(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(n));
    };
}

}  // namespace

std::size_t kernel_prefix_length(unsigned k, unsigned max_depth, std::size_t horizon) {
    return power(k, max_depth + 1) * 4 * horizon;
}

Kernel compute_kernel(const SequencePrefix& seq, unsigned k, unsigned max_depth, std::size_t horizon) {
    if (k < 2) throw std::invalid_argument("kernel base must be at least 2");
    if (horizon == 0) throw std::invalid_argument("fingerprint horizon must be positive");
    Terms terms(seq);
    Kernel K;
    K.k = k;
    K.horizon = horizon;
    K.max_depth = max_depth;

    std::map<std::vector<std::int64_t>, std::size_t> index;
    std::vector<Node> nodes{{0, 0}};
    {
        auto fp = fingerprints(terms, k, nodes, horizon);
        index.emplace(fp[0], 0);
        K.classes.push_back(KernelClass{0, 0, std::move(fp[0])});
        K.closure.emplace_back(k, Kernel::unexplored);
    }

    std::vector<std::size_t> frontier{0};
    bool open = false;
    for (unsigned depth = 0; !frontier.empty(); ++depth) {
        std::vector<Node> children;
        for (std::size_t c : frontier) {
            const KernelClass& cls = K.classes[c];
            const std::uint64_t step = power(k, cls.scale);
            for (unsigned d = 0; d < k; ++d) children.push_back({cls.scale + 1, cls.residue + d * step});
        }
        auto fps = fingerprints(terms, k, children, horizon);

        std::vector<std::size_t> next;
        for (std::size_t j = 0; j < children.size(); ++j) {
            const std::size_t parent = frontier[j / k];
            const unsigned digit = static_cast<unsigned>(j % k);
            if (auto it = index.find(fps[j]); it != index.end()) {
                K.closure[parent][digit] = it->second;
            } else if (depth + 1 <= max_depth) {
                const std::size_t id = K.classes.size();
                index.emplace(fps[j], id);
                K.classes.push_back(KernelClass{children[j].scale, children[j].residue, std::move(fps[j])});
                K.closure.emplace_back(k, Kernel::unexplored);
                K.closure[parent][digit] = id;
                next.push_back(id);
            } else {
                open = true;
            }
        }
        frontier = std::move(next);
        K.depth = depth;
    }
    K.closed = !open;
    if (!K.closed) {
        K.depth = max_depth;
        return K;
    }
    K.depth = 0;
    for (const auto& c : K.classes) K.depth = std::max(K.depth, c.scale);

    // every merge must survive a horizon four times longer
    std::vector<Node> lhs, rhs;
    for (std::size_t c = 0; c < K.classes.size(); ++c) {
        const KernelClass& cls = K.classes[c];
        const std::uint64_t step = power(k, cls.scale);
        for (unsigned d = 0; d < k; ++d) {
            const KernelClass& target = K.classes[K.closure[c][d]];
            const Node child{cls.scale + 1, cls.residue + d * step};
            if (child.scale == target.scale && child.residue == target.residue) continue;
            lhs.push_back(child);
            rhs.push_back({target.scale, target.residue});
        }
    }
    const auto a = fingerprints(terms, k, lhs, 4 * horizon);
    const auto b = fingerprints(terms, k, rhs, 4 * horizon);
    for (std::size_t j = 0; j < lhs.size(); ++j)
        if (a[j] != b[j])
            throw std::runtime_error("fingerprint horizon " + std::to_string(horizon) +
                                     " merges kernel elements (" + std::to_string(lhs[j].scale) + "," +
                                     std::to_string(lhs[j].residue) + ") and (" + std::to_string(rhs[j].scale) + "," +
                                     std::to_string(rhs[j].residue) + ") that differ within " +
                                     std::to_string(4 * horizon) + " terms");
    K.verified_merges = lhs.size();
    return K;
}

Kernel compute_kernel(const std::vector<std::int64_t>& prefix, unsigned k, unsigned max_depth, std::size_t horizon) {
    return compute_kernel(from_vector(prefix), k, max_depth, horizon);
}

Dfao synthesize_dfao(const Kernel& kernel) {
    if (!kernel.closed) throw std::invalid_argument("cannot synthesize an automaton from an open kernel");
    std::vector<std::vector<State>> trans;
    std::vector<Output> outs;
    std::vector<std::string> names;
    for (std::size_t c = 0; c < kernel.classes.size(); ++c) {
        std::vector<State> row;
        for (std::size_t t : kernel.closure[c]) row.push_back(static_cast<State>(t));
        trans.push_back(std::move(row));
        outs.push_back(kernel.classes[c].fingerprint.front());
        names.push_back("(" + std::to_string(kernel.classes[c].scale) + "," +
                        std::to_string(kernel.classes[c].residue) + ")");
    }
    return Dfao(kernel.k, std::move(trans), std::move(outs), 0, ReadOrder::lsd_first, std::move(names));
}

std::string kernel_status(const Kernel& kernel) {
    return (kernel.closed ? "closed at depth " : "open at depth ") + std::to_string(kernel.depth);
}

// --- rank ----------------------------------------------------------------------

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    for (a %= p; e; e >>= 1) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while (!(d & 1)) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s && composite; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

std::size_t rank_mod(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols, u64 p) {
    std::vector<std::vector<u64>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<u64> v(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            const std::int64_t x = r[j] % static_cast<std::int64_t>(p);
            v[j] = static_cast<u64>(x < 0 ? x + static_cast<std::int64_t>(p) : x);
        }
        m.push_back(std::move(v));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        const u64 inv = powmod(m[rank][col], p - 2, p);
        for (std::size_t j = col; j < cols; ++j) m[rank][j] = mulmod(m[rank][j], inv, p);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            const u64 f = m[i][col];
            if (!f) continue;
            for (std::size_t j = col; j < cols; ++j) {
                const u64 s = mulmod(f, m[rank][j], p);
                m[i][j] = m[i][j] >= s ? m[i][j] - s : m[i][j] + p - s;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols) throw std::invalid_argument("rational_rank: ragged matrix");

    // log2 of row norms, largest first; zero rows cannot enter a nonzero minor
    std::vector<long double> norms;
    for (const auto& r : rows) {
        long double s = 0;
        for (std::int64_t x : r) s += static_cast<long double>(x) * static_cast<long double>(x);
        if (s > 0) norms.push_back(0.5L * std::log2(s));
    }
    std::sort(norms.rbegin(), norms.rend());
    const std::size_t ceiling = std::min(norms.size(), cols);

    // The true rank R never falls below a modular rank. If R exceeded the best
    // modular rank r, some (r+1)-minor would be nonzero yet divisible by every
    // prime tried; once their product beats Hadamard's bound that is impossible.
    std::size_t best = 0;
    long double prime_bits = 0;
    u64 p = (u64{1} << 61) - 1;
    for (;;) {
        if (best == ceiling) return best;
        long double bound = 1;  // slack for rounding
        for (std::size_t i = 0; i <= best; ++i) bound += norms[i];
        if (prime_bits > bound) return best;
        while (!is_prime(p)) p -= 2;
        best = std::max(best, rank_mod(rows, cols, p));
        prime_bits += std::log2(static_cast<long double>(p));
        p -= 2;
    }
}

RankProfile rank_profile(const SequencePrefix& seq, unsigned k, unsigned max_depth, std::size_t horizon) {
    if (k < 2) throw std::invalid_argument("kernel base must be at least 2");
    if (horizon == 0) throw std::invalid_argument("fingerprint horizon must be positive");
    Terms terms(seq);
    RankProfile prof;
    prof.k = k;
    prof.horizon = horizon;
    std::map<std::vector<std::int64_t>, bool> seen;
    std::vector<std::vector<std::int64_t>> distinct;
    for (unsigned depth = 0; depth <= max_depth; ++depth) {
        std::vector<Node> nodes;
        for (std::uint64_t r = 0; r < power(k, depth); ++r) nodes.push_back({depth, r});
        for (auto& fp : fingerprints(terms, k, nodes, horizon))
            if (seen.emplace(fp, true).second) distinct.push_back(std::move(fp));
        prof.rows.push_back(RankRow{depth, distinct.size(), rational_rank(distinct)});
    }
    return prof;
}

RankProfile rank_profile(const std::vector<std::int64_t>& prefix, unsigned k, unsigned max_depth,
                         std::size_t horizon) {
    return rank_profile(from_vector(prefix), k, max_depth, horizon);
}

}  // namespace autoseq
