#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "autoseq/automata.hpp"

namespace autoseq {

/// Supplies the first `length` terms of an integer sequence.
using SequencePrefix = std::function<std::vector<std::int64_t>(std::size_t length)>;

/// Subsequence (u_{k^scale n + residue})_n identified by its first H terms.
struct KernelClass {
    unsigned scale = 0;
    std::uint64_t residue = 0;
    std::vector<std::int64_t> fingerprint;
};

struct Kernel {
    static constexpr std::size_t unexplored = std::numeric_limits<std::size_t>::max();

    unsigned k = 2;
    std::size_t horizon = 0;
    unsigned max_depth = 0;
    /// Discovery order; class 0 is the sequence itself.
    std::vector<KernelClass> classes;
    /// closure[c][d]: class of the child (i+1, r + d k^i); `unexplored` for
    /// classes whose children lie beyond max_depth.
    std::vector<std::vector<std::size_t>> closure;
    bool closed = false;
    /// Largest scale among the classes when closed, max_depth when open.
    unsigned depth = 0;
    /// Merges re-tested at the verification horizon (4H).
    std::size_t verified_merges = 0;
};

/// Breadth-first exploration of the k-kernel, merging subsequences with equal
/// fingerprints. When the kernel closes, every merge is re-tested on 4H terms;
/// a merge that fails there throws std::runtime_error (horizon too short).
Kernel compute_kernel(const SequencePrefix& seq, unsigned k, unsigned max_depth, std::size_t horizon = 512);
Kernel compute_kernel(const std::vector<std::int64_t>& prefix, unsigned k, unsigned max_depth,
                      std::size_t horizon = 512);

/// Terms compute_kernel reads: k^(max_depth+1) * 4H.
std::size_t kernel_prefix_length(unsigned k, unsigned max_depth, std::size_t horizon);

/// DFAO whose states are the kernel classes, read least significant digit
/// first; throws std::invalid_argument when the kernel is open.
Dfao synthesize_dfao(const Kernel& kernel);

struct RankRow {
    unsigned depth = 0;
    /// Distinct fingerprints among all (i, r) with i <= depth.
    std::size_t distinct = 0;
    /// Rank over Q of those fingerprints.
    std::size_t rank = 0;
};

struct RankProfile {
    unsigned k = 2;
    std::size_t horizon = 0;
    std::vector<RankRow> rows;  // depths 0..max_depth
};

RankProfile rank_profile(const SequencePrefix& seq, unsigned k, unsigned max_depth, std::size_t horizon = 512);
RankProfile rank_profile(const std::vector<std::int64_t>& prefix, unsigned k, unsigned max_depth,
                         std::size_t horizon = 512);

/// Exact rank over Q of an integer matrix, from ranks modulo primes below
/// 2^61 certified by Hadamard's bound.
std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& rows);

/// "closed at depth d" or "open at depth d".
std::string kernel_status(const Kernel& kernel);

}  // namespace autoseq
