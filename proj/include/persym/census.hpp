#pragma once

// Exhaustive rank census over the block matrix family.
//
// census() walks the tuple space block by block: depth j of the search tree
// fixes block j's k+1 bits, inserts the block's two rows into the echelon
// basis inherited from depth j-1, and recurses, so elimination work is
// shared across every subtree. census_naive() is the independent oracle:
// it rebuilds each matrix from its tuple index and runs a fresh textbook
// column-sweep elimination, sharing nothing with the incremental path.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "gf2.hpp"
#include "persym.hpp"

namespace persym {

/// counts[i] = number of tuples whose matrix has rank i, i = 0..min(2n,k).
struct RankDistribution {
    int n = 0;
    int k = 0;
    std::vector<BigInt> counts;

    BigInt total() const {
        BigInt t = 0;
        for (const auto& c : counts) t += c;
        return t;
    }

    bool operator==(const RankDistribution&) const = default;
};

/// Thrown when an enumeration would exceed its cost guard. Carries the
/// estimated leaf count so callers can report it.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, BigInt estimated_leaves)
        : std::runtime_error(what), estimated_leaves_(std::move(estimated_leaves)) {}
    const BigInt& estimated_leaves() const { return estimated_leaves_; }

private:
    BigInt estimated_leaves_;
};

// Hard cap on n(k+1); beyond it the walk is never attempted. Below the cap
// but above the default ceiling, force = true opts in.
inline constexpr long kCensusHardCapBits = 34;
inline constexpr long kCensusDefaultCeilingBits = 28;

namespace detail {

struct CensusWalk {
    int n;
    int last_depth;
    int nvals;
    const std::pair<word, word>* block;
    std::vector<EchelonBasis> frames;
    std::array<std::uint64_t, kMaxCols + 1> hist{};

    CensusWalk(int n_, int k_, const std::pair<word, word>* block_, int nvals_)
        : n(n_), last_depth(n_ - 1), nvals(nvals_), block(block_),
          frames(static_cast<std::size_t>(n_), EchelonBasis(k_)) {}

    void run(int depth, const EchelonBasis& inherited, int from, int to) {
        EchelonBasis& scratch = frames[static_cast<std::size_t>(depth)];
        if (depth == last_depth) {
            for (int v = from; v < to; ++v) {
                scratch = inherited;
                scratch.insert(block[v].first);
                scratch.insert(block[v].second);
                ++hist[static_cast<std::size_t>(scratch.size())];
            }
            return;
        }
        for (int v = from; v < to; ++v) {
            scratch = inherited;
            scratch.insert(block[v].first);
            scratch.insert(block[v].second);
            run(depth + 1, scratch, 0, nvals);
        }
    }
};

inline void check_census_budget(int n, int k, bool force) {
    long bits = static_cast<long>(n) * (k + 1);
    BigInt leaves = pow2(static_cast<unsigned long>(bits));
    if (bits > kCensusHardCapBits)
        throw BudgetError("census n=" + std::to_string(n) + " k=" + std::to_string(k) +
                              ": 2^" + std::to_string(bits) +
                              " tuples exceeds the hard cap of 2^" +
                              std::to_string(kCensusHardCapBits),
                          leaves);
    if (!force && bits > kCensusDefaultCeilingBits)
        throw BudgetError("census n=" + std::to_string(n) + " k=" + std::to_string(k) +
                              ": 2^" + std::to_string(bits) +
                              " tuples exceeds the default ceiling of 2^" +
                              std::to_string(kCensusDefaultCeilingBits) +
                              "; pass force to run",
                          leaves);
}

inline RankDistribution hist_to_distribution(int n, int k,
                                             const std::array<std::uint64_t, kMaxCols + 1>& hist) {
    RankDistribution dist;
    dist.n = n;
    dist.k = k;
    int max_rank = std::min(2 * n, k);
    dist.counts.assign(static_cast<std::size_t>(max_rank) + 1, BigInt(0));
    for (int i = 0; i <= kMaxCols; ++i) {
        if (hist[static_cast<std::size_t>(i)] == 0) continue;
        if (i > max_rank)
            throw std::logic_error("census: rank above min(2n,k) encountered");
        dist.counts[static_cast<std::size_t>(i)] = BigInt(hist[static_cast<std::size_t>(i)]);
    }
    return dist;
}

}

/// Exact rank distribution of all 2^{n(k+1)} tuples. Workers partition the
/// first block's values into contiguous chunks; each worker owns a private
/// histogram and the merge is a plain sum, so the result is identical for
/// every worker count.
inline RankDistribution census(int n, int k, int workers = 1, bool force = false) {
    if (n < 0) throw std::invalid_argument("census: negative n");
    if (k < 1 || k > 63) throw std::invalid_argument("census: k must be in 1..63");
    if (workers < 1) throw std::invalid_argument("census: workers must be >= 1");

    if (n == 0) {
        RankDistribution dist;
        dist.n = 0;
        dist.k = k;
        dist.counts = {BigInt(1)};
        return dist;
    }

    detail::check_census_budget(n, k, force);

    int nvals = 1 << (k + 1);
    std::vector<std::pair<word, word>> block(static_cast<std::size_t>(nvals));
    for (int v = 0; v < nvals; ++v) block[static_cast<std::size_t>(v)] = block_rows(static_cast<word>(v), k);

    EchelonBasis root(k);
    if (workers > nvals) workers = nvals;

    if (workers == 1) {
        detail::CensusWalk walk(n, k, block.data(), nvals);
        walk.run(0, root, 0, nvals);
        return detail::hist_to_distribution(n, k, walk.hist);
    }

    std::vector<detail::CensusWalk> walks;
    walks.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) walks.emplace_back(n, k, block.data(), nvals);

    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    int chunk = (nvals + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        int from = w * chunk;
        int to = std::min(nvals, from + chunk);
        threads.emplace_back([&walks, w, &root, from, to] {
            if (from < to) walks[static_cast<std::size_t>(w)].run(0, root, from, to);
        });
    }
    for (auto& t : threads) t.join();

    std::array<std::uint64_t, kMaxCols + 1> hist{};
    for (const auto& walk : walks)
        for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += walk.hist[i];
    return detail::hist_to_distribution(n, k, hist);
}

/// Reference census: per-tuple matrix construction and a fresh column-sweep
/// elimination for every tuple. Quadratically slower; deliberately shares no
/// code path with census().
inline RankDistribution census_naive(int n, int k) {
    if (n < 0) throw std::invalid_argument("census_naive: negative n");
    if (k < 1 || k > 63) throw std::invalid_argument("census_naive: k must be in 1..63");

    if (n == 0) {
        RankDistribution dist;
        dist.n = 0;
        dist.k = k;
        dist.counts = {BigInt(1)};
        return dist;
    }

    long bits = static_cast<long>(n) * (k + 1);
    if (bits > 24)
        throw BudgetError("census_naive n=" + std::to_string(n) + " k=" + std::to_string(k) +
                              ": 2^" + std::to_string(bits) +
                              " tuples exceeds the oracle budget of 2^24",
                          pow2(static_cast<unsigned long>(bits)));

    std::array<std::uint64_t, kMaxCols + 1> hist{};
    word block_mask = (word(1) << (k + 1)) - 1;
    word row_mask = (word(1) << k) - 1;
    std::vector<word> rows(static_cast<std::size_t>(2 * n));

    for (std::uint64_t idx = 0; idx < (std::uint64_t(1) << bits); ++idx) {
        for (int j = 0; j < n; ++j) {
            word packed = (idx >> (static_cast<unsigned>(j) * (k + 1))) & block_mask;
            rows[static_cast<std::size_t>(2 * j)] = packed & row_mask;
            rows[static_cast<std::size_t>(2 * j + 1)] = packed >> 1;
        }
        // Column-sweep Gaussian elimination with explicit pivot search.
        int r = 0;
        int nrows = 2 * n;
        for (int c = 0; c < k && r < nrows; ++c) {
            word bit = word(1) << c;
            int pivot = -1;
            for (int i = r; i < nrows; ++i) {
                if (rows[static_cast<std::size_t>(i)] & bit) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) continue;
            std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(pivot)]);
            for (int i = r + 1; i < nrows; ++i)
                if (rows[static_cast<std::size_t>(i)] & bit)
                    rows[static_cast<std::size_t>(i)] ^= rows[static_cast<std::size_t>(r)];
            ++r;
        }
        ++hist[static_cast<std::size_t>(r)];
    }
    return detail::hist_to_distribution(n, k, hist);
}

}
