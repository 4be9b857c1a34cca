#pragma once

// Longest-common-extension toolbox over X = T $ T^R #.
//
// Offsets into X are 0-based: T[p] sits at offset p - 1, '$' at n,
// T^R[k] at n + k, '#' at 2n + 1.  Reading T leftwards from position p
// (T[p], T[p-1], ...) is the suffix of X at backward_offset(p).  Positions
// just outside T (0 and n + 1) land on a sentinel, so extensions stop
// there without bounds checks.

#include <cstdint>
#include <span>
#include <vector>

#include "mups/rmq.hpp"
#include "mups/text.hpp"

namespace mups {

// Suffix array of an integer string whose last symbol is a unique minimum.
// Symbols must lie in [0, alphabet).
std::vector<std::int32_t> suffix_array(std::span<const std::int32_t> s, std::int32_t alphabet);

// A substring of X: `len` symbols starting at offset `pos`.
struct Factor {
    std::int32_t pos = 0;
    std::int32_t len = 0;
    friend bool operator==(const Factor&, const Factor&) = default;
};

// Closed range [lo, hi] of suffix-array ranks sharing a prefix.
struct SaRange {
    std::int32_t lo = 0;
    std::int32_t hi = -1;
    [[nodiscard]] std::int32_t size() const { return hi - lo + 1; }
    friend bool operator==(const SaRange&, const SaRange&) = default;
};

class LceIndex {
public:
    explicit LceIndex(const Text& t);

    [[nodiscard]] Pos n() const { return n_; }
    [[nodiscard]] std::int32_t combined_size() const { return static_cast<std::int32_t>(x_.size()); }
    [[nodiscard]] Code symbol(std::int32_t offset) const { return x_[static_cast<std::size_t>(offset)]; }
    [[nodiscard]] Code dollar() const { return sigma_ + 1; }
    [[nodiscard]] Code hash_sentinel() const { return sigma_ + 2; }

    [[nodiscard]] std::int32_t forward_offset(Pos p) const { return p - 1; }
    [[nodiscard]] std::int32_t backward_offset(Pos p) const { return 2 * n_ + 1 - p; }

    // T[b..e] read forwards, and T[b..e] reversed (T[e], T[e-1], ..., T[b]).
    [[nodiscard]] Factor forward(Interval iv) const { return {forward_offset(iv.b), iv.length()}; }
    [[nodiscard]] Factor reversed(Interval iv) const { return {backward_offset(iv.e), iv.length()}; }

    // lcp of the suffixes of X at offsets a and b; never crosses a sentinel.
    [[nodiscard]] std::int32_t lcp(std::int32_t a, std::int32_t b) const;

    // lcp(T[i..n], T[j..n]); i, j in [1, n + 1].
    [[nodiscard]] std::int32_t lce(Pos i, Pos j) const { return lcp(forward_offset(i), forward_offset(j)); }
    // Largest l with T[i-k] = T[j-k] for all k < l; i, j in [0, n].
    [[nodiscard]] std::int32_t lce_backward(Pos i, Pos j) const {
        return lcp(backward_offset(i), backward_offset(j));
    }
    // Largest l with T[i-k] = T[j+k] for all k < l; i in [0, n], j in [1, n + 1].
    [[nodiscard]] std::int32_t lce_mirror(Pos i, Pos j) const {
        return lcp(backward_offset(i), forward_offset(j));
    }

    // Lexicographic comparison of two factors: <0, 0, >0.
    [[nodiscard]] int compare(Factor x, Factor y) const;
    [[nodiscard]] std::int32_t lcp(Factor x, Factor y) const;

    // Suffix array of X and its inverse.
    [[nodiscard]] std::span<const std::int32_t> sa() const { return sa_; }
    [[nodiscard]] std::span<const std::int32_t> rank() const { return rank_; }

    // Ranks of all suffixes of X that have f as a prefix.
    [[nodiscard]] SaRange combined_range(Factor f) const;

    // Suffix array of T alone (values are 1-based start positions), its
    // inverse indexed by position, and the rank range of suffixes of T
    // starting with T[p..p+len-1].  len == 0 gives the full range.
    [[nodiscard]] std::span<const Pos> text_sa() const { return text_sa_; }
    [[nodiscard]] std::int32_t text_rank(Pos p) const { return text_rank_[static_cast<std::size_t>(p)]; }
    [[nodiscard]] SaRange text_range(Pos p, std::int32_t len) const;
    [[nodiscard]] SaRange text_range(Interval iv) const { return text_range(iv.b, iv.length()); }

private:
    [[nodiscard]] std::int32_t lcp_ranks(std::int32_t r1, std::int32_t r2) const;
    [[nodiscard]] std::int32_t run_to_sentinel(std::int32_t offset) const;
    void build_short_ranges(std::span<const std::int32_t> lcp);

    Pos n_ = 0;
    Code sigma_ = 0;
    std::vector<Code> x_;
    std::vector<std::int32_t> sa_;
    std::vector<std::int32_t> rank_;
    SparseTableMin lcp_rmq_;
    std::vector<Pos> text_sa_;
    std::vector<std::int32_t> text_rank_;
    std::vector<std::int32_t> text_before_;  // suffixes of T among the first k ranks

    // Ranges of all strings of length <= short_len_, indexed by length and
    // base-sigma value.
    std::int32_t short_len_ = 0;
    std::vector<std::int64_t> short_base_;
    std::vector<SaRange> short_ranges_;
};

// Dense lexicographic ranks (equal strings share a rank, ranks start at 0).
std::vector<std::int32_t> sort_substrings(const LceIndex& index, std::span<const Factor> items);

}  // namespace mups
