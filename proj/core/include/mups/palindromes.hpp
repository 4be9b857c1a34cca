#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mups/lce_index.hpp"
#include "mups/loci_tree.hpp"
#include "mups/text.hpp"

namespace mups {

// Maximal palindrome around one of the 2n - 1 centers.  center2 = 2c for
// the odd center c and 2c + 1 for the even center between c and c + 1.
// radius counts the characters on one side, excluding an odd center.
struct MaximalPalindrome {
    Pos center2 = 0;
    std::int32_t radius = 0;

    [[nodiscard]] bool odd() const { return center2 % 2 == 0; }
    // Empty (e < b) for an even center with radius 0.
    [[nodiscard]] Interval interval() const {
        const Pos c = center2 / 2;
        return odd() ? Interval{c - radius, c + radius} : Interval{c - radius + 1, c + radius};
    }
};

// Indexed by center2 - 2.
std::vector<MaximalPalindrome> maximal_palindromes(const Text& t);

// Maximal palindrome with exactly one mismatched pair of mirrored
// positions (mis_left < mis_right).  Centers whose palindrome reaches an
// end of T before a mismatch have no record.
struct OneMismatchPalindrome {
    Pos center2 = 0;
    Interval iv;
    Pos mis_left = 0;
    Pos mis_right = 0;

    [[nodiscard]] bool odd() const { return center2 % 2 == 0; }
    // Extended arms: center to right end (inclusive of an odd center), and
    // center to left end.  The left arm is read right to left.
    [[nodiscard]] Interval right_arm() const {
        const Pos c = center2 / 2;
        return odd() ? Interval{c, iv.e} : Interval{c + 1, iv.e};
    }
    [[nodiscard]] Interval left_arm() const { return {iv.b, center2 / 2}; }
};

std::vector<OneMismatchPalindrome> one_mismatch_maximal_palindromes(const LceIndex& index);

// Palindromic tree.  Node 0 is the odd root (length -1), node 1 the even
// root (length 0); every other node is a distinct nonempty palindrome of
// T.  parent(v) is v with its outer characters removed.
class Eertree {
public:
    static constexpr std::int32_t kOddRoot = 0;
    static constexpr std::int32_t kEvenRoot = 1;

    struct Node {
        std::int32_t len = 0;
        std::int32_t parent = kOddRoot;
        std::int32_t link = kOddRoot;  // longest proper palindromic suffix
        Code label = -1;               // outer character
        std::int32_t count = 0;        // occurrences in T
        Extrema occ;                   // extreme occurrence starts
    };

    Eertree() = default;
    Eertree(const Text& t, const LceIndex& index);

    [[nodiscard]] std::int32_t size() const { return static_cast<std::int32_t>(nodes_.size()); }
    [[nodiscard]] const Node& node(std::int32_t v) const { return nodes_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] static bool is_root(std::int32_t v) { return v <= kEvenRoot; }
    // Leftmost occurrence.
    [[nodiscard]] Interval interval(std::int32_t v) const {
        const Node& x = node(v);
        return {x.occ.min1, x.occ.min1 + x.len - 1};
    }
    // Counts the roots (the empty string) as occurring n + 1 times.
    [[nodiscard]] bool repeating(std::int32_t v) const { return is_root(v) || node(v).count >= 2; }

    [[nodiscard]] std::int32_t child(std::int32_t v, Code c) const;
    // Node of the palindrome T[iv]; the even root for an empty interval.
    // std::nullopt when T[iv] is not a palindrome.
    [[nodiscard]] std::optional<std::int32_t> find(Interval iv) const;
    // Node of the maximal palindrome at center2.
    [[nodiscard]] std::int32_t maximal(Pos center2) const {
        return maximal_[static_cast<std::size_t>(center2 - 2)];
    }

private:
    [[nodiscard]] static std::uint64_t key(std::int32_t lo, std::int32_t len) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(lo)) << 32) | static_cast<std::uint32_t>(len);
    }

    const LceIndex* index_ = nullptr;
    std::vector<Node> nodes_;
    std::vector<std::int32_t> first_child_;
    std::vector<std::int32_t> next_sibling_;
    std::unordered_map<std::uint64_t, std::int32_t> by_locus_;
    std::vector<std::int32_t> maximal_;
};

}  // namespace mups
