#pragma once

// Longest odd palindrome centered at the edited position that still occurs
// in the original text.
//
// For every odd palindrome of T the locus of its right arm (the part
// after the center) is made explicit in the suffix array of T and colored
// with (center character, is-MUPS).  After sub(i, s), a palindrome of T'
// centered at i has right arm T[i+1..i+d] for some d up to the maximal
// radius at i, so the answer is the deepest ancestor of that arm's locus
// carrying one of the colors of s.

#include <optional>
#include <span>
#include <vector>

#include "mups/lce_index.hpp"
#include "mups/loci_tree.hpp"
#include "mups/palindromes.hpp"

namespace mups {

struct CenterAnswer {
    std::optional<Interval> v;  // in T', centered at i
    std::int32_t node = -1;     // eertree node of v
    bool is_unique_in_T = false;
    std::optional<Interval> contained_mups;  // the MUPS of T on v's contraction chain
    // Extended right arm length of the shortest palindrome centered at i
    // in T' that does not occur in T.
    std::int32_t ell_prime = 1;
};

class CenterIndex {
public:
    CenterIndex() = default;
    CenterIndex(const Text& t, const LceIndex& index, const Eertree& tree, std::span<const MaximalPalindrome> pals);

    [[nodiscard]] CenterAnswer query(SubstitutionQuery q) const;

private:
    const Eertree* tree_ = nullptr;
    Code sigma_ = 0;
    std::vector<std::int32_t> odd_radius_;  // by position
    std::vector<NodeId> entry_;             // locus of T[i+1..i+r_i], by position
    LociTree loci_;
    ColoredAncestors colors_;
};

}  // namespace mups
