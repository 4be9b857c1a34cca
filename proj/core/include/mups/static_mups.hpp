#pragma once

#include <vector>

#include "mups/lce_index.hpp"
#include "mups/palindromes.hpp"

namespace mups {

// A minimal unique palindromic substring of T with its extended arms.
// For w = T[b..e] with center c, the extended left arm runs from b to the
// center (including an odd center character) and the extended right arm
// from the center to e.  Each is the reverse of the other.
struct MupsRecord {
    Interval iv;
    std::int32_t node = 0;  // eertree node

    [[nodiscard]] Pos center2() const { return iv.center2(); }
    [[nodiscard]] bool odd() const { return iv.length() % 2 == 1; }
    [[nodiscard]] std::int32_t half() const { return (iv.length() + 1) / 2; }
    [[nodiscard]] Interval left_arm() const { return {iv.b, iv.b + half() - 1}; }
    [[nodiscard]] Interval right_arm() const { return {iv.e - half() + 1, iv.e}; }
};

// Sorted by start.
std::vector<MupsRecord> compute_mups(const Eertree& tree);
MupsSet intervals(const std::vector<MupsRecord>& records);

struct ArmOccurrences {
    std::vector<Pos> left;   // starts of the extended left arm in T
    std::vector<Pos> right;  // starts of the extended right arm in T
};

// Every occurrence, including the one inside w; both lists ascending.
ArmOccurrences arm_occurrences(const LceIndex& index, const MupsRecord& m);

}  // namespace mups
