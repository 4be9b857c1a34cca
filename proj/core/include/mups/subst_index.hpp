#pragma once

// Index answering "how does MUPS(T) change under one substitution".
//
// Removed MUPSs come in three kinds:
//   R1  the MUPS covers the edited position;
//   R2  an occurrence of the MUPS appears in T' (so it is no longer unique);
//   R3  the MUPS's inner palindrome loses all other occurrences.
// Added MUPSs come in four:
//   A1-1  covers the edited position, off-center;
//   A1-2  centered at the edited position;
//   A2    a repeating palindrome of T loses all but one occurrence;
//   A3    a unique palindrome of T whose inner part gains an occurrence.
// Each kind is answered from tables built once per text.

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "mups/center_query.hpp"
#include "mups/keyed_lists.hpp"
#include "mups/lce_index.hpp"
#include "mups/palindromes.hpp"
#include "mups/stabbing.hpp"
#include "mups/static_mups.hpp"

namespace mups {

enum class DeltaType { R1, R2, R3, A11, A12, A2, A3 };
std::string_view to_string(DeltaType t);

struct TypedInterval {
    Interval iv;
    DeltaType type = DeltaType::R1;
    friend bool operator==(const TypedInterval&, const TypedInterval&) = default;
};

// A new occurrence, starting at j, of the MUPS `mups` after sub(i, s).
struct R2Entry {
    SubstitutionQuery key;
    std::int32_t mups = 0;  // index into mups_records()
    Pos j = 0;
    // How far the occurrence extends symmetrically like the MUPS does.
    std::int32_t extension = 0;
};

struct BuildStats {
    std::size_t mups = 0;
    std::size_t left_arm_occurrences = 0;
    std::size_t right_arm_occurrences = 0;
    std::size_t r2_entries = 0;
    std::size_t one_mismatch_records = 0;
    std::size_t a11_entries = 0;
    std::size_t a2_intervals = 0;
    std::size_t r3_intervals = 0;
};

class SubstIndex {
public:
    explicit SubstIndex(Text t);
    SubstIndex(const SubstIndex&) = delete;
    SubstIndex& operator=(const SubstIndex&) = delete;

    [[nodiscard]] const Text& text() const { return t_; }
    [[nodiscard]] const LceIndex& lce() const { return lce_; }
    [[nodiscard]] const Eertree& eertree() const { return tree_; }
    [[nodiscard]] const std::vector<MupsRecord>& mups_records() const { return mups_; }
    [[nodiscard]] const MupsSet& mups() const { return mups_set_; }
    [[nodiscard]] const BuildStats& stats() const { return stats_; }
    [[nodiscard]] std::vector<R2Entry> r2_entries() const;

    // All query functions validate q and throw like validate().
    [[nodiscard]] CenterAnswer center(SubstitutionQuery q) const;
    [[nodiscard]] std::vector<Interval> removed_r1(SubstitutionQuery q) const;
    [[nodiscard]] std::vector<Interval> removed_r2(SubstitutionQuery q) const;
    [[nodiscard]] std::vector<Interval> removed_r3(SubstitutionQuery q) const;
    [[nodiscard]] std::vector<Interval> added_a11(SubstitutionQuery q) const;
    [[nodiscard]] std::vector<Interval> added_a12(SubstitutionQuery q) const;
    [[nodiscard]] std::vector<Interval> added_a2(SubstitutionQuery q) const;
    [[nodiscard]] std::vector<Interval> added_a3(SubstitutionQuery q) const;

    // Sorted by start.  An interval reported both as removed and as added
    // (a MUPS centered at i that stays a MUPS) is dropped from both.
    [[nodiscard]] MupsDelta delta(SubstitutionQuery q) const;
    [[nodiscard]] std::vector<TypedInterval> typed_delta(SubstitutionQuery q) const;
    [[nodiscard]] MupsSet after(SubstitutionQuery q) const;

private:
    struct R2Value {
        std::int32_t mups;
        Pos j;
        std::int32_t extension;
    };
    struct Survivor {
        std::int32_t node;
        Pos start;
    };

    void build_r2();
    void build_r3();
    void build_a2();
    void build_one_mismatch();

    [[nodiscard]] std::vector<Interval> removed_r2(SubstitutionQuery q, const CenterAnswer& ca) const;
    [[nodiscard]] std::vector<Interval> added_a12(SubstitutionQuery q, const CenterAnswer& ca) const;
    [[nodiscard]] std::vector<Interval> added_a3(SubstitutionQuery q, const CenterAnswer& ca) const;
    [[nodiscard]] std::int32_t odd_radius(Pos c) const { return pals_[static_cast<std::size_t>(2 * c - 2)].radius; }

    Text t_;
    LceIndex lce_;
    std::vector<MaximalPalindrome> pals_;
    Eertree tree_;
    std::vector<MupsRecord> mups_;
    MupsSet mups_set_;
    CenterIndex center_;
    StabbingIndex r1_;
    KeyedLists<R2Value> r2_;
    StabbingIndex r3_;
    std::vector<Survivor> survivors_;
    StabbingIndex a2_;
    KeyedLists<Factor> odd_arms_;  // extended arms fixed by (i, s), sorted
    KeyedLists<Interval> a11_;
    BuildStats stats_;
};

}  // namespace mups
