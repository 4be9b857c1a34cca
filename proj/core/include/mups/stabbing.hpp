#pragma once

// Static interval stabbing.
//
// Intervals are sorted by start.  The ones starting at or before q form a
// prefix of that order; among them, those ending at or after q are found
// by repeatedly splitting on a maximum end.  Each split either reports an
// interval or terminates a branch, so a query touches at most 2k + 1
// records for k reported intervals.

#include <cstdint>
#include <utility>
#include <vector>

#include "mups/rmq.hpp"
#include "mups/text.hpp"

namespace mups {

class StabbingIndex {
public:
    struct Record {
        Interval iv;
        std::int32_t payload = 0;
    };

    StabbingIndex() = default;
    // Throws std::invalid_argument for an empty interval or one outside
    // [1, universe].
    StabbingIndex(Pos universe, std::vector<Record> records);

    [[nodiscard]] Pos universe() const { return universe_; }
    [[nodiscard]] std::size_t size() const { return records_.size(); }

    // Payloads of the intervals containing q, appended to `out`.  Returns
    // the number of records inspected.  Throws std::out_of_range when q is
    // outside [1, universe].
    std::size_t stab(Pos q, std::vector<Record>& out) const;
    [[nodiscard]] std::vector<Record> stab(Pos q) const;

private:
    Pos universe_ = 0;
    std::vector<Record> records_;
    std::vector<std::int32_t> prefix_;  // prefix_[q]: records starting at <= q
    BlockArgMax ends_;
};

}  // namespace mups
