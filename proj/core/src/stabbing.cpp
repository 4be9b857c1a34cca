#include "mups/stabbing.hpp"

#include <algorithm>
#include <stdexcept>

namespace mups {

StabbingIndex::StabbingIndex(Pos universe, std::vector<Record> records)
    : universe_(universe), records_(std::move(records)) {
    for (const Record& r : records_) {
        if (r.iv.b > r.iv.e) throw std::invalid_argument("empty interval");
        if (r.iv.b < 1 || r.iv.e > universe_) throw std::invalid_argument("interval outside universe");
    }
    std::sort(records_.begin(), records_.end(),
              [](const Record& a, const Record& b) { return a.iv.b < b.iv.b; });
    prefix_.assign(static_cast<std::size_t>(universe_) + 1, 0);
    for (const Record& r : records_) ++prefix_[static_cast<std::size_t>(r.iv.b)];
    for (std::size_t q = 1; q < prefix_.size(); ++q) prefix_[q] += prefix_[q - 1];
    std::vector<std::int32_t> ends(records_.size());
    for (std::size_t k = 0; k < records_.size(); ++k) ends[k] = records_[k].iv.e;
    ends_ = BlockArgMax(std::move(ends));
}

std::size_t StabbingIndex::stab(Pos q, std::vector<Record>& out) const {
    if (q < 1 || q > universe_) throw std::out_of_range("stab point outside universe");
    const auto count = static_cast<std::size_t>(prefix_[static_cast<std::size_t>(q)]);
    if (count == 0) return 0;
    std::size_t touched = 0;
    std::vector<std::pair<std::size_t, std::size_t>> todo{{0, count - 1}};
    while (!todo.empty()) {
        const auto [l, r] = todo.back();
        todo.pop_back();
        const std::size_t m = ends_.argmax(l, r);
        ++touched;
        if (ends_.value(m) < q) continue;
        out.push_back(records_[m]);
        if (m > l) todo.emplace_back(l, m - 1);
        if (m < r) todo.emplace_back(m + 1, r);
    }
    return touched;
}

std::vector<StabbingIndex::Record> StabbingIndex::stab(Pos q) const {
    std::vector<Record> out;
    stab(q, out);
    return out;
}

}  // namespace mups
