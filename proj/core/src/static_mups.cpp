#include "mups/static_mups.hpp"

#include <algorithm>

namespace mups {

std::vector<MupsRecord> compute_mups(const Eertree& tree) {
    std::vector<MupsRecord> out;
    for (std::int32_t v = 2; v < tree.size(); ++v) {
        const auto& x = tree.node(v);
        if (x.count == 1 && tree.repeating(x.parent)) out.push_back({tree.interval(v), v});
    }
    std::sort(out.begin(), out.end(), [](const MupsRecord& a, const MupsRecord& b) { return a.iv < b.iv; });
    return out;
}

MupsSet intervals(const std::vector<MupsRecord>& records) {
    MupsSet out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(r.iv);
    return out;
}

namespace {

std::vector<Pos> occurrences(const LceIndex& index, Interval iv) {
    const SaRange r = index.text_range(iv);
    const auto sa = index.text_sa();
    std::vector<Pos> out(sa.begin() + r.lo, sa.begin() + r.hi + 1);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ArmOccurrences arm_occurrences(const LceIndex& index, const MupsRecord& m) {
    return {occurrences(index, m.left_arm()), occurrences(index, m.right_arm())};
}

}  // namespace mups
