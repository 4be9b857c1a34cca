#include "mups/center_query.hpp"

namespace mups {

CenterIndex::CenterIndex(const Text& t, const LceIndex& index, const Eertree& tree,
                         std::span<const MaximalPalindrome> pals)
    : tree_(&tree), sigma_(t.sigma()) {
    const Pos n = t.size();
    odd_radius_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Pos c = 1; c <= n; ++c) odd_radius_[static_cast<std::size_t>(c)] = pals[static_cast<std::size_t>(2 * c - 2)].radius;

    std::vector<Locus> loci;
    std::vector<std::int32_t> owner;  // eertree node, or -1 for an entry locus
    for (std::int32_t v = 2; v < tree.size(); ++v) {
        const auto& x = tree.node(v);
        if (x.len % 2 == 0) continue;
        const Interval iv = tree.interval(v);
        const std::int32_t half = x.len / 2;
        loci.push_back({index.text_range(iv.e - half + 1, half), half});
        owner.push_back(v);
    }
    for (Pos i = 1; i <= n; ++i) {
        const std::int32_t r = odd_radius_[static_cast<std::size_t>(i)];
        loci.push_back({index.text_range(i + 1, r), r});
        owner.push_back(-1);
    }
    loci_ = LociTree(n, loci);

    std::vector<ColoredAncestors::Entry> entries;
    entry_.assign(static_cast<std::size_t>(n) + 1, kNoNode);
    Pos next_entry = 1;
    for (std::size_t k = 0; k < loci.size(); ++k) {
        const NodeId h = loci_.handles()[k];
        if (owner[k] < 0) {
            entry_[static_cast<std::size_t>(next_entry++)] = h;
            continue;
        }
        const std::int32_t v = owner[k];
        const auto& x = tree.node(v);
        const bool is_mups = x.count == 1 && tree.repeating(x.parent);
        const Code center = t.at(tree.interval(v).b + x.len / 2);
        entries.push_back({h, 2 * center + (is_mups ? 1 : 0), v});
    }
    colors_ = ColoredAncestors(loci_, 2 * sigma_, std::move(entries));
}

CenterAnswer CenterIndex::query(SubstitutionQuery q) const {
    CenterAnswer out;
    if (q.s < 0 || q.s >= sigma_) return out;
    const NodeId entry = entry_[static_cast<std::size_t>(q.i)];
    const auto plain = colors_.nearest(entry, 2 * q.s);
    const auto flagged = colors_.nearest(entry, 2 * q.s + 1);
    std::optional<ColoredAncestors::Hit> best = plain;
    if (!best || (flagged && loci_.depth(flagged->node) > loci_.depth(best->node))) best = flagged;
    if (!best) return out;

    const std::int32_t d = loci_.depth(best->node);
    out.v = Interval{q.i - d, q.i + d};
    out.node = best->payload;
    out.ell_prime = d + 2;
    out.is_unique_in_T = tree_->node(best->payload).count == 1;
    if (out.is_unique_in_T) {
        // The MUPS on the chain is the nearest flagged node from V.
        const auto m = colors_.nearest(best->node, 2 * q.s + 1);
        if (m) out.contained_mups = tree_->interval(m->payload);
    }
    return out;
}

}  // namespace mups
