#include "mups/loci_tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mups {

LociTree::LociTree(std::int32_t universe, std::span<const Locus> loci) {
    struct Item {
        Locus locus;
        std::int32_t source;  // -1 for the root
    };
    std::vector<Item> items;
    items.reserve(loci.size() + 1);
    items.push_back({Locus{{0, universe - 1}, 0}, -1});
    for (std::size_t k = 0; k < loci.size(); ++k) items.push_back({loci[k], static_cast<std::int32_t>(k)});
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (a.locus.range.lo != b.locus.range.lo) return a.locus.range.lo < b.locus.range.lo;
        if (a.locus.range.hi != b.locus.range.hi) return a.locus.range.hi > b.locus.range.hi;
        if (a.locus.depth != b.locus.depth) return a.locus.depth < b.locus.depth;
        return a.source < b.source;
    });

    handles_.assign(loci.size(), kNoNode);
    nodes_.reserve(items.size());
    for (const Item& it : items) {
        const bool same = !nodes_.empty() && nodes_.back().range == it.locus.range &&
                          nodes_.back().depth == it.locus.depth;
        if (!same) nodes_.push_back(it.locus);
        if (it.source >= 0) handles_[static_cast<std::size_t>(it.source)] = static_cast<NodeId>(nodes_.size() - 1);
    }

    const auto count = nodes_.size();
    parent_.assign(count, kNoNode);
    last_.assign(count, 0);
    std::vector<NodeId> stack;
    for (std::size_t v = 0; v < count; ++v) {
        while (!stack.empty() && nodes_[idx(stack.back())].range.hi < nodes_[v].range.hi) {
            last_[idx(stack.back())] = static_cast<NodeId>(v - 1);
            stack.pop_back();
        }
        parent_[v] = stack.empty() ? kNoNode : stack.back();
        stack.push_back(static_cast<NodeId>(v));
    }
    for (NodeId v : stack) last_[idx(v)] = static_cast<NodeId>(count - 1);

    child_begin_.assign(count + 1, 0);
    for (std::size_t v = 1; v < count; ++v) ++child_begin_[idx(parent_[v]) + 1];
    std::partial_sum(child_begin_.begin(), child_begin_.end(), child_begin_.begin());
    child_list_.resize(count > 0 ? count - 1 : 0);
    std::vector<std::int32_t> fill(child_begin_.begin(), child_begin_.end() - 1);
    for (std::size_t v = 1; v < count; ++v) child_list_[idx(fill[idx(parent_[v])]++)] = static_cast<NodeId>(v);
}

std::span<const NodeId> LociTree::children(NodeId v) const {
    const auto b = static_cast<std::size_t>(child_begin_[idx(v)]);
    const auto e = static_cast<std::size_t>(child_begin_[idx(v) + 1]);
    return std::span<const NodeId>(child_list_).subspan(b, e - b);
}

MarkedAncestors::MarkedAncestors(const LociTree& tree, std::span<const NodeId> marked) {
    std::vector<bool> is_marked(static_cast<std::size_t>(tree.size()), false);
    for (NodeId v : marked) is_marked[static_cast<std::size_t>(v)] = true;
    nearest_.resize(static_cast<std::size_t>(tree.size()));
    for (NodeId v = 0; v < tree.size(); ++v) {
        const auto u = static_cast<std::size_t>(v);
        if (is_marked[u]) {
            nearest_[u] = v;
        } else {
            const NodeId p = tree.parent(v);
            nearest_[u] = p == kNoNode ? kNoNode : nearest_[static_cast<std::size_t>(p)];
        }
    }
}

NodeId MarkedAncestors::nearest(NodeId v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= nearest_.size()) throw std::out_of_range("unknown node");
    return nearest_[static_cast<std::size_t>(v)];
}

ColoredAncestors::ColoredAncestors(const LociTree& tree, std::int32_t colors, std::vector<Entry> entries)
    : node_count_(tree.size()) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.color != b.color ? a.color < b.color : a.node < b.node;
    });
    entries.erase(std::unique(entries.begin(), entries.end(),
                              [](const Entry& a, const Entry& b) { return a.color == b.color && a.node == b.node; }),
                  entries.end());

    color_begin_.assign(static_cast<std::size_t>(colors) + 1, 0);
    std::size_t k = 0;
    std::vector<const Entry*> stack;
    for (std::int32_t c = 0; c < colors; ++c) {
        color_begin_[static_cast<std::size_t>(c)] = static_cast<std::int32_t>(breakpoints_.size());
        const std::size_t first = breakpoints_.size();
        auto emit = [&](NodeId from, const Entry* e) {
            Breakpoint bp{from, e ? e->node : kNoNode, e ? e->payload : 0};
            if (breakpoints_.size() > first && breakpoints_.back().from == from)
                breakpoints_.back() = bp;
            else
                breakpoints_.push_back(bp);
        };
        auto pop = [&] {
            const Entry* t = stack.back();
            stack.pop_back();
            emit(tree.last(t->node) + 1, stack.empty() ? nullptr : stack.back());
        };
        for (; k < entries.size() && entries[k].color == c; ++k) {
            const Entry& e = entries[k];
            while (!stack.empty() && tree.last(stack.back()->node) < e.node) pop();
            stack.push_back(&e);
            emit(e.node, &e);
        }
        while (!stack.empty()) pop();
    }
    color_begin_[static_cast<std::size_t>(colors)] = static_cast<std::int32_t>(breakpoints_.size());
}

std::optional<ColoredAncestors::Hit> ColoredAncestors::nearest(NodeId v, std::int32_t color) const {
    if (v < 0 || v >= node_count_) throw std::out_of_range("unknown node");
    if (color < 0 || static_cast<std::size_t>(color) + 1 >= color_begin_.size()) return std::nullopt;
    const auto b = breakpoints_.begin() + color_begin_[static_cast<std::size_t>(color)];
    const auto e = breakpoints_.begin() + color_begin_[static_cast<std::size_t>(color) + 1];
    auto it = std::upper_bound(b, e, v, [](NodeId x, const Breakpoint& bp) { return x < bp.from; });
    if (it == b) return std::nullopt;
    --it;
    if (it->node == kNoNode) return std::nullopt;
    return Hit{it->node, it->payload};
}

namespace {

void absorb(Extrema& x, Pos p) {
    if (p == 0) return;
    if (p != x.min1 && p != x.min2) {
        if (x.min1 == 0 || p < x.min1) {
            x.min2 = x.min1;
            x.min1 = p;
        } else if (x.min2 == 0 || p < x.min2) {
            x.min2 = p;
        }
    }
    if (p != x.max1 && p != x.max2) {
        if (x.max1 == 0 || p > x.max1) {
            x.max2 = x.max1;
            x.max1 = p;
        } else if (x.max2 == 0 || p > x.max2) {
            x.max2 = p;
        }
    }
}

}  // namespace

std::vector<Extrema> subtree_extrema(const LociTree& tree, std::span<const Pos> positions) {
    std::vector<Extrema> out(static_cast<std::size_t>(tree.size()));
    for (NodeId v = tree.size() - 1; v >= 0; --v) {
        Extrema& x = out[static_cast<std::size_t>(v)];
        std::int32_t next = tree.locus(v).range.lo;
        for (NodeId c : tree.children(v)) {
            const SaRange r = tree.locus(c).range;
            for (; next < r.lo; ++next) absorb(x, positions[static_cast<std::size_t>(next)]);
            next = std::max(next, r.hi + 1);
            const Extrema& y = out[static_cast<std::size_t>(c)];
            absorb(x, y.min1);
            absorb(x, y.min2);
            absorb(x, y.max1);
            absorb(x, y.max2);
        }
        for (; next <= tree.locus(v).range.hi; ++next) absorb(x, positions[static_cast<std::size_t>(next)]);
    }
    return out;
}

}  // namespace mups
