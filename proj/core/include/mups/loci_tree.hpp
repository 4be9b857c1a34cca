#pragma once

// A suffix tree restricted to a chosen set of explicit loci.
//
// A locus is the rank range of all suffixes that start with a string,
// together with the string's length.  Two loci are in a prefix relation
// exactly when their ranges nest, so sorting by (lo, -hi, depth) yields a
// preorder of the induced tree.  Every locus the caller asks for becomes an
// explicit node; loci of equal strings share a node.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mups/lce_index.hpp"

namespace mups {

struct Locus {
    SaRange range;
    std::int32_t depth = 0;
};

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

class LociTree {
public:
    LociTree() = default;
    // `universe` is the number of suffixes; a root covering all of them at
    // depth 0 is always present.  handles()[k] is the node of loci[k].
    LociTree(std::int32_t universe, std::span<const Locus> loci);

    [[nodiscard]] std::int32_t size() const { return static_cast<std::int32_t>(nodes_.size()); }
    [[nodiscard]] NodeId root() const { return 0; }
    [[nodiscard]] std::span<const NodeId> handles() const { return handles_; }

    [[nodiscard]] const Locus& locus(NodeId v) const { return nodes_[idx(v)]; }
    [[nodiscard]] std::int32_t depth(NodeId v) const { return nodes_[idx(v)].depth; }
    [[nodiscard]] NodeId parent(NodeId v) const { return parent_[idx(v)]; }
    // Node ids are preorder numbers; the subtree of v is [v, last(v)].
    [[nodiscard]] NodeId last(NodeId v) const { return last_[idx(v)]; }
    [[nodiscard]] bool is_ancestor(NodeId a, NodeId v) const { return a <= v && v <= last(a); }

    // Children are contiguous in `children_of` and increase in preorder.
    [[nodiscard]] std::span<const NodeId> children(NodeId v) const;

private:
    static std::size_t idx(NodeId v) { return static_cast<std::size_t>(v); }

    std::vector<Locus> nodes_;
    std::vector<NodeId> parent_;
    std::vector<NodeId> last_;
    std::vector<std::int32_t> child_begin_;
    std::vector<NodeId> child_list_;
    std::vector<NodeId> handles_;
};

// Deepest marked ancestor-or-self in O(1).
class MarkedAncestors {
public:
    MarkedAncestors() = default;
    MarkedAncestors(const LociTree& tree, std::span<const NodeId> marked);
    // kNoNode when no ancestor-or-self is marked.  Throws std::out_of_range
    // for an unknown node.
    [[nodiscard]] NodeId nearest(NodeId v) const;

private:
    std::vector<NodeId> nearest_;
};

// Deepest ancestor-or-self carrying a color, in O(log k) for k nodes of
// that color.  A node may carry several colors; each (node, color) pair
// holds one payload.
class ColoredAncestors {
public:
    struct Entry {
        NodeId node = kNoNode;
        std::int32_t color = 0;
        std::int32_t payload = 0;
    };
    struct Hit {
        NodeId node = kNoNode;
        std::int32_t payload = 0;
    };

    ColoredAncestors() = default;
    ColoredAncestors(const LociTree& tree, std::int32_t colors, std::vector<Entry> entries);

    [[nodiscard]] std::optional<Hit> nearest(NodeId v, std::int32_t color) const;

private:
    struct Breakpoint {
        NodeId from;     // first preorder number of the segment
        NodeId node;     // answer on the segment, kNoNode if none
        std::int32_t payload;
    };
    std::int32_t node_count_ = 0;
    std::vector<std::int32_t> color_begin_;
    std::vector<Breakpoint> breakpoints_;
};

// Smallest two and largest two values of `positions` (indexed by rank)
// over each node's range.  Missing values are 0.
struct Extrema {
    Pos min1 = 0, min2 = 0, max1 = 0, max2 = 0;
};
std::vector<Extrema> subtree_extrema(const LociTree& tree, std::span<const Pos> positions);

}  // namespace mups
