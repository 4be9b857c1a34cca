#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "mups/text.hpp"

namespace mups {

// Values grouped under (position, subkey) for positions 1..n.  Lookup is a
// binary search inside the position's block.
template <class T>
class KeyedLists {
public:
    struct Item {
        Pos pos;
        std::int32_t sub;
        T value;
    };

    KeyedLists() = default;
    // Items keep their relative order within a key.
    KeyedLists(Pos n, std::vector<Item> items) : items_(std::move(items)) {
        std::stable_sort(items_.begin(), items_.end(), [](const Item& a, const Item& b) {
            return a.pos != b.pos ? a.pos < b.pos : a.sub < b.sub;
        });
        begin_.assign(static_cast<std::size_t>(n) + 2, 0);
        for (const Item& x : items_) ++begin_[static_cast<std::size_t>(x.pos) + 1];
        for (std::size_t p = 1; p < begin_.size(); ++p) begin_[p] += begin_[p - 1];
    }

    [[nodiscard]] std::span<const Item> get(Pos pos, std::int32_t sub) const {
        if (pos < 0 || static_cast<std::size_t>(pos) + 1 >= begin_.size()) return {};
        const auto b = items_.begin() + begin_[static_cast<std::size_t>(pos)];
        const auto e = items_.begin() + begin_[static_cast<std::size_t>(pos) + 1];
        const auto lo = std::lower_bound(b, e, sub, [](const Item& x, std::int32_t s) { return x.sub < s; });
        const auto hi = std::upper_bound(lo, e, sub, [](std::int32_t s, const Item& x) { return s < x.sub; });
        return {lo, hi};
    }

    [[nodiscard]] std::span<const Item> all() const { return items_; }
    [[nodiscard]] std::size_t size() const { return items_.size(); }

private:
    std::vector<std::int32_t> begin_;
    std::vector<Item> items_;
};

}  // namespace mups
