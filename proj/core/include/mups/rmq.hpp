#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace mups {

// Range minimum over a fixed array, O(n log n) words, O(1) query.
class SparseTableMin {
public:
    SparseTableMin() = default;
    explicit SparseTableMin(std::span<const std::int32_t> values) {
        const std::size_t n = values.size();
        if (n == 0) return;
        const int levels = std::bit_width(n);
        table_.resize(static_cast<std::size_t>(levels));
        table_[0].assign(values.begin(), values.end());
        for (int k = 1; k < levels; ++k) {
            const std::size_t half = std::size_t{1} << (k - 1);
            const auto& prev = table_[static_cast<std::size_t>(k - 1)];
            auto& cur = table_[static_cast<std::size_t>(k)];
            cur.resize(n - (std::size_t{1} << k) + 1);
            for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = std::min(prev[i], prev[i + half]);
        }
    }

    // Minimum of values[l..r], l <= r.
    [[nodiscard]] std::int32_t min(std::size_t l, std::size_t r) const {
        const int k = std::bit_width(r - l + 1) - 1;
        const auto& row = table_[static_cast<std::size_t>(k)];
        return std::min(row[l], row[r + 1 - (std::size_t{1} << k)]);
    }

private:
    std::vector<std::vector<std::int32_t>> table_;
};

// Position of a maximum over a fixed array.  Sparse table over blocks of
// 32 values plus in-block scans: linear space, O(32) query.
class BlockArgMax {
public:
    BlockArgMax() = default;
    explicit BlockArgMax(std::vector<std::int32_t> values) : values_(std::move(values)) {
        const std::size_t blocks = (values_.size() + kBlock - 1) / kBlock;
        if (blocks == 0) return;
        std::vector<std::uint32_t> base(blocks);
        for (std::size_t b = 0; b < blocks; ++b)
            base[b] = static_cast<std::uint32_t>(scan(b * kBlock, std::min(values_.size(), (b + 1) * kBlock) - 1));
        const int levels = std::bit_width(blocks);
        table_.resize(static_cast<std::size_t>(levels));
        table_[0] = std::move(base);
        for (int k = 1; k < levels; ++k) {
            const std::size_t half = std::size_t{1} << (k - 1);
            const auto& prev = table_[static_cast<std::size_t>(k - 1)];
            auto& cur = table_[static_cast<std::size_t>(k)];
            cur.resize(blocks - (std::size_t{1} << k) + 1);
            for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = better(prev[i], prev[i + half]);
        }
    }

    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] std::int32_t value(std::size_t i) const { return values_[i]; }

    // Index of a maximum of values[l..r], l <= r.
    [[nodiscard]] std::size_t argmax(std::size_t l, std::size_t r) const {
        const std::size_t bl = l / kBlock;
        const std::size_t br = r / kBlock;
        if (bl == br) return scan(l, r);
        std::size_t best = scan(l, (bl + 1) * kBlock - 1);
        best = better(best, scan(br * kBlock, r));
        if (bl + 1 < br) {
            const std::size_t lo = bl + 1;
            const std::size_t hi = br - 1;
            const int k = std::bit_width(hi - lo + 1) - 1;
            const auto& row = table_[static_cast<std::size_t>(k)];
            best = better(best, row[lo]);
            best = better(best, row[hi + 1 - (std::size_t{1} << k)]);
        }
        return best;
    }

private:
    static constexpr std::size_t kBlock = 32;

    [[nodiscard]] std::size_t better(std::size_t a, std::size_t b) const {
        return values_[b] > values_[a] ? b : a;
    }
    [[nodiscard]] std::size_t scan(std::size_t l, std::size_t r) const {
        std::size_t best = l;
        for (std::size_t i = l + 1; i <= r; ++i)
            if (values_[i] > values_[best]) best = i;
        return best;
    }

    std::vector<std::int32_t> values_;
    std::vector<std::vector<std::uint32_t>> table_;
};

}  // namespace mups
