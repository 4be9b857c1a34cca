#include "mups/palindromes.hpp"

#include <algorithm>

namespace mups {

std::vector<MaximalPalindrome> maximal_palindromes(const Text& t) {
    const Pos n = t.size();
    const auto s = t.codes();
    auto at = [&](Pos k) { return s[static_cast<std::size_t>(k)]; };
    // Manacher, 0-based: d1[k] odd radius around k, d2[k] even radius
    // between k - 1 and k.
    std::vector<std::int32_t> d1(static_cast<std::size_t>(n)), d2(static_cast<std::size_t>(n));
    for (Pos k = 0, l = 0, r = -1; k < n; ++k) {
        std::int32_t rad = k > r ? 0 : std::min(d1[static_cast<std::size_t>(l + r - k)], r - k);
        while (k - rad - 1 >= 0 && k + rad + 1 < n && at(k - rad - 1) == at(k + rad + 1)) ++rad;
        d1[static_cast<std::size_t>(k)] = rad;
        if (k + rad > r) {
            l = k - rad;
            r = k + rad;
        }
    }
    for (Pos k = 0, l = 0, r = -1; k < n; ++k) {
        std::int32_t rad = k > r ? 0 : std::min(d2[static_cast<std::size_t>(l + r - k + 1)], r - k + 1);
        while (k - rad - 1 >= 0 && k + rad < n && at(k - rad - 1) == at(k + rad)) ++rad;
        d2[static_cast<std::size_t>(k)] = rad;
        if (k + rad - 1 > r) {
            l = k - rad;
            r = k + rad - 1;
        }
    }
    std::vector<MaximalPalindrome> out(static_cast<std::size_t>(2 * n - 1));
    for (Pos c = 1; c <= n; ++c) {
        out[static_cast<std::size_t>(2 * c - 2)] = {2 * c, d1[static_cast<std::size_t>(c - 1)]};
        if (c < n) out[static_cast<std::size_t>(2 * c - 1)] = {2 * c + 1, d2[static_cast<std::size_t>(c)]};
    }
    return out;
}

std::vector<OneMismatchPalindrome> one_mismatch_maximal_palindromes(const LceIndex& index) {
    const Pos n = index.n();
    std::vector<OneMismatchPalindrome> out;
    out.reserve(static_cast<std::size_t>(2 * n));
    for (Pos c2 = 2; c2 <= 2 * n; ++c2) {
        const Pos c = c2 / 2;
        const bool odd = c2 % 2 == 0;
        const std::int32_t r0 = odd ? index.lce_mirror(c - 1, c + 1) : index.lce_mirror(c, c + 1);
        const Pos pl = odd ? c - r0 - 1 : c - r0;
        const Pos pr = odd ? c + r0 + 1 : c + 1 + r0;
        if (pl < 1 || pr > n) continue;
        const std::int32_t ext = index.lce_mirror(pl - 1, pr + 1);
        out.push_back({c2, Interval{pl - ext, pr + ext}, pl, pr});
    }
    return out;
}

Eertree::Eertree(const Text& t, const LceIndex& index) : index_(&index) {
    const Pos n = t.size();
    const auto s = t.codes();
    nodes_.reserve(static_cast<std::size_t>(n) + 2);
    nodes_.push_back(Node{-1, kOddRoot, kOddRoot, -1, n + 1, {}});
    nodes_.push_back(Node{0, kOddRoot, kOddRoot, -1, n + 1, {}});
    first_child_.assign(2, -1);
    next_sibling_.assign(2, -1);
    std::vector<Pos> first_start{0, 0};

    auto fits = [&](std::int32_t v, Pos k) {
        const std::int32_t len = nodes_[static_cast<std::size_t>(v)].len;
        return k - len - 1 >= 0 && s[static_cast<std::size_t>(k - len - 1)] == s[static_cast<std::size_t>(k)];
    };
    std::int32_t cur = kEvenRoot;
    for (Pos k = 0; k < n; ++k) {
        const Code c = s[static_cast<std::size_t>(k)];
        std::int32_t v = cur;
        while (!fits(v, k)) v = nodes_[static_cast<std::size_t>(v)].link;
        const std::int32_t existing = child(v, c);
        if (existing >= 0) {
            cur = existing;
            continue;
        }
        Node w;
        w.len = nodes_[static_cast<std::size_t>(v)].len + 2;
        w.parent = v;
        w.label = c;
        if (w.len == 1) {
            w.link = kEvenRoot;
        } else {
            std::int32_t u = nodes_[static_cast<std::size_t>(v)].link;
            while (!fits(u, k)) u = nodes_[static_cast<std::size_t>(u)].link;
            w.link = child(u, c);
        }
        const auto id = static_cast<std::int32_t>(nodes_.size());
        nodes_.push_back(w);
        first_start.push_back(k - w.len + 2);
        next_sibling_.push_back(first_child_[static_cast<std::size_t>(v)]);
        first_child_.push_back(-1);
        first_child_[static_cast<std::size_t>(v)] = id;
        cur = id;
    }

    // Occurrence statistics from the loci of all palindromes in the suffix
    // array of T.
    const auto m = nodes_.size();
    std::vector<Locus> loci(m - 2);
    for (std::size_t v = 2; v < m; ++v)
        loci[v - 2] = {index.text_range(first_start[v], nodes_[v].len), nodes_[v].len};
    const LociTree tree(n, loci);
    const std::vector<Extrema> ext = subtree_extrema(tree, index.text_sa());
    by_locus_.reserve(m);
    for (std::size_t v = 2; v < m; ++v) {
        const NodeId h = tree.handles()[v - 2];
        nodes_[v].occ = ext[static_cast<std::size_t>(h)];
        nodes_[v].count = loci[v - 2].range.size();
        by_locus_.emplace(key(loci[v - 2].range.lo, nodes_[v].len), static_cast<std::int32_t>(v));
    }

    const auto pals = maximal_palindromes(t);
    maximal_.resize(pals.size());
    for (std::size_t k = 0; k < pals.size(); ++k) maximal_[k] = *find(pals[k].interval());
}

std::int32_t Eertree::child(std::int32_t v, Code c) const {
    for (std::int32_t u = first_child_[static_cast<std::size_t>(v)]; u >= 0; u = next_sibling_[static_cast<std::size_t>(u)])
        if (nodes_[static_cast<std::size_t>(u)].label == c) return u;
    return -1;
}

std::optional<std::int32_t> Eertree::find(Interval iv) const {
    if (iv.e < iv.b) return kEvenRoot;
    const std::int32_t len = iv.length();
    if (index_->lce_mirror(iv.e, iv.b) < len) return std::nullopt;
    const auto it = by_locus_.find(key(index_->text_range(iv).lo, len));
    if (it == by_locus_.end()) return std::nullopt;
    return it->second;
}

}  // namespace mups
