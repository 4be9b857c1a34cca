#include "mups/lce_index.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace mups {

namespace {

// SA-IS: induced sorting of LMS substrings, reduced recursively.
void sais(std::span<const std::int32_t> s, std::span<std::int32_t> sa, std::int32_t alphabet) {
    const auto n = static_cast<std::int32_t>(s.size());
    if (n == 1) {
        sa[0] = 0;
        return;
    }
    std::vector<bool> stype(static_cast<std::size_t>(n));
    stype[static_cast<std::size_t>(n - 1)] = true;
    for (std::int32_t i = n - 2; i >= 0; --i) {
        const auto u = static_cast<std::size_t>(i);
        stype[u] = s[u] < s[u + 1] || (s[u] == s[u + 1] && stype[u + 1]);
    }
    auto is_lms = [&](std::int32_t i) {
        return i > 0 && stype[static_cast<std::size_t>(i)] && !stype[static_cast<std::size_t>(i - 1)];
    };

    std::vector<std::int32_t> counts(static_cast<std::size_t>(alphabet), 0);
    for (auto c : s) ++counts[static_cast<std::size_t>(c)];
    std::vector<std::int32_t> bucket(static_cast<std::size_t>(alphabet));
    auto bucket_starts = [&] {
        std::int32_t sum = 0;
        for (std::size_t c = 0; c < counts.size(); ++c) {
            bucket[c] = sum;
            sum += counts[c];
        }
    };
    auto bucket_ends = [&] {
        std::int32_t sum = 0;
        for (std::size_t c = 0; c < counts.size(); ++c) {
            sum += counts[c];
            bucket[c] = sum;
        }
    };
    auto at = [&](std::int32_t i) -> std::int32_t& { return sa[static_cast<std::size_t>(i)]; };
    auto sym = [&](std::int32_t i) { return static_cast<std::size_t>(s[static_cast<std::size_t>(i)]); };
    auto induce = [&] {
        bucket_starts();
        for (std::int32_t k = 0; k < n; ++k) {
            const std::int32_t j = at(k) - 1;
            if (at(k) > 0 && !stype[static_cast<std::size_t>(j)]) at(bucket[sym(j)]++) = j;
        }
        bucket_ends();
        for (std::int32_t k = n - 1; k >= 0; --k) {
            const std::int32_t j = at(k) - 1;
            if (at(k) > 0 && stype[static_cast<std::size_t>(j)]) at(--bucket[sym(j)]) = j;
        }
    };

    std::fill(sa.begin(), sa.end(), -1);
    bucket_ends();
    for (std::int32_t i = 1; i < n; ++i)
        if (is_lms(i)) at(--bucket[sym(i)]) = i;
    induce();

    std::int32_t n1 = 0;
    for (std::int32_t k = 0; k < n; ++k)
        if (is_lms(at(k))) at(n1++) = at(k);
    std::fill(sa.begin() + n1, sa.end(), -1);

    std::int32_t names = 0;
    std::int32_t prev = -1;
    for (std::int32_t k = 0; k < n1; ++k) {
        const std::int32_t pos = at(k);
        bool diff = false;
        for (std::int32_t d = 0; d < n; ++d) {
            if (prev == -1 || s[static_cast<std::size_t>(pos + d)] != s[static_cast<std::size_t>(prev + d)] ||
                stype[static_cast<std::size_t>(pos + d)] != stype[static_cast<std::size_t>(prev + d)]) {
                diff = true;
                break;
            }
            if (d > 0 && (is_lms(pos + d) || is_lms(prev + d))) break;
        }
        if (diff) {
            ++names;
            prev = pos;
        }
        at(n1 + pos / 2) = names - 1;
    }
    std::vector<std::int32_t> reduced;
    reduced.reserve(static_cast<std::size_t>(n1));
    for (std::int32_t k = n1; k < n; ++k)
        if (at(k) >= 0) reduced.push_back(at(k));

    auto sa1 = sa.subspan(0, static_cast<std::size_t>(n1));
    if (names < n1) {
        sais(reduced, sa1, names);
    } else {
        for (std::int32_t k = 0; k < n1; ++k) sa1[static_cast<std::size_t>(reduced[static_cast<std::size_t>(k)])] = k;
    }

    std::int32_t j = 0;
    for (std::int32_t i = 1; i < n; ++i)
        if (is_lms(i)) reduced[static_cast<std::size_t>(j++)] = i;
    for (std::int32_t k = 0; k < n1; ++k) sa1[static_cast<std::size_t>(k)] = reduced[static_cast<std::size_t>(sa1[static_cast<std::size_t>(k)])];
    std::fill(sa.begin() + n1, sa.end(), -1);
    bucket_ends();
    for (std::int32_t k = n1 - 1; k >= 0; --k) {
        const std::int32_t p = at(k);
        at(k) = -1;
        at(--bucket[sym(p)]) = p;
    }
    induce();
}

// Extend [r, r] to the maximal run of ranks k with ok(k); ok is monotone
// on each side of r and ok(r) holds.
template <class Pred>
SaRange expand(std::int32_t r, std::int32_t size, Pred ok) {
    SaRange out{r, r};
    {
        std::int32_t step = 1;
        while (r - step >= 0 && ok(r - step)) step *= 2;
        std::int32_t good = r - step / 2;           // known ok
        std::int32_t bad = std::max(-1, r - step);  // known not ok or out of range
        while (good - bad > 1) {
            const std::int32_t mid = bad + (good - bad) / 2;
            (ok(mid) ? good : bad) = mid;
        }
        out.lo = good;
    }
    {
        std::int32_t step = 1;
        while (r + step < size && ok(r + step)) step *= 2;
        std::int32_t good = r + step / 2;
        std::int32_t bad = std::min(size, r + step);
        while (bad - good > 1) {
            const std::int32_t mid = good + (bad - good) / 2;
            (ok(mid) ? good : bad) = mid;
        }
        out.hi = good;
    }
    return out;
}

}  // namespace

std::vector<std::int32_t> suffix_array(std::span<const std::int32_t> s, std::int32_t alphabet) {
    std::vector<std::int32_t> sa(s.size());
    if (!s.empty()) sais(s, sa, alphabet);
    return sa;
}

LceIndex::LceIndex(const Text& t) : n_(t.size()), sigma_(t.sigma()) {
    const auto n = static_cast<std::size_t>(n_);
    x_.resize(2 * n + 2);
    for (std::size_t k = 0; k < n; ++k) {
        x_[k] = t.codes()[k];
        x_[n + 1 + k] = t.codes()[n - 1 - k];
    }
    x_[n] = dollar();
    x_[2 * n + 1] = hash_sentinel();

    // Shift codes up by one and append a unique minimum for SA-IS.
    std::vector<std::int32_t> shifted(x_.size() + 1);
    for (std::size_t k = 0; k < x_.size(); ++k) shifted[k] = x_[k] + 1;
    shifted.back() = 0;
    std::vector<std::int32_t> full = suffix_array(shifted, sigma_ + 4);
    sa_.assign(full.begin() + 1, full.end());
    full = {};
    shifted = {};

    const auto m = sa_.size();
    rank_.resize(m);
    for (std::size_t k = 0; k < m; ++k) rank_[static_cast<std::size_t>(sa_[k])] = static_cast<std::int32_t>(k);

    // Kasai.  Sentinels are unique, so matches never run past one.
    std::vector<std::int32_t> lcp(m, 0);
    std::int32_t h = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const auto r = static_cast<std::size_t>(rank_[i]);
        if (r == 0) {
            h = 0;
            continue;
        }
        const auto j = static_cast<std::size_t>(sa_[r - 1]);
        while (i + static_cast<std::size_t>(h) < m && j + static_cast<std::size_t>(h) < m &&
               x_[i + static_cast<std::size_t>(h)] == x_[j + static_cast<std::size_t>(h)])
            ++h;
        lcp[r] = h;
        if (h > 0) --h;
    }
    lcp_rmq_ = SparseTableMin(lcp);
    build_short_ranges(lcp);

    text_sa_.reserve(n);
    text_rank_.assign(n + 1, -1);
    text_before_.resize(m + 1);
    for (std::size_t k = 0; k < m; ++k) {
        text_before_[k] = static_cast<std::int32_t>(text_sa_.size());
        const std::int32_t off = sa_[k];
        if (off < n_) {
            text_rank_[static_cast<std::size_t>(off + 1)] = static_cast<std::int32_t>(text_sa_.size());
            text_sa_.push_back(off + 1);
        }
    }
    text_before_[m] = n_;
}

void LceIndex::build_short_ranges(std::span<const std::int32_t> lcp) {
    const std::int64_t budget =
        std::clamp<std::int64_t>(4 * static_cast<std::int64_t>(sa_.size()), 256, std::int64_t{1} << 20);
    const std::int64_t sigma = std::max<std::int64_t>(sigma_, 1);
    for (std::int64_t power = sigma; short_len_ < 32 && power <= budget; power *= sigma) ++short_len_;
    // short_base_[L] is the first slot for strings of length L.
    short_base_.assign(static_cast<std::size_t>(short_len_) + 2, 0);
    std::int64_t power = 1;
    for (std::int32_t len = 1; len <= short_len_; ++len) {
        power *= sigma;
        short_base_[static_cast<std::size_t>(len) + 1] = short_base_[static_cast<std::size_t>(len)] + power;
    }
    short_ranges_.assign(static_cast<std::size_t>(short_base_.back()), SaRange{});
    for (std::size_t k = 0; k < sa_.size(); ++k) {
        const std::int32_t off = sa_[k];
        const std::int32_t lim = std::min(short_len_, run_to_sentinel(off));
        std::int64_t code = 0;
        for (std::int32_t len = 1; len <= lim; ++len) {
            code = code * sigma + x_[static_cast<std::size_t>(off + len - 1)];
            SaRange& r = short_ranges_[static_cast<std::size_t>(short_base_[static_cast<std::size_t>(len)] + code)];
            if (k == 0 || lcp[k] < len) r.lo = static_cast<std::int32_t>(k);
            r.hi = static_cast<std::int32_t>(k);
        }
    }
}

std::int32_t LceIndex::lcp_ranks(std::int32_t r1, std::int32_t r2) const {
    if (r1 > r2) std::swap(r1, r2);
    return lcp_rmq_.min(static_cast<std::size_t>(r1 + 1), static_cast<std::size_t>(r2));
}

std::int32_t LceIndex::run_to_sentinel(std::int32_t offset) const {
    if (offset < n_) return n_ - offset;
    if (offset == n_ || offset == 2 * n_ + 1) return 0;
    return 2 * n_ + 1 - offset;
}

std::int32_t LceIndex::lcp(std::int32_t a, std::int32_t b) const {
    if (a == b) return run_to_sentinel(a);
    return lcp_ranks(rank_[static_cast<std::size_t>(a)], rank_[static_cast<std::size_t>(b)]);
}

std::int32_t LceIndex::lcp(Factor x, Factor y) const {
    return std::min({lcp(x.pos, y.pos), x.len, y.len});
}

int LceIndex::compare(Factor x, Factor y) const {
    const std::int32_t l = lcp(x, y);
    if (l == x.len || l == y.len) return (x.len > y.len) - (x.len < y.len);
    const Code a = symbol(x.pos + l);
    const Code b = symbol(y.pos + l);
    return (a > b) - (a < b);
}

SaRange LceIndex::combined_range(Factor f) const {
    assert(f.len <= run_to_sentinel(f.pos));
    const auto size = static_cast<std::int32_t>(sa_.size());
    if (f.len == 0) return {0, size - 1};
    if (f.len <= short_len_) {
        std::int64_t code = 0;
        for (std::int32_t k = 0; k < f.len; ++k) code = code * std::max(sigma_, 1) + x_[static_cast<std::size_t>(f.pos + k)];
        return short_ranges_[static_cast<std::size_t>(short_base_[static_cast<std::size_t>(f.len)] + code)];
    }
    const std::int32_t r = rank_[static_cast<std::size_t>(f.pos)];
    return expand(r, size, [&](std::int32_t k) { return lcp_ranks(k, r) >= f.len; });
}

SaRange LceIndex::text_range(Pos p, std::int32_t len) const {
    if (len == 0) return {0, n_ - 1};
    assert(p >= 1 && p + len - 1 <= n_);
    const SaRange r = combined_range({forward_offset(p), len});
    return {text_before_[static_cast<std::size_t>(r.lo)], text_before_[static_cast<std::size_t>(r.hi) + 1] - 1};
}

std::vector<std::int32_t> sort_substrings(const LceIndex& index, std::span<const Factor> items) {
    // A factor's rank is decided by (first rank of its range, length):
    // disjoint ranges order like their suffixes and nested ones are in a
    // prefix relation, where the shorter string comes first.
    struct Key {
        std::int32_t lo, len;
        std::uint32_t item;
    };
    std::vector<Key> keys(items.size());
    for (std::size_t k = 0; k < items.size(); ++k)
        keys[k] = {index.combined_range(items[k]).lo, items[k].len, static_cast<std::uint32_t>(k)};
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        return a.lo != b.lo ? a.lo < b.lo : a.len < b.len;
    });
    std::vector<std::int32_t> ranks(items.size());
    std::int32_t cur = -1;
    for (std::size_t k = 0; k < keys.size(); ++k) {
        if (k == 0 || keys[k].lo != keys[k - 1].lo || keys[k].len != keys[k - 1].len) ++cur;
        ranks[keys[k].item] = cur;
    }
    return ranks;
}

}  // namespace mups
