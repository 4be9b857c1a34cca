#include "mups/oracle.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace mups::oracle {

namespace {

bool matches_at(std::span<const Code> text, std::span<const Code> w, std::size_t start) {
    if (start + w.size() > text.size()) return false;
    return std::equal(w.begin(), w.end(), text.begin() + static_cast<std::ptrdiff_t>(start));
}

std::u32string key_of(std::span<const Code> text, std::size_t b, std::size_t len) {
    std::u32string k(len, U'\0');
    for (std::size_t x = 0; x < len; ++x) k[x] = static_cast<char32_t>(text[b + x]);
    return k;
}

}  // namespace

OccurrenceSets naive_occurrences(std::span<const Code> text, std::span<const Code> w, Pos i) {
    OccurrenceSets out;
    const auto n = text.size();
    if (w.empty()) {
        out.empty_count = n + 1;
        return out;
    }
    for (std::size_t b = 0; b + w.size() <= n; ++b) {
        if (!matches_at(text, w, b)) continue;
        const Pos start = static_cast<Pos>(b + 1);
        const Pos end = static_cast<Pos>(b + w.size());
        out.beg.push_back(start);
        (start <= i && i <= end ? out.inbeg : out.xbeg).push_back(start);
    }
    return out;
}

OccurrenceSets naive_occurrences(const Text& t, Interval w, Pos i) {
    auto codes = t.codes();
    return naive_occurrences(codes, codes.subspan(static_cast<std::size_t>(w.b - 1),
                                                  static_cast<std::size_t>(w.length())),
                             i);
}

std::size_t count_occurrences(std::span<const Code> text, std::span<const Code> w) {
    if (w.empty()) return text.size() + 1;
    std::size_t c = 0;
    for (std::size_t b = 0; b + w.size() <= text.size(); ++b)
        if (matches_at(text, w, b)) ++c;
    return c;
}

MupsSet naive_mups(std::span<const Code> text) {
    const auto n = static_cast<std::ptrdiff_t>(text.size());
    // Every occurrence of a palindrome is itself a palindromic occurrence,
    // so counting over all (center, radius) pairs gives exact counts.
    struct Occ {
        std::ptrdiff_t b, len;
    };
    std::vector<Occ> occs;
    std::unordered_map<std::u32string, int> count;
    for (std::ptrdiff_t c2 = 0; c2 <= 2 * (n - 1); ++c2) {
        std::ptrdiff_t lo = c2 / 2;
        std::ptrdiff_t hi = c2 - lo;
        while (lo >= 0 && hi < n && text[static_cast<std::size_t>(lo)] == text[static_cast<std::size_t>(hi)]) {
            const std::ptrdiff_t len = hi - lo + 1;
            occs.push_back({lo, len});
            ++count[key_of(text, static_cast<std::size_t>(lo), static_cast<std::size_t>(len))];
            --lo;
            ++hi;
        }
    }
    MupsSet out;
    for (const Occ& o : occs) {
        const auto k = key_of(text, static_cast<std::size_t>(o.b), static_cast<std::size_t>(o.len));
        if (count[k] != 1) continue;
        bool inner_repeating = o.len <= 2;
        if (!inner_repeating) {
            auto it = count.find(k.substr(1, k.size() - 2));
            inner_repeating = it != count.end() && it->second >= 2;
        }
        if (inner_repeating) out.push_back({static_cast<Pos>(o.b + 1), static_cast<Pos>(o.b + o.len)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

MupsSet naive_mups(const Text& t) { return naive_mups(t.codes()); }

std::vector<Code> substituted(const Text& t, SubstitutionQuery q) {
    validate(t, q);
    std::vector<Code> out(t.codes().begin(), t.codes().end());
    out[static_cast<std::size_t>(q.i - 1)] = q.s;
    return out;
}

MupsDelta naive_delta(const Text& t, SubstitutionQuery q) {
    const MupsSet before = naive_mups(t);
    const MupsSet after = naive_mups(substituted(t, q));
    MupsDelta d;
    std::set_difference(before.begin(), before.end(), after.begin(), after.end(), std::back_inserter(d.removed));
    std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(d.added));
    return d;
}

}  // namespace mups::oracle
