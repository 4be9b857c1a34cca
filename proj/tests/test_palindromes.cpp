#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "mups/palindromes.hpp"
#include "support.hpp"

using namespace mups;

namespace {

int naive_radius(const std::string& s, int c2) {
    const int n = static_cast<int>(s.size());
    int lo = c2 / 2 - 1, hi = (c2 + 1) / 2 - 1;  // 0-based
    if (c2 % 2 == 0) {
        --lo;
        ++hi;
    }
    int r = 0;
    while (lo >= 0 && hi < n && s[static_cast<std::size_t>(lo)] == s[static_cast<std::size_t>(hi)]) {
        ++r;
        --lo;
        ++hi;
    }
    return r;
}

std::optional<OneMismatchPalindrome> naive_one_mismatch(const std::string& s, int c2) {
    const int n = static_cast<int>(s.size());
    const int c = c2 / 2;
    int lo = c2 % 2 == 0 ? c - 1 : c, hi = c2 % 2 == 0 ? c + 1 : c + 1;  // 1-based
    int mismatches = 0;
    OneMismatchPalindrome out{c2, {}, 0, 0};
    while (lo >= 1 && hi <= n) {
        if (s[static_cast<std::size_t>(lo - 1)] != s[static_cast<std::size_t>(hi - 1)]) {
            if (++mismatches == 2) break;
            out.mis_left = lo;
            out.mis_right = hi;
        }
        out.iv = {lo, hi};
        --lo;
        ++hi;
    }
    if (mismatches == 0) return std::nullopt;
    return out;
}

bool is_pal(const std::string& x) { return std::equal(x.begin(), x.end(), x.rbegin()); }

}  // namespace

TEST_CASE("maximal palindromes examples") {
    const auto aba = maximal_palindromes(Text::from_symbols("aba"));
    REQUIRE(aba.size() == 5);
    CHECK(aba[2].center2 == 4);
    CHECK(aba[2].radius == 1);
    CHECK(aba[2].interval() == Interval{1, 3});
    CHECK(aba[0].radius == 0);
    CHECK(aba[4].radius == 0);
    CHECK(aba[1].radius == 0);
    CHECK(aba[3].radius == 0);

    const auto aa = maximal_palindromes(Text::from_symbols("aa"));
    CHECK(aa[1].radius == 1);
    CHECK(aa[1].interval() == Interval{1, 2});

    const std::string fixture = "aabaacaabacaabbaaabcbc";
    const auto p = maximal_palindromes(Text::from_symbols(fixture));
    for (const auto& m : p) CHECK(m.radius == naive_radius(fixture, m.center2));
}

TEST_CASE("maximal palindromes agree with expansion on random strings") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        const std::string s = testing::random_string(rng, 1 + trial % 50, 1 + trial % 4);
        const auto p = maximal_palindromes(Text::from_symbols(s));
        REQUIRE(p.size() == 2 * s.size() - 1);
        for (const auto& m : p) CHECK(m.radius == naive_radius(s, m.center2));
    }
}

TEST_CASE("one-mismatch maximal palindromes") {
    {
        const LceIndex idx(Text::from_symbols("ab"));
        const auto r = one_mismatch_maximal_palindromes(idx);
        REQUIRE(r.size() == 1);
        CHECK(r[0].center2 == 3);
        CHECK(r[0].iv == Interval{1, 2});
        CHECK(r[0].mis_left == 1);
        CHECK(r[0].mis_right == 2);
    }
    {
        const LceIndex idx(Text::from_symbols("aabaa"));
        for (const auto& r : one_mismatch_maximal_palindromes(idx)) CHECK(r.center2 != 6);
    }
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        const std::string s = testing::random_string(rng, 1 + trial % 40, 1 + trial % 3);
        const LceIndex idx(Text::from_symbols(s));
        std::map<int, OneMismatchPalindrome> got;
        for (const auto& r : one_mismatch_maximal_palindromes(idx)) got[r.center2] = r;
        for (int c2 = 2; c2 <= 2 * static_cast<int>(s.size()); ++c2) {
            const auto want = naive_one_mismatch(s, c2);
            REQUIRE(want.has_value() == (got.count(c2) == 1));
            if (!want) continue;
            const auto& g = got[c2];
            CHECK(g.iv == want->iv);
            CHECK(g.mis_left == want->mis_left);
            CHECK(g.mis_right == want->mis_right);
        }
    }
}

namespace {

void check_eertree(const std::string& s) {
    const Text t = Text::from_symbols(s);
    const LceIndex idx(t);
    const Eertree et(t, idx);
    const int n = static_cast<int>(s.size());
    std::map<std::string, std::vector<Pos>> occ;
    for (int b = 1; b <= n; ++b)
        for (int e = b; e <= n; ++e) {
            const std::string x = s.substr(static_cast<std::size_t>(b - 1), static_cast<std::size_t>(e - b + 1));
            if (is_pal(x)) occ[x].push_back(b);
        }
    REQUIRE(et.size() == static_cast<int>(occ.size()) + 2);
    CHECK(et.size() <= n + 2);
    for (std::int32_t v = 2; v < et.size(); ++v) {
        const auto& x = et.node(v);
        const std::string str = t.substr(et.interval(v));
        REQUIRE(occ.count(str) == 1);
        const auto& o = occ[str];
        CHECK(x.count == static_cast<int>(o.size()));
        CHECK(x.occ.min1 == o.front());
        CHECK(x.occ.max1 == o.back());
        CHECK(x.occ.min2 == (o.size() >= 2 ? o[1] : 0));
        CHECK(x.occ.max2 == (o.size() >= 2 ? o[o.size() - 2] : 0));
        const std::int32_t p = x.parent;
        if (x.len <= 2) {
            CHECK(p == (x.len == 1 ? Eertree::kOddRoot : Eertree::kEvenRoot));
        } else {
            CHECK(t.substr(et.interval(p)) == str.substr(1, str.size() - 2));
        }
        CHECK(x.label == t.at(et.interval(v).b));
        CHECK(et.child(p, x.label) == v);
        CHECK(et.find(et.interval(v)) == v);
        for (Pos b : o) CHECK(et.find({b, b + x.len - 1}) == v);
    }
    for (const auto& m : maximal_palindromes(t)) {
        const Interval iv = m.interval();
        const std::int32_t v = et.maximal(m.center2);
        CHECK(et.node(v).len == iv.length());
        if (iv.length() > 0) CHECK(t.substr(et.interval(v)) == t.substr(iv));
    }
    if (n >= 2 && s[0] != s[1]) CHECK_FALSE(et.find({1, 2}).has_value());
}

}  // namespace

TEST_CASE("eertree examples") {
    {
        const Text t = Text::from_symbols("aa");
        const LceIndex idx(t);
        const Eertree et(t, idx);
        REQUIRE(et.size() == 4);
        CHECK(et.node(*et.find({1, 1})).count == 2);
        CHECK(et.node(*et.find({1, 2})).count == 1);
    }
    {
        const Text t = Text::from_symbols("banana");
        const LceIndex idx(t);
        const Eertree et(t, idx);
        CHECK(et.size() == 6 + 2);
        const auto ana = et.find({2, 4});
        REQUIRE(ana.has_value());
        CHECK(et.node(*ana).count == 2);
        CHECK(et.node(*ana).occ.min1 == 2);
        CHECK(et.node(*ana).occ.max1 == 4);
    }
    check_eertree("banana");
    check_eertree("aabaacaabacaabbaaabcbc");
}

TEST_CASE("eertree agrees with naive enumeration") {
    for (int n = 1; n <= 9; ++n) testing::for_each_canonical(n, 3, check_eertree);
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 150; ++trial) check_eertree(testing::random_string(rng, 10 + trial % 60, 1 + trial % 4));
}
