#include "mups/subst_index.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace mups {

std::string_view to_string(DeltaType t) {
    switch (t) {
        case DeltaType::R1: return "R1";
        case DeltaType::R2: return "R2";
        case DeltaType::R3: return "R3";
        case DeltaType::A11: return "A1-1";
        case DeltaType::A12: return "A1-2";
        case DeltaType::A2: return "A2";
        case DeltaType::A3: return "A3";
    }
    return "?";
}

namespace {

bool empty(Interval iv) { return iv.e < iv.b; }

// Positions where every occurrence of a palindrome but one is destroyed:
// `left` keeps the leftmost occurrence, `right` the rightmost.
struct SurvivorRanges {
    Interval left;
    Interval right;
    [[nodiscard]] bool contains(Pos p) const { return left.contains(p) || right.contains(p); }
};

SurvivorRanges survivor_ranges(const Eertree::Node& x) {
    const std::int32_t len = x.len;
    const Extrema& o = x.occ;
    return {{std::max(o.max1, o.min1 + len), o.min2 + len - 1}, {o.max2, std::min(o.min1 + len - 1, o.max1 - 1)}};
}

// a minus the union of cuts, as disjoint nonempty pieces.
std::vector<Interval> subtract(Interval a, std::vector<Interval> cuts) {
    std::sort(cuts.begin(), cuts.end());
    std::vector<Interval> out;
    Pos from = a.b;
    for (const Interval c : cuts) {
        if (empty(c) || c.e < from) continue;
        if (c.b > a.e) break;
        if (c.b > from) out.push_back({from, c.b - 1});
        from = std::max(from, c.e + 1);
    }
    if (from <= a.e) out.push_back({from, a.e});
    return out;
}

void sort_unique(std::vector<Interval>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

SubstIndex::SubstIndex(Text t)
    : t_(std::move(t)),
      lce_(t_),
      pals_(maximal_palindromes(t_)),
      tree_(t_, lce_),
      mups_(compute_mups(tree_)),
      mups_set_(intervals(mups_)),
      center_(t_, lce_, tree_, pals_) {
    stats_.mups = mups_.size();
    std::vector<StabbingIndex::Record> r1;
    r1.reserve(mups_.size());
    for (std::size_t k = 0; k < mups_.size(); ++k) r1.push_back({mups_[k].iv, static_cast<std::int32_t>(k)});
    r1_ = StabbingIndex(t_.size(), std::move(r1));
    build_r2();
    build_r3();
    build_a2();
    build_one_mismatch();
}

void SubstIndex::build_r2() {
    const Pos n = t_.size();
    std::vector<KeyedLists<R2Value>::Item> items;
    for (std::size_t id = 0; id < mups_.size(); ++id) {
        const MupsRecord& m = mups_[id];
        const auto [b, e] = m.iv;
        const std::int32_t len = m.iv.length();
        const std::int32_t half = m.half();  // |Larm| = |Rarm|
        const std::int32_t arm = len / 2;    // |larm| = |rarm|
        const ArmOccurrences occ = arm_occurrences(lce_, m);
        stats_.left_arm_occurrences += occ.left.size();
        stats_.right_arm_occurrences += occ.right.size();
        auto add = [&](Pos q, Code chr, Pos j) {
            if (m.iv.contains(q)) return;
            const std::int32_t ext = std::min(lce_.lce_backward(j - 1, b - 1), lce_.lce(j + len, e + 1));
            items.push_back({q, chr, {static_cast<std::int32_t>(id), j, ext}});
        };
        // Left arm intact; the right arm differs in exactly one position.
        for (const Pos j : occ.left) {
            if (j == b) continue;
            const Pos p = j + half;
            const std::int32_t l1 = lce_.lce(p, e - arm + 1);
            if (l1 >= arm) continue;
            const Pos q = p + l1;
            if (q > n) continue;
            if (lce_.lce(q + 1, e - arm + l1 + 2) < arm - l1 - 1) continue;
            add(q, t_.at(e - arm + 1 + l1), j);
        }
        // Right arm intact; the left arm differs in exactly one position.
        for (const Pos k : occ.right) {
            if (k == e - half + 1) continue;
            const std::int32_t l1 = lce_.lce_backward(k - 1, b + arm - 1);
            if (l1 >= arm) continue;
            const Pos q = k - 1 - l1;
            if (q < 1) continue;
            if (lce_.lce_backward(q - 1, b + arm - 2 - l1) < arm - l1 - 1) continue;
            add(q, t_.at(b + arm - 1 - l1), k - arm);
        }
    }
    std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return x.value.mups < y.value.mups; });
    stats_.r2_entries = items.size();
    r2_ = KeyedLists<R2Value>(n, std::move(items));
}

void SubstIndex::build_r3() {
    std::vector<StabbingIndex::Record> recs;
    for (std::size_t id = 0; id < mups_.size(); ++id) {
        const MupsRecord& m = mups_[id];
        if (m.iv.length() <= 2) continue;  // inner part empty: always repeating
        const auto& v = tree_.node(tree_.node(m.node).parent);
        const Pos own = m.iv.b + 1;
        const Pos lo = v.occ.min1 == own ? v.occ.min2 : v.occ.min1;
        const Pos ro = v.occ.max1 == own ? v.occ.max2 : v.occ.max1;
        const Interval rho{ro, lo + v.len - 1};
        if (empty(rho)) continue;
        for (const Interval piece : subtract(rho, {m.iv})) recs.push_back({piece, static_cast<std::int32_t>(id)});
    }
    stats_.r3_intervals = recs.size();
    r3_ = StabbingIndex(t_.size(), std::move(recs));
}

void SubstIndex::build_a2() {
    std::vector<StabbingIndex::Record> recs;
    for (std::int32_t v = 2; v < tree_.size(); ++v) {
        const auto& x = tree_.node(v);
        if (x.count < 2) continue;
        const SurvivorRanges own = survivor_ranges(x);
        std::vector<Interval> cuts;
        if (!Eertree::is_root(x.parent)) {
            const SurvivorRanges inner = survivor_ranges(tree_.node(x.parent));
            cuts = {inner.left, inner.right};
        }
        auto emit = [&](Interval rho, Pos survivor) {
            if (empty(rho)) return;
            const auto payload = static_cast<std::int32_t>(survivors_.size());
            survivors_.push_back({v, survivor});
            for (const Interval piece : subtract(rho, cuts)) recs.push_back({piece, payload});
        };
        emit(own.left, x.occ.min1);
        emit(own.right, x.occ.max1);
    }
    stats_.a2_intervals = recs.size();
    a2_ = StabbingIndex(t_.size(), std::move(recs));
}

void SubstIndex::build_one_mismatch() {
    const Pos n = t_.size();
    // One record per side of every 1-mismatch maximal palindrome: fixing
    // T[pos] to chr turns it into a palindrome whose half on the intact
    // side is `arm`, read from the center outwards.
    struct Rec {
        Pos pos;
        Code chr;
        bool odd;
        Pos center2;
        Factor arm;
        SaRange range{};
        std::int32_t rank = 0;
    };
    std::vector<Rec> recs;
    for (const auto& om : one_mismatch_maximal_palindromes(lce_)) {
        const Pos c = om.center2 / 2;
        const std::int32_t r = om.iv.e - c;
        const bool odd = om.odd();
        const Pos inner = odd ? c : c + 1;
        recs.push_back({om.mis_left, t_.at(om.mis_right), odd, om.center2, lce_.forward({inner, c + r})});
        recs.push_back({om.mis_right, t_.at(om.mis_left), odd, om.center2, lce_.reversed({c - r + (odd ? 0 : 1), c})});
    }
    stats_.one_mismatch_records = recs.size();
    // Lexicographic ranks from the loci: disjoint ranges order like their
    // suffixes, nested ones are prefixes of each other.
    for (Rec& r : recs) r.range = lce_.combined_range(r.arm);
    {
        std::vector<std::uint32_t> order(recs.size());
        std::iota(order.begin(), order.end(), 0U);
        auto key = [&](std::uint32_t k) { return std::pair{recs[k].range.lo, recs[k].arm.len}; };
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });
        std::int32_t rank = -1;
        for (std::size_t k = 0; k < order.size(); ++k) {
            if (k == 0 || key(order[k]) != key(order[k - 1])) ++rank;
            recs[order[k]].rank = rank;
        }
    }
    auto group = [](const Rec& r) { return 2 * r.chr + (r.odd ? 0 : 1); };
    std::sort(recs.begin(), recs.end(), [&](const Rec& a, const Rec& b) {
        if (a.pos != b.pos) return a.pos < b.pos;
        if (group(a) != group(b)) return group(a) < group(b);
        return a.rank < b.rank;
    });

    // Loci of the arms together with the halves of all palindromes of T.
    std::vector<Locus> loci;
    loci.reserve(recs.size() + static_cast<std::size_t>(tree_.size()));
    for (const Rec& r : recs) loci.push_back({r.range, r.arm.len});
    const std::size_t first_half = loci.size();
    std::vector<bool> half_is_odd;
    for (std::int32_t v = 2; v < tree_.size(); ++v) {
        const auto& x = tree_.node(v);
        const Interval iv = tree_.interval(v);
        const Interval half{iv.e - (x.len + 1) / 2 + 1, iv.e};
        loci.push_back({lce_.combined_range(lce_.forward(half)), half.length()});
        half_is_odd.push_back(x.len % 2 == 1);
    }
    const LociTree tree(lce_.combined_size(), loci);
    std::vector<NodeId> odd_marks, even_marks{tree.root()};
    for (std::size_t k = 0; k < half_is_odd.size(); ++k)
        (half_is_odd[k] ? odd_marks : even_marks).push_back(tree.handles()[first_half + k]);
    const MarkedAncestors odd_nma(tree, odd_marks), even_nma(tree, even_marks);

    std::vector<KeyedLists<Factor>::Item> odd_arms;
    std::vector<KeyedLists<Interval>::Item> a11;
    for (std::size_t k = 0; k < recs.size(); ++k) {
        const Rec& r = recs[k];
        const Pos c = r.center2 / 2;
        // Longest other occurrence in T' created by the same edit.
        std::int32_t shared = 0;
        if (k > 0 && r.pos == recs[k - 1].pos && group(r) == group(recs[k - 1]))
            shared = std::max(shared, lce_.lcp(r.arm, recs[k - 1].arm));
        if (k + 1 < recs.size() && r.pos == recs[k + 1].pos && group(r) == group(recs[k + 1]))
            shared = std::max(shared, lce_.lcp(r.arm, recs[k + 1].arm));
        // The new palindrome centered at pos itself.
        std::int32_t centered = 0;
        if (r.odd && lce_.symbol(r.arm.pos) == r.chr)
            centered = 1 + lce_.lcp(Factor{r.arm.pos + 1, r.arm.len - 1},
                                    Factor{lce_.forward_offset(r.pos + 1), odd_radius(r.pos)});
        // Occurrences already present in T.
        const NodeId h = tree.handles()[k];
        const NodeId marked = r.odd ? odd_nma.nearest(h) : even_nma.nearest(h);
        const std::int32_t old = marked == kNoNode ? 0 : tree.depth(marked);

        if (r.odd) odd_arms.push_back({r.pos, r.chr, r.arm});

        const std::int32_t a = std::max({shared, centered, old}) + 1;
        if (a > r.arm.len) continue;
        const std::int32_t cover = r.odd ? std::abs(r.pos - c) + 1 : (r.pos <= c ? c - r.pos + 1 : r.pos - c);
        assert(a >= cover);
        if (a == cover) {
            // The contraction is the maximal palindrome of T at this center
            // and does not cover pos; it has to stay repeating.
            const std::int32_t pc = tree_.maximal(r.center2);
            bool repeating = true;
            if (!Eertree::is_root(pc)) {
                const auto& x = tree_.node(pc);
                repeating = x.count >= 2 ? !survivor_ranges(x).contains(r.pos)
                                         : (shared >= cover - 1 || centered >= cover - 1);
            }
            if (!repeating) continue;
        }
        const Interval out = r.odd ? Interval{c - a + 1, c + a - 1} : Interval{c - a + 1, c + a};
        a11.push_back({r.pos, r.chr, out});
    }
    stats_.a11_entries = a11.size();
    odd_arms_ = KeyedLists<Factor>(n, std::move(odd_arms));
    a11_ = KeyedLists<Interval>(n, std::move(a11));
}

std::vector<R2Entry> SubstIndex::r2_entries() const {
    std::vector<R2Entry> out;
    out.reserve(r2_.size());
    for (const auto& x : r2_.all()) out.push_back({{x.pos, x.sub}, x.value.mups, x.value.j, x.value.extension});
    return out;
}

CenterAnswer SubstIndex::center(SubstitutionQuery q) const {
    validate(t_, q);
    return center_.query(q);
}

std::vector<Interval> SubstIndex::removed_r1(SubstitutionQuery q) const {
    validate(t_, q);
    std::vector<Interval> out;
    for (const auto& r : r1_.stab(q.i)) out.push_back(mups_[static_cast<std::size_t>(r.payload)].iv);
    sort_unique(out);
    return out;
}

std::vector<Interval> SubstIndex::removed_r2(SubstitutionQuery q) const {
    validate(t_, q);
    return removed_r2(q, center_.query(q));
}

std::vector<Interval> SubstIndex::removed_r2(SubstitutionQuery q, const CenterAnswer& ca) const {
    std::vector<Interval> out;
    for (const auto& x : r2_.get(q.i, q.s)) out.push_back(mups_[static_cast<std::size_t>(x.value.mups)].iv);
    if (ca.is_unique_in_T && ca.contained_mups && !ca.contained_mups->contains(q.i)) out.push_back(*ca.contained_mups);
    sort_unique(out);
    return out;
}

std::vector<Interval> SubstIndex::removed_r3(SubstitutionQuery q) const {
    validate(t_, q);
    std::vector<Interval> out;
    for (const auto& r : r3_.stab(q.i)) out.push_back(mups_[static_cast<std::size_t>(r.payload)].iv);
    sort_unique(out);
    return out;
}

std::vector<Interval> SubstIndex::added_a11(SubstitutionQuery q) const {
    validate(t_, q);
    std::vector<Interval> out;
    for (const auto& x : a11_.get(q.i, q.s)) out.push_back(x.value);
    sort_unique(out);
    return out;
}

std::vector<Interval> SubstIndex::added_a12(SubstitutionQuery q) const {
    validate(t_, q);
    return added_a12(q, center_.query(q));
}

std::vector<Interval> SubstIndex::added_a12(SubstitutionQuery q, const CenterAnswer& ca) const {
    const Pos i = q.i;
    const std::int32_t r = odd_radius(i);
    const Factor right{lce_.forward_offset(i + 1), r};
    // lcp of an arm with X = s T[i+1..i+r], and the sign of arm - X.
    auto cmp = [&](Factor arm) -> std::pair<std::int32_t, int> {
        if (arm.len == 0) return {0, -1};
        const Code a0 = lce_.symbol(arm.pos);
        if (a0 != q.s) return {0, a0 < q.s ? -1 : 1};
        const std::int32_t l = 1 + lce_.lcp(Factor{arm.pos + 1, arm.len - 1}, right);
        if (l == arm.len || l == r + 1) return {l, (arm.len > r + 1) - (arm.len < r + 1)};
        const Code x = lce_.symbol(right.pos + l - 1);
        const Code y = lce_.symbol(arm.pos + l);
        return {l, y < x ? -1 : 1};
    };
    const auto arms = odd_arms_.get(i, q.s);
    std::int32_t shared = 0;
    const auto it = std::partition_point(arms.begin(), arms.end(), [&](const auto& x) { return cmp(x.value).second < 0; });
    if (it != arms.end()) shared = std::max(shared, cmp(it->value).first);
    if (it != arms.begin()) shared = std::max(shared, cmp(std::prev(it)->value).first);
    const std::int32_t known = ca.v ? (ca.v->length() + 1) / 2 : 0;
    const std::int32_t a = std::max(shared, known) + 1;
    if (a > r + 1) return {};
    return {Interval{i - a + 1, i + a - 1}};
}

std::vector<Interval> SubstIndex::added_a2(SubstitutionQuery q) const {
    validate(t_, q);
    std::vector<Interval> out;
    for (const auto& r : a2_.stab(q.i)) {
        const Survivor& s = survivors_[static_cast<std::size_t>(r.payload)];
        out.push_back({s.start, s.start + tree_.node(s.node).len - 1});
    }
    sort_unique(out);
    return out;
}

std::vector<Interval> SubstIndex::added_a3(SubstitutionQuery q) const {
    validate(t_, q);
    return added_a3(q, center_.query(q));
}

std::vector<Interval> SubstIndex::added_a3(SubstitutionQuery q, const CenterAnswer& ca) const {
    struct Hit {
        std::int32_t mups;
        std::int32_t extension;
    };
    std::vector<Hit> hits;
    for (const auto& x : r2_.get(q.i, q.s)) hits.push_back({x.value.mups, x.value.extension});
    if (ca.is_unique_in_T && ca.contained_mups && !ca.contained_mups->contains(q.i)) {
        const Interval m = *ca.contained_mups;
        const auto it = std::lower_bound(mups_set_.begin(), mups_set_.end(), m);
        const Pos j = q.i - (m.length() - 1) / 2;
        hits.push_back({static_cast<std::int32_t>(it - mups_set_.begin()),
                        std::min(lce_.lce_backward(j - 1, m.b - 1), lce_.lce(j + m.length(), m.e + 1))});
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.mups < b.mups; });
    std::vector<Interval> out;
    for (std::size_t k = 0; k < hits.size();) {
        std::size_t e = k;
        std::int32_t best = 0;
        for (; e < hits.size() && hits[e].mups == hits[k].mups; ++e) best = std::max(best, hits[e].extension);
        const Interval m = mups_[static_cast<std::size_t>(hits[k].mups)].iv;
        k = e;
        const std::int32_t ext = best + 1;
        const std::int32_t room = pals_[static_cast<std::size_t>(m.center2() - 2)].radius - m.length() / 2;
        const std::int32_t cover = q.i < m.b ? m.b - q.i - 1 : q.i - m.e - 1;
        if (ext <= room && ext <= cover) out.push_back({m.b - ext, m.e + ext});
    }
    sort_unique(out);
    return out;
}

std::vector<TypedInterval> SubstIndex::typed_delta(SubstitutionQuery q) const {
    validate(t_, q);
    const CenterAnswer ca = center_.query(q);
    std::vector<TypedInterval> removed, added;
    auto put = [](std::vector<TypedInterval>& dst, const std::vector<Interval>& src, DeltaType type) {
        for (const Interval iv : src) dst.push_back({iv, type});
    };
    put(removed, removed_r1(q), DeltaType::R1);
    put(removed, removed_r2(q, ca), DeltaType::R2);
    put(removed, removed_r3(q), DeltaType::R3);
    put(added, added_a11(q), DeltaType::A11);
    put(added, added_a12(q, ca), DeltaType::A12);
    put(added, added_a2(q), DeltaType::A2);
    put(added, added_a3(q, ca), DeltaType::A3);
    auto by_interval = [](const TypedInterval& a, const TypedInterval& b) {
        return a.iv != b.iv ? a.iv < b.iv : a.type < b.type;
    };
    auto dedupe = [&](std::vector<TypedInterval>& v) {
        std::sort(v.begin(), v.end(), by_interval);
        v.erase(std::unique(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.iv == b.iv; }), v.end());
    };
    dedupe(removed);
    dedupe(added);
    auto in = [](const std::vector<TypedInterval>& v, Interval iv) {
        return std::binary_search(v.begin(), v.end(), TypedInterval{iv, DeltaType::R1},
                                  [](const auto& a, const auto& b) { return a.iv < b.iv; });
    };
    std::vector<TypedInterval> out;
    for (const auto& x : removed)
        if (!in(added, x.iv)) out.push_back(x);
    for (const auto& x : added)
        if (!in(removed, x.iv)) out.push_back(x);
    return out;
}

MupsDelta SubstIndex::delta(SubstitutionQuery q) const {
    MupsDelta d;
    for (const auto& x : typed_delta(q)) {
        const bool removal = x.type == DeltaType::R1 || x.type == DeltaType::R2 || x.type == DeltaType::R3;
        (removal ? d.removed : d.added).push_back(x.iv);
    }
    return d;
}

MupsSet SubstIndex::after(SubstitutionQuery q) const { return apply_delta(mups_set_, delta(q)); }

}  // namespace mups
