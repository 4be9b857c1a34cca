// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli_roundtrip.hpp"
#include "mups/oracle.hpp"
#include "mups/subst_index.hpp"
#include "support.hpp"

using namespace mups;

namespace {

constexpr double kBoundC = 3.0;

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

long peak_rss_kib() {
    std::ifstream in("/proc/self/status");
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("VmHWM:", 0) == 0) return std::stol(line.substr(6));
    return -1;
}

// Delta-size bound and structural checks shared by criteria 1, 2, 3 and 5.
struct Tracker {
    std::size_t texts = 0;
    std::size_t queries = 0;
    std::size_t mismatches = 0;
    std::string first_mismatch;

    std::size_t structural_violations = 0;
    std::string first_structural;

    double worst_ratio = 0.0;  // d / (log2 n + 1)
    std::size_t bound_violations = 0;
    std::string worst_case;

    void structure(const SubstIndex& idx) {
        ++texts;
        const Pos n = idx.text().size();
        const auto& st = idx.stats();
        const bool ok = idx.mups().size() <= static_cast<std::size_t>(n) && is_non_nesting(idx.mups()) &&
                        st.left_arm_occurrences <= 2 * static_cast<std::size_t>(n) &&
                        st.right_arm_occurrences <= 2 * static_cast<std::size_t>(n);
        if (!ok && structural_violations++ == 0) first_structural = idx.text().str();
    }

    void query(const SubstIndex& idx, SubstitutionQuery q) {
        ++queries;
        const MupsDelta got = idx.delta(q);
        if (got != oracle::naive_delta(idx.text(), q) && mismatches++ == 0)
            first_mismatch = idx.text().str() + " i=" + std::to_string(q.i) + " s=" + std::to_string(q.s);
        const double lg = std::log2(static_cast<double>(idx.text().size()));
        const auto d = static_cast<double>(got.size());
        if (d > kBoundC * lg + kBoundC) ++bound_violations;
        if (d / (lg + 1.0) > worst_ratio) {
            worst_ratio = d / (lg + 1.0);
            worst_case = "d=" + std::to_string(got.size()) + " n=" + std::to_string(idx.text().size());
        }
    }
};

// Arm counts recomputed by brute force, cross-checking the index statistics.
bool arms_brute_force(const SubstIndex& idx) {
    const auto codes = idx.text().codes();
    std::size_t left = 0, right = 0;
    for (const MupsRecord& m : idx.mups_records()) {
        auto piece = [&](Interval iv) {
            return codes.subspan(static_cast<std::size_t>(iv.b - 1), static_cast<std::size_t>(iv.length()));
        };
        left += oracle::count_occurrences(codes, piece(m.left_arm()));
        right += oracle::count_occurrences(codes, piece(m.right_arm()));
    }
    const auto n = static_cast<std::size_t>(idx.text().size());
    return left == idx.stats().left_arm_occurrences && right == idx.stats().right_arm_occurrences && left <= 2 * n &&
           right <= 2 * n;
}

Outcome exhaustive(Tracker& tr, std::size_t& arm_mismatches) {
    const auto t0 = Clock::now();
    const std::size_t before = tr.queries;
    for (int n = 1; n <= 12; ++n)
        testing::for_each_canonical(n, 3, [&](const std::string& s) {
            const SubstIndex idx(Text::from_symbols(s));
            tr.structure(idx);
            if (!arms_brute_force(idx)) ++arm_mismatches;
            const Text& t = idx.text();
            // Codes below sigma() are the symbols present.  Any absent symbol,
            // from the alphabet or fresh, behaves like code sigma().
            for (Pos i = 1; i <= t.size(); ++i)
                for (Code c = 0; c <= t.sigma(); ++c)
                    if (c != t.at(i)) tr.query(idx, {i, c});
        });
    std::ostringstream os;
    os << tr.queries - before << " queries over " << tr.texts << " strings, " << tr.mismatches << " mismatches, "
       << seconds_since(t0) << " s";
    if (tr.mismatches) os << "; first: " << tr.first_mismatch;
    return {tr.mismatches == 0, os.str()};
}

Outcome randomized(Tracker& tr) {
    const auto t0 = Clock::now();
    const std::size_t q0 = tr.queries, m0 = tr.mismatches;
    std::mt19937_64 rng(20240601);
    const int sigmas[] = {2, 4, 26};
    for (int trial = 0; trial < 500; ++trial) {
        const int n = std::uniform_int_distribution<int>(13, 2000)(rng);
        const SubstIndex idx(testing::random_text(rng, n, sigmas[trial % 3]));
        tr.structure(idx);
        const Text& t = idx.text();
        for (int k = 0; k < 20; ++k) {
            const Pos i = std::uniform_int_distribution<Pos>(1, t.size())(rng);
            Code c = std::uniform_int_distribution<Code>(0, t.sigma() - 1)(rng);
            if (c >= t.at(i)) ++c;
            tr.query(idx, {i, c});
        }
    }
    std::ostringstream os;
    os << tr.queries - q0 << " queries, " << tr.mismatches - m0 << " mismatches, " << seconds_since(t0) << " s";
    if (tr.mismatches > m0) os << "; first: " << tr.first_mismatch;
    return {tr.mismatches == m0, os.str()};
}

Outcome no_shared_covering_palindrome() {
    std::mt19937_64 rng(5);
    std::size_t texts = 0, pairs = 0, violations = 0;
    std::string first;
    for (int trial = 0; trial < 1500; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 20)(rng);
        const Text t = testing::random_text(rng, n, 2 + trial % 3);
        ++texts;
        const std::vector<Code> before(t.codes().begin(), t.codes().end());
        for (Pos i = 1; i <= t.size(); ++i)
            for (Code c = 0; c <= t.sigma(); ++c) {
                if (c == t.at(i)) continue;
                const std::vector<Code> after = oracle::substituted(t, {i, c});
                std::set<std::vector<Code>> pals;
                for (std::size_t b = 0; b < after.size(); ++b)
                    for (std::size_t e = b; e < after.size(); ++e)
                        if (std::equal(after.begin() + static_cast<std::ptrdiff_t>(b),
                                       after.begin() + static_cast<std::ptrdiff_t>(e + 1),
                                       after.rbegin() + static_cast<std::ptrdiff_t>(after.size() - 1 - e)))
                            pals.emplace(after.begin() + static_cast<std::ptrdiff_t>(b),
                                         after.begin() + static_cast<std::ptrdiff_t>(e + 1));
                for (const auto& w : pals) {
                    ++pairs;
                    const bool in_t = !oracle::naive_occurrences(before, w, i).inbeg.empty();
                    const bool in_t2 = !oracle::naive_occurrences(after, w, i).inbeg.empty();
                    if (in_t && in_t2 && violations++ == 0)
                        first = t.str() + " i=" + std::to_string(i) + " s=" + std::to_string(c);
                }
            }
    }
    std::ostringstream os;
    os << texts << " texts, " << pairs << " (query, palindrome) pairs, " << violations << " violations";
    if (violations) os << "; first: " << first;
    return {violations == 0, os.str()};
}

Outcome fixture() {
    const SubstIndex idx(Text::from_symbols("aabaacaabacaabbaaabcbc"));
    const Code a = idx.text().code_of('a');
    bool k11 = false, k15 = false, from17 = false;
    for (const R2Entry& e : idx.r2_entries()) {
        if (idx.mups_records()[static_cast<std::size_t>(e.mups)].iv != Interval{1, 5}) continue;
        if (e.j == 17) from17 = true;
        if (e.key.s != a) continue;
        k11 = k11 || e.key.i == 11;
        k15 = k15 || e.key.i == 15;
    }
    auto has = [](const std::vector<Interval>& v, Interval x) { return std::find(v.begin(), v.end(), x) != v.end(); };
    const bool r2_11 = has(idx.removed_r2({11, a}), {1, 5});
    const bool r2_15 = has(idx.removed_r2({15, a}), {1, 5});
    std::ostringstream os;
    os << "key (11,a): " << k11 << ", key (15,a): " << k15 << ", key from arm at 17: " << from17
       << ", R2 query hits: " << r2_11 << r2_15;
    return {k11 && k15 && !from17 && r2_11 && r2_15, os.str()};
}

Outcome performance() {
    std::mt19937_64 rng(7);
    const Text t = testing::random_text(rng, 1'000'000, 4);
    const long rss0 = peak_rss_kib();
    const auto t0 = Clock::now();
    const SubstIndex idx{Text(t)};
    const double build_s = seconds_since(t0);
    const long peak = peak_rss_kib();

    std::vector<double> micros;
    micros.reserve(10000);
    std::size_t sink = 0;
    for (int k = 0; k < 10000; ++k) {
        const Pos i = std::uniform_int_distribution<Pos>(1, t.size())(rng);
        Code c = std::uniform_int_distribution<Code>(0, t.sigma() - 1)(rng);
        if (c >= t.at(i)) ++c;
        const auto s = Clock::now();
        sink += idx.delta({i, c}).size();
        micros.push_back(std::chrono::duration<double, std::micro>(Clock::now() - s).count());
    }
    std::nth_element(micros.begin(), micros.begin() + 5000, micros.end());
    const double median = micros[5000];
    const double peak_mib = static_cast<double>(peak) / 1024.0;
    std::ostringstream os;
    os << "build " << build_s << " s (limit 30), peak RSS " << peak_mib << " MiB (limit 2048, "
       << static_cast<double>(rss0) / 1024.0 << " before build), median delta " << median
       << " us (limit 100), total delta size " << sink;
    return {build_s <= 30.0 && peak >= 0 && peak_mib <= 2048.0 && median <= 100.0, os.str()};
}

}  // namespace

int main() {
    std::map<int, std::pair<std::string, Outcome>> results;
    auto record = [&](int id, std::string name, Outcome o) {
        std::cerr << "criterion " << id << " done\n";
        results[id] = {std::move(name), std::move(o)};
    };

    // Memory is measured as the process peak, so this runs first.
    record(7, "build and query at n=1e6, sigma=4", performance());

    Tracker tr;
    std::size_t arm_mismatches = 0;
    record(1, "exhaustive oracle equivalence, n<=12, sigma<=3", exhaustive(tr, arm_mismatches));
    record(2, "randomized oracle equivalence, n in [13,2000]", randomized(tr));
    {
        std::ostringstream os;
        os << tr.texts << " texts, " << tr.structural_violations << " violations, " << arm_mismatches
           << " brute-force arm count disagreements";
        if (tr.structural_violations) os << "; first: " << tr.first_structural;
        record(3, "|MUPS|<=n, non-nesting, arm occurrences <=2n",
               {tr.structural_violations == 0 && arm_mismatches == 0, os.str()});
    }
    record(4, "no palindrome covers i in both T and T'", no_shared_covering_palindrome());
    {
        std::ostringstream os;
        os << tr.queries << " queries, C=" << kBoundC << ", " << tr.bound_violations
           << " violations, worst d/(log2 n+1)=" << tr.worst_ratio << " (" << tr.worst_case << ")";
        record(5, "delta size <= C*log2(n)+C", {tr.bound_violations == 0, os.str()});
    }
    record(6, "fixture R2 keys", fixture());
    {
        const auto rep = testing::cli_round_trip(MUPS_CLI_PATH, 100, 88);
        std::ostringstream os;
        os << rep.trials << " trials, " << rep.failures << " failures";
        if (rep.failures) os << "; first: " << rep.first_failure;
        record(8, "CLI after equals list on the edited text", {rep.failures == 0 && rep.trials == 100, os.str()});
    }

    bool all = true;
    for (const auto& [id, r] : results) {
        all = all && r.second.pass;
        std::cout << (r.second.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << r.first << "): "
                  << r.second.detail << '\n';
    }
    std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << '\n';
    return all ? 0 : 1;
}
