#include <stdexcept>

#include "doctest.h"
#include "mups/text.hpp"

using namespace mups;

TEST_CASE("make_text assigns codes by first occurrence") {
    const Text aa = Text::from_symbols("aa");
    CHECK(aa.size() == 2);
    CHECK(aa.sigma() == 1);
    CHECK(std::vector<Code>(aa.codes().begin(), aa.codes().end()) == std::vector<Code>{0, 0});

    const Text ab = Text::from_symbols("ab");
    CHECK(ab.sigma() == 2);
    CHECK(std::vector<Code>(ab.codes().begin(), ab.codes().end()) == std::vector<Code>{0, 1});

    const Text banana = Text::from_symbols("banana");
    CHECK(banana.sigma() == 3);
    CHECK(std::vector<Code>(banana.codes().begin(), banana.codes().end()) == std::vector<Code>{0, 1, 2, 1, 2, 1});
    CHECK(banana.str() == "banana");
    CHECK(banana.substr({2, 4}) == "ana");
}

TEST_CASE("make_text rejects empty input") { CHECK_THROWS_AS(Text::from_symbols(""), std::invalid_argument); }

TEST_CASE("apply_substitution") {
    CHECK(apply_substitution(Text::from_symbols("aa"), 1, 'b').str() == "ba");
    CHECK(apply_substitution(Text::from_symbols("banana"), 2, 'o').str() == "bonana");
    CHECK(apply_substitution(Text::from_symbols("xaabaayacaz"), 9, 'b').str() == "xaabaayabaz");

    const Text t = Text::from_symbols("banana");
    CHECK_THROWS_AS(apply_substitution(t, 2, 'a'), std::invalid_argument);
    CHECK_THROWS_AS(make_query(t, 0, 'a'), std::out_of_range);
    CHECK_THROWS_AS(make_query(t, 7, 'a'), std::out_of_range);
    CHECK(make_query(t, 1, 'z').s == t.sigma());
    CHECK_THROWS_AS(apply_substitution(t, SubstitutionQuery{1, t.sigma()}, 'a'), std::invalid_argument);
    CHECK(apply_substitution(t, SubstitutionQuery{1, t.sigma()}, '?') == "?anana");
}

TEST_CASE("substitution with the old character is an involution") {
    const Text t = Text::from_symbols("xaabaayacaz");
    const Text u = apply_substitution(t, 9, 'b');
    CHECK(apply_substitution(u, 9, 'c').str() == t.str());
}

TEST_CASE("apply_delta and non-nesting") {
    const MupsSet before{{1, 1}, {3, 5}};
    const MupsDelta d{{{3, 5}}, {{2, 4}, {6, 6}}};
    CHECK(apply_delta(before, d) == MupsSet{{1, 1}, {2, 4}, {6, 6}});
    CHECK(is_non_nesting(before));
    CHECK_FALSE(is_non_nesting(MupsSet{{1, 5}, {2, 3}}));
    CHECK_FALSE(is_non_nesting(MupsSet{{1, 3}, {1, 4}}));
}
