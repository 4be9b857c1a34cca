#pragma once

// Brute-force reference computations.  Nothing here depends on the
// indexing code; differential tests compare the two.

#include <vector>

#include "mups/text.hpp"

namespace mups::oracle {

// A pattern given directly as codes; it may be empty.
using Pattern = std::vector<Code>;

struct OccurrenceSets {
    std::vector<Pos> beg;    // every occurrence start
    std::vector<Pos> inbeg;  // occurrences covering the fixed position
    std::vector<Pos> xbeg;   // the rest
    // By convention the empty pattern has n + 1 occurrences of each kind.
    std::size_t empty_count = 0;
};

OccurrenceSets naive_occurrences(std::span<const Code> text, std::span<const Code> w, Pos i);
OccurrenceSets naive_occurrences(const Text& t, Interval w, Pos i);

// Number of occurrences of w in text (n + 1 for the empty pattern).
std::size_t count_occurrences(std::span<const Code> text, std::span<const Code> w);

MupsSet naive_mups(std::span<const Code> text);
MupsSet naive_mups(const Text& t);

// T' as a code sequence (the fresh code stays sigma()).
std::vector<Code> substituted(const Text& t, SubstitutionQuery q);

MupsDelta naive_delta(const Text& t, SubstitutionQuery q);

}  // namespace mups::oracle
