#pragma once

#include <random>
#include <string>

#include "mups/text.hpp"

namespace mups::testing {

inline std::string random_string(std::mt19937_64& rng, int n, int sigma) {
    std::uniform_int_distribution<int> d(0, sigma - 1);
    std::string s(static_cast<std::size_t>(n), 'a');
    for (auto& ch : s) ch = static_cast<char>('a' + d(rng));
    return s;
}

inline Text random_text(std::mt19937_64& rng, int n, int sigma) {
    return Text::from_symbols(random_string(rng, n, sigma));
}

// Calls f(s) for every canonical string (symbols by first occurrence) of
// length n over at most sigma symbols.
template <class F>
void for_each_canonical(int n, int sigma, F&& f) {
    std::string s(static_cast<std::size_t>(n), 'a');
    auto rec = [&](auto&& self, int k, int used) -> void {
        if (k == n) {
            f(static_cast<const std::string&>(s));
            return;
        }
        for (int c = 0; c < std::min(used + 1, sigma); ++c) {
            s[static_cast<std::size_t>(k)] = static_cast<char>('a' + c);
            self(self, k + 1, std::max(used, c + 1));
        }
    };
    rec(rec, 0, 0);
}

}  // namespace mups::testing
