#pragma once

// Value types shared by every part of the library.
//
// Positions are 1-based and intervals are closed ([b, e] covers T[b..e]).
// Character codes are dense: the first distinct symbol of the input gets
// code 0, the next one code 1, and so on.  A query may name a symbol that
// does not occur in the text; it receives the code sigma().

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mups {

using Code = std::int32_t;
using Pos = std::int32_t;

struct Interval {
    Pos b = 0;
    Pos e = 0;

    [[nodiscard]] Pos length() const { return e - b + 1; }
    [[nodiscard]] bool contains(Pos p) const { return b <= p && p <= e; }
    // Twice the center, so even-length palindromes have integral centers.
    [[nodiscard]] Pos center2() const { return b + e; }

    friend auto operator<=>(const Interval&, const Interval&) = default;
};

class Text {
public:
    // Codes are assigned by first occurrence.  Throws std::invalid_argument
    // on empty input.
    static Text from_symbols(std::string_view raw);

    [[nodiscard]] Pos size() const { return static_cast<Pos>(codes_.size()); }
    [[nodiscard]] Code sigma() const { return static_cast<Code>(symbols_.size()); }

    // 1-based access; p must be in [1, size()].
    [[nodiscard]] Code at(Pos p) const { return codes_[static_cast<std::size_t>(p - 1)]; }
    [[nodiscard]] std::span<const Code> codes() const { return codes_; }

    // Code of a symbol; sigma() when the symbol does not occur.
    [[nodiscard]] Code code_of(unsigned char symbol) const;
    // Symbol for a code in [0, sigma()).
    [[nodiscard]] unsigned char symbol_of(Code c) const;

    [[nodiscard]] std::string str() const;
    [[nodiscard]] std::string substr(Interval iv) const;

private:
    std::vector<Code> codes_;
    std::vector<unsigned char> symbols_;
    std::array<Code, 256> code_of_{};
};

// Substitute T[i] by the character with code s.  Codes are interpreted
// against the original text; s == sigma() denotes a fresh symbol.
struct SubstitutionQuery {
    Pos i = 0;
    Code s = 0;
};

// Throws std::out_of_range for a bad position and std::invalid_argument
// when s would not change the character.
void validate(const Text& t, SubstitutionQuery q);

// Query from a raw symbol; symbols absent from t map to the fresh code.
SubstitutionQuery make_query(const Text& t, Pos i, unsigned char symbol);

// T' as raw bytes.  A fresh code needs a concrete byte; `fresh_symbol`
// is used and must not occur in t.
std::string apply_substitution(const Text& t, SubstitutionQuery q, unsigned char fresh_symbol);

// Convenience wrapper that works on raw strings; the result is re-coded.
Text apply_substitution(const Text& t, Pos i, unsigned char symbol);

// Sorted by start; starts and ends both strictly increase for a valid set.
using MupsSet = std::vector<Interval>;

struct MupsDelta {
    std::vector<Interval> removed;
    std::vector<Interval> added;

    [[nodiscard]] std::size_t size() const { return removed.size() + added.size(); }
    friend bool operator==(const MupsDelta&, const MupsDelta&) = default;
};

// (MUPS(T) \ removed) U added, sorted.
MupsSet apply_delta(const MupsSet& before, const MupsDelta& delta);

// True when starts and ends strictly increase.
bool is_non_nesting(const MupsSet& set);

}  // namespace mups
