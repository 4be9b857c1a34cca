#include "mups/text.hpp"

#include <algorithm>
#include <stdexcept>

namespace mups {

Text Text::from_symbols(std::string_view raw) {
    if (raw.empty()) throw std::invalid_argument("text must be nonempty");
    Text t;
    t.code_of_.fill(-1);
    t.codes_.reserve(raw.size());
    for (char ch : raw) {
        const auto sym = static_cast<unsigned char>(ch);
        if (t.code_of_[sym] < 0) {
            t.code_of_[sym] = static_cast<Code>(t.symbols_.size());
            t.symbols_.push_back(sym);
        }
        t.codes_.push_back(t.code_of_[sym]);
    }
    return t;
}

Code Text::code_of(unsigned char symbol) const {
    const Code c = code_of_[symbol];
    return c < 0 ? sigma() : c;
}

unsigned char Text::symbol_of(Code c) const {
    if (c < 0 || c >= sigma()) throw std::out_of_range("code outside the text alphabet");
    return symbols_[static_cast<std::size_t>(c)];
}

std::string Text::str() const {
    std::string out(codes_.size(), '\0');
    for (std::size_t k = 0; k < codes_.size(); ++k)
        out[k] = static_cast<char>(symbols_[static_cast<std::size_t>(codes_[k])]);
    return out;
}

std::string Text::substr(Interval iv) const {
    std::string out;
    for (Pos p = iv.b; p <= iv.e; ++p) out.push_back(static_cast<char>(symbol_of(at(p))));
    return out;
}

void validate(const Text& t, SubstitutionQuery q) {
    if (q.i < 1 || q.i > t.size()) throw std::out_of_range("substitution position out of range");
    if (q.s < 0 || q.s > t.sigma()) throw std::out_of_range("substitution code out of range");
    if (q.s == t.at(q.i)) throw std::invalid_argument("substitution must change the character");
}

SubstitutionQuery make_query(const Text& t, Pos i, unsigned char symbol) {
    SubstitutionQuery q{i, t.code_of(symbol)};
    validate(t, q);
    return q;
}

std::string apply_substitution(const Text& t, SubstitutionQuery q, unsigned char fresh_symbol) {
    validate(t, q);
    std::string out = t.str();
    unsigned char sym = fresh_symbol;
    if (q.s < t.sigma()) {
        sym = t.symbol_of(q.s);
    } else if (t.code_of(fresh_symbol) != t.sigma()) {
        throw std::invalid_argument("fresh symbol occurs in the text");
    }
    out[static_cast<std::size_t>(q.i - 1)] = static_cast<char>(sym);
    return out;
}

Text apply_substitution(const Text& t, Pos i, unsigned char symbol) {
    const SubstitutionQuery q = make_query(t, i, symbol);
    return Text::from_symbols(apply_substitution(t, q, symbol));
}

MupsSet apply_delta(const MupsSet& before, const MupsDelta& delta) {
    std::vector<Interval> removed = delta.removed;
    std::sort(removed.begin(), removed.end());
    MupsSet out;
    out.reserve(before.size() + delta.added.size());
    for (const Interval& iv : before)
        if (!std::binary_search(removed.begin(), removed.end(), iv)) out.push_back(iv);
    out.insert(out.end(), delta.added.begin(), delta.added.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_non_nesting(const MupsSet& set) {
    for (std::size_t k = 1; k < set.size(); ++k)
        if (set[k - 1].b >= set[k].b || set[k - 1].e >= set[k].e) return false;
    return true;
}

}  // namespace mups
