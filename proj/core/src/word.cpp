#include "maskit/word.hpp"

#include <algorithm>

#include "maskit/errors.hpp"

namespace maskit {

char Letter::symbol() const {
    static constexpr char table[] = {'a', 'A', 'b', 'B', 't', 'T'};
    return table[index()];
}

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
    if (!out.empty() && out.back() == l.inverse())
        out.pop_back();
    else
        out.push_back(l);
}

std::vector<Letter> reduce(const std::vector<Letter>& in) {
    std::vector<Letter> out;
    out.reserve(in.size());
    for (Letter l : in) push_reduced(out, l);
    return out;
}

}  // namespace

GroupWord::GroupWord(std::initializer_list<Letter> letters)
    : letters_(reduce(std::vector<Letter>(letters))) {}

GroupWord::GroupWord(std::vector<Letter> letters) : letters_(reduce(letters)) {}

GroupWord GroupWord::inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
    GroupWord w;
    w.letters_ = std::move(out);
    return w;
}

GroupWord GroupWord::operator*(const GroupWord& rhs) const {
    GroupWord w;
    w.letters_ = letters_;
    for (Letter l : rhs.letters_) push_reduced(w.letters_, l);
    return w;
}

bool GroupWord::is_cyclically_reduced() const {
    return letters_.size() < 2 || letters_.front() != letters_.back().inverse();
}

GroupWord GroupWord::rotated(std::size_t k) const {
    GroupWord w;
    w.letters_ = letters_;
    if (!letters_.empty())
        std::rotate(w.letters_.begin(), w.letters_.begin() + (k % letters_.size()), w.letters_.end());
    return w;
}

std::string GroupWord::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (Letter l : letters_) s.push_back(l.symbol());
    return s;
}

GroupWord parse_word(std::string_view text) {
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'a': letters.push_back(S1); break;
            case 'A': letters.push_back(S1inv); break;
            case 'b': letters.push_back(S2); break;
            case 'B': letters.push_back(S2inv); break;
            case 't': letters.push_back(Tl); break;
            case 'T': letters.push_back(Tinv); break;
            case ' ':
            case '\t': break;
            default:
                throw ParseError(std::string("invalid character '") + text[i] + "' in word", i);
        }
    }
    return GroupWord(std::move(letters));
}

GroupWord cyclic_reduce(const GroupWord& w) {
    const auto& l = w.letters();
    std::size_t lo = 0, hi = l.size();
    while (hi - lo >= 2 && l[lo] == l[hi - 1].inverse()) {
        ++lo;
        --hi;
    }
    return GroupWord(std::vector<Letter>(l.begin() + lo, l.begin() + hi));
}

GroupWord canonical_cyclic(const GroupWord& w) {
    GroupWord best = w;
    const GroupWord inv = w.inverse();
    for (std::size_t k = 0; k < w.size(); ++k) {
        best = std::min({best, w.rotated(k), inv.rotated(k)});
    }
    return best;
}

GroupWord Automorphism::apply(const GroupWord& w) const {
    std::vector<Letter> out;
    for (Letter l : w.letters()) {
        const GroupWord& img = images[static_cast<int>(l.gen)];
        if (l.inverted) {
            const GroupWord inv = img.inverse();
            out.insert(out.end(), inv.letters().begin(), inv.letters().end());
        } else {
            out.insert(out.end(), img.letters().begin(), img.letters().end());
        }
    }
    return GroupWord(std::move(out));
}

Automorphism twist_sigma1(int sign) {
    const Letter s = sign > 0 ? S1 : S1inv;
    return {sign > 0 ? "D_sigma1" : "D_sigma1^-1", {GroupWord{S1}, GroupWord{S2}, GroupWord{s, Tl}}};
}

Automorphism twist_sigma2(int sign) {
    const Letter s = sign > 0 ? S2 : S2inv;
    return {sign > 0 ? "D_sigma2" : "D_sigma2^-1", {GroupWord{S1}, GroupWord{S2}, GroupWord{Tl, s}}};
}

Automorphism twist_t(int sign) {
    const Letter t = sign > 0 ? Tl : Tinv;
    return {sign > 0 ? "D_T" : "D_T^-1", {GroupWord{S1, t}, GroupWord{S2, t}, GroupWord{Tl}}};
}

}  // namespace maskit
