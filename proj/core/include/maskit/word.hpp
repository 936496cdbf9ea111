#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace maskit {

enum class Gen : std::uint8_t { S1 = 0, S2 = 1, T = 2 };

struct Letter {
    Gen gen = Gen::T;
    bool inverted = false;

    Letter inverse() const { return {gen, !inverted}; }
    char symbol() const;
    // 0..5 in the order a A b B t T
    int index() const { return 2 * static_cast<int>(gen) + (inverted ? 1 : 0); }
    static Letter from_index(int i) { return {static_cast<Gen>(i / 2), (i % 2) == 1}; }

    friend bool operator==(Letter, Letter) = default;
    friend auto operator<=>(Letter x, Letter y) { return x.index() <=> y.index(); }
};

inline constexpr Letter S1{Gen::S1, false};
inline constexpr Letter S1inv{Gen::S1, true};
inline constexpr Letter S2{Gen::S2, false};
inline constexpr Letter S2inv{Gen::S2, true};
inline constexpr Letter Tl{Gen::T, false};
inline constexpr Letter Tinv{Gen::T, true};

// Freely reduced word in <S1,S2,T>. Construction always reduces.
class GroupWord {
public:
    GroupWord() = default;
    GroupWord(std::initializer_list<Letter> letters);
    explicit GroupWord(std::vector<Letter> letters);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    GroupWord inverse() const;
    GroupWord operator*(const GroupWord& rhs) const;
    bool is_cyclically_reduced() const;
    // Rotation so that letter k comes first; requires a cyclically reduced word.
    GroupWord rotated(std::size_t k) const;
    std::string str() const;

    friend bool operator==(const GroupWord&, const GroupWord&) = default;
    friend auto operator<=>(const GroupWord& x, const GroupWord& y) {
        return x.letters_ <=> y.letters_;
    }

private:
    std::vector<Letter> letters_;
};

// word := ws? (letter ws?)* with ws := [ \t]+ ; letters a A b B t T.
GroupWord parse_word(std::string_view text);

GroupWord cyclic_reduce(const GroupWord& w);

// Representative of the unoriented conjugacy class: least rotation of w or w^-1.
// w must be cyclically reduced.
GroupWord canonical_cyclic(const GroupWord& w);

// Endomorphism of the free group given by the images of S1, S2, T.
struct Automorphism {
    std::string name;
    std::array<GroupWord, 3> images;

    GroupWord apply(const GroupWord& w) const;
    // Image of the conjugacy class, cyclically reduced.
    GroupWord apply_cyclic(const GroupWord& w) const { return cyclic_reduce(apply(w)); }
};

// T -> S1 T (twist about sigma_1) and its inverse T -> S1^-1 T.
Automorphism twist_sigma1(int sign = 1);
// T -> T S2 (twist about sigma_2).
Automorphism twist_sigma2(int sign = 1);
// S_i -> S_i T (twist about gamma_T); fixes both puncture words.
Automorphism twist_t(int sign = 1);

}  // namespace maskit
