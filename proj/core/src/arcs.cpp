#include "maskit/arcs.hpp"

#include <algorithm>

#include "maskit/errors.hpp"
#include "maskit/topterms.hpp"

namespace maskit {

namespace {

constexpr int kSides = 6;

// s_X is glued to s_{X^-1}.
int pair_of(int s) {
    static constexpr int partner[kSides] = {3, 5, 4, 0, 2, 1};
    return partner[s];
}

// (k - lo) mod 6 strictly between 0 and (hi - lo) mod 6
bool strictly_between(int k, int lo, int hi) {
    const int a = ((k - lo) % kSides + kSides) % kSides;
    const int b = ((hi - lo) % kSides + kSides) % kSides;
    return a > 0 && a < b;
}

bool interleaved(int i, int j, int k, int l) {
    if (i == k || i == l || j == k || j == l) return false;
    return strictly_between(k, i, j) != strictly_between(l, i, j);
}

GroupWord require_cyclic(const GroupWord& w) {
    GroupWord c = cyclic_reduce(w);
    if (c.empty()) throw PreconditionError("empty word has no arcs");
    return c;
}

}  // namespace

Side side_of(Letter l) {
    switch (l.gen) {
        case Gen::T: return l.inverted ? Side::Tinv : Side::T;
        case Gen::S1: return l.inverted ? Side::S1inv : Side::S1;
        case Gen::S2: return l.inverted ? Side::S2inv : Side::S2;
    }
    return Side::T;
}

Letter label_of(Side s) {
    switch (s) {
        case Side::T: return Tl;
        case Side::S2inv: return S2inv;
        case Side::S1inv: return S1inv;
        case Side::Tinv: return Tinv;
        case Side::S1: return S1;
        case Side::S2: return S2;
    }
    return Tl;
}

bool upper(Side s) { return s == Side::S1inv || s == Side::Tinv || s == Side::S1; }

ArcCounts arc_counts(const GroupWord& w) {
    ArcCounts c{};
    const auto& l = w.letters();
    const std::size_t n = l.size();
    for (std::size_t i = 0; i < n; ++i) {
        const int from = static_cast<int>(side_of(l[i]));
        const int to = static_cast<int>(side_of(l[(i + 1) % n].inverse()));
        if (from == to) throw PreconditionError("word is not cyclically reduced");
        ++c[from][to];
        if (from != to) ++c[to][from];
    }
    return c;
}

ArcCounts operator+(const ArcCounts& x, const ArcCounts& y) {
    ArcCounts r{};
    for (int i = 0; i < kSides; ++i)
        for (int j = 0; j < kSides; ++j) r[i][j] = x[i][j] + y[i][j];
    return r;
}

std::optional<std::vector<GroupWord>> realize(const ArcCounts& counts) {
    std::vector<std::pair<int, int>> types;
    for (int i = 0; i < kSides; ++i)
        for (int j = i + 1; j < kSides; ++j)
            if (counts[i][j] > 0) types.emplace_back(i, j);
    for (std::size_t x = 0; x < types.size(); ++x)
        for (std::size_t y = x + 1; y < types.size(); ++y)
            if (interleaved(types[x].first, types[x].second, types[y].first, types[y].second))
                return std::nullopt;

    // Endpoints along side i from its start vertex: arcs to i-1, i-2, ..., i+1.
    // Within one type the arcs are nested, so the k-th from the start of i is
    // the (n-1-k)-th from the start of the other side.
    struct Slot { int to, k; };
    std::array<std::vector<Slot>, kSides> slots;
    std::array<std::array<int, kSides>, kSides> first{};
    for (int i = 0; i < kSides; ++i) {
        for (int off = kSides - 1; off >= 1; --off) {
            const int j = (i + off) % kSides;
            first[i][j] = static_cast<int>(slots[i].size());
            for (int k = 0; k < counts[i][j]; ++k) slots[i].push_back({j, k});
        }
    }
    for (int i = 0; i < kSides; ++i)
        if (slots[i].size() != slots[pair_of(i)].size())
            throw PreconditionError("arc counts violate the switch conditions");

    auto other_end = [&](int i, int pos) {
        const Slot s = slots[i][pos];
        const int n = counts[i][s.to];
        return std::pair<int, int>{s.to, first[s.to][i] + (n - 1 - s.k)};
    };

    std::array<std::vector<char>, kSides> seen;
    for (int i = 0; i < kSides; ++i) seen[i].assign(slots[i].size(), 0);

    std::vector<GroupWord> comps;
    for (int i = 0; i < kSides; ++i) {
        for (int pos = 0; pos < static_cast<int>(slots[i].size()); ++pos) {
            if (seen[i][pos]) continue;
            std::vector<Letter> word;
            int ci = i, cp = pos;
            while (!seen[ci][cp]) {
                seen[ci][cp] = 1;
                word.push_back(label_of(static_cast<Side>(ci)));
                const auto [j, jp] = other_end(ci, cp);
                seen[j][jp] = 1;
                // leave through side j, re-enter through its partner, orientation reversed
                const int n = static_cast<int>(slots[j].size());
                ci = pair_of(j);
                cp = n - 1 - jp;
            }
            comps.emplace_back(std::move(word));
        }
    }
    return comps;
}

bool is_simple(const GroupWord& w) {
    const GroupWord c = cyclic_reduce(w);
    if (c.empty()) return false;
    const auto comps = realize(arc_counts(c));
    return comps && comps->size() == 1 && canonical_cyclic((*comps)[0]) == canonical_cyclic(c);
}

CanonicalCoords coords_from_word(const GroupWord& w) {
    const GroupWord c = require_cyclic(w);
    if (!is_simple(c)) throw NotSimpleError("arc system of " + c.str() + " does not realize a simple curve");

    // Box corners. B1: bottom s0, right s_{S1^-1}, top s_{T^-1}, left s_{S1}.
    // B2: bottom s_T, right s_{S2^-1}, top s0, left s_{S2}.
    enum Corner { TL, TR, BL, BR };
    std::array<std::array<int, 4>, 2> corner{};
    std::array<int, 2> iS{};  // endpoints on s_{S1}, s_{S2}
    int n0 = 0;

    const int Z = -1;  // s0
    auto box_corner = [&](int box, int x, int y) {
        // returns the corner index joining sides x,y of the box, or -1
        auto is = [&](int a, int b) { return (x == a && y == b) || (x == b && y == a); };
        if (box == 0) {
            const int R = static_cast<int>(Side::S1inv), Tp = static_cast<int>(Side::Tinv),
                      L = static_cast<int>(Side::S1);
            if (is(L, Tp)) return int(TL);
            if (is(Tp, R)) return int(TR);
            if (is(L, Z)) return int(BL);
            if (is(Z, R)) return int(BR);
        } else {
            const int R = static_cast<int>(Side::S2inv), Bt = static_cast<int>(Side::T),
                      L = static_cast<int>(Side::S2);
            if (is(L, Z)) return int(TL);
            if (is(Z, R)) return int(TR);
            if (is(L, Bt)) return int(BL);
            if (is(Bt, R)) return int(BR);
        }
        return -1;
    };

    const auto& l = c.letters();
    const std::size_t n = l.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Side from = side_of(l[i]);
        const Side to = side_of(l[(i + 1) % n].inverse());
        for (Side s : {from, to}) {
            if (s == Side::S1) ++iS[0];
            if (s == Side::S2) ++iS[1];
        }
        const int a = static_cast<int>(from), b = static_cast<int>(to);
        if (upper(from) == upper(to)) {
            const int box = upper(from) ? 0 : 1;
            const int k = box_corner(box, a, b);
            if (k >= 0) ++corner[box][k];
        } else {
            ++n0;
            const int up = upper(from) ? a : b, lo = upper(from) ? b : a;
            const int k1 = box_corner(0, up, Z), k2 = box_corner(1, lo, Z);
            if (k1 >= 0) ++corner[0][k1];
            if (k2 >= 0) ++corner[1][k2];
        }
    }

    std::array<std::int64_t, 2> q{}, p{};
    std::array<int, 2> chi{};
    for (int box = 0; box < 2; ++box) {
        const auto& k = corner[box];
        if (k[TL] != k[BR] || k[TR] != k[BL])
            throw NotSimpleError("inconsistent arc system: diagonal corner counts differ in box B" +
                                 std::to_string(box + 1));
        chi[box] = *std::min_element(k.begin(), k.end());
        q[box] = n0 - 2 * chi[box];
        const std::int64_t mag = iS[box] - 2 * chi[box];
        p[box] = k[TL] > chi[box] ? mag : -mag;
    }
    if (std::min(chi[0], chi[1]) != 0)
        throw NotSimpleError("inconsistent arc system: no box lacks corner arcs");
    return {q[0], p[0], q[1], p[1]};
}

CoordsReconciliation reconcile_coords(const GroupWord& w) {
    CoordsReconciliation r;
    r.combinatorial = coords_from_word(w);
    r.trace = infer_coords_from_trace(w);
    const auto& a = r.combinatorial;
    const auto& b = r.trace;
    r.agree = a == b;
    if (r.agree) {
        r.message = "agree";
        return r;
    }
    const bool qs = a.q1 == b.q1 && a.q2 == b.q2;
    r.box1_flipped = a.p1 != b.p1 && a.p1 == -b.p1;
    r.box2_flipped = a.p2 != b.p2 && a.p2 == -b.p2;
    const bool only_flips = qs && (a.p1 == b.p1 || r.box1_flipped) && (a.p2 == b.p2 || r.box2_flipped);
    r.message = std::string(only_flips ? "p-sign flip" : "mismatch") + ": arcs give " + a.str() +
                ", trace gives " + b.str();
    return r;
}

bool disjoint(const GroupWord& w, const GroupWord& v) {
    const GroupWord a = require_cyclic(w), b = require_cyclic(v);
    const CanonicalCoords ca = coords_from_word(a), cb = coords_from_word(b);
    if (thurston_pairing(ca, cb) != 0) return false;
    const auto comps = realize(arc_counts(a) + arc_counts(b));
    if (!comps || comps->size() != 2) return false;
    std::vector<GroupWord> got{canonical_cyclic((*comps)[0]), canonical_cyclic((*comps)[1])};
    std::vector<GroupWord> want{canonical_cyclic(a), canonical_cyclic(b)};
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
}

}  // namespace maskit
