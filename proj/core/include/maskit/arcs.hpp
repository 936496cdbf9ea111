#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "maskit/coords.hpp"
#include "maskit/word.hpp"

namespace maskit {

// Sides of the hexagon in counterclockwise order. s0 joins the vertex between
// s_{S2^-1}/s_{S1^-1} to the vertex between s_{S1}/s_{S2}; it splits the
// hexagon into the upper box B1 and the lower box B2.
enum class Side : int { T = 0, S2inv = 1, S1inv = 2, Tinv = 3, S1 = 4, S2 = 5 };

// s_X for the letter X; an arc enters through s_{e_i} and leaves through s_{e_{i+1}^-1}.
Side side_of(Letter l);
Letter label_of(Side s);
bool upper(Side s);

// counts[i][j] = counts[j][i] = number of arcs joining sides i and j.
using ArcCounts = std::array<std::array<int, 6>, 6>;

ArcCounts arc_counts(const GroupWord& cyclic_word);
ArcCounts operator+(const ArcCounts& x, const ArcCounts& y);

// Non-crossing realization of the counts glued across the side pairings.
// Returns the component curves, or nullopt if two arc types must cross.
std::optional<std::vector<GroupWord>> realize(const ArcCounts& counts);

bool is_simple(const GroupWord& w);

// Combinatorial coordinates from the arcs in the two boxes.
CanonicalCoords coords_from_word(const GroupWord& w);

struct CoordsReconciliation {
    CanonicalCoords combinatorial;
    CanonicalCoords trace;
    bool agree = false;
    bool box1_flipped = false;  // p1 sign differs
    bool box2_flipped = false;  // p2 sign differs
    std::string message;
};

// Compares coords_from_word with infer_coords_from_trace; any difference other
// than a per-box p-sign flip is reported as a mismatch in `message`.
CoordsReconciliation reconcile_coords(const GroupWord& w);

// Both words must be simple. True iff the curves have disjoint representatives.
bool disjoint(const GroupWord& w, const GroupWord& v);

}  // namespace maskit
