#pragma once

#include <utility>
#include <vector>

#include "sandrank/word.hpp"

namespace sandrank {

// Strip of n-1 rows. The cell whose south-west corner is (x, y), 0 <= y <= n-2,
// carries label y + (y-1-x)(n-1): the cell north-west of the origin is 0,
// north adds n, west adds n-1, the north-east neighbour adds 1.

Int cell_label(Int n, Int x, Int y);
/// Inverse of cell_label: the (x, y) of the cell carrying label k.
std::pair<Int, Int> cell_position(Int n, Int k);
/// Label n*y - (n-1)*x of a lattice point (equal to the label of the cell
/// whose bottom-right corner it is).
Int vertex_label(Int n, Int x, Int y);

/// Whether the cell labelled k lies left of the path of w in D_n (a = north,
/// b = east, starting at the origin).
bool is_left_cell(const BinaryWord& w, Int k);

struct LeftRight {
    Int left = 0;  // left-region cells with label <= s
    Int right = 0; // right-region cells with label > s
    friend bool operator==(const LeftRight&, const LeftRight&) = default;
};

LeftRight left_right(const BinaryWord& w, Int s);

/// Highest label of a right-region cell.
Int lastright(const BinaryWord& w);
/// n|u|_a - (n-1)(|u|_b + 1) with u the prefix before the last a of maximal height.
Int lastright_prefix_formula(const BinaryWord& w);

/// Labels k such that cells k and k+1 lie in different regions, increasing.
std::vector<Int> crossing_indices(const BinaryWord& w);

struct StripPoint {
    BinaryWord word;
    Int sink = 0;
    friend bool operator==(const StripPoint&, const StripPoint&) = default;
};

/// (w, s) -> (Phi(w), lastright(w) - 1 - s).
StripPoint psi_involution(const BinaryWord& w, Int s);

} // namespace sandrank
