#pragma once

#include "nuca/rules.hpp"

namespace nuca::builtin {

// Three-state carry rule on {-1, 0}: left 0 keeps the state, left 1 swaps
// 0 and 1, left 2 swaps 0 and 2.
LocalRule odometer_f();

// Three-state cycle 0 -> 1 -> 2 -> 0 on the cell itself.
LocalRule cycle_g();

// Alternative carry rule on {-1, 0}: left 0 cycles, left 1 swaps 0 and 1,
// left 2 swaps 0 and 2.
LocalRule candidate_h();

// The candidate rule with its left input pinned to 0 (neighborhood {0});
// its table is the plain three-cycle.
LocalRule candidate_h_boundary();

// Three-state right shift on {-1}.
LocalRule right_shift3();

// Binary rules sharing the radius-1 neighborhood {-1, 0, 1}.
LocalRule ex1_right_shift();
LocalRule ex1_left_shift();
LocalRule ex1_toggle();

// Two-dimensional three-cycle at a single cell.
LocalRule spiral_g();

// Oriented copy of the carry rule whose designated neighbor lies in
// direction `d`; neighborhood order is {toward-neighbor, (0,0)}.
LocalRule spiral_f(Dir d);

}  // namespace nuca::builtin
