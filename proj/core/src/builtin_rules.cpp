#include "nuca/builtin_rules.hpp"

namespace nuca::builtin {

LocalRule odometer_f() {
    // Indexed as left*3 + self.
    return LocalRule("f", 3, {Cell(-1), Cell(0)},
                     {0, 1, 2,
                      1, 0, 2,
                      2, 1, 0});
}

LocalRule cycle_g() {
    return LocalRule("g", 3, {Cell(0)}, {1, 2, 0});
}

LocalRule candidate_h() {
    return LocalRule("h", 3, {Cell(-1), Cell(0)},
                     {1, 2, 0,
                      1, 0, 2,
                      2, 1, 0});
}

LocalRule candidate_h_boundary() {
    return LocalRule("h0", 3, {Cell(0)}, {1, 2, 0});
}

LocalRule right_shift3() {
    return LocalRule("f_right", 3, {Cell(-1)}, {0, 1, 2});
}

LocalRule ex1_right_shift() {
    // Indexed as left*4 + self*2 + right; the output copies the left input.
    return LocalRule("f_right", 2, {Cell(-1), Cell(0), Cell(1)}, {0, 0, 0, 0, 1, 1, 1, 1});
}

LocalRule ex1_left_shift() {
    return LocalRule("f_left", 2, {Cell(-1), Cell(0), Cell(1)}, {0, 1, 0, 1, 0, 1, 0, 1});
}

LocalRule ex1_toggle() {
    return LocalRule("g", 2, {Cell(-1), Cell(0), Cell(1)}, {1, 1, 0, 0, 1, 1, 0, 0});
}

LocalRule spiral_g() {
    return LocalRule("g", 3, {Cell(0, 0)}, {1, 2, 0});
}

LocalRule spiral_f(Dir d) {
    return LocalRule(std::string("f_") + dir_letter(d), 3, {dir_offset(d), Cell(0, 0)},
                     {0, 1, 2,
                      1, 0, 2,
                      2, 1, 0});
}

}  // namespace nuca::builtin
