#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nuca/pattern.hpp"
#include "nuca/rules.hpp"
#include "nuca/types.hpp"

namespace nuca {

// Canonical enumeration of Z^2: the counterclockwise square spiral starting
// rightward from the origin. spiral(0) = (0,0) and consecutive cells are
// lattice neighbors.
Cell spiral(std::int64_t k);
std::int64_t spiral_index(const Cell& c);

struct SpiralSystem {
    std::shared_ptr<const RuleSet> rules;
    RuleDistribution dist;
};

// The two-dimensional system threaded along the spiral: the origin runs the
// three-cycle, and for k > 0 the cell spiral(k) runs the carry rule with its
// designated neighbor spiral(k-1). Four oriented copies of the carry rule
// occur.
SpiralSystem build_spiral_odometer();

struct EquivalenceReport {
    int n = 0;
    std::int64_t steps = 0;
    std::uint64_t inits_checked = 0;
    bool pass = false;
    // (cell index along the spiral, time) of the first mismatch, if any.
    std::optional<std::pair<int, std::int64_t>> first_divergence;
};

// Checks that the 2-D system restricted to spiral(0..n-1) evolves exactly
// like the 1-D system on cells 0..n-1, for every given 1-D initial
// configuration (the 2-D start is its image under the spiral).
EquivalenceReport verify_embedding_equivalence(int n, std::int64_t steps,
                                               std::span<const WindowConfiguration> inits_1d);

// CSV rows "k,x,y,rule,orientation" for the first `count` spiral cells.
std::string spiral_to_csv(std::int64_t count);

}  // namespace nuca
