#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nuca/pattern.hpp"
#include "nuca/rules.hpp"
#include "nuca/types.hpp"

namespace nuca {

struct EngineOptions {
    // Worker threads for the per-step cell sweep. Output is bitwise
    // identical for any thread count; only speed changes.
    int threads = 1;
    // Minimum active cells per step before threads engage.
    std::int64_t parallel_grain = 32768;
};

// Backward dependency cone: `required` holds every time-0 cell whose state
// can influence any target cell at any time in 0..steps.
struct ConeReport {
    Window targets;
    std::int64_t steps = 0;
    Window required;
};

ConeReport dependency_cone(const RuleDistribution& dist, const Window& targets,
                           std::int64_t steps);

// Exact window evolution. Row t holds the target states at time t, in the
// target window's enumeration order. The embedded ConeReport certifies that
// every consulted cell was determined by the initial configuration.
class Evolution {
public:
    Evolution(Window targets, std::vector<Cell> target_cells, std::int64_t steps, int q,
              std::vector<std::uint8_t> states, ConeReport cone)
        : targets_(std::move(targets)), target_cells_(std::move(target_cells)), steps_(steps),
          q_(q), states_(std::move(states)), cone_(std::move(cone)) {}

    const Window& targets() const { return targets_; }
    const std::vector<Cell>& target_cells() const { return target_cells_; }
    std::int64_t steps() const { return steps_; }
    int q() const { return q_; }
    const ConeReport& cone() const { return cone_; }

    std::span<const std::uint8_t> row(std::int64_t t) const;
    std::uint8_t at(std::int64_t t, std::size_t target_index) const;
    Pattern pattern_at(std::int64_t t) const;

private:
    Window targets_;
    std::vector<Cell> target_cells_;
    std::int64_t steps_;
    int q_;
    std::vector<std::uint8_t> states_;  // (steps+1) x target_cells_.size(), row-major
    ConeReport cone_;
};

Evolution evolve_exact(const RuleDistribution& dist, const WindowConfiguration& init,
                       const Window& targets, std::int64_t steps,
                       const EngineOptions& options = {});

// Time-indexed state sequence at one cell.
struct Trace {
    Cell cell;
    std::vector<std::uint8_t> values;  // times 0..steps
    std::string source;
};

Trace trace(const RuleDistribution& dist, const WindowConfiguration& init, const Cell& x,
            std::int64_t steps, const EngineOptions& options = {});

enum class PeriodConfidence { Exact, Insufficient };

struct PeriodReport {
    std::optional<std::int64_t> minimal_period;
    std::int64_t preperiod = 0;
    PeriodConfidence confidence = PeriodConfidence::Insufficient;
};

// Smallest p with values[t] == values[t+p] over the whole observed range.
// When no pure period exists, a bounded scan looks for the shortest offset
// whose tail is periodic with at least two observed repetitions. Exact
// confidence requires three observed periods.
PeriodReport minimal_period(std::span<const std::uint8_t> values);
PeriodReport minimal_period(const Trace& tr);

// Backward influence set of one cell, expanded until it stabilizes or the
// cap is hit. A finite closure bounds every dependency cone of {x}.
struct InfluenceClosure {
    bool finite = false;
    Window cells;                      // the closure (partial when not finite)
    std::vector<std::uint64_t> growth; // |S_k| after each expansion
};

InfluenceClosure influence_closure(const RuleDistribution& dist, const Cell& x,
                                   std::int64_t cap);

}  // namespace nuca
