#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nuca/engine.hpp"
#include "nuca/pattern.hpp"
#include "nuca/rules.hpp"

namespace nuca {

struct OdometerSystem {
    std::shared_ptr<const RuleSet> rules;
    RuleDistribution dist;
};

// The half-line system: cell 0 runs the three-cycle, every other cell runs
// the carry rule f.
OdometerSystem build_three_state_odometer();

// Extension to the full line: cells below 0 run the right shift, so the
// half-line behavior is untouched.
OdometerSystem extend_to_z();

// Candidate variant with the rule h at cells > 0. Variant A puts the
// three-cycle at cell 0; variant B pins cell 0's missing left input to state
// 0, which yields the same table.
struct CandidateSystem {
    std::shared_ptr<const RuleSet> rules;
    RuleDistribution variant_a;
    RuleDistribution variant_b;
};

CandidateSystem build_candidate_odometer();

std::int64_t pow3(int e);

// -- Verifiers ---------------------------------------------------------------

struct TracePeriodCheck {
    int x = 0;
    std::int64_t expected = 0;
    std::optional<std::int64_t> measured;
    bool exact = false;
    bool pass = false;
    std::optional<std::int64_t> first_divergence;  // earliest t with T(t) != T(t+expected)
};

// For each x <= x_max, measures the minimal period of the trace at x from
// the all-0 start and compares it with 3^(x+1).
std::vector<TracePeriodCheck> verify_trace_period(int x_max);

// One period of a trace split as leading zero + first half + second half,
// with symbol counts per half.
struct BlockDecomposition {
    int x = 0;
    std::int64_t p = 0;  // period, 2n+1
    std::int64_t n = 0;  // half length
    std::int64_t period_index = 0;
    std::int64_t leading_zero_time = 0;
    std::int64_t a_lo = 0, a_hi = 0;
    std::int64_t b_lo = 0, b_hi = 0;
    std::int64_t ones_in_a = 0, twos_in_a = 0;
    std::int64_t ones_in_b = 0, twos_in_b = 0;
    bool pass = false;  // leading zero, ones_in_a == twos_in_b == 3^x, cross counts zero
};

// Checks the block structure of every complete period in a three-period
// trace at cell x.
std::vector<BlockDecomposition> verify_block_structure(int x);

struct SurjectivityReport {
    int n = 0;
    std::uint64_t expected = 0;  // 3^n
    std::uint64_t distinct = 0;
    bool purely_periodic = false;  // window state at 3^n equals time 0
    bool pass = false;
    std::optional<std::uint64_t> missing_word;  // base-3 code of the first absent word
};

// Whether the first n cells visit all 3^n words within 3^n steps, returning
// to the start. Works for any initial configuration.
SurjectivityReport verify_window_surjectivity(int n, const WindowConfiguration& init);

// Single-cell transducer with the carry rule's semantics, kept independent
// of the engine so the two can cross-check each other.
std::uint8_t transducer_step(std::uint8_t left, std::uint8_t state);

struct LemmaReport {
    int l_max = 0;
    std::uint64_t cases_checked = 0;
    bool pass = false;
    std::string counterexample;
};

// Exhaustive check over driving segments u in {0,a}^L, L <= l_max, a in
// {1,2}: starting the transducer from 0 and from a keeps the pair of states
// equal to {0,a} at every step.
LemmaReport lemma1_oracle(int l_max);

// Exhaustive check: from state 0, a segment with an odd number of a's ends
// at a, an even number ends at 0.
LemmaReport lemma2_oracle(int l_max);

struct CandidatePeriodRow {
    int x = 0;
    std::optional<std::int64_t> measured;
    bool exact = false;
};

// Measured candidate trace periods from the all-0 start. Reported values
// only: the candidate's period structure is a conjecture, so nothing here
// asserts an expected formula.
std::vector<CandidatePeriodRow> candidate_period_report(int x_max);

}  // namespace nuca
