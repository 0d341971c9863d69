#include "nuca/odometer.hpp"

#include <bit>

#include "nuca/builtin_rules.hpp"

namespace nuca {

std::int64_t pow3(int e) {
    std::int64_t v = 1;
    for (int i = 0; i < e; ++i) {
        v *= 3;
    }
    return v;
}

OdometerSystem build_three_state_odometer() {
    auto rules = std::make_shared<const RuleSet>(
        std::vector<LocalRule>{builtin::odometer_f(), builtin::cycle_g()});
    RuleDistribution dist = RuleDistribution::make(
        rules, 1, LatticeDomain::HalfLine,
        RuleDistribution::FiniteExceptions{*rules->index_of("f"), {{Cell(0), *rules->index_of("g")}}});
    return OdometerSystem{std::move(rules), std::move(dist)};
}

OdometerSystem extend_to_z() {
    auto rules = std::make_shared<const RuleSet>(std::vector<LocalRule>{
        builtin::odometer_f(), builtin::cycle_g(), builtin::right_shift3()});
    RuleDistribution dist = RuleDistribution::make(
        rules, 1, LatticeDomain::Full,
        RuleDistribution::Rays1D{*rules->index_of("f_right"), 0, 0,
                                 {*rules->index_of("g")}, *rules->index_of("f")});
    return OdometerSystem{std::move(rules), std::move(dist)};
}

CandidateSystem build_candidate_odometer() {
    auto rules = std::make_shared<const RuleSet>(std::vector<LocalRule>{
        builtin::candidate_h(), builtin::cycle_g(), builtin::candidate_h_boundary()});
    const int h = *rules->index_of("h");
    RuleDistribution variant_a = RuleDistribution::make(
        rules, 1, LatticeDomain::HalfLine,
        RuleDistribution::FiniteExceptions{h, {{Cell(0), *rules->index_of("g")}}});
    RuleDistribution variant_b = RuleDistribution::make(
        rules, 1, LatticeDomain::HalfLine,
        RuleDistribution::FiniteExceptions{h, {{Cell(0), *rules->index_of("h0")}}});
    return CandidateSystem{std::move(rules), std::move(variant_a), std::move(variant_b)};
}

namespace {

WindowConfiguration all_zero() {
    return WindowConfiguration::from_fill(FillPolicy::uniform(0));
}

}  // namespace

std::vector<TracePeriodCheck> verify_trace_period(int x_max) {
    const OdometerSystem odo = build_three_state_odometer();
    std::vector<TracePeriodCheck> out;
    for (int x = 0; x <= x_max; ++x) {
        TracePeriodCheck check;
        check.x = x;
        check.expected = pow3(x + 1);
        const std::int64_t horizon = 3 * check.expected;  // three full periods
        const Trace tr = trace(odo.dist, all_zero(), Cell(x), horizon);
        const PeriodReport pr = minimal_period(tr);
        check.measured = pr.minimal_period;
        check.exact = pr.confidence == PeriodConfidence::Exact;
        check.pass = pr.minimal_period == check.expected && check.exact && pr.preperiod == 0;
        if (!check.pass) {
            for (std::int64_t t = 0; t + check.expected <= horizon; ++t) {
                if (tr.values[static_cast<std::size_t>(t)] !=
                    tr.values[static_cast<std::size_t>(t + check.expected)]) {
                    check.first_divergence = t;
                    break;
                }
            }
        }
        out.push_back(check);
    }
    return out;
}

std::vector<BlockDecomposition> verify_block_structure(int x) {
    const OdometerSystem odo = build_three_state_odometer();
    const std::int64_t p = pow3(x + 1);
    const std::int64_t n = (p - 1) / 2;
    const std::int64_t expected = pow3(x);
    const Trace tr = trace(odo.dist, all_zero(), Cell(x), 3 * p);

    std::vector<BlockDecomposition> out;
    for (std::int64_t i = 0; i < 3; ++i) {
        BlockDecomposition block;
        block.x = x;
        block.p = p;
        block.n = n;
        block.period_index = i;
        block.leading_zero_time = p * i;
        block.a_lo = p * i + 1;
        block.a_hi = p * i + n;
        block.b_lo = p * i + n + 1;
        block.b_hi = p * i + 2 * n;
        const auto count = [&](std::int64_t lo, std::int64_t hi, std::uint8_t symbol) {
            std::int64_t c = 0;
            for (std::int64_t t = lo; t <= hi; ++t) {
                if (tr.values[static_cast<std::size_t>(t)] == symbol) {
                    ++c;
                }
            }
            return c;
        };
        block.ones_in_a = count(block.a_lo, block.a_hi, 1);
        block.twos_in_a = count(block.a_lo, block.a_hi, 2);
        block.ones_in_b = count(block.b_lo, block.b_hi, 1);
        block.twos_in_b = count(block.b_lo, block.b_hi, 2);
        const bool leading_zero =
            tr.values[static_cast<std::size_t>(block.leading_zero_time)] == 0;
        block.pass = leading_zero && block.ones_in_a == expected && block.twos_in_b == expected &&
                     block.twos_in_a == 0 && block.ones_in_b == 0;
        out.push_back(block);
    }
    return out;
}

SurjectivityReport verify_window_surjectivity(int n, const WindowConfiguration& init) {
    if (n < 1 || n > 12) {
        throw DomainError("window length must be in [1, 12] at desk scale");
    }
    const OdometerSystem odo = build_three_state_odometer();
    const std::int64_t words = pow3(n);
    const Evolution ev = evolve_exact(odo.dist, init, Window::interval(0, n - 1), words);

    SurjectivityReport report;
    report.n = n;
    report.expected = static_cast<std::uint64_t>(words);

    const auto encode = [n](std::span<const std::uint8_t> row) {
        std::uint64_t code = 0;
        for (int i = 0; i < n; ++i) {
            code = code * 3 + row[static_cast<std::size_t>(i)];
        }
        return code;
    };

    std::vector<bool> seen(static_cast<std::size_t>(words), false);
    for (std::int64_t t = 0; t < words; ++t) {
        const std::uint64_t code = encode(ev.row(t));
        if (!seen[static_cast<std::size_t>(code)]) {
            seen[static_cast<std::size_t>(code)] = true;
            ++report.distinct;
        }
    }
    if (report.distinct < report.expected) {
        for (std::uint64_t code = 0; code < report.expected; ++code) {
            if (!seen[static_cast<std::size_t>(code)]) {
                report.missing_word = code;
                break;
            }
        }
    }
    // The window only depends on itself, so returning to the start makes the
    // sequence purely periodic.
    report.purely_periodic = encode(ev.row(words)) == encode(ev.row(0));
    report.pass = report.distinct == report.expected && report.purely_periodic;
    return report;
}

std::uint8_t transducer_step(std::uint8_t left, std::uint8_t state) {
    if (left == 0) {
        return state;
    }
    if (state == 0) {
        return left;
    }
    if (state == left) {
        return 0;
    }
    return state;
}

LemmaReport lemma1_oracle(int l_max) {
    LemmaReport report;
    report.l_max = l_max;
    report.pass = true;
    for (std::uint8_t a : {std::uint8_t{1}, std::uint8_t{2}}) {
        for (int len = 1; len <= l_max; ++len) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
                std::uint8_t s0 = 0;
                std::uint8_t s1 = a;
                for (int t = 0; t < len; ++t) {
                    const std::uint8_t u = ((mask >> t) & 1) ? a : std::uint8_t{0};
                    s0 = transducer_step(u, s0);
                    s1 = transducer_step(u, s1);
                    const bool complementary =
                        (s0 == 0 && s1 == a) || (s0 == a && s1 == 0);
                    if (!complementary) {
                        report.pass = false;
                        report.counterexample = "a=" + std::to_string(a) +
                                                " len=" + std::to_string(len) +
                                                " mask=" + std::to_string(mask) +
                                                " step=" + std::to_string(t);
                        return report;
                    }
                }
                ++report.cases_checked;
            }
        }
    }
    return report;
}

LemmaReport lemma2_oracle(int l_max) {
    LemmaReport report;
    report.l_max = l_max;
    report.pass = true;
    for (std::uint8_t a : {std::uint8_t{1}, std::uint8_t{2}}) {
        for (int len = 1; len <= l_max; ++len) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
                std::uint8_t s = 0;
                for (int t = 0; t < len; ++t) {
                    s = transducer_step(((mask >> t) & 1) ? a : std::uint8_t{0}, s);
                }
                const bool odd = (std::popcount(mask) % 2) == 1;
                const std::uint8_t expected = odd ? a : std::uint8_t{0};
                if (s != expected) {
                    report.pass = false;
                    report.counterexample = "a=" + std::to_string(a) +
                                            " len=" + std::to_string(len) +
                                            " mask=" + std::to_string(mask);
                    return report;
                }
                ++report.cases_checked;
            }
        }
    }
    return report;
}

std::vector<CandidatePeriodRow> candidate_period_report(int x_max) {
    const CandidateSystem cand = build_candidate_odometer();
    std::vector<CandidatePeriodRow> out;
    for (int x = 0; x <= x_max; ++x) {
        CandidatePeriodRow row;
        row.x = x;
        // Horizon mirrors the proven system's scale; measured values are
        // reported as-is.
        const std::int64_t horizon = 3 * pow3(x + 1);
        const Trace tr = trace(cand.variant_a, all_zero(), Cell(x), horizon);
        const PeriodReport pr = minimal_period(tr);
        row.measured = pr.minimal_period;
        row.exact = pr.confidence == PeriodConfidence::Exact;
        out.push_back(row);
    }
    return out;
}

}  // namespace nuca
