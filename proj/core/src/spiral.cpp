#include "nuca/spiral.hpp"

#include <algorithm>
#include <cmath>

#include "nuca/builtin_rules.hpp"
#include "nuca/engine.hpp"
#include "nuca/odometer.hpp"

namespace nuca {

namespace {

std::int64_t isqrt(std::int64_t v) {
    std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) {
        --r;
    }
    while ((r + 1) * (r + 1) <= v) {
        ++r;
    }
    return r;
}

}  // namespace

Cell spiral(std::int64_t k) {
    if (k < 0) {
        throw DomainError("spiral index must be non-negative");
    }
    if (k == 0) {
        return Cell(0, 0);
    }
    // Ring r > 0 holds indices (2r-1)^2 .. (2r+1)^2 - 1, entered at
    // (r, -r+1), walking up, left, down, then right along its edges.
    const std::int64_t r = (isqrt(k) + 1) / 2;
    const std::int64_t j = k - (2 * r - 1) * (2 * r - 1);
    if (j <= 2 * r - 1) {
        return Cell(r, -r + 1 + j);
    }
    if (j <= 4 * r - 1) {
        return Cell(r - (j - (2 * r - 1)), r);
    }
    if (j <= 6 * r - 1) {
        return Cell(-r, r - (j - (4 * r - 1)));
    }
    return Cell(-r + (j - (6 * r - 1)), -r);
}

std::int64_t spiral_index(const Cell& c) {
    if (c.dim() != 2) {
        throw DomainError("spiral_index expects a two-dimensional cell");
    }
    const std::int64_t x = c[0];
    const std::int64_t y = c[1];
    const std::int64_t r = std::max(std::llabs(x), std::llabs(y));
    if (r == 0) {
        return 0;
    }
    const std::int64_t base = (2 * r - 1) * (2 * r - 1);
    if (x == r && y > -r) {
        return base + (y + r - 1);
    }
    if (y == r) {
        return base + (2 * r - 1) + (r - x);
    }
    if (x == -r) {
        return base + (4 * r - 1) + (r - y);
    }
    return base + (6 * r - 1) + (x + r);
}

SpiralSystem build_spiral_odometer() {
    std::vector<LocalRule> rules;
    rules.push_back(builtin::spiral_g());
    std::array<int, 4> oriented{};
    for (Dir d : {Dir::East, Dir::North, Dir::West, Dir::South}) {
        oriented[static_cast<std::size_t>(d)] = static_cast<int>(rules.size());
        rules.push_back(builtin::spiral_f(d));
    }
    auto set = std::make_shared<const RuleSet>(std::move(rules));
    RuleDistribution dist = RuleDistribution::make(
        set, 2, LatticeDomain::Full, RuleDistribution::Spiral{0, oriented});
    return SpiralSystem{std::move(set), std::move(dist)};
}

EquivalenceReport verify_embedding_equivalence(int n, std::int64_t steps,
                                               std::span<const WindowConfiguration> inits_1d) {
    if (n < 1) {
        throw DomainError("need at least one spiral cell");
    }
    const OdometerSystem odo = build_three_state_odometer();
    const SpiralSystem spi = build_spiral_odometer();
    const int q = odo.rules->q();

    std::vector<Cell> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
        prefix.push_back(spiral(k));
    }
    const Window targets_1d = Window::interval(0, n - 1);
    const Window targets_2d = Window::of_cells(prefix);

    EquivalenceReport report;
    report.n = n;
    report.steps = steps;
    report.pass = true;

    for (const WindowConfiguration& init : inits_1d) {
        const Evolution one_d = evolve_exact(odo.dist, init, targets_1d, steps);

        // Image of the 1-D start under the spiral.
        std::vector<std::uint8_t> start(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            start[static_cast<std::size_t>(i)] = init.state_at(Cell(i), q);
        }
        const WindowConfiguration init_2d = WindowConfiguration::from_pattern(
            Pattern(targets_2d, start), FillPolicy::undefined(), init.label() + " via spiral");
        const Evolution two_d = evolve_exact(spi.dist, init_2d, targets_2d, steps);

        ++report.inits_checked;
        for (std::int64_t t = 0; t <= steps && report.pass; ++t) {
            const auto row1 = one_d.row(t);
            const auto row2 = two_d.row(t);
            for (int i = 0; i < n; ++i) {
                if (row1[static_cast<std::size_t>(i)] != row2[static_cast<std::size_t>(i)]) {
                    report.pass = false;
                    report.first_divergence = {i, t};
                    break;
                }
            }
        }
        if (!report.pass) {
            break;
        }
    }
    return report;
}

std::string spiral_to_csv(std::int64_t count) {
    if (count < 1) {
        throw DomainError("need at least one spiral row");
    }
    const SpiralSystem spi = build_spiral_odometer();
    std::string out;
    for (std::int64_t k = 0; k < count; ++k) {
        const Cell c = spiral(k);
        const LocalRule& rule = spi.dist.rule_at(c);
        const char* orientation = "-";
        if (k > 0) {
            const Cell offset = spiral(k - 1).offset_by(c.negated());
            orientation = dir_letter(*dir_of_offset(offset));
        }
        out += std::to_string(k) + "," + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
               rule.name() + "," + orientation + "\n";
    }
    return out;
}

}  // namespace nuca
