#include "nuca/engine.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace nuca {

namespace {

constexpr std::int64_t kMaxConeCells = std::int64_t{1} << 28;

// Cells reachable from the targets by at most `steps` backward neighborhood
// expansions, i.e. every time-0 cell that can influence a target within the
// horizon. BFS keeps each cell once.
std::vector<Cell> cone_cells(const RuleDistribution& dist, const std::vector<Cell>& targets,
                             std::int64_t steps) {
    std::unordered_map<Cell, std::int64_t, CellHash> depth;
    std::deque<Cell> queue;
    for (const Cell& t : targets) {
        if (!dist.in_domain(t)) {
            throw DomainError("target cell " + t.to_string() + " outside the distribution domain");
        }
        if (depth.emplace(t, 0).second) {
            queue.push_back(t);
        }
    }
    while (!queue.empty()) {
        const Cell cell = queue.front();
        queue.pop_front();
        const std::int64_t d = depth.at(cell);
        if (d == steps) {
            continue;
        }
        for (const Cell& offset : dist.rule_at(cell).neighborhood()) {
            const Cell neighbor = cell.offset_by(offset);
            if (!dist.in_domain(neighbor)) {
                // Closure is validated at construction; reaching here means
                // the distribution bypassed it.
                throw DomainError("closure violation: cell " + cell.to_string() + " reaches " +
                                  neighbor.to_string() + " outside the domain");
            }
            if (depth.emplace(neighbor, d + 1).second) {
                queue.push_back(neighbor);
                if (static_cast<std::int64_t>(depth.size()) > kMaxConeCells) {
                    throw DomainError("dependency cone exceeds the cell limit");
                }
            }
        }
    }
    std::vector<Cell> cells;
    cells.reserve(depth.size());
    for (const auto& [cell, d] : depth) {
        cells.push_back(cell);
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

// Prefer the box form when the cell set is exactly a box; reports read
// better and membership tests get cheaper.
Window window_from_sorted_cells(const std::vector<Cell>& cells) {
    const int d = cells.front().dim();
    Cell lo = cells.front();
    Cell hi = cells.front();
    auto coord_minmax = [&](int axis) {
        std::int64_t mn = cells.front()[axis];
        std::int64_t mx = mn;
        for (const Cell& c : cells) {
            mn = std::min(mn, c[axis]);
            mx = std::max(mx, c[axis]);
        }
        return std::pair<std::int64_t, std::int64_t>{mn, mx};
    };
    std::uint64_t volume = 1;
    std::vector<std::int64_t> los(static_cast<std::size_t>(d));
    std::vector<std::int64_t> his(static_cast<std::size_t>(d));
    for (int axis = 0; axis < d; ++axis) {
        const auto [mn, mx] = coord_minmax(axis);
        los[static_cast<std::size_t>(axis)] = mn;
        his[static_cast<std::size_t>(axis)] = mx;
        volume *= static_cast<std::uint64_t>(mx - mn + 1);
    }
    if (volume == cells.size()) {
        return Window::box(Cell::of(los), Cell::of(his));
    }
    return Window::of_cells(cells);
}

struct CompiledCone {
    std::vector<Cell> cells;                    // slot -> cell, actives first
    std::vector<const std::uint8_t*> table;     // slot -> rule table
    std::vector<std::int32_t> dep_off;          // CSR offsets into deps
    std::vector<std::int32_t> deps;             // slot indices; -1 when unusable
    std::vector<std::int64_t> alive;            // update budget per slot
    std::vector<std::int64_t> active_count;     // actives at step s, s in 1..steps
    std::vector<std::int32_t> target_slots;     // in target enumeration order
};

CompiledCone compile_cone(const RuleDistribution& dist, const std::vector<Cell>& target_cells,
                          std::int64_t steps) {
    CompiledCone cone;
    cone.cells = cone_cells(dist, target_cells, steps);
    const std::size_t n = cone.cells.size();

    std::unordered_map<Cell, std::int32_t, CellHash> slot_of;
    slot_of.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) {
        slot_of.emplace(cone.cells[i], static_cast<std::int32_t>(i));
    }

    std::vector<std::int32_t> dep_off(n + 1, 0);
    std::vector<std::int32_t> deps;
    std::vector<const std::uint8_t*> table(n);
    for (std::size_t i = 0; i < n; ++i) {
        const LocalRule& rule = dist.rule_at(cone.cells[i]);
        table[i] = rule.table().data();
        for (const Cell& offset : rule.neighborhood()) {
            const auto it = slot_of.find(cone.cells[i].offset_by(offset));
            deps.push_back(it == slot_of.end() ? -1 : it->second);
        }
        dep_off[i + 1] = static_cast<std::int32_t>(deps.size());
    }

    // alive[i]: how many consecutive updates of slot i stay exact. A missing
    // dependency pins it to 0; otherwise it is 1 + min over dependencies,
    // computed as a multi-source BFS over reverse edges. Unreachable slots
    // never exhaust their budget within the horizon.
    std::vector<std::vector<std::int32_t>> readers(n);
    std::vector<std::int64_t> alive(n, -1);
    std::deque<std::int32_t> queue;
    for (std::size_t i = 0; i < n; ++i) {
        bool missing = false;
        for (std::int32_t k = dep_off[i]; k < dep_off[i + 1]; ++k) {
            if (deps[static_cast<std::size_t>(k)] < 0) {
                missing = true;
            } else {
                readers[static_cast<std::size_t>(deps[static_cast<std::size_t>(k)])].push_back(
                    static_cast<std::int32_t>(i));
            }
        }
        if (missing) {
            alive[i] = 0;
            queue.push_back(static_cast<std::int32_t>(i));
        }
    }
    while (!queue.empty()) {
        const std::int32_t i = queue.front();
        queue.pop_front();
        if (alive[static_cast<std::size_t>(i)] >= steps) {
            continue;  // beyond the horizon; nothing downstream can tighten
        }
        for (std::int32_t r : readers[static_cast<std::size_t>(i)]) {
            if (alive[static_cast<std::size_t>(r)] < 0) {
                alive[static_cast<std::size_t>(r)] = alive[static_cast<std::size_t>(i)] + 1;
                queue.push_back(r);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (alive[i] < 0 || alive[i] > steps) {
            alive[i] = steps;
        }
    }

    // Slots sorted by remaining budget, so the active set at each step is a
    // prefix. Tie order follows the canonical cell order.
    std::vector<std::int32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
        return alive[static_cast<std::size_t>(a)] > alive[static_cast<std::size_t>(b)];
    });
    std::vector<std::int32_t> new_slot(n);
    for (std::size_t i = 0; i < n; ++i) {
        new_slot[static_cast<std::size_t>(order[i])] = static_cast<std::int32_t>(i);
    }

    CompiledCone out;
    out.cells.resize(n);
    out.table.resize(n);
    out.alive.resize(n);
    out.dep_off.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t src = static_cast<std::size_t>(order[i]);
        out.cells[i] = cone.cells[src];
        out.table[i] = table[src];
        out.alive[i] = alive[src];
        out.dep_off[i + 1] = out.dep_off[i] + (dep_off[src + 1] - dep_off[src]);
    }
    out.deps.resize(deps.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t src = static_cast<std::size_t>(order[i]);
        std::int32_t w = out.dep_off[i];
        for (std::int32_t k = dep_off[src]; k < dep_off[src + 1]; ++k, ++w) {
            const std::int32_t dep = deps[static_cast<std::size_t>(k)];
            out.deps[static_cast<std::size_t>(w)] =
                dep < 0 ? -1 : new_slot[static_cast<std::size_t>(dep)];
        }
    }

    out.active_count.assign(static_cast<std::size_t>(steps) + 1, 0);
    for (std::int64_t s = 1; s <= steps; ++s) {
        const auto it = std::partition_point(
            out.alive.begin(), out.alive.end(), [s](std::int64_t a) { return a >= s; });
        out.active_count[static_cast<std::size_t>(s)] = it - out.alive.begin();
    }

    out.target_slots.reserve(target_cells.size());
    for (const Cell& t : target_cells) {
        const auto it = std::find(out.cells.begin(), out.cells.end(), t);
        const std::int32_t slot = static_cast<std::int32_t>(it - out.cells.begin());
        if (out.alive[static_cast<std::size_t>(slot)] < steps) {
            throw Error("target " + t.to_string() + " lost exactness before the horizon");
        }
        out.target_slots.push_back(slot);
    }
    return out;
}

void sweep_range(const CompiledCone& cone, const std::uint8_t* cur, std::uint8_t* nxt, int q,
                 std::int64_t begin, std::int64_t end) {
    for (std::int64_t i = begin; i < end; ++i) {
        const std::size_t ui = static_cast<std::size_t>(i);
        std::size_t idx = 0;
        for (std::int32_t k = cone.dep_off[ui]; k < cone.dep_off[ui + 1]; ++k) {
            idx = idx * static_cast<std::size_t>(q) +
                  cur[static_cast<std::size_t>(cone.deps[static_cast<std::size_t>(k)])];
        }
        nxt[ui] = cone.table[ui][idx];
    }
}

}  // namespace

ConeReport dependency_cone(const RuleDistribution& dist, const Window& targets,
                           std::int64_t steps) {
    if (steps < 0) {
        throw DomainError("step count must be non-negative");
    }
    const std::vector<Cell> cells = cone_cells(dist, targets.cells(), steps);
    return ConeReport{targets, steps, window_from_sorted_cells(cells)};
}

std::span<const std::uint8_t> Evolution::row(std::int64_t t) const {
    if (t < 0 || t > steps_) {
        throw DomainError("time " + std::to_string(t) + " outside 0.." + std::to_string(steps_));
    }
    const std::size_t w = target_cells_.size();
    return std::span<const std::uint8_t>(states_.data() + static_cast<std::size_t>(t) * w, w);
}

std::uint8_t Evolution::at(std::int64_t t, std::size_t target_index) const {
    return row(t)[target_index];
}

Pattern Evolution::pattern_at(std::int64_t t) const {
    const auto r = row(t);
    return Pattern(targets_, std::vector<std::uint8_t>(r.begin(), r.end()));
}

Evolution evolve_exact(const RuleDistribution& dist, const WindowConfiguration& init,
                       const Window& targets, std::int64_t steps, const EngineOptions& options) {
    if (steps < 0) {
        throw DomainError("step count must be non-negative");
    }
    const int q = dist.rules().q();
    const std::vector<Cell> target_cells = targets.cells();
    CompiledCone cone = compile_cone(dist, target_cells, steps);
    const std::size_t n = cone.cells.size();

    std::vector<std::uint8_t> cur(n);
    std::vector<std::uint8_t> nxt(n);
    {
        std::vector<Cell> uncovered;
        for (std::size_t i = 0; i < n; ++i) {
            if (!init.determines(cone.cells[i])) {
                if (uncovered.size() < 32) {
                    uncovered.push_back(cone.cells[i]);
                }
                continue;
            }
            cur[i] = init.state_at(cone.cells[i], q);
        }
        if (!uncovered.empty()) {
            std::string msg = "initial configuration does not determine the dependency cone;"
                              " uncovered cells include";
            for (const Cell& c : uncovered) {
                msg += " " + c.to_string();
            }
            throw ConeEscapeError(msg, std::move(uncovered));
        }
    }

    const std::size_t width = target_cells.size();
    std::vector<std::uint8_t> rows((static_cast<std::size_t>(steps) + 1) * width);
    for (std::size_t j = 0; j < width; ++j) {
        rows[j] = cur[static_cast<std::size_t>(cone.target_slots[j])];
    }

    const int threads = std::max(1, options.threads);
    std::vector<std::thread> pool;
    for (std::int64_t s = 1; s <= steps; ++s) {
        const std::int64_t active = cone.active_count[static_cast<std::size_t>(s)];
        if (threads > 1 && active >= options.parallel_grain) {
            // Disjoint chunk writes over a frozen input buffer: the result
            // is independent of the decomposition.
            const std::int64_t chunk = (active + threads - 1) / threads;
            pool.clear();
            for (int w = 1; w < threads; ++w) {
                const std::int64_t begin = chunk * w;
                const std::int64_t end = std::min<std::int64_t>(active, begin + chunk);
                if (begin < end) {
                    pool.emplace_back(sweep_range, std::cref(cone), cur.data(), nxt.data(), q,
                                      begin, end);
                }
            }
            sweep_range(cone, cur.data(), nxt.data(), q, 0, std::min(chunk, active));
            for (std::thread& t : pool) {
                t.join();
            }
        } else {
            sweep_range(cone, cur.data(), nxt.data(), q, 0, active);
        }
        cur.swap(nxt);
        std::uint8_t* out = rows.data() + static_cast<std::size_t>(s) * width;
        for (std::size_t j = 0; j < width; ++j) {
            out[j] = cur[static_cast<std::size_t>(cone.target_slots[j])];
        }
    }

    ConeReport report{targets, steps, window_from_sorted_cells([&] {
                          std::vector<Cell> sorted = cone.cells;
                          std::sort(sorted.begin(), sorted.end());
                          return sorted;
                      }())};
    return Evolution(targets, target_cells, steps, q, std::move(rows), std::move(report));
}

Trace trace(const RuleDistribution& dist, const WindowConfiguration& init, const Cell& x,
            std::int64_t steps, const EngineOptions& options) {
    const Evolution ev = evolve_exact(dist, init, Window::single(x), steps, options);
    std::vector<std::uint8_t> values(static_cast<std::size_t>(steps) + 1);
    for (std::int64_t t = 0; t <= steps; ++t) {
        values[static_cast<std::size_t>(t)] = ev.at(t, 0);
    }
    return Trace{x, std::move(values), init.label()};
}

namespace {

// Prefix function; the minimal pure period of s is n - pi[n-1].
std::vector<std::int64_t> prefix_function(std::span<const std::uint8_t> s) {
    const std::size_t n = s.size();
    std::vector<std::int64_t> pi(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::int64_t k = pi[i - 1];
        while (k > 0 && s[i] != s[static_cast<std::size_t>(k)]) {
            k = pi[static_cast<std::size_t>(k) - 1];
        }
        if (s[i] == s[static_cast<std::size_t>(k)]) {
            ++k;
        }
        pi[i] = k;
    }
    return pi;
}

constexpr std::int64_t kMaxPreperiodScan = 64;

}  // namespace

PeriodReport minimal_period(std::span<const std::uint8_t> values) {
    PeriodReport report;
    const std::int64_t n = static_cast<std::int64_t>(values.size());
    if (n < 2) {
        return report;
    }
    {
        const auto pi = prefix_function(values);
        const std::int64_t border = pi[static_cast<std::size_t>(n - 1)];
        if (border > 0) {
            const std::int64_t p = n - border;
            report.minimal_period = p;
            report.preperiod = 0;
            report.confidence =
                (n >= 3 * p) ? PeriodConfidence::Exact : PeriodConfidence::Insufficient;
            return report;
        }
    }
    // No pure period: look for the shortest offset whose tail repeats at
    // least twice.
    for (std::int64_t o = 1; o <= std::min(kMaxPreperiodScan, n - 3); ++o) {
        const auto tail = values.subspan(static_cast<std::size_t>(o));
        const std::int64_t len = static_cast<std::int64_t>(tail.size());
        const auto pi = prefix_function(tail);
        const std::int64_t border = pi[static_cast<std::size_t>(len - 1)];
        if (border > 0) {
            const std::int64_t p = len - border;
            if (len >= 2 * p) {
                report.minimal_period = p;
                report.preperiod = o;
                report.confidence =
                    (len >= 3 * p) ? PeriodConfidence::Exact : PeriodConfidence::Insufficient;
                return report;
            }
        }
    }
    return report;
}

PeriodReport minimal_period(const Trace& tr) {
    return minimal_period(std::span<const std::uint8_t>(tr.values));
}

InfluenceClosure influence_closure(const RuleDistribution& dist, const Cell& x,
                                   std::int64_t cap) {
    if (!dist.in_domain(x)) {
        throw DomainError("cell " + x.to_string() + " outside the distribution domain");
    }
    std::unordered_set<Cell, CellHash> members{x};
    std::vector<Cell> frontier{x};
    InfluenceClosure out;
    out.growth.push_back(1);
    for (std::int64_t k = 0; k < cap; ++k) {
        std::vector<Cell> next;
        for (const Cell& cell : frontier) {
            for (const Cell& offset : dist.rule_at(cell).neighborhood()) {
                const Cell neighbor = cell.offset_by(offset);
                if (!dist.in_domain(neighbor)) {
                    throw DomainError("closure violation at cell " + cell.to_string());
                }
                if (members.insert(neighbor).second) {
                    next.push_back(neighbor);
                }
            }
        }
        out.growth.push_back(members.size());
        if (next.empty()) {
            out.finite = true;
            break;
        }
        frontier = std::move(next);
    }
    std::vector<Cell> cells(members.begin(), members.end());
    std::sort(cells.begin(), cells.end());
    out.cells = Window::of_cells(std::move(cells));
    return out;
}

}  // namespace nuca
