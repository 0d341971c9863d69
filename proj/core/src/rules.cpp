#include "nuca/rules.hpp"

#include <algorithm>
#include <unordered_set>

#include "nuca/spiral.hpp"

namespace nuca {

namespace {

std::uint64_t table_size_for(int q, int arity) {
    std::uint64_t n = 1;
    for (int i = 0; i < arity; ++i) {
        n *= static_cast<std::uint64_t>(q);
        if (n > (std::uint64_t{1} << 20)) {
            throw DomainError("rule table would exceed the q^m size limit");
        }
    }
    return n;
}

}  // namespace

LocalRule::LocalRule(std::string name, int q, std::vector<Cell> neighborhood,
                     std::vector<std::uint8_t> table)
    : name_(std::move(name)), q_(q), neighborhood_(std::move(neighborhood)),
      table_(std::move(table)) {
    if (name_.empty()) {
        throw DomainError("rule name must be non-empty");
    }
    if (q_ < 2 || q_ > 255) {
        throw DomainError("state count must be in [2, 255], got " + std::to_string(q_));
    }
    if (neighborhood_.empty()) {
        throw DomainError("rule '" + name_ + "' needs a non-empty neighborhood");
    }
    const int d = neighborhood_.front().dim();
    std::unordered_set<Cell, CellHash> seen;
    for (const Cell& offset : neighborhood_) {
        if (offset.dim() != d) {
            throw DomainError("rule '" + name_ + "' mixes neighborhood dimensions");
        }
        if (!seen.insert(offset).second) {
            throw DomainError("rule '" + name_ + "' repeats offset " + offset.to_string());
        }
    }
    const std::uint64_t expected = table_size_for(q_, arity());
    if (table_.size() != expected) {
        throw DomainError("rule '" + name_ + "' table must have length q^m = " +
                          std::to_string(expected) + ", got " + std::to_string(table_.size()));
    }
    for (std::uint8_t out : table_) {
        if (out >= q_) {
            throw DomainError("rule '" + name_ + "' table output " +
                              std::to_string(static_cast<int>(out)) + " is outside [0, " +
                              std::to_string(q_) + ")");
        }
    }
}

std::uint8_t LocalRule::apply(std::span<const std::uint8_t> neighbor_states) const {
    if (neighbor_states.size() != neighborhood_.size()) {
        throw DomainError("rule '" + name_ + "' expects " + std::to_string(neighborhood_.size()) +
                          " neighbor states, got " + std::to_string(neighbor_states.size()));
    }
    std::size_t idx = 0;
    for (std::uint8_t s : neighbor_states) {
        if (s >= q_) {
            throw DomainError("neighbor state " + std::to_string(static_cast<int>(s)) +
                              " is outside [0, " + std::to_string(q_) + ")");
        }
        idx = idx * static_cast<std::size_t>(q_) + s;
    }
    return table_[idx];
}

std::int64_t LocalRule::min_offset(int axis) const {
    std::int64_t m = neighborhood_.front()[axis];
    for (const Cell& offset : neighborhood_) {
        m = std::min(m, offset[axis]);
    }
    return m;
}

std::int64_t LocalRule::max_offset(int axis) const {
    std::int64_t m = neighborhood_.front()[axis];
    for (const Cell& offset : neighborhood_) {
        m = std::max(m, offset[axis]);
    }
    return m;
}

RuleSet::RuleSet(std::vector<LocalRule> rules) : rules_(std::move(rules)) {
    if (rules_.empty()) {
        throw DomainError("rule set must contain at least one rule");
    }
    q_ = rules_.front().q();
    dim_ = rules_.front().dim();
    std::unordered_set<std::string> names;
    for (const LocalRule& r : rules_) {
        if (r.q() != q_) {
            throw DomainError("rule set mixes state counts (" + std::to_string(q_) + " vs " +
                              std::to_string(r.q()) + " in '" + r.name() + "')");
        }
        if (r.dim() != dim_) {
            throw DomainError("rule set mixes dimensions ('" + r.name() + "')");
        }
        if (!names.insert(r.name()).second) {
            throw DomainError("duplicate rule name '" + r.name() + "'");
        }
    }
}

const LocalRule& RuleSet::at(int index) const {
    if (index < 0 || index >= size()) {
        throw DomainError("rule index " + std::to_string(index) + " out of range");
    }
    return rules_[static_cast<std::size_t>(index)];
}

std::optional<int> RuleSet::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i) {
        if (rules_[static_cast<std::size_t>(i)].name() == name) {
            return i;
        }
    }
    return std::nullopt;
}

const LocalRule& RuleSet::by_name(const std::string& name) const {
    const auto idx = index_of(name);
    if (!idx.has_value()) {
        throw DomainError("no rule named '" + name + "'");
    }
    return rules_[static_cast<std::size_t>(*idx)];
}

Cell dir_offset(Dir d) {
    switch (d) {
        case Dir::East:
            return Cell(1, 0);
        case Dir::North:
            return Cell(0, 1);
        case Dir::West:
            return Cell(-1, 0);
        case Dir::South:
            return Cell(0, -1);
    }
    throw DomainError("bad direction");
}

const char* dir_letter(Dir d) {
    switch (d) {
        case Dir::East:
            return "E";
        case Dir::North:
            return "N";
        case Dir::West:
            return "W";
        case Dir::South:
            return "S";
    }
    return "?";
}

std::optional<Dir> dir_of_offset(const Cell& offset) {
    for (Dir d : {Dir::East, Dir::North, Dir::West, Dir::South}) {
        if (offset == dir_offset(d)) {
            return d;
        }
    }
    return std::nullopt;
}

RuleDistribution RuleDistribution::make(std::shared_ptr<const RuleSet> rules, int dim,
                                        LatticeDomain domain, Kind kind) {
    RuleDistribution dist = make_unchecked(std::move(rules), dim, domain, std::move(kind));
    const auto violations = validate_closure(dist);
    if (!violations.empty()) {
        throw DomainError("rule distribution is not closed: cell " +
                          violations.front().cell.to_string() + " reaches " +
                          violations.front().neighbor.to_string() + " outside the domain (" +
                          std::to_string(violations.size()) + " violation(s))");
    }
    return dist;
}

RuleDistribution RuleDistribution::make_unchecked(std::shared_ptr<const RuleSet> rules, int dim,
                                                  LatticeDomain domain, Kind kind) {
    if (!rules) {
        throw DomainError("rule distribution needs a rule set");
    }
    RuleDistribution dist(std::move(rules), dim, domain, std::move(kind));
    dist.validate_structure();
    return dist;
}

void RuleDistribution::validate_structure() const {
    if (dim_ < 1 || dim_ > kMaxDim) {
        throw DomainError("distribution dimension must be in [1, " + std::to_string(kMaxDim) +
                          "]");
    }
    if (rules_->dim() != dim_) {
        throw DomainError("rule set dimension " + std::to_string(rules_->dim()) +
                          " does not match distribution dimension " + std::to_string(dim_));
    }
    if (domain_ == LatticeDomain::HalfLine && dim_ != 1) {
        throw DomainError("half-line domains are one-dimensional");
    }
    const auto check_rule = [this](int index, const char* where) {
        if (index < 0 || index >= rules_->size()) {
            throw DomainError(std::string("rule index out of range in ") + where);
        }
    };
    if (const auto* u = std::get_if<Uniform>(&kind_)) {
        check_rule(u->rule, "uniform kind");
    } else if (const auto* f = std::get_if<FiniteExceptions>(&kind_)) {
        check_rule(f->default_rule, "finite-exceptions kind");
        for (const auto& [cell, rule] : f->overrides) {
            if (cell.dim() != dim_) {
                throw DomainError("exception cell " + cell.to_string() + " has wrong dimension");
            }
            check_rule(rule, "finite-exceptions kind");
        }
        if (!std::is_sorted(f->overrides.begin(), f->overrides.end(),
                            [](const auto& a, const auto& b) { return a.first < b.first; })) {
            throw DomainError("finite-exception cells must be sorted and distinct");
        }
        for (std::size_t i = 1; i < f->overrides.size(); ++i) {
            if (f->overrides[i - 1].first == f->overrides[i].first) {
                throw DomainError("duplicate exception cell " +
                                  f->overrides[i].first.to_string());
            }
        }
    } else if (const auto* r = std::get_if<Rays1D>(&kind_)) {
        if (dim_ != 1) {
            throw DomainError("rays kind is one-dimensional");
        }
        if (domain_ != LatticeDomain::Full) {
            throw DomainError("rays kind extends to infinity on both sides; domain must be full");
        }
        if (r->a > r->b) {
            throw DomainError("rays kind needs a <= b");
        }
        if (r->middle.size() != static_cast<std::size_t>(r->b - r->a + 1)) {
            throw DomainError("rays kind needs one rule per cell of [a, b]");
        }
        check_rule(r->left, "rays kind");
        check_rule(r->right, "rays kind");
        for (int idx : r->middle) {
            check_rule(idx, "rays kind");
        }
    } else if (const auto* p = std::get_if<Periodic>(&kind_)) {
        if (p->periods.size() != static_cast<std::size_t>(dim_)) {
            throw DomainError("periodic kind needs one period per axis");
        }
        std::uint64_t volume = 1;
        for (std::int64_t period : p->periods) {
            if (period < 1) {
                throw DomainError("periods must be positive");
            }
            volume *= static_cast<std::uint64_t>(period);
            if (volume > (std::uint64_t{1} << 24)) {
                throw DomainError("fundamental pattern too large");
            }
        }
        if (p->lo.dim() != dim_) {
            throw DomainError("periodic base cell has wrong dimension");
        }
        if (p->rules.size() != volume) {
            throw DomainError("periodic kind needs one rule per fundamental cell, expected " +
                              std::to_string(volume));
        }
        for (int idx : p->rules) {
            check_rule(idx, "periodic kind");
        }
    } else if (const auto* s = std::get_if<Spiral>(&kind_)) {
        if (dim_ != 2 || domain_ != LatticeDomain::Full) {
            throw DomainError("spiral kind lives on the full two-dimensional lattice");
        }
        check_rule(s->origin, "spiral kind");
        const LocalRule& origin_rule = rules_->at(s->origin);
        if (origin_rule.arity() != 1 || origin_rule.neighborhood().front() != Cell(0, 0)) {
            throw DomainError("spiral origin rule must have neighborhood {(0,0)}");
        }
        for (Dir d : {Dir::East, Dir::North, Dir::West, Dir::South}) {
            const int idx = s->oriented[static_cast<std::size_t>(d)];
            check_rule(idx, "spiral kind");
            const LocalRule& rule = rules_->at(idx);
            const std::vector<Cell> want = {dir_offset(d), Cell(0, 0)};
            if (rule.neighborhood() != want) {
                throw DomainError("spiral rule '" + rule.name() +
                                  "' must use neighborhood {toward-neighbor, (0,0)}");
            }
        }
    }
}

bool RuleDistribution::in_domain(const Cell& c) const {
    if (c.dim() != dim_) {
        return false;
    }
    if (domain_ == LatticeDomain::HalfLine) {
        return c[0] >= 0;
    }
    return true;
}

int RuleDistribution::rule_index_at(const Cell& c) const {
    if (!in_domain(c)) {
        throw DomainError("cell " + c.to_string() + " outside the distribution domain");
    }
    if (const auto* u = std::get_if<Uniform>(&kind_)) {
        return u->rule;
    }
    if (const auto* f = std::get_if<FiniteExceptions>(&kind_)) {
        const auto it = std::lower_bound(
            f->overrides.begin(), f->overrides.end(), c,
            [](const auto& entry, const Cell& cell) { return entry.first < cell; });
        if (it != f->overrides.end() && it->first == c) {
            return it->second;
        }
        return f->default_rule;
    }
    if (const auto* r = std::get_if<Rays1D>(&kind_)) {
        const std::int64_t x = c[0];
        if (x < r->a) {
            return r->left;
        }
        if (x > r->b) {
            return r->right;
        }
        return r->middle[static_cast<std::size_t>(x - r->a)];
    }
    if (const auto* p = std::get_if<Periodic>(&kind_)) {
        std::int64_t idx = 0;
        for (int axis = 0; axis < dim_; ++axis) {
            const std::int64_t period = p->periods[static_cast<std::size_t>(axis)];
            std::int64_t rel = (c[axis] - p->lo[axis]) % period;
            if (rel < 0) {
                rel += period;
            }
            idx = idx * period + rel;
        }
        return p->rules[static_cast<std::size_t>(idx)];
    }
    const auto& s = std::get<Spiral>(kind_);
    const std::int64_t k = spiral_index(c);
    if (k == 0) {
        return s.origin;
    }
    const Cell prev = spiral(k - 1);
    const Cell offset = prev.offset_by(c.negated());
    const auto d = dir_of_offset(offset);
    if (!d.has_value()) {
        throw Error("spiral adjacency broke at k=" + std::to_string(k));
    }
    return s.oriented[static_cast<std::size_t>(*d)];
}

bool RuleDistribution::operator==(const RuleDistribution& other) const {
    if (dim_ != other.dim_ || domain_ != other.domain_ || *rules_ != *other.rules_) {
        return false;
    }
    if (kind_.index() != other.kind_.index()) {
        return false;
    }
    if (const auto* u = std::get_if<Uniform>(&kind_)) {
        return u->rule == std::get<Uniform>(other.kind_).rule;
    }
    if (const auto* f = std::get_if<FiniteExceptions>(&kind_)) {
        const auto& g = std::get<FiniteExceptions>(other.kind_);
        return f->default_rule == g.default_rule && f->overrides == g.overrides;
    }
    if (const auto* r = std::get_if<Rays1D>(&kind_)) {
        const auto& s = std::get<Rays1D>(other.kind_);
        return r->left == s.left && r->a == s.a && r->b == s.b && r->middle == s.middle &&
               r->right == s.right;
    }
    if (const auto* p = std::get_if<Periodic>(&kind_)) {
        const auto& q = std::get<Periodic>(other.kind_);
        return p->periods == q.periods && p->lo == q.lo && p->rules == q.rules;
    }
    const auto& a = std::get<Spiral>(kind_);
    const auto& b = std::get<Spiral>(other.kind_);
    return a.origin == b.origin && a.oriented == b.oriented;
}

std::vector<ClosureViolation> validate_closure(const RuleDistribution& dist) {
    std::vector<ClosureViolation> out;
    if (dist.domain() == LatticeDomain::Full) {
        return out;  // every neighbor stays inside Z^d
    }
    // Half-line: only cells within the largest leftward reach can violate.
    std::int64_t reach = 0;
    for (const LocalRule& r : dist.rules().rules()) {
        reach = std::max(reach, -r.min_offset(0));
    }
    for (std::int64_t x = 0; x < reach; ++x) {
        const Cell cell(x);
        const LocalRule& rule = dist.rule_at(cell);
        for (const Cell& offset : rule.neighborhood()) {
            const Cell neighbor = cell.offset_by(offset);
            if (!dist.in_domain(neighbor)) {
                out.push_back(ClosureViolation{cell, neighbor});
            }
        }
    }
    return out;
}

}  // namespace nuca
