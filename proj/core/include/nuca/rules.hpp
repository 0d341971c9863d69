#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nuca/types.hpp"

namespace nuca {

// Finite lookup table over an ordered neighborhood of offsets. The table is
// indexed lexicographically by neighbor states, first offset most
// significant; the declared order is part of the serialized format.
class LocalRule {
public:
    LocalRule(std::string name, int q, std::vector<Cell> neighborhood,
              std::vector<std::uint8_t> table);

    const std::string& name() const { return name_; }
    int q() const { return q_; }
    int dim() const { return neighborhood_.front().dim(); }
    int arity() const { return static_cast<int>(neighborhood_.size()); }
    const std::vector<Cell>& neighborhood() const { return neighborhood_; }
    const std::vector<std::uint8_t>& table() const { return table_; }

    // Checked table lookup; `neighbor_states` follows the neighborhood order.
    std::uint8_t apply(std::span<const std::uint8_t> neighbor_states) const;

    std::int64_t min_offset(int axis) const;
    std::int64_t max_offset(int axis) const;

    bool operator==(const LocalRule& other) const {
        return name_ == other.name_ && q_ == other.q_ && neighborhood_ == other.neighborhood_ &&
               table_ == other.table_;
    }
    bool operator!=(const LocalRule& other) const { return !(*this == other); }

private:
    std::string name_;
    int q_;
    std::vector<Cell> neighborhood_;
    std::vector<std::uint8_t> table_;
};

class RuleSet {
public:
    explicit RuleSet(std::vector<LocalRule> rules);

    int q() const { return q_; }
    int dim() const { return dim_; }
    int size() const { return static_cast<int>(rules_.size()); }
    const LocalRule& at(int index) const;
    const std::vector<LocalRule>& rules() const { return rules_; }

    std::optional<int> index_of(const std::string& name) const;
    const LocalRule& by_name(const std::string& name) const;

    bool operator==(const RuleSet& other) const { return rules_ == other.rules_; }
    bool operator!=(const RuleSet& other) const { return !(*this == other); }

private:
    int q_;
    int dim_;
    std::vector<LocalRule> rules_;
};

enum class LatticeDomain { Full, HalfLine };

// Compass direction of a spiral cell's designated neighbor.
enum class Dir : int { East = 0, North = 1, West = 2, South = 3 };

Cell dir_offset(Dir d);
const char* dir_letter(Dir d);
std::optional<Dir> dir_of_offset(const Cell& offset);

struct ClosureViolation {
    Cell cell;
    Cell neighbor;
};

// Finitely-described assignment of rules to cells. Construction through
// make() validates structure and closure; make_unchecked() skips the closure
// check so diagnostic tooling can inspect broken candidates.
class RuleDistribution {
public:
    struct Uniform {
        int rule;
    };
    struct FiniteExceptions {
        int default_rule;
        std::vector<std::pair<Cell, int>> overrides;  // sorted by cell
    };
    struct Rays1D {
        int left;  // rule for x < a
        std::int64_t a;
        std::int64_t b;
        std::vector<int> middle;  // rules on [a, b]
        int right;                // rule for x > b
    };
    struct Periodic {
        std::vector<std::int64_t> periods;  // one positive period per axis
        Cell lo;                            // fundamental box is [lo, lo + periods - 1]
        std::vector<int> rules;             // row-major over the fundamental box
    };
    struct Spiral {
        int origin;
        std::array<int, 4> oriented;  // indexed by Dir: rule whose neighbor lies that way
    };
    using Kind = std::variant<Uniform, FiniteExceptions, Rays1D, Periodic, Spiral>;

    static RuleDistribution make(std::shared_ptr<const RuleSet> rules, int dim,
                                 LatticeDomain domain, Kind kind);
    static RuleDistribution make_unchecked(std::shared_ptr<const RuleSet> rules, int dim,
                                           LatticeDomain domain, Kind kind);

    int dim() const { return dim_; }
    LatticeDomain domain() const { return domain_; }
    const RuleSet& rules() const { return *rules_; }
    std::shared_ptr<const RuleSet> rules_ptr() const { return rules_; }
    const Kind& kind() const { return kind_; }

    bool in_domain(const Cell& c) const;

    int rule_index_at(const Cell& c) const;
    const LocalRule& rule_at(const Cell& c) const { return rules_->at(rule_index_at(c)); }

    bool operator==(const RuleDistribution& other) const;
    bool operator!=(const RuleDistribution& other) const { return !(*this == other); }

private:
    RuleDistribution(std::shared_ptr<const RuleSet> rules, int dim, LatticeDomain domain,
                     Kind kind)
        : rules_(std::move(rules)), dim_(dim), domain_(domain), kind_(std::move(kind)) {}

    void validate_structure() const;

    std::shared_ptr<const RuleSet> rules_;
    int dim_;
    LatticeDomain domain_;
    Kind kind_;
};

// Flags every cell whose rule reaches outside the lattice domain. Empty
// result means the distribution is closed.
std::vector<ClosureViolation> validate_closure(const RuleDistribution& dist);

}  // namespace nuca
