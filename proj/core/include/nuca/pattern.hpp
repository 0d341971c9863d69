#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nuca/types.hpp"

namespace nuca {

// States on a finite window, aligned with the window's enumeration order.
// Immutable after construction.
class Pattern {
public:
    Pattern(Window domain, std::vector<std::uint8_t> states);

    static Pattern uniform(Window domain, std::uint8_t state);

    const Window& domain() const { return domain_; }
    std::span<const std::uint8_t> values() const { return states_; }

    std::uint8_t at(const Cell& c) const;

    bool operator==(const Pattern& other) const;
    bool operator!=(const Pattern& other) const { return !(*this == other); }

private:
    Window domain_;
    std::vector<std::uint8_t> states_;
};

// Shifted pattern: result domain is p.domain - x and result(y) = p(y + x).
Pattern shift_pattern(const Pattern& p, const Cell& x);

// How a configuration looks outside the explicitly known window.
// SeededRandom is a pure function of (seed, cell), so query order never
// matters.
class FillPolicy {
public:
    enum class Kind { Uniform, Undefined, SeededRandom };

    static FillPolicy uniform(std::uint8_t state) { return FillPolicy(Kind::Uniform, state, 0); }
    static FillPolicy undefined() { return FillPolicy(Kind::Undefined, 0, 0); }
    static FillPolicy seeded(std::uint64_t seed) { return FillPolicy(Kind::SeededRandom, 0, seed); }

    Kind kind() const { return kind_; }
    std::uint8_t state() const { return state_; }
    std::uint64_t seed() const { return seed_; }

    bool operator==(const FillPolicy& other) const {
        return kind_ == other.kind_ && state_ == other.state_ && seed_ == other.seed_;
    }

    std::string describe() const;

private:
    FillPolicy(Kind kind, std::uint8_t state, std::uint64_t seed)
        : kind_(kind), state_(state), seed_(seed) {}

    Kind kind_;
    std::uint8_t state_;
    std::uint64_t seed_;
};

// Stable per-cell hash behind SeededRandom fills. Frozen: tests pin values.
std::uint8_t seeded_state(std::uint64_t seed, const Cell& c, int q);

// A finite stand-in for a full configuration: explicit states on a window
// plus a fill policy for everything else. Consulting a cell under an
// Undefined fill is an error, never a silent default.
class WindowConfiguration {
public:
    static WindowConfiguration from_fill(FillPolicy fill, std::string label = "");
    static WindowConfiguration from_pattern(Pattern known, FillPolicy fill, std::string label = "");

    const std::optional<Pattern>& known() const { return known_; }
    const FillPolicy& fill() const { return fill_; }
    const std::string& label() const { return label_; }

    bool determines(const Cell& c) const;

    // State of `c`, reduced to [0, q). Throws DomainError when the cell is
    // outside the known region and the fill is Undefined.
    std::uint8_t state_at(const Cell& c, int q) const;

private:
    WindowConfiguration(std::optional<Pattern> known, FillPolicy fill, std::string label)
        : known_(std::move(known)), fill_(fill), label_(std::move(label)) {}

    std::optional<Pattern> known_;
    FillPolicy fill_;
    std::string label_;
};

// True iff the configuration agrees with `base` on every cell of its domain.
bool cylinder_member(const WindowConfiguration& c, const Pattern& base, int q);

}  // namespace nuca
