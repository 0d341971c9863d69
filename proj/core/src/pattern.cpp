#include "nuca/pattern.hpp"

namespace nuca {

Pattern::Pattern(Window domain, std::vector<std::uint8_t> states)
    : domain_(std::move(domain)), states_(std::move(states)) {
    if (states_.size() != domain_.size()) {
        throw DomainError("pattern needs exactly one state per cell: domain has " +
                          std::to_string(domain_.size()) + " cells, got " +
                          std::to_string(states_.size()) + " states");
    }
}

Pattern Pattern::uniform(Window domain, std::uint8_t state) {
    const std::size_t n = static_cast<std::size_t>(domain.size());
    return Pattern(std::move(domain), std::vector<std::uint8_t>(n, state));
}

std::uint8_t Pattern::at(const Cell& c) const {
    const std::int64_t idx = domain_.index_of(c);
    if (idx < 0) {
        throw DomainError("cell " + c.to_string() + " outside pattern domain " +
                          domain_.to_string());
    }
    return states_[static_cast<std::size_t>(idx)];
}

bool Pattern::operator==(const Pattern& other) const {
    if (!(domain_ == other.domain_)) {
        return false;
    }
    // Domains can enumerate in different orders; compare cellwise.
    bool equal = true;
    domain_.for_each([&](const Cell& c) {
        if (equal && at(c) != other.at(c)) {
            equal = false;
        }
    });
    return equal;
}

Pattern shift_pattern(const Pattern& p, const Cell& x) {
    const Cell neg = x.negated();
    const Window& d = p.domain();
    Window shifted = d.is_box() ? Window::box(d.lo().offset_by(neg), d.hi().offset_by(neg))
                                : [&] {
                                      std::vector<Cell> cells = d.cells();
                                      for (Cell& c : cells) {
                                          c = c.offset_by(neg);
                                      }
                                      return Window::of_cells(std::move(cells));
                                  }();
    // Translation preserves the enumeration order, so values carry over.
    return Pattern(std::move(shifted),
                   std::vector<std::uint8_t>(p.values().begin(), p.values().end()));
}

std::string FillPolicy::describe() const {
    switch (kind_) {
        case Kind::Uniform:
            return "uniform:" + std::to_string(static_cast<int>(state_));
        case Kind::Undefined:
            return "undefined";
        case Kind::SeededRandom:
            return "seed:" + std::to_string(seed_);
    }
    return "?";
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

std::uint8_t seeded_state(std::uint64_t seed, const Cell& c, int q) {
    std::uint64_t h = mix64(seed ^ 0x7361667266696c6cull);
    for (int i = 0; i < c.dim(); ++i) {
        h = mix64(h ^ static_cast<std::uint64_t>(c[i]) ^
                  (0x100000001b3ull * static_cast<std::uint64_t>(i + 1)));
    }
    return static_cast<std::uint8_t>(h % static_cast<std::uint64_t>(q));
}

WindowConfiguration WindowConfiguration::from_fill(FillPolicy fill, std::string label) {
    if (fill.kind() == FillPolicy::Kind::Undefined) {
        throw DomainError("a configuration with no known pattern needs a defined fill");
    }
    if (label.empty()) {
        label = fill.describe();
    }
    return WindowConfiguration(std::nullopt, fill, std::move(label));
}

WindowConfiguration WindowConfiguration::from_pattern(Pattern known, FillPolicy fill,
                                                      std::string label) {
    if (label.empty()) {
        label = "pattern on " + known.domain().to_string() + " / " + fill.describe();
    }
    return WindowConfiguration(std::move(known), fill, std::move(label));
}

bool WindowConfiguration::determines(const Cell& c) const {
    if (known_.has_value() && known_->domain().contains(c)) {
        return true;
    }
    return fill_.kind() != FillPolicy::Kind::Undefined;
}

std::uint8_t WindowConfiguration::state_at(const Cell& c, int q) const {
    if (q < 2) {
        throw DomainError("state count must be at least 2");
    }
    std::uint8_t value = 0;
    if (known_.has_value() && known_->domain().contains(c)) {
        value = known_->at(c);
    } else {
        switch (fill_.kind()) {
            case FillPolicy::Kind::Uniform:
                value = fill_.state();
                break;
            case FillPolicy::Kind::SeededRandom:
                return seeded_state(fill_.seed(), c, q);
            case FillPolicy::Kind::Undefined:
                throw DomainError("cell " + c.to_string() + " outside known region");
        }
    }
    if (value >= q) {
        throw DomainError("state " + std::to_string(static_cast<int>(value)) + " at " +
                          c.to_string() + " is outside [0, " + std::to_string(q) + ")");
    }
    return value;
}

bool cylinder_member(const WindowConfiguration& c, const Pattern& base, int q) {
    bool member = true;
    base.domain().for_each([&](const Cell& cell) {
        if (member && c.state_at(cell, q) != base.at(cell)) {
            member = false;
        }
    });
    return member;
}

}  // namespace nuca
