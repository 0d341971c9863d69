#include "nuca/types.hpp"

#include <algorithm>
#include <unordered_set>

namespace nuca {

Cell Cell::of(const std::vector<std::int64_t>& coords) {
    if (coords.empty() || coords.size() > static_cast<std::size_t>(kMaxDim)) {
        throw DomainError("cell dimension must be between 1 and " + std::to_string(kMaxDim) +
                          ", got " + std::to_string(coords.size()));
    }
    if (coords.size() == 1) {
        return Cell(coords[0]);
    }
    return Cell(coords[0], coords[1]);
}

Cell Cell::offset_by(const Cell& delta) const {
    if (delta.dim_ != dim_) {
        throw DomainError("cell dimension mismatch: " + to_string() + " vs " + delta.to_string());
    }
    Cell out = *this;
    for (int i = 0; i < dim_; ++i) {
        out.coords_[static_cast<std::size_t>(i)] += delta.coords_[static_cast<std::size_t>(i)];
    }
    out.check_bounds();
    return out;
}

Cell Cell::negated() const {
    Cell out = *this;
    for (int i = 0; i < dim_; ++i) {
        out.coords_[static_cast<std::size_t>(i)] = -out.coords_[static_cast<std::size_t>(i)];
    }
    return out;
}

void Cell::check_bounds() const {
    for (int i = 0; i < dim_; ++i) {
        const std::int64_t v = coords_[static_cast<std::size_t>(i)];
        if (v > kSafeCoordBound || v < -kSafeCoordBound) {
            throw DomainError("coordinate " + std::to_string(v) + " exceeds the safe bound 2^40");
        }
    }
}

std::string Cell::to_string() const {
    std::string out = "(";
    for (int i = 0; i < dim_; ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(coords_[static_cast<std::size_t>(i)]);
    }
    out += ")";
    return out;
}

ConeEscapeError::ConeEscapeError(const std::string& message, std::vector<Cell> uncovered_)
    : Error(message), uncovered(std::move(uncovered_)) {}

Window Window::box(const Cell& lo, const Cell& hi) {
    if (lo.dim() != hi.dim()) {
        throw DomainError("box corners must share a dimension");
    }
    for (int i = 0; i < lo.dim(); ++i) {
        if (lo[i] > hi[i]) {
            throw DomainError("box requires lo <= hi componentwise, got lo=" + lo.to_string() +
                              " hi=" + hi.to_string());
        }
    }
    Window w;
    w.is_box_ = true;
    w.dim_ = lo.dim();
    w.lo_ = lo;
    w.hi_ = hi;
    return w;
}

Window Window::of_cells(std::vector<Cell> cells) {
    if (cells.empty()) {
        throw DomainError("window must be non-empty");
    }
    const int d = cells.front().dim();
    std::unordered_set<Cell, CellHash> seen;
    for (const Cell& c : cells) {
        if (c.dim() != d) {
            throw DomainError("window cells must share a dimension");
        }
        if (!seen.insert(c).second) {
            throw DomainError("duplicate cell " + c.to_string() + " in window");
        }
    }
    Window w;
    w.is_box_ = false;
    w.dim_ = d;
    w.cells_ = std::move(cells);
    return w;
}

const Cell& Window::lo() const {
    if (!is_box_) {
        throw DomainError("lo() on a non-box window");
    }
    return lo_;
}

const Cell& Window::hi() const {
    if (!is_box_) {
        throw DomainError("hi() on a non-box window");
    }
    return hi_;
}

std::uint64_t Window::size() const {
    if (!is_box_) {
        return cells_.size();
    }
    std::uint64_t n = 1;
    for (int i = 0; i < dim_; ++i) {
        n *= static_cast<std::uint64_t>(hi_[i] - lo_[i] + 1);
    }
    return n;
}

bool Window::contains(const Cell& c) const {
    if (c.dim() != dim_) {
        return false;
    }
    if (is_box_) {
        for (int i = 0; i < dim_; ++i) {
            if (c[i] < lo_[i] || c[i] > hi_[i]) {
                return false;
            }
        }
        return true;
    }
    return std::find(cells_.begin(), cells_.end(), c) != cells_.end();
}

std::vector<Cell> Window::cells() const {
    if (!is_box_) {
        return cells_;
    }
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&out](const Cell& c) { out.push_back(c); });
    return out;
}

std::int64_t Window::index_of(const Cell& c) const {
    if (c.dim() != dim_) {
        return -1;
    }
    if (is_box_) {
        if (!contains(c)) {
            return -1;
        }
        std::int64_t idx = 0;
        for (int i = 0; i < dim_; ++i) {
            idx = idx * (hi_[i] - lo_[i] + 1) + (c[i] - lo_[i]);
        }
        return idx;
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i] == c) {
            return static_cast<std::int64_t>(i);
        }
    }
    return -1;
}

bool Window::operator==(const Window& other) const {
    if (dim_ != other.dim_ || size() != other.size()) {
        return false;
    }
    if (is_box_ && other.is_box_) {
        return lo_ == other.lo_ && hi_ == other.hi_;
    }
    std::vector<Cell> a = cells();
    std::vector<Cell> b = other.cells();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::string Window::to_string() const {
    if (is_box_) {
        return "[" + lo_.to_string() + ".." + hi_.to_string() + "]";
    }
    std::string out = "{";
    for (std::size_t i = 0; i < cells_.size() && i < 8; ++i) {
        if (i > 0) {
            out += ",";
        }
        out += cells_[i].to_string();
    }
    if (cells_.size() > 8) {
        out += ",... " + std::to_string(cells_.size()) + " cells";
    }
    out += "}";
    return out;
}

}  // namespace nuca
