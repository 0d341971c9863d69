#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nuca {

// Coordinates are exact signed integers. Anything past the safe bound is an
// error, never wraparound.
inline constexpr int kMaxDim = 2;
inline constexpr std::int64_t kSafeCoordBound = std::int64_t{1} << 40;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid input: out-of-domain cells, malformed parameters, bad arguments.
struct DomainError : Error {
    using Error::Error;
};

// A serialized file failed validation; `path` names the offending field.
struct SchemaError : DomainError {
    SchemaError(std::string path_, const std::string& message)
        : DomainError(path_ + ": " + message), path(std::move(path_)) {}

    std::string path;
};

// A lattice point. d is 1 or 2 here; bump kMaxDim to extend.
class Cell {
public:
    Cell() : dim_(1), coords_{0, 0} {}

    explicit Cell(std::int64_t x) : dim_(1), coords_{x, 0} { check_bounds(); }

    Cell(std::int64_t x, std::int64_t y) : dim_(2), coords_{x, y} { check_bounds(); }

    static Cell of(const std::vector<std::int64_t>& coords);

    int dim() const { return dim_; }

    std::int64_t operator[](int axis) const { return coords_[static_cast<std::size_t>(axis)]; }

    // Checked translation; both cells must share a dimension.
    Cell offset_by(const Cell& delta) const;

    Cell negated() const;

    std::vector<std::int64_t> coords() const {
        return std::vector<std::int64_t>(coords_.begin(), coords_.begin() + dim_);
    }

    bool operator==(const Cell& other) const {
        if (dim_ != other.dim_) {
            return false;
        }
        for (int i = 0; i < dim_; ++i) {
            if (coords_[static_cast<std::size_t>(i)] != other.coords_[static_cast<std::size_t>(i)]) {
                return false;
            }
        }
        return true;
    }

    bool operator!=(const Cell& other) const { return !(*this == other); }

    // Lexicographic by (dim, coords); gives every cell set a canonical order.
    bool operator<(const Cell& other) const {
        if (dim_ != other.dim_) {
            return dim_ < other.dim_;
        }
        for (int i = 0; i < dim_; ++i) {
            const auto a = coords_[static_cast<std::size_t>(i)];
            const auto b = other.coords_[static_cast<std::size_t>(i)];
            if (a != b) {
                return a < b;
            }
        }
        return false;
    }

    std::string to_string() const;

private:
    void check_bounds() const;

    int dim_;
    std::array<std::int64_t, kMaxDim> coords_;
};

struct CellHash {
    std::size_t operator()(const Cell& c) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ull ^ static_cast<std::uint64_t>(c.dim());
        for (int i = 0; i < c.dim(); ++i) {
            h ^= static_cast<std::uint64_t>(c[i]);
            h *= 0x00000100000001b3ull;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }
};

// The exact computation would have to consult cells outside the known region.
struct ConeEscapeError : Error {
    ConeEscapeError(const std::string& message, std::vector<Cell> uncovered_);

    std::vector<Cell> uncovered;
};

// A finite cell set: either an axis-aligned box or an explicit list.
// List windows keep their construction order (callers rely on it for column
// layouts); equality is by cell set.
class Window {
public:
    static Window box(const Cell& lo, const Cell& hi);
    static Window of_cells(std::vector<Cell> cells);
    static Window single(const Cell& c) { return of_cells({c}); }
    // 1-D convenience.
    static Window interval(std::int64_t lo, std::int64_t hi) { return box(Cell(lo), Cell(hi)); }

    bool is_box() const { return is_box_; }
    const Cell& lo() const;
    const Cell& hi() const;

    int dim() const { return dim_; }
    std::uint64_t size() const;
    bool contains(const Cell& c) const;

    // Box windows enumerate row-major (axis 0 outermost, last axis fastest);
    // list windows enumerate in construction order.
    std::vector<Cell> cells() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        if (!is_box_) {
            for (const Cell& c : cells_) {
                fn(c);
            }
            return;
        }
        if (dim_ == 1) {
            for (std::int64_t x = lo_[0]; x <= hi_[0]; ++x) {
                fn(Cell(x));
            }
            return;
        }
        for (std::int64_t x = lo_[0]; x <= hi_[0]; ++x) {
            for (std::int64_t y = lo_[1]; y <= hi_[1]; ++y) {
                fn(Cell(x, y));
            }
        }
    }

    // Index of `c` in the enumeration order, or -1.
    std::int64_t index_of(const Cell& c) const;

    bool operator==(const Window& other) const;
    bool operator!=(const Window& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    Window() = default;

    bool is_box_ = false;
    int dim_ = 1;
    Cell lo_;
    Cell hi_;
    std::vector<Cell> cells_;
};

}  // namespace nuca
