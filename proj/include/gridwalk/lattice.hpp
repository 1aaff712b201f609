#pragma once

#include <vector>

namespace gridwalk {

enum class Borders { Bordered, Boundless };

/// 1-based lattice coordinate. z stays 1 on 2D grids.
struct Coord {
    int x = 1;
    int y = 1;
    int z = 1;

    friend bool operator==(const Coord&, const Coord&) = default;
};

/// Rectangular lattice geometry: the state sequencing x + w*(y-1) + w*d*(z-1)
/// and the taxicab neighbor rule, bordered or wrap-around. States are numbered
/// 1..state_count(). height == 1 encodes the 2D case.
class GridSpec {
public:
    /// Throws std::invalid_argument unless width >= 2, depth >= 2, height >= 1.
    GridSpec(int width, int depth, int height, Borders borders);

    int width() const noexcept { return width_; }
    int depth() const noexcept { return depth_; }
    int height() const noexcept { return height_; }
    Borders borders() const noexcept { return borders_; }
    bool bordered() const noexcept { return borders_ == Borders::Bordered; }

    int dims() const noexcept { return height_ > 1 ? 3 : 2; }
    int state_count() const noexcept { return width_ * depth_ * height_; }
    int max_degree() const noexcept { return 2 * dims(); }

    /// State index of a coordinate. Throws std::domain_error when any
    /// component is outside its axis.
    int index_of(Coord c) const;

    /// Inverse of index_of. Throws std::domain_error when the state index is
    /// outside 1..state_count().
    Coord coord_of(int state) const;

    /// Neighbor states in axis order x-, x+, y-, y+, z-, z+. Bordered grids
    /// drop the out-of-bounds directions; boundless grids wrap every axis of
    /// length >= 2 and keep duplicate entries when both wrap directions land
    /// on the same cell (axes of length 2).
    std::vector<int> neighbors(int state) const;

private:
    int width_;
    int depth_;
    int height_;
    Borders borders_;
};

} // namespace gridwalk
