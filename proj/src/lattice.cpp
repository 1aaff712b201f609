#include "gridwalk/lattice.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace gridwalk {

GridSpec::GridSpec(int width, int depth, int height, Borders borders)
    : width_(width), depth_(depth), height_(height), borders_(borders) {
    if (width < 2) {
        throw std::invalid_argument("grid width must be at least 2, got " + std::to_string(width));
    }
    if (depth < 2) {
        throw std::invalid_argument("grid depth must be at least 2, got " + std::to_string(depth));
    }
    if (height < 1) {
        throw std::invalid_argument("grid height must be at least 1, got " + std::to_string(height));
    }
    const std::int64_t states =
        std::int64_t(width) * std::int64_t(depth) * std::int64_t(height);
    if (states > std::numeric_limits<std::int32_t>::max()) {
        throw std::invalid_argument("grid has too many states: " + std::to_string(states));
    }
}

int GridSpec::index_of(Coord c) const {
    if (c.x < 1 || c.x > width_ || c.y < 1 || c.y > depth_ || c.z < 1 || c.z > height_) {
        throw std::domain_error("coordinate (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                                "," + std::to_string(c.z) + ") is outside the grid");
    }
    return c.x + width_ * (c.y - 1) + width_ * depth_ * (c.z - 1);
}

Coord GridSpec::coord_of(int state) const {
    if (state < 1 || state > state_count()) {
        throw std::domain_error("state index " + std::to_string(state) + " is outside 1.." +
                                std::to_string(state_count()));
    }
    const int layer = width_ * depth_;
    const int s = state - 1;
    Coord c;
    c.z = s / layer + 1;
    c.y = (s % layer) / width_ + 1;
    c.x = s % width_ + 1;
    return c;
}

std::vector<int> GridSpec::neighbors(int state) const {
    const Coord c = coord_of(state);
    std::vector<int> result;
    result.reserve(static_cast<std::size_t>(max_degree()));

    struct Axis {
        int Coord::*component;
        int length;
    };
    const Axis axes[3] = {{&Coord::x, width_}, {&Coord::y, depth_}, {&Coord::z, height_}};

    for (const Axis& axis : axes) {
        const int pos = c.*(axis.component);
        if (bordered()) {
            if (pos > 1) {
                Coord n = c;
                n.*(axis.component) = pos - 1;
                result.push_back(index_of(n));
            }
            if (pos < axis.length) {
                Coord n = c;
                n.*(axis.component) = pos + 1;
                result.push_back(index_of(n));
            }
        } else if (axis.length >= 2) {
            for (const int step : {-1, +1}) {
                Coord n = c;
                n.*(axis.component) = (pos - 1 + step + axis.length) % axis.length + 1;
                result.push_back(index_of(n));
            }
        }
    }
    return result;
}

} // namespace gridwalk
