#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dfc/error.hpp"

namespace dfc {

/// Row-major single-channel plane.
template <typename T>
struct Plane {
    int width = 0;
    int height = 0;
    std::vector<T> data;

    Plane() = default;
    Plane(int w, int h, T fill = T{}) : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

    T& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    const T& at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    bool contains(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
    std::size_t size() const { return data.size(); }
};

/// Interleaved 8-bit RGB image.
struct ImageRgb {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // 3 * width * height

    ImageRgb() = default;
    ImageRgb(int w, int h, std::array<std::uint8_t, 3> fill = {0, 0, 0})
        : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3) {
        for (std::size_t i = 0; i < data.size(); i += 3) {
            data[i] = fill[0];
            data[i + 1] = fill[1];
            data[i + 2] = fill[2];
        }
    }

    std::uint8_t* pixel(int x, int y) { return &data[(static_cast<std::size_t>(y) * width + x) * 3]; }
    const std::uint8_t* pixel(int x, int y) const {
        return &data[(static_cast<std::size_t>(y) * width + x) * 3];
    }
    bool contains(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
};

/// Per-pixel 2D displacement in pixels, interleaved (dx, dy).
struct FlowField {
    int width = 0;
    int height = 0;
    std::vector<float> data;  // 2 * width * height

    FlowField() = default;
    FlowField(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h * 2, 0.0f) {}

    float& dx(int x, int y) { return data[(static_cast<std::size_t>(y) * width + x) * 2]; }
    float& dy(int x, int y) { return data[(static_cast<std::size_t>(y) * width + x) * 2 + 1]; }
    float dx(int x, int y) const { return data[(static_cast<std::size_t>(y) * width + x) * 2]; }
    float dy(int x, int y) const { return data[(static_cast<std::size_t>(y) * width + x) * 2 + 1]; }
};

/// Per-pixel match probability; ground-truth masks hold exactly 0 or 1.
using MatchabilityMask = Plane<float>;

} // namespace dfc
