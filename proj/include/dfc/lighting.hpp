#pragma once

#include <Eigen/Core>
#include <array>
#include <vector>

#include "dfc/rng.hpp"

namespace dfc {

/// Order-2 spherical-harmonics irradiance environment: 9 coefficients per
/// color channel. Coefficient order: L00, L1-1, L10, L11, L2-2, L2-1, L20,
/// L21, L22 (y, z, x linear order).
struct LightingSH {
    std::array<Eigen::Vector3d, 9> coeffs{};  // rgb per SH coefficient

    /// Diffuse irradiance at a unit surface normal, per channel. Unclamped;
    /// callers clamp to [0,1] before quantization.
    Eigen::Vector3d irradiance(const Eigen::Vector3d& normal) const;

    /// Uniform environment whose irradiance equals `value` on every normal.
    static LightingSH flat(double value = 1.0);

    /// Adds a directional light shining from `dir_to_light` with the given
    /// RGB radiance, projected onto the 9 SH bands.
    void add_directional(const Eigen::Vector3d& dir_to_light, const Eigen::Vector3d& rgb);

    void add_ambient(const Eigen::Vector3d& rgb);

    void scale(double s) {
        for (auto& c : coeffs) c *= s;
    }
};

/// Procedural bank of lighting environments: random ambient plus one to
/// three directional lights, deterministic in the seed.
std::vector<LightingSH> build_lighting_bank(std::uint64_t seed, int count = 16);

} // namespace dfc
