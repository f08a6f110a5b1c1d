#include "dfc/lighting.hpp"

#include <cmath>

namespace dfc {
namespace {

// Irradiance convolution constants for the first three SH bands
// (cosine-lobe convolution of the real SH basis).
constexpr double kC1 = 0.429043;
constexpr double kC2 = 0.511664;
constexpr double kC3 = 0.743125;
constexpr double kC4 = 0.886227;
constexpr double kC5 = 0.247708;

// Real SH basis at a unit direction, matching the coefficient order.
std::array<double, 9> sh_basis(const Eigen::Vector3d& n) {
    const double x = n.x(), y = n.y(), z = n.z();
    return {
        0.282095,
        0.488603 * y,
        0.488603 * z,
        0.488603 * x,
        1.092548 * x * y,
        1.092548 * y * z,
        0.315392 * (3.0 * z * z - 1.0),
        1.092548 * x * z,
        0.546274 * (x * x - y * y),
    };
}

} // namespace

Eigen::Vector3d LightingSH::irradiance(const Eigen::Vector3d& normal) const {
    const double x = normal.x(), y = normal.y(), z = normal.z();
    Eigen::Vector3d e = kC4 * coeffs[0]
        + 2.0 * kC2 * (coeffs[3] * x + coeffs[1] * y + coeffs[2] * z)
        + 2.0 * kC1 * (coeffs[4] * x * y + coeffs[5] * y * z + coeffs[7] * x * z)
        + kC3 * coeffs[6] * z * z - kC5 * coeffs[6]
        + kC1 * coeffs[8] * (x * x - y * y);
    return e;
}

LightingSH LightingSH::flat(double value) {
    LightingSH l;
    l.coeffs[0] = Eigen::Vector3d::Constant(value / kC4);
    return l;
}

void LightingSH::add_directional(const Eigen::Vector3d& dir_to_light,
                                 const Eigen::Vector3d& rgb) {
    const Eigen::Vector3d d = dir_to_light.normalized();
    const auto b = sh_basis(d);
    for (int i = 0; i < 9; ++i) coeffs[i] += rgb * b[i];
}

void LightingSH::add_ambient(const Eigen::Vector3d& rgb) {
    coeffs[0] += rgb / kC4;
}

std::vector<LightingSH> build_lighting_bank(std::uint64_t seed, int count) {
    std::vector<LightingSH> bank;
    bank.reserve(count);
    RandomGen rng(seed);
    for (int i = 0; i < count; ++i) {
        LightingSH env;
        const double ambient = rng.uniform(0.25, 0.6);
        Eigen::Vector3d tint(1.0, rng.uniform(0.9, 1.0), rng.uniform(0.8, 1.0));
        env.add_ambient(ambient * tint);
        const int lights = 1 + static_cast<int>(rng.uniform_int(3));
        for (int l = 0; l < lights; ++l) {
            Eigen::Vector3d dir(rng.normal(), rng.normal(), rng.normal());
            if (dir.norm() < 1e-9) dir = Eigen::Vector3d(0, 0, -1);
            dir.normalize();
            // bias lights toward the camera half-space so faces stay lit
            if (dir.z() > 0.3) dir.z() = -dir.z();
            const double intensity = rng.uniform(0.2, 0.7) / lights;
            Eigen::Vector3d rgb(intensity * rng.uniform(0.8, 1.2),
                                intensity * rng.uniform(0.8, 1.2),
                                intensity * rng.uniform(0.8, 1.2));
            // SH projection of a directional light, scaled so a head-on
            // surface receives roughly `intensity`
            env.add_directional(dir, rgb * (M_PI / kC4) * 0.35);
        }
        bank.push_back(env);
    }
    return bank;
}

} // namespace dfc
