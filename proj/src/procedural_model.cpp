#include "dfc/procedural_model.hpp"

#include <cmath>

#include "dfc/error.hpp"
#include "dfc/rng.hpp"

namespace dfc {
namespace {

// Ellipsoid radii in model units: the head is taller than wide and the
// mesh axes follow image conventions (+y toward the chin, face toward -z).
constexpr double kRadiusX = 0.78;
constexpr double kRadiusY = 1.00;
constexpr double kRadiusZ = 0.85;

double wrap_pi(double a) {
    while (a > M_PI) a -= 2.0 * M_PI;
    while (a < -M_PI) a += 2.0 * M_PI;
    return a;
}

struct FeatureBump {
    double theta, phi;        // center, spherical coords
    double width_theta, width_phi;
    double amplitude;         // radial factor offset
};

// Static surface features carving the face into the ellipsoid. phi = pi is
// the face center; mirrored entries carry phi offsets of both signs.
const FeatureBump kFeatures[] = {
    {1.76, M_PI, 0.30, 0.17, 0.30},          // nose
    {1.45, M_PI, 0.26, 0.11, 0.10},          // nose bridge
    {1.38, M_PI + 0.38, 0.17, 0.16, -0.07},  // eye sockets
    {1.38, M_PI - 0.38, 0.17, 0.16, -0.07},
    {1.20, M_PI + 0.38, 0.15, 0.24, 0.05},   // brow ridges
    {1.20, M_PI - 0.38, 0.15, 0.24, 0.05},
    {2.15, M_PI, 0.11, 0.30, 0.06},          // lips
    {2.55, M_PI, 0.26, 0.26, 0.08},          // chin
    {1.75, M_PI + 0.55, 0.30, 0.30, 0.05},   // cheekbones
    {1.75, M_PI - 0.55, 0.30, 0.30, 0.05},
};

double feature_radial_factor(double theta, double phi) {
    double f = 1.0;
    for (const auto& b : kFeatures) {
        const double dt = (theta - b.theta) / b.width_theta;
        const double dp = std::sin(b.theta) * wrap_pi(phi - b.phi) / b.width_phi;
        f += b.amplitude * std::exp(-0.5 * (dt * dt + dp * dp));
    }
    return f;
}

Eigen::Vector3d unit_dir(double theta, double phi) {
    return {std::sin(theta) * std::sin(phi), -std::cos(theta),
            std::sin(theta) * std::cos(phi)};
}

Eigen::Vector3d surface_point(double theta, double phi) {
    const Eigen::Vector3d d = unit_dir(theta, phi);
    const double r = feature_radial_factor(theta, phi);
    return {d.x() * kRadiusX * r, d.y() * kRadiusY * r, d.z() * kRadiusZ * r};
}

struct GridLayout {
    int rings, segments;
    int vertex(int ring, int seg) const { return ring * segments + (seg % segments); }
    int top_pole() const { return rings * segments; }
    int bottom_pole() const { return rings * segments + 1; }
    int total() const { return rings * segments + 2; }
    double theta(int ring) const { return M_PI * (ring + 1) / (rings + 1); }
    double phi(int seg) const { return 2.0 * M_PI * seg / segments; }
};

// Random smooth displacement field: a mixture of Gaussian bumps on the
// sphere, mirrored across the symmetry plane so sampled faces stay
// face-like.
Eigen::VectorXd random_bump_field(RandomGen& rng, const GridLayout& g,
                                  const std::vector<Eigen::Vector3d>& dirs,
                                  int bump_count, double theta_lo, double theta_hi,
                                  double phi_spread, double width_lo, double width_hi) {
    Eigen::VectorXd field = Eigen::VectorXd::Zero(3 * g.total());
    for (int b = 0; b < bump_count; ++b) {
        const double theta_c = rng.uniform(theta_lo, theta_hi);
        const double phi_c = M_PI + rng.uniform(-phi_spread, phi_spread);
        const double width = rng.uniform(width_lo, width_hi);
        Eigen::Vector3d dir(rng.normal(), rng.normal(), rng.normal());
        if (dir.norm() < 1e-9) dir = Eigen::Vector3d(1, 0, 0);
        dir.normalize();
        const double scale = rng.uniform(0.5, 1.0);

        const Eigen::Vector3d centers[2] = {unit_dir(theta_c, phi_c),
                                            unit_dir(theta_c, 2.0 * M_PI - phi_c)};
        const Eigen::Vector3d dirs2[2] = {dir, {-dir.x(), dir.y(), dir.z()}};
        for (int m = 0; m < 2; ++m) {
            for (int v = 0; v < g.total(); ++v) {
                const double c = std::clamp(dirs[v].dot(centers[m]), -1.0, 1.0);
                const double angle = std::acos(c);
                const double w = std::exp(-0.5 * (angle / width) * (angle / width));
                field.segment<3>(3 * v) += scale * w * dirs2[m];
            }
        }
    }
    return field;
}

struct LandmarkSpec {
    const char* name;
    double theta, phi_offset;  // phi = pi + offset
};

// phi offset > 0 lies on the subject's right (image left).
const LandmarkSpec kLandmarks[] = {
    {"brow_r_out", 1.18, 0.58},  {"brow_r_center", 1.18, 0.40},
    {"brow_r_in", 1.18, 0.22},   {"brow_l_in", 1.18, -0.22},
    {"brow_l_center", 1.18, -0.40}, {"brow_l_out", 1.18, -0.58},
    {"eye_r_out", 1.38, 0.54},   {"eye_r_center", 1.38, 0.38},
    {"eye_r_in", 1.38, 0.22},    {"eye_l_in", 1.38, -0.22},
    {"eye_l_center", 1.38, -0.38}, {"eye_l_out", 1.38, -0.54},
    {"ear_r", 1.60, 1.50},       {"ear_l", 1.60, -1.50},
    {"nose_r", 1.85, 0.20},      {"nose_tip", 1.76, 0.0},
    {"nose_l", 1.85, -0.20},     {"mouth_r", 2.15, 0.30},
    {"mouth_center", 2.15, 0.0}, {"mouth_l", 2.15, -0.30},
    {"chin", 2.55, 0.0},
};

} // namespace

const std::vector<std::string>& standard_landmark_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& l : kLandmarks) v.emplace_back(l.name);
        return v;
    }();
    return names;
}

bool is_contour_landmark(const std::string& name) {
    return name == "ear_r" || name == "ear_l" || name == "chin";
}

MorphableModel build_procedural_model(const ProceduralModelOptions& opts) {
    if (opts.rings < 4 || opts.segments < 8)
        throw ConfigError("procedural model: grid too coarse");
    if (opts.identity_rank < 0 || opts.expression_rank < 0)
        throw ConfigError("procedural model: negative basis rank");

    const GridLayout g{opts.rings, opts.segments};
    const int v_total = g.total();

    MorphableModel model;
    model.mean_shape.resize(3 * v_total);
    model.uv_coords.resize(v_total);
    std::vector<Eigen::Vector3d> dirs(v_total);

    for (int i = 0; i < opts.rings; ++i) {
        for (int j = 0; j < opts.segments; ++j) {
            const double theta = g.theta(i), phi = g.phi(j);
            const int v = g.vertex(i, j);
            model.mean_shape.segment<3>(3 * v) = surface_point(theta, phi);
            dirs[v] = unit_dir(theta, phi);
            model.uv_coords[v] = {phi / (2.0 * M_PI), theta / M_PI};
        }
    }
    model.mean_shape.segment<3>(3 * g.top_pole()) = Eigen::Vector3d(0, -kRadiusY, 0);
    model.mean_shape.segment<3>(3 * g.bottom_pole()) = Eigen::Vector3d(0, kRadiusY, 0);
    dirs[g.top_pole()] = Eigen::Vector3d(0, -1, 0);
    dirs[g.bottom_pole()] = Eigen::Vector3d(0, 1, 0);
    model.uv_coords[g.top_pole()] = {0.5, 0.0};
    model.uv_coords[g.bottom_pole()] = {0.5, 1.0};

    // Triangulation, wound counterclockwise as seen from outside the head.
    auto add_triangle = [&](int a, int b, int c) {
        const Eigen::Vector3d pa = model.mean_shape.segment<3>(3 * a);
        const Eigen::Vector3d pb = model.mean_shape.segment<3>(3 * b);
        const Eigen::Vector3d pc = model.mean_shape.segment<3>(3 * c);
        const Eigen::Vector3d n = (pb - pa).cross(pc - pa);
        const Eigen::Vector3d centroid = (pa + pb + pc) / 3.0;
        if (n.dot(centroid) >= 0.0)
            model.triangles.push_back({static_cast<std::uint32_t>(a),
                                       static_cast<std::uint32_t>(b),
                                       static_cast<std::uint32_t>(c)});
        else
            model.triangles.push_back({static_cast<std::uint32_t>(a),
                                       static_cast<std::uint32_t>(c),
                                       static_cast<std::uint32_t>(b)});
    };
    for (int j = 0; j < opts.segments; ++j) {
        add_triangle(g.top_pole(), g.vertex(0, j), g.vertex(0, j + 1));
        add_triangle(g.bottom_pole(), g.vertex(opts.rings - 1, j + 1),
                     g.vertex(opts.rings - 1, j));
    }
    for (int i = 0; i + 1 < opts.rings; ++i) {
        for (int j = 0; j < opts.segments; ++j) {
            const int a = g.vertex(i, j), b = g.vertex(i, j + 1);
            const int c = g.vertex(i + 1, j), d = g.vertex(i + 1, j + 1);
            add_triangle(a, b, c);
            add_triangle(b, d, c);
        }
    }

    // Basis columns: random smooth fields, then modified Gram-Schmidt over
    // the combined set so identity and expression spaces are mutually
    // orthogonal; each column normalized to unit length.
    RandomGen rng(opts.seed);
    const int k_total = opts.identity_rank + opts.expression_rank;
    Eigen::MatrixXd columns(3 * v_total, k_total);
    for (int k = 0; k < opts.identity_rank; ++k)
        columns.col(k) = random_bump_field(rng, g, dirs, 6, 0.9, 2.6, 1.2, 0.35, 0.80);
    for (int k = 0; k < opts.expression_rank; ++k)
        columns.col(opts.identity_rank + k) =
            random_bump_field(rng, g, dirs, 3, 1.1, 2.5, 0.7, 0.18, 0.40);

    for (int k = 0; k < k_total; ++k) {
        for (int prev = 0; prev < k; ++prev)
            columns.col(k) -= columns.col(prev).dot(columns.col(k)) * columns.col(prev);
        const double n = columns.col(k).norm();
        if (n < 1e-10) throw NumericalError("procedural model: degenerate basis column");
        columns.col(k) /= n;
    }
    model.identity_basis = columns.leftCols(opts.identity_rank);
    model.expression_basis = columns.rightCols(opts.expression_rank);

    // Unit columns spread a coefficient over 3V coordinates, so sigma carries
    // the sqrt(3V) factor; a 1-sigma coefficient then displaces vertices by a
    // few percent of the head radius, decaying down the spectrum.
    const double coord_scale = std::sqrt(3.0 * v_total);
    model.sigma_id.resize(opts.identity_rank);
    for (int k = 0; k < opts.identity_rank; ++k)
        model.sigma_id[k] = 0.045 * coord_scale * std::pow(0.90, k);
    model.sigma_exp.resize(opts.expression_rank);
    for (int k = 0; k < opts.expression_rank; ++k)
        model.sigma_exp[k] = 0.055 * coord_scale * std::pow(0.85, k);

    for (const auto& l : kLandmarks) {
        // snap to the nearest grid vertex
        int ring = static_cast<int>(std::lround(l.theta * (opts.rings + 1) / M_PI - 1.0));
        ring = std::clamp(ring, 0, opts.rings - 1);
        const double phi = M_PI + l.phi_offset;
        int seg = static_cast<int>(std::lround(phi * opts.segments / (2.0 * M_PI)));
        seg = ((seg % opts.segments) + opts.segments) % opts.segments;
        model.landmark_indices[l.name] = static_cast<std::uint32_t>(g.vertex(ring, seg));
    }

    model.validate();
    return model;
}

} // namespace dfc
