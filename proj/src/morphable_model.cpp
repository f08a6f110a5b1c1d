#include "dfc/morphable_model.hpp"

#include <cmath>

#include "dfc/error.hpp"

namespace dfc {

void MorphableModel::validate() const {
    const int v = vertex_count();
    if (v < 3) throw DataError("model: needs at least 3 vertices");
    if (mean_shape.size() % 3 != 0) throw DataError("model: mean_shape size not divisible by 3");
    if (!mean_shape.allFinite()) throw DataError("model: non-finite mean shape");
    if (identity_basis.rows() != mean_shape.size() && identity_basis.cols() > 0)
        throw DataError("model: identity basis row count mismatch");
    if (expression_basis.rows() != mean_shape.size() && expression_basis.cols() > 0)
        throw DataError("model: expression basis row count mismatch");
    if (!identity_basis.allFinite() || !expression_basis.allFinite())
        throw DataError("model: non-finite basis");
    if (sigma_id.size() != identity_basis.cols())
        throw DataError("model: sigma_id length mismatch");
    if (sigma_exp.size() != expression_basis.cols())
        throw DataError("model: sigma_exp length mismatch");
    if ((sigma_id.size() > 0 && sigma_id.minCoeff() <= 0.0) ||
        (sigma_exp.size() > 0 && sigma_exp.minCoeff() <= 0.0))
        throw DataError("model: sigma values must be positive");
    if (static_cast<int>(uv_coords.size()) != v)
        throw DataError("model: uv count mismatch");
    for (const auto& uv : uv_coords)
        if (uv.x() < 0.0 || uv.x() > 1.0 || uv.y() < 0.0 || uv.y() > 1.0)
            throw DataError("model: uv outside [0,1]^2");
    for (const auto& t : triangles)
        for (std::uint32_t idx : t)
            if (idx >= static_cast<std::uint32_t>(v))
                throw DataError("model: triangle index out of range");
    for (const auto& [name, idx] : landmark_indices)
        if (idx >= static_cast<std::uint32_t>(v))
            throw DataError("model: landmark '" + name + "' index out of range");
}

Shape3D synthesize_shape(const MorphableModel& model, const ShapeCoefficients& coeffs) {
    if (coeffs.alpha_id.size() != model.identity_basis.cols())
        throw ConfigError("synthesize_shape: alpha_id rank mismatch");
    if (coeffs.alpha_exp.size() != model.expression_basis.cols())
        throw ConfigError("synthesize_shape: alpha_exp rank mismatch");
    Shape3D s;
    s.positions = model.mean_shape;
    if (coeffs.alpha_id.size() > 0) s.positions += model.identity_basis * coeffs.alpha_id;
    if (coeffs.alpha_exp.size() > 0) s.positions += model.expression_basis * coeffs.alpha_exp;
    return s;
}

ProjectedPoint project_vertex(const Eigen::Vector3d& v, const CameraPose& pose,
                              int image_w, int image_h, double min_depth) {
    const Eigen::Vector3d p = pose.rotation * v + pose.translation;
    ProjectedPoint out;
    out.depth = p.z();
    if (p.z() <= min_depth) return out;  // behind camera: stays invalid
    out.x = pose.f * p.x() / p.z() + 0.5 * image_w;
    out.y = pose.f * p.y() / p.z() + 0.5 * image_h;
    out.valid = true;
    return out;
}

std::vector<ProjectedPoint> project(const Shape3D& shape, const CameraPose& pose,
                                    int image_w, int image_h, double min_depth) {
    if (pose.f <= 0.0) throw ConfigError("project: focal length must be positive");
    if (!is_rotation(pose.rotation)) throw ConfigError("project: rotation not orthonormal");
    const int v = shape.vertex_count();
    std::vector<ProjectedPoint> out(v);
    for (int i = 0; i < v; ++i)
        out[i] = project_vertex(shape.vertex(i), pose, image_w, image_h, min_depth);
    return out;
}

} // namespace dfc
