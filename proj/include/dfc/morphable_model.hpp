#pragma once

#include <Eigen/Core>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "dfc/rotation.hpp"

namespace dfc {

/// Linear face model: mean shape plus identity and expression deformation
/// bases. Vertex coordinates are packed (x0,y0,z0, x1,y1,z1, ...) in model
/// units. Model axes match image conventions at identity rotation: +x right,
/// +y down, +z away from the camera (the face surface points toward -z).
struct MorphableModel {
    Eigen::VectorXd mean_shape;        // 3V
    Eigen::MatrixXd identity_basis;    // 3V x K_id
    Eigen::MatrixXd expression_basis;  // 3V x K_exp
    Eigen::VectorXd sigma_id;          // K_id, > 0
    Eigen::VectorXd sigma_exp;         // K_exp, > 0
    std::vector<std::array<std::uint32_t, 3>> triangles;
    std::vector<Eigen::Vector2d> uv_coords;          // per vertex, in [0,1]^2
    std::map<std::string, std::uint32_t> landmark_indices;

    int vertex_count() const { return static_cast<int>(mean_shape.size() / 3); }
    int identity_rank() const { return static_cast<int>(identity_basis.cols()); }
    int expression_rank() const { return static_cast<int>(expression_basis.cols()); }

    /// Throws DataError when any structural invariant fails.
    void validate() const;
};

struct ShapeCoefficients {
    Eigen::VectorXd alpha_id;
    Eigen::VectorXd alpha_exp;

    static ShapeCoefficients zero(const MorphableModel& m) {
        return {Eigen::VectorXd::Zero(m.identity_rank()),
                Eigen::VectorXd::Zero(m.expression_rank())};
    }
};

/// Perspective camera: focal length in pixels, orthonormal rotation,
/// translation in model units with t_z > 0 placing the shape in front of
/// the camera. The principal point is the image center.
struct CameraPose {
    double f = 0.0;
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
    Eigen::Vector3d translation = Eigen::Vector3d::Zero();

    EulerAngles euler() const { return rotation_to_euler(rotation); }
};

/// V vertex positions, packed like MorphableModel::mean_shape.
struct Shape3D {
    Eigen::VectorXd positions;  // 3V

    int vertex_count() const { return static_cast<int>(positions.size() / 3); }
    Eigen::Vector3d vertex(int i) const { return positions.segment<3>(3 * i); }
};

/// A projected vertex; behind-camera vertices are flagged, never clamped.
struct ProjectedPoint {
    double x = 0.0;
    double y = 0.0;
    double depth = 0.0;  // camera-space z
    bool valid = false;  // false when the transformed z was not positive
};

/// S = mean + A_id a_id + A_exp a_exp. Throws ConfigError on rank mismatch.
Shape3D synthesize_shape(const MorphableModel& model, const ShapeCoefficients& coeffs);

/// Perspective projection of every vertex: p = R v + t, then
/// (f p_x / p_z + W/2, f p_y / p_z + H/2). Vertices with p_z <= min_depth
/// come back flagged invalid. Throws ConfigError for f <= 0 or a
/// non-orthonormal rotation.
std::vector<ProjectedPoint> project(const Shape3D& shape, const CameraPose& pose,
                                    int image_w, int image_h,
                                    double min_depth = 1e-6);

/// Single-vertex version of the same map.
ProjectedPoint project_vertex(const Eigen::Vector3d& v, const CameraPose& pose,
                              int image_w, int image_h, double min_depth = 1e-6);

} // namespace dfc
