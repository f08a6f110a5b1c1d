#pragma once

#include <Eigen/Core>

namespace dfc {

/// Euler angles in radians. Convention: intrinsic yaw(Y) * pitch(X) * roll(Z),
/// i.e. R = R_y(yaw) * R_x(pitch) * R_z(roll). Yaw rotates about the vertical
/// axis; positive yaw turns the head toward the subject's left.
struct EulerAngles {
    double yaw = 0.0;
    double pitch = 0.0;
    double roll = 0.0;
    /// Set when the matrix was at gimbal lock (|pitch| ~ pi/2); roll is then
    /// conventionally 0 and yaw absorbs the remaining freedom.
    bool degenerate = false;
};

Eigen::Matrix3d euler_to_rotation(double yaw, double pitch, double roll);
inline Eigen::Matrix3d euler_to_rotation(const EulerAngles& e) {
    return euler_to_rotation(e.yaw, e.pitch, e.roll);
}

EulerAngles rotation_to_euler(const Eigen::Matrix3d& R);

/// Rodrigues exponential of an axis-angle vector.
Eigen::Matrix3d axis_angle_to_rotation(const Eigen::Vector3d& w);

/// Geodesic distance between two rotations, in radians.
double geodesic_distance(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b);

/// True if R^T R = I and det R = +1 within tol.
bool is_rotation(const Eigen::Matrix3d& R, double tol = 1e-9);

/// Nearest orthonormal matrix with det +1 (polar factor via SVD).
Eigen::Matrix3d orthonormalize(const Eigen::Matrix3d& R);

inline Eigen::Matrix3d skew(const Eigen::Vector3d& v) {
    Eigen::Matrix3d s;
    s << 0, -v.z(), v.y(), v.z(), 0, -v.x(), -v.y(), v.x(), 0;
    return s;
}

} // namespace dfc
