#include "dfc/rotation.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "dfc/error.hpp"

namespace dfc {

Eigen::Matrix3d euler_to_rotation(double yaw, double pitch, double roll) {
    if (!std::isfinite(yaw) || !std::isfinite(pitch) || !std::isfinite(roll))
        throw ConfigError("euler_to_rotation: non-finite angle");
    const double ca = std::cos(yaw), sa = std::sin(yaw);
    const double cb = std::cos(pitch), sb = std::sin(pitch);
    const double cg = std::cos(roll), sg = std::sin(roll);
    Eigen::Matrix3d ry, rx, rz;
    ry << ca, 0, sa, 0, 1, 0, -sa, 0, ca;
    rx << 1, 0, 0, 0, cb, -sb, 0, sb, cb;
    rz << cg, -sg, 0, sg, cg, 0, 0, 0, 1;
    return ry * rx * rz;
}

EulerAngles rotation_to_euler(const Eigen::Matrix3d& R) {
    // With R = R_y(a) R_x(b) R_z(g):
    //   R(1,2) = -sin b,  R(0,2) = sin a cos b,  R(2,2) = cos a cos b,
    //   R(1,0) = cos b sin g,  R(1,1) = cos b cos g.
    EulerAngles e;
    const double sb = -R(1, 2);
    e.pitch = std::asin(std::clamp(sb, -1.0, 1.0));
    const double cb = std::cos(e.pitch);
    if (cb > 1e-6) {
        e.yaw = std::atan2(R(0, 2), R(2, 2));
        e.roll = std::atan2(R(1, 0), R(1, 1));
    } else {
        // gimbal lock: yaw + (sign) roll is the only observable combination
        e.degenerate = true;
        e.roll = 0.0;
        e.yaw = std::atan2(-R(2, 0), R(0, 0));
    }
    return e;
}

Eigen::Matrix3d axis_angle_to_rotation(const Eigen::Vector3d& w) {
    const double theta = w.norm();
    if (theta < 1e-12) return Eigen::Matrix3d::Identity() + skew(w);
    const Eigen::Vector3d axis = w / theta;
    const Eigen::Matrix3d k = skew(axis);
    return Eigen::Matrix3d::Identity() + std::sin(theta) * k +
           (1.0 - std::cos(theta)) * k * k;
}

double geodesic_distance(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b) {
    const double c = ((a.transpose() * b).trace() - 1.0) * 0.5;
    return std::acos(std::clamp(c, -1.0, 1.0));
}

bool is_rotation(const Eigen::Matrix3d& R, double tol) {
    const double ortho = (R.transpose() * R - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
    return ortho <= tol && std::abs(R.determinant() - 1.0) <= tol;
}

Eigen::Matrix3d orthonormalize(const Eigen::Matrix3d& R) {
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(R, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix3d u = svd.matrixU();
    Eigen::Matrix3d v = svd.matrixV();
    if ((u * v.transpose()).determinant() < 0.0) u.col(2) = -u.col(2);
    return u * v.transpose();
}

} // namespace dfc
