#pragma once

#include <Eigen/Dense>

namespace momo {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Time-major tracks: one row per frame.
using Track = Eigen::MatrixXd;
using Track3 = Eigen::Matrix<double, Eigen::Dynamic, 3>;
using Track2 = Eigen::Matrix<double, Eigen::Dynamic, 2>;

inline Mat3 skew(const Vec3& v) {
  Mat3 m;
  m << 0, -v.z(), v.y(), v.z(), 0, -v.x(), -v.y(), v.x(), 0;
  return m;
}

inline Vec3 unskew(const Mat3& m) {
  // vee of the antisymmetric part
  return Vec3(0.5 * (m(2, 1) - m(1, 2)), 0.5 * (m(0, 2) - m(2, 0)),
              0.5 * (m(1, 0) - m(0, 1)));
}

inline bool is_rotation(const Mat3& r, double tol = 1e-6) {
  return (r * r.transpose() - Mat3::Identity()).norm() <= tol &&
         r.determinant() > 0.0;
}

}  // namespace momo
