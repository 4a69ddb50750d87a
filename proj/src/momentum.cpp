#include "momo/momentum.hpp"

#include <cstdio>
#include <fstream>

#include "momo/errors.hpp"

namespace momo::momentum {

Mat3 rotated_inertia(const PartProperties& part, const Mat3& theta) {
  if ((theta * theta.transpose() - Mat3::Identity()).norm() > 1e-4) {
    throw NonOrthonormal("rotation passed to rotated_inertia");
  }
  return theta * part.inertia * theta.transpose();
}

namespace {

// One kinematics pass; callers pick which sums they need.
void accumulate(const MotionSequence& seq, const BodySpec& body,
                Track3* linear, Track3* orbital, Track3* spin) {
  motion::validate_sequence(seq);
  const motion::CentroidTracks tracks = motion::part_centroids(seq, body);
  const int t = seq.frame_count();
  const int p = seq.part_count();

  if (linear) linear->setZero(t, 3);
  if (orbital) orbital->setZero(t, 3);
  if (spin) spin->setZero(t, 3);

  std::vector<Mat3> rots(t);
  for (int i = 0; i < p; ++i) {
    const double m = body.parts[i].mass;
    if (linear) {
      const Track3 wv = motion::time_derivative(tracks.world[i], seq.fps);
      *linear += m * wv;
    }
    if (orbital) {
      const Track3 bv = motion::time_derivative(tracks.body[i], seq.fps);
      for (int f = 0; f < t; ++f) {
        const Vec3 cb = tracks.body[i].row(f);
        const Vec3 vb = bv.row(f);
        orbital->row(f) += (m * cb.cross(vb)).transpose();
      }
    }
    if (spin) {
      for (int f = 0; f < t; ++f) rots[f] = seq.part_rot[f][i];
      const std::vector<Vec3> omega = motion::angular_velocity(rots, seq.fps);
      for (int f = 0; f < t; ++f) {
        const Mat3 iw = rots[f] * body.parts[i].inertia * rots[f].transpose();
        spin->row(f) += (iw * omega[f]).transpose();
      }
    }
  }
}

}  // namespace

Track3 linear_momentum(const MotionSequence& seq, const BodySpec& body) {
  Track3 lin;
  accumulate(seq, body, &lin, nullptr, nullptr);
  return lin;
}

Track3 angular_momentum(const MotionSequence& seq, const BodySpec& body) {
  Track3 orbital, spin;
  accumulate(seq, body, nullptr, &orbital, &spin);
  return orbital + spin;
}

Track3 transfer_term(const MotionSequence& seq, const BodySpec& body) {
  Track3 orbital;
  accumulate(seq, body, nullptr, &orbital, nullptr);
  return orbital;
}

MomentumProfile momentum_profile(const MotionSequence& seq, const BodySpec& body) {
  MomentumProfile out;
  out.fps = seq.fps;
  Track3 spin;
  accumulate(seq, body, &out.linear, &out.transfer, &spin);
  out.angular = out.transfer + spin;
  return out;
}

SwingTwist swing_twist(const Mat3& r, const Vec3& axis) {
  const Vec3 u = axis.normalized();
  const Eigen::Quaterniond q(r);
  const Vec3 v(q.x(), q.y(), q.z());
  const Vec3 proj = v.dot(u) * u;

  SwingTwist out;
  Eigen::Quaterniond twist(q.w(), proj.x(), proj.y(), proj.z());
  const double n = twist.norm();
  if (n < 1e-12) {
    // 180° swing: rotation axis orthogonal to u, no twist component at all.
    out.degenerate = true;
    Vec3 swing_axis = v - proj;
    if (swing_axis.norm() < 1e-12) {
      // no information at all; pick a deterministic axis orthogonal to u
      swing_axis = Vec3::UnitX() - Vec3::UnitX().dot(u) * u;
      if (swing_axis.norm() < 1e-12) swing_axis = Vec3::UnitY();
    }
    out.twist = Mat3::Identity();
    out.swing = Eigen::AngleAxisd(M_PI, swing_axis.normalized()).toRotationMatrix();
    return out;
  }
  twist.coeffs() /= n;
  const Eigen::Quaterniond swing = q * twist.conjugate();
  out.twist = twist.toRotationMatrix();
  out.swing = swing.normalized().toRotationMatrix();
  return out;
}

double geodesic_angle(const Mat3& a, const Mat3& b) {
  const Eigen::Quaterniond q(a * b.transpose());
  const double vec = Vec3(q.x(), q.y(), q.z()).norm();
  return 2.0 * std::atan2(vec, std::abs(q.w()));
}

std::string momentum_to_csv(const MomentumProfile& profile) {
  std::string out = "t,lmo_x,lmo_y,lmo_z,amo_x,amo_y,amo_z,tf_x,tf_y,tf_z\n";
  char buf[64];
  auto put = [&](double v, char sep) {
    std::snprintf(buf, sizeof buf, "%.17g%c", v, sep);
    out += buf;
  };
  for (int f = 0; f < profile.frame_count(); ++f) {
    put(f / profile.fps, ',');
    for (int c = 0; c < 3; ++c) put(profile.linear(f, c), ',');
    for (int c = 0; c < 3; ++c) put(profile.angular(f, c), ',');
    for (int c = 0; c < 3; ++c) put(profile.transfer(f, c), c == 2 ? '\n' : ',');
  }
  return out;
}

void save_momentum_csv(const std::string& path, const MomentumProfile& profile) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open csv for writing: " + path);
  out << momentum_to_csv(profile);
}

}  // namespace momo::momentum
