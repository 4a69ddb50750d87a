#pragma once

#include <string>

#include "momo/body.hpp"
#include "momo/motion.hpp"
#include "momo/types.hpp"

namespace momo::momentum {

using body_model::BodySpec;
using body_model::PartProperties;
using motion::MotionSequence;

/// Per-frame whole-body momentum. `linear` is Σ m_i ċ_i^W; `angular` is taken
/// about the instantaneous CoM in a non-rotating, world-aligned frame;
/// `transfer` keeps only the orbital (point-mass) part of `angular`.
struct MomentumProfile {
  double fps = 0;
  Track3 linear;    // T×3, mass·m/s
  Track3 angular;   // T×3, mass·m²/s
  Track3 transfer;  // T×3
  int frame_count() const { return static_cast<int>(linear.rows()); }
};

/// Canonical inertia carried into the posed frame: θ I⁰ θᵀ.
/// Throws NonOrthonormal if ‖θθᵀ − I‖ > 1e-4.
Mat3 rotated_inertia(const PartProperties& part, const Mat3& theta);

Track3 linear_momentum(const MotionSequence& seq, const BodySpec& body);
Track3 angular_momentum(const MotionSequence& seq, const BodySpec& body);
Track3 transfer_term(const MotionSequence& seq, const BodySpec& body);

/// All three tracks in one pass (shared kinematics).
MomentumProfile momentum_profile(const MotionSequence& seq, const BodySpec& body);

/// R factored as swing·twist with the twist about `axis`. At the 180°-swing
/// singularity the twist is identity and the swing axis is the component of
/// the rotation axis orthogonal to `axis` (tie-break toward world x); the
/// `degenerate` flag marks those results.
struct SwingTwist {
  Mat3 swing = Mat3::Identity();
  Mat3 twist = Mat3::Identity();
  bool degenerate = false;
};
SwingTwist swing_twist(const Mat3& r, const Vec3& axis);

/// Geodesic distance between two rotations, in radians ([0, π]).
double geodesic_angle(const Mat3& a, const Mat3& b);

/// CSV export: header then one row per frame
/// (t, lmo_x..z, amo_x..z, tf_x..z), doubles at 17 significant digits.
std::string momentum_to_csv(const MomentumProfile& profile);
void save_momentum_csv(const std::string& path, const MomentumProfile& profile);

}  // namespace momo::momentum
