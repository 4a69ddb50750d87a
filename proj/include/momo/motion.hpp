#pragma once

#include <string>
#include <vector>

#include "momo/body.hpp"
#include "momo/types.hpp"

namespace momo::motion {

using body_model::BodySpec;

/// A motion clip sampled at a fixed rate. Rotations are absolute world-frame
/// matrices; `part_rot[t][i]` is part i's orientation at frame t. The root
/// rotation is kept separately — part placement never re-derives it.
struct MotionSequence {
  double fps = 0;
  std::vector<Mat3> root_rot;                // T
  std::vector<Vec3> root_trans;              // T
  std::vector<std::vector<Mat3>> part_rot;   // T x P

  int frame_count() const { return static_cast<int>(root_trans.size()); }
  int part_count() const {
    return part_rot.empty() ? 0 : static_cast<int>(part_rot[0].size());
  }
};

/// Throws unless fps > 0, T >= 2, every frame has the same part count and
/// every rotation is orthonormal with det +1 (1e-6).
void validate_sequence(const MotionSequence& seq);

/// Per-part centroid tracks. `world` and `body` hold one T×3 track per part;
/// frame B is centered at the per-frame CoM with world-aligned axes.
struct CentroidTracks {
  std::vector<Track3> world;
  std::vector<Track3> body;
  Track3 com;
};

/// World centroid of part i at frame t is θ_i(t)·c_i⁰ + T_vec(t); the CoM is
/// the mass-weighted mean and body-frame tracks are world minus CoM.
CentroidTracks part_centroids(const MotionSequence& seq, const BodySpec& body);

/// Finite-difference time derivative, one row per frame. Central differences
/// at interior frames; second-order one-sided stencils at both ends
/// ((−3x₀+4x₁−x₂)·fps/2 and mirrored), plain two-point slope when T == 2.
/// Throws TooShort when T < 2.
Track time_derivative(const Track& track, double fps);

/// World-frame angular velocity per frame: the vee of the skew part of
/// Ṙ·Rᵀ, with Ṙ from the entrywise scheme above.
std::vector<Vec3> angular_velocity(const std::vector<Mat3>& rotations, double fps);

/// Per-frame mean over parts of the jerk magnitude of world centroids (three
/// derivative passes). The passes leave the first and last three frames with
/// boundary-stencil artifacts, so those rows are clamped to the nearest clean
/// frame when the track is long enough (T ≥ 7); polynomial trajectories then
/// give their exact jerk on every row. Throws TooShort when T < 4.
Eigen::VectorXd jerk_magnitude_track(const MotionSequence& seq, const BodySpec& body);

// --- canonical JSON interchange -------------------------------------------
// {fps, parts:P, frames:[{R:[9], T:[3], theta:[P×9]}]}, rotations row-major.
// Frames may carry {q:[4]} / {theta_q:[P×4]} quaternions (w,x,y,z) instead.

MotionSequence parse_motion_json(const std::string& text, const std::string& origin);
MotionSequence load_motion_json(const std::string& path);
std::string motion_to_json(const MotionSequence& seq);
void save_motion_json(const std::string& path, const MotionSequence& seq);

}  // namespace momo::motion
