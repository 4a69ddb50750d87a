#pragma once

#include <optional>
#include <string>
#include <vector>

#include "momo/body.hpp"
#include "momo/contact.hpp"
#include "momo/motion.hpp"
#include "momo/types.hpp"

namespace momo::metrics {

using body_model::BodySpec;
using motion::MotionSequence;

/// Least-squares rigid map (rotation + translation, det +1, no scale) taking
/// `from` onto `to`: x ↦ rotation·x + translation.
struct RigidTransform {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();
};
RigidTransform rigid_align(const Track3& from, const Track3& to);

enum class RteNormalizer { path_length, net_displacement };

/// Root translation error: rigidly align pred to gt, then
/// 100 × mean per-frame distance / gt displacement. The default normalizer is
/// the summed per-frame path length (robust on cyclic paths); net start-to-end
/// displacement is available behind the switch. Throws ZeroDisplacement when
/// the normalizer is under 1e-6 m.
double rte(const Track3& pred_root, const Track3& gt_root,
           RteNormalizer normalizer = RteNormalizer::path_length);

/// Mean over frames and parts of the world-centroid jerk magnitude, reported
/// in units of 10 m/s³.
double jitter(const MotionSequence& seq, const BodySpec& body);

/// Mean horizontal displacement (mm) of foot parts across adjacent frame
/// pairs that are in contact at both ends; 0 with `no_contact` set when the
/// sequence never touches down.
struct FootSlidingResult {
  double mm = 0;
  bool no_contact = false;
};
FootSlidingResult foot_sliding(const MotionSequence& seq, const BodySpec& body,
                               const contact::ContactOptions& opt = {});

/// Percentage of adjacent frame pairs whose grounded feet move with mean
/// horizontal speed above `vel_thresh` (pairs without any grounded foot count
/// toward the denominator only).
double fs_percent(const MotionSequence& seq, const BodySpec& body,
                  const contact::ContactOptions& opt = {});

/// Mean clearance (cm) of the lowest body vertex above the ground, and mean
/// depth (cm) of the lowest vertex below it. `part_vertices` holds each
/// part's canonical-pose vertices (world position is θ_i·v + T_vec); an empty
/// entry falls back to that part's centroid.
double floating_cm(const MotionSequence& seq, const BodySpec& body,
                   const std::vector<std::vector<Vec3>>& part_vertices,
                   double ground_height = 0.0);
double floor_penetration_cm(const MotionSequence& seq, const BodySpec& body,
                            const std::vector<std::vector<Vec3>>& part_vertices,
                            double ground_height = 0.0);

struct PlausibilityReport {
  std::optional<double> rte_percent;  // needs a reference trajectory
  double jitter = 0;                  // 10 m/s³
  double foot_sliding_mm = 0;
  bool no_contact = false;
  double fs_percent = 0;
  double floating_cm = 0;
  double floor_penetration_cm = 0;
  bool hf_flag = false;
};

/// Product of the RTE, jitter and foot-sliding ratios of two reports.
/// Undefined (with a reason) when any denominator is zero or missing.
struct CompositeResult {
  bool defined = false;
  double value = 0;
  std::string reason;
};
CompositeResult composite_measure(const PlausibilityReport& a,
                                  const PlausibilityReport& b);

std::string report_to_json(const PlausibilityReport& report);
std::string report_csv_header();
std::string report_csv_row(const std::string& name, const PlausibilityReport& report);

}  // namespace momo::metrics
