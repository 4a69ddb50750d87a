#pragma once

#include <vector>

#include "momo/body.hpp"
#include "momo/motion.hpp"
#include "momo/types.hpp"

namespace momo::contact {

using body_model::BodySpec;
using motion::MotionSequence;

/// Ground-contact rule shared by the sliding loss and the sliding/FS metrics:
/// a foot part is in contact at a frame when its centroid sits within
/// `height_thresh` of the ground plane AND its vertical speed is below
/// `vel_thresh`.
struct ContactOptions {
  double ground_height = 0.0;   // plane offset along the gravity axis (m)
  double height_thresh = 0.03;  // m
  double vel_thresh = 0.10;     // m/s
  std::vector<int> foot_parts;  // empty -> two lowest-centroid leaf parts
};

struct ContactTable {
  std::vector<int> foot_parts;
  std::vector<std::vector<char>> in_contact;  // [foot][frame]
  std::vector<Track2> planar;                 // [foot] T×2 ground-plane coords
  bool any_contact = false;
};

/// Orthonormal ground-plane basis for a gravity axis; deterministic (first
/// axis leans toward world x, falls back to y when they align).
void ground_basis(const Vec3& up, Vec3* e1, Vec3* e2);

ContactTable detect_contacts(const MotionSequence& seq, const BodySpec& body,
                             const ContactOptions& opt);

}  // namespace momo::contact
