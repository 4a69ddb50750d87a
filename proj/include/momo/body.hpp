#pragma once

#include <optional>
#include <string>
#include <vector>

#include "momo/mesh.hpp"
#include "momo/types.hpp"

namespace momo::body_model {

/// Mass properties of one body part, expressed in the canonical (rest) pose.
/// The inertia tensor is about the part centroid, in world-aligned axes.
struct PartProperties {
  double volume = 0;
  double mass = 0;
  Vec3 centroid = Vec3::Zero();
  Mat3 inertia = Mat3::Zero();
};

/// A segmented body: per-part mass properties plus the kinematic tree and
/// the world up direction. Masses are normalized so they sum to 1.
struct BodySpec {
  std::vector<PartProperties> parts;
  std::vector<int> parents;  // parents[i] == -1 for the root
  Vec3 gravity_axis = Vec3(0, 0, 1);

  int part_count() const { return static_cast<int>(parts.size()); }
  double total_mass() const;
  Vec3 com() const;  // mass-weighted centroid of the canonical pose
};

/// Computes volume, centroid and centroidal inertia for each part mesh and
/// assembles a BodySpec. Masses are volume-proportional, normalized to sum
/// to 1; inertia uses the same normalized density for every part.
/// Throws CyclicParents if `parents` does not form a forest rooted at -1,
/// and the mesh routines throw on open or inverted surfaces.
BodySpec build_body_spec(const std::vector<PartMesh>& meshes,
                         const std::vector<int>& parents,
                         const Vec3& gravity_axis = Vec3(0, 0, 1));

/// Validates that `parents` encodes an acyclic tree over n parts
/// (every entry in [-1, n) and no cycles). Throws CyclicParents.
void validate_parents(const std::vector<int>& parents);

/// Indices of parts with no children.
std::vector<int> leaf_parts(const BodySpec& body);

/// Default foot guess: the two leaf parts whose canonical centroids sit
/// lowest along the gravity axis. Falls back to the lowest parts when the
/// tree has fewer than two leaves.
std::vector<int> default_foot_parts(const BodySpec& body);

BodySpec load_body_json(const std::string& path);
BodySpec parse_body_json(const std::string& text, const std::string& origin);
std::string body_to_json(const BodySpec& body);
void save_body_json(const std::string& path, const BodySpec& body);

}  // namespace momo::body_model
