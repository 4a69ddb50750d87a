#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "momo/types.hpp"

namespace momo::body_model {

/// Closed triangle surface with consistent outward winding.
struct PartMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;
};

/// Throws NonWatertightMesh unless every undirected edge is used by exactly
/// two triangles (and indices are in range).
void validate_closed(const PartMesh& mesh);

/// Enclosed volume as a signed sum of origin-spanned tetrahedra.
/// Positive for outward winding; DegenerateMesh if the result is <= 0.
double mesh_volume(const PartMesh& mesh);

/// Volume-weighted centroid of the enclosed solid.
Vec3 mesh_centroid(const PartMesh& mesh);

/// Inertia tensor about the solid's centroid, uniform density scaled so the
/// total mass equals `mass`.
Mat3 mesh_inertia(const PartMesh& mesh, double mass);

/// Axis-aligned box mesh (12 triangles, outward winding).
PartMesh make_box_mesh(const Vec3& half_extents, const Vec3& center = Vec3::Zero());

/// Minimal Wavefront-style loader: `v x y z` and `f i j k` lines (1-based).
PartMesh load_obj(std::istream& in, const std::string& origin = "<stream>");
PartMesh load_obj_file(const std::string& path);
void save_obj_file(const std::string& path, const PartMesh& mesh);

}  // namespace momo::body_model
