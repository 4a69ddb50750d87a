#include "momo/mesh.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "momo/errors.hpp"

namespace momo::body_model {

namespace {

uint64_t edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) |
         static_cast<uint32_t>(b);
}

// Volume integrals of 1, x, and the quadratic monomials over the enclosed
// solid, accumulated per triangle as signed origin-spanned tetrahedra.
// The linear moments come from the tetrahedron centroid; the quadratic ones
// from the (v/20)(f(V1)+f(V2)+f(V3)+f(V1+V2+V3)) rule.
struct SolidMoments {
  double volume = 0;             // integral of 1
  Vec3 first = Vec3::Zero();     // integrals of x, y, z
  double xx = 0, yy = 0, zz = 0; // integrals of x^2, y^2, z^2
  double xy = 0, xz = 0, yz = 0;
};

SolidMoments solid_moments(const PartMesh& mesh) {
  SolidMoments m;
  double six_v = 0;
  Vec3 first24 = Vec3::Zero();
  double xx = 0, yy = 0, zz = 0, xy = 0, xz = 0, yz = 0;
  for (const auto& tri : mesh.triangles) {
    const Vec3& v1 = mesh.vertices[tri[0]];
    const Vec3& v2 = mesh.vertices[tri[1]];
    const Vec3& v3 = mesh.vertices[tri[2]];
    const double det = v1.dot(v2.cross(v3));
    six_v += det;
    const Vec3 v4 = v1 + v2 + v3;
    first24 += det * v4;
    xx += det * (v1.x() * v1.x() + v2.x() * v2.x() + v3.x() * v3.x() + v4.x() * v4.x());
    yy += det * (v1.y() * v1.y() + v2.y() * v2.y() + v3.y() * v3.y() + v4.y() * v4.y());
    zz += det * (v1.z() * v1.z() + v2.z() * v2.z() + v3.z() * v3.z() + v4.z() * v4.z());
    xy += det * (v1.x() * v1.y() + v2.x() * v2.y() + v3.x() * v3.y() + v4.x() * v4.y());
    xz += det * (v1.x() * v1.z() + v2.x() * v2.z() + v3.x() * v3.z() + v4.x() * v4.z());
    yz += det * (v1.y() * v1.z() + v2.y() * v2.z() + v3.y() * v3.z() + v4.y() * v4.z());
  }
  m.volume = six_v / 6.0;
  m.first = first24 / 24.0;
  m.xx = xx / 120.0;
  m.yy = yy / 120.0;
  m.zz = zz / 120.0;
  m.xy = xy / 120.0;
  m.xz = xz / 120.0;
  m.yz = yz / 120.0;
  return m;
}

double checked_volume(const PartMesh& mesh, const SolidMoments& m) {
  (void)mesh;
  if (!(m.volume > 0)) {
    throw DegenerateMesh("mesh volume is not positive (" +
                         std::to_string(m.volume) + "); check winding");
  }
  return m.volume;
}

}  // namespace

void validate_closed(const PartMesh& mesh) {
  const int n = static_cast<int>(mesh.vertices.size());
  std::unordered_map<uint64_t, int> edge_use;
  edge_use.reserve(mesh.triangles.size() * 3);
  for (const auto& tri : mesh.triangles) {
    for (int k = 0; k < 3; ++k) {
      if (tri[k] < 0 || tri[k] >= n) {
        throw NonWatertightMesh("triangle vertex index out of range");
      }
      ++edge_use[edge_key(tri[k], tri[(k + 1) % 3])];
    }
  }
  if (mesh.triangles.empty()) {
    throw NonWatertightMesh("mesh has no triangles");
  }
  for (const auto& [key, uses] : edge_use) {
    if (uses != 2) {
      throw NonWatertightMesh("edge used " + std::to_string(uses) +
                              " times; surface is not closed");
    }
  }
}

double mesh_volume(const PartMesh& mesh) {
  validate_closed(mesh);
  const SolidMoments m = solid_moments(mesh);
  return checked_volume(mesh, m);
}

Vec3 mesh_centroid(const PartMesh& mesh) {
  validate_closed(mesh);
  const SolidMoments m = solid_moments(mesh);
  return m.first / checked_volume(mesh, m);
}

Mat3 mesh_inertia(const PartMesh& mesh, double mass) {
  if (!(mass > 0)) throw DegenerateMesh("mass must be positive");
  validate_closed(mesh);
  const SolidMoments m = solid_moments(mesh);
  const double volume = checked_volume(mesh, m);
  const double density = mass / volume;

  Mat3 about_origin;
  about_origin << m.yy + m.zz, -m.xy, -m.xz,
                  -m.xy, m.xx + m.zz, -m.yz,
                  -m.xz, -m.yz, m.xx + m.yy;
  about_origin *= density;

  // Transfer to the centroid: I_c = I_o - m((c.c)E - c c^T)
  const Vec3 c = m.first / volume;
  const Mat3 steiner = mass * (c.squaredNorm() * Mat3::Identity() - c * c.transpose());
  return about_origin - steiner;
}

PartMesh make_box_mesh(const Vec3& h, const Vec3& center) {
  PartMesh mesh;
  mesh.vertices.reserve(8);
  for (int i = 0; i < 8; ++i) {
    mesh.vertices.push_back(center + Vec3((i & 1) ? h.x() : -h.x(),
                                          (i & 2) ? h.y() : -h.y(),
                                          (i & 4) ? h.z() : -h.z()));
  }
  // two triangles per face, outward winding
  mesh.triangles = {
      {0, 2, 3}, {0, 3, 1},  // -z
      {4, 5, 7}, {4, 7, 6},  // +z
      {0, 1, 5}, {0, 5, 4},  // -y
      {2, 6, 7}, {2, 7, 3},  // +y
      {0, 4, 6}, {0, 6, 2},  // -x
      {1, 3, 7}, {1, 7, 5},  // +x
  };
  return mesh;
}

PartMesh load_obj(std::istream& in, const std::string& origin) {
  PartMesh mesh;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      double x, y, z;
      if (!(ls >> x >> y >> z)) {
        throw ParseError(origin + ":" + std::to_string(line_no) + ": bad vertex line");
      }
      mesh.vertices.emplace_back(x, y, z);
    } else if (tag == "f") {
      int i, j, k;
      if (!(ls >> i >> j >> k)) {
        throw ParseError(origin + ":" + std::to_string(line_no) + ": bad face line");
      }
      mesh.triangles.push_back({i - 1, j - 1, k - 1});
    }
    // other tags ignored
  }
  return mesh;
}

PartMesh load_obj_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open mesh file: " + path);
  return load_obj(in, path);
}

void save_obj_file(const std::string& path, const PartMesh& mesh) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open mesh file for writing: " + path);
  char buf[128];
  for (const auto& v : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.x(), v.y(), v.z());
    out << buf;
  }
  for (const auto& t : mesh.triangles) {
    out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
  }
}

}  // namespace momo::body_model
