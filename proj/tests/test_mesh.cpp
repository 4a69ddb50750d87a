#include <doctest.h>

#include <sstream>

#include "momo/errors.hpp"
#include "momo/mesh.hpp"
#include "support/oracles.hpp"

using namespace momo;
using body_model::PartMesh;

namespace {

// (0,0,0),(1,0,0),(0,1,0),(0,0,1) with outward winding.
PartMesh unit_tetra() {
  PartMesh m;
  m.vertices = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
  m.triangles = {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}};
  return m;
}

PartMesh unit_cube_01() {
  return body_model::make_box_mesh(Vec3(0.5, 0.5, 0.5), Vec3(0.5, 0.5, 0.5));
}

}  // namespace

TEST_CASE("enclosed volume of canonical solids") {
  CHECK(body_model::mesh_volume(unit_cube_01()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(body_model::mesh_volume(unit_tetra()) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  // translation invariance of a closed surface
  PartMesh far_cube =
      body_model::make_box_mesh(Vec3(0.5, 0.5, 0.5), Vec3(10.5, -2.5, 7.5));
  CHECK(body_model::mesh_volume(far_cube) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("volume validation") {
  PartMesh open_cube = unit_cube_01();
  open_cube.triangles.pop_back();  // one face half-removed
  CHECK_THROWS_AS(body_model::mesh_volume(open_cube), NonWatertightMesh);

  PartMesh inverted = unit_cube_01();
  for (auto& t : inverted.triangles) std::swap(t[1], t[2]);
  CHECK_THROWS_AS(body_model::mesh_volume(inverted), DegenerateMesh);

  PartMesh bad_index = unit_cube_01();
  bad_index.triangles[0][0] = 99;
  CHECK_THROWS_AS(body_model::mesh_volume(bad_index), NonWatertightMesh);

  CHECK_THROWS_AS(body_model::mesh_volume(PartMesh{}), NonWatertightMesh);
}

TEST_CASE("volume agrees with a tetrahedron fan around an interior point") {
  const PartMesh sphere = oracle::icosphere(0.8, 2);
  const double lib = body_model::mesh_volume(sphere);
  CHECK(lib == doctest::Approx(oracle::fan_volume(sphere, Vec3(0.1, -0.2, 0.05)))
                   .epsilon(1e-12));

  const PartMesh box = body_model::make_box_mesh(Vec3(0.3, 0.7, 0.2), Vec3(1, 2, 3));
  CHECK(body_model::mesh_volume(box) ==
        doctest::Approx(oracle::fan_volume(box, Vec3(1.1, 2.0, 2.9))).epsilon(1e-12));
}

TEST_CASE("centroid of canonical solids") {
  const PartMesh centered = body_model::make_box_mesh(Vec3(0.5, 0.5, 0.5));
  CHECK(body_model::mesh_centroid(centered).norm() < 1e-12);

  CHECK((body_model::mesh_centroid(unit_cube_01()) - Vec3(0.5, 0.5, 0.5)).norm() <
        1e-12);
  CHECK((body_model::mesh_centroid(unit_tetra()) - Vec3(0.25, 0.25, 0.25)).norm() <
        1e-12);

  // off-center solid against the interior-point fan oracle
  const PartMesh sphere = oracle::icosphere(0.6, 2);
  PartMesh shifted = sphere;
  for (auto& v : shifted.vertices) v += Vec3(2, -1, 0.5);
  CHECK((body_model::mesh_centroid(shifted) - Vec3(2, -1, 0.5)).norm() < 1e-9);
  CHECK((body_model::mesh_centroid(shifted) -
         oracle::fan_centroid(shifted, Vec3(2.05, -1.02, 0.51)))
            .norm() < 1e-12);
}

TEST_CASE("centroidal inertia of cuboids") {
  const Mat3 cube = body_model::mesh_inertia(unit_cube_01(), 1.0);
  CHECK((cube - oracle::cuboid_inertia(1, 1, 1, 1)).norm() < 1e-12);
  CHECK(cube(0, 0) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  const PartMesh cuboid = body_model::make_box_mesh(Vec3(1.0, 0.5, 0.5));
  const Mat3 lib = body_model::mesh_inertia(cuboid, 1.0);
  CHECK((lib - oracle::cuboid_inertia(1, 2, 1, 1)).norm() < 1e-12);
  CHECK(lib(0, 0) == doctest::Approx(2.0 / 12.0).epsilon(1e-12));
  CHECK(lib(1, 1) == doctest::Approx(5.0 / 12.0).epsilon(1e-12));
  CHECK(lib(2, 2) == doctest::Approx(5.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("inertia about the centroid ignores where the mesh sits") {
  const Vec3 half(0.4, 0.9, 0.25);
  const Mat3 at_origin = body_model::mesh_inertia(body_model::make_box_mesh(half), 2.5);
  const Mat3 far_away =
      body_model::mesh_inertia(body_model::make_box_mesh(half, Vec3(5, -3, 11)), 2.5);
  CHECK((at_origin - far_away).norm() < 1e-9);
}

TEST_CASE("icosphere inertia approaches the solid-sphere value") {
  const PartMesh sphere = oracle::icosphere(1.0, 3);
  const Mat3 inertia = body_model::mesh_inertia(sphere, 1.0);
  const double want = oracle::sphere_inertia(1.0, 1.0);
  for (int i = 0; i < 3; ++i) {
    CHECK(inertia(i, i) == doctest::Approx(want).epsilon(0.02));
  }
  CHECK(std::abs(inertia(0, 1)) < 1e-6);
  CHECK(std::abs(inertia(0, 2)) < 1e-6);
}

TEST_CASE("obj parsing") {
  std::istringstream in(
      "# comment\n"
      "v 0 0 0\nv 1 0 0\nv 0 1 0\nv 0 0 1\n"
      "vn 0 0 1\n"
      "f 1 3 2\nf 1 2 4\nf 1 4 3\nf 2 3 4\n");
  const PartMesh mesh = body_model::load_obj(in, "tetra.obj");
  CHECK(body_model::mesh_volume(mesh) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  std::istringstream bad("v 0 0\n");
  CHECK_THROWS_AS(body_model::load_obj(bad, "bad.obj"), ParseError);
}

TEST_CASE("obj files preserve the measured solid") {
  const PartMesh box = body_model::make_box_mesh(Vec3(0.2, 0.3, 0.4), Vec3(1, 0, -1));
  const std::string path = "/tmp/momo_test_box.obj";
  body_model::save_obj_file(path, box);
  const PartMesh loaded = body_model::load_obj_file(path);
  CHECK(body_model::mesh_volume(loaded) ==
        doctest::Approx(body_model::mesh_volume(box)).epsilon(1e-15));
  CHECK((body_model::mesh_centroid(loaded) - body_model::mesh_centroid(box)).norm() <
        1e-15);
}
