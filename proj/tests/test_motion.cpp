#include <doctest.h>

#include <cmath>

#include "momo/body.hpp"
#include "momo/errors.hpp"
#include "momo/motion.hpp"
#include "momo/synth.hpp"
#include "support/oracles.hpp"

using namespace momo;
using body_model::BodySpec;
using motion::MotionSequence;

namespace {

MotionSequence identity_pose(int frames, int parts, double fps) {
  MotionSequence seq;
  seq.fps = fps;
  seq.root_rot.assign(frames, Mat3::Identity());
  seq.root_trans.assign(frames, Vec3::Zero());
  seq.part_rot.assign(frames, std::vector<Mat3>(parts, Mat3::Identity()));
  return seq;
}

BodySpec two_boxes() {
  return body_model::build_body_spec(
      {body_model::make_box_mesh(Vec3(0.1, 0.1, 0.1), Vec3(0, 0, 1)),
       body_model::make_box_mesh(Vec3(0.1, 0.1, 0.1), Vec3(0.5, 0, 1))},
      {-1, 0});
}

}  // namespace

TEST_CASE("sequence validation rejects malformed input") {
  MotionSequence ok = identity_pose(4, 2, 30);
  CHECK_NOTHROW(motion::validate_sequence(ok));

  MotionSequence bad_fps = ok;
  bad_fps.fps = 0;
  CHECK_THROWS_AS(motion::validate_sequence(bad_fps), BadConfig);

  MotionSequence one_frame = identity_pose(1, 2, 30);
  CHECK_THROWS_AS(motion::validate_sequence(one_frame), TooShort);

  MotionSequence ragged = ok;
  ragged.part_rot[2].pop_back();
  CHECK_THROWS_AS(motion::validate_sequence(ragged), PartCountMismatch);

  MotionSequence skewed = ok;
  skewed.part_rot[1][0](0, 1) = 0.5;
  CHECK_THROWS_AS(motion::validate_sequence(skewed), NonOrthonormal);
}

TEST_CASE("world centroids in the canonical pose") {
  const BodySpec body = two_boxes();
  const MotionSequence seq = identity_pose(3, 2, 30);
  const auto tracks = motion::part_centroids(seq, body);
  for (int i = 0; i < 2; ++i) {
    for (int f = 0; f < 3; ++f) {
      CHECK((tracks.world[i].row(f).transpose() - body.parts[i].centroid).norm() <
            1e-15);
    }
  }
}

TEST_CASE("translating the pose moves frame W but not frame B") {
  const BodySpec body = two_boxes();
  const MotionSequence base = identity_pose(3, 2, 30);
  MotionSequence moved = base;
  const Vec3 d(4, -2, 0.5);
  for (auto& tv : moved.root_trans) tv += d;

  const auto a = motion::part_centroids(base, body);
  const auto b = motion::part_centroids(moved, body);
  for (int i = 0; i < 2; ++i) {
    CHECK(((b.world[i] - a.world[i]).rowwise() - d.transpose()).norm() < 1e-14);
    CHECK((b.body[i] - a.body[i]).norm() < 1e-14);
  }
}

TEST_CASE("spinning a part about its own centroid keeps its centroid fixed") {
  const BodySpec solo = body_model::build_body_spec(
      {body_model::make_box_mesh(Vec3(0.2, 0.1, 0.3), Vec3(1, 2, 3))}, {-1});
  const Vec3 c0 = solo.parts[0].centroid;

  MotionSequence seq = identity_pose(10, 1, 30);
  for (int f = 0; f < 10; ++f) {
    const Mat3 r = oracle::rodrigues(Vec3(0, 0, 1), 0.2 * f);
    seq.part_rot[f][0] = r;
    seq.root_trans[f] = c0 - r * c0;  // pivot encoded in the root translation
  }
  const auto tracks = motion::part_centroids(seq, solo);
  for (int f = 0; f < 10; ++f) {
    CHECK((tracks.world[0].row(f).transpose() - c0).norm() < 1e-12);
  }
}

TEST_CASE("time derivative on polynomials") {
  const double fps = 10;

  // constant -> zero
  Track c = Track::Constant(6, 2, 3.5);
  CHECK(motion::time_derivative(c, fps).norm() < 1e-14);

  // linear -> the exact velocity at every frame including the ends
  Track lin(5, 1);
  for (int f = 0; f < 5; ++f) lin(f, 0) = 2.5 * f / fps;
  const Track dlin = motion::time_derivative(lin, fps);
  for (int f = 0; f < 5; ++f) CHECK(dlin(f, 0) == doctest::Approx(2.5).epsilon(1e-13));

  // quadratic x(s) = s^2: central difference exact at interior frames,
  // and the 3-point end stencils keep it exact at the boundary too
  Track quad(11, 1);
  for (int f = 0; f < 11; ++f) {
    const double s = f / fps;
    quad(f, 0) = s * s;
  }
  const Track dquad = motion::time_derivative(quad, fps);
  CHECK(dquad(5, 0) == doctest::Approx(1.0).epsilon(1e-13));  // 2 * 0.5
  for (int f = 0; f < 11; ++f) {
    CHECK(dquad(f, 0) == doctest::Approx(2.0 * f / fps).epsilon(1e-12));
  }

  // two frames: plain slope on both rows
  Track two(2, 1);
  two << 1.0, 2.0;
  const Track dtwo = motion::time_derivative(two, fps);
  CHECK(dtwo(0, 0) == doctest::Approx(10.0));
  CHECK(dtwo(1, 0) == doctest::Approx(10.0));

  CHECK_THROWS_AS(motion::time_derivative(Track(1, 3), fps), TooShort);
}

TEST_CASE("angular velocity of analytic spins") {
  // constant rotation -> zero
  std::vector<Mat3> frozen(5, oracle::rodrigues(Vec3(1, 1, 0), 0.7));
  for (const Vec3& w : motion::angular_velocity(frozen, 60)) {
    CHECK(w.norm() < 1e-13);
  }

  // spin about z at 1 rad/s sampled at 100 fps
  const double fps = 100;
  std::vector<Mat3> spin;
  for (int f = 0; f < 50; ++f) spin.push_back(oracle::rodrigues(Vec3(0, 0, 1), f / fps));
  for (const Vec3& w : motion::angular_velocity(spin, fps)) {
    CHECK((w - Vec3(0, 0, 1)).norm() < 1e-3);
  }

  // arbitrary axes: second-order convergence of the worst-frame error
  const Vec3 axes[3] = {Vec3(1, 0, 0), Vec3(0, 1, 1).normalized(),
                        Vec3(-2, 1, 0.5).normalized()};
  for (const Vec3& u : axes) {
    const double rate = 2.3;
    auto worst = [&](double f) {
      std::vector<Mat3> rs;
      for (int t = 0; t < 40; ++t) rs.push_back(oracle::rodrigues(u, rate * t / f));
      double e = 0;
      for (const Vec3& w : motion::angular_velocity(rs, f)) {
        e = std::max(e, (w - rate * u).norm());
      }
      return e;
    };
    const double e60 = worst(60), e120 = worst(120);
    CHECK(e60 / e120 > 3.0);  // ~4x per rate doubling
    CHECK(e60 / e120 < 5.0);
  }
}

TEST_CASE("cubic trajectories give their exact jerk on every row") {
  const BodySpec body = two_boxes();
  const double fps = 30;
  MotionSequence seq = identity_pose(24, 2, fps);
  const Vec3 j0(2, -1, 0.5);  // jerk vector; |j0| is the expected magnitude
  for (int f = 0; f < 24; ++f) {
    const double s = f / fps;
    seq.root_trans[f] = Vec3(0.1, 0, 0) + s * Vec3(1, 0, 0) + (s * s) * Vec3(0, 0.5, 0) +
                        (s * s * s / 6.0) * j0;
  }
  const Eigen::VectorXd jerk = motion::jerk_magnitude_track(seq, body);
  for (int f = 0; f < 24; ++f) {
    CHECK(jerk[f] == doctest::Approx(j0.norm()).epsilon(1e-9));
  }

  CHECK_THROWS_AS(motion::jerk_magnitude_track(identity_pose(3, 2, fps), body),
                  TooShort);
}

TEST_CASE("motion json round trip and quaternion form") {
  const auto res = synth::generate(
      synth::randomized_config(synth::SynthKind::ballistic_tumble, 30, 0.5, 11),
      synth::make_biped_body());
  const MotionSequence& seq = res.seq;
  const MotionSequence back =
      motion::parse_motion_json(motion::motion_to_json(seq), "<mem>");
  REQUIRE(back.frame_count() == seq.frame_count());
  REQUIRE(back.part_count() == seq.part_count());
  CHECK(back.fps == seq.fps);
  double err = 0;
  for (int f = 0; f < seq.frame_count(); ++f) {
    err = std::max(err, (back.root_trans[f] - seq.root_trans[f]).norm());
    err = std::max(err, (back.root_rot[f] - seq.root_rot[f]).norm());
    for (int i = 0; i < seq.part_count(); ++i) {
      err = std::max(err, (back.part_rot[f][i] - seq.part_rot[f][i]).norm());
    }
  }
  CHECK(err == 0.0);  // dump() doubles survive the round trip bit-exactly

  // the same frame written with quaternions decodes to the same rotations
  const Mat3 r = oracle::rodrigues(Vec3(1, 2, 3).normalized(), 0.9);
  const Eigen::Quaterniond q(r);
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "{\"fps\":30,\"parts\":1,\"frames\":["
                "{\"q\":[%.17g,%.17g,%.17g,%.17g],\"T\":[0,0,0],"
                "\"theta_q\":[%.17g,%.17g,%.17g,%.17g]},"
                "{\"q\":[1,0,0,0],\"T\":[0,0,1],\"theta_q\":[1,0,0,0]}]}",
                q.w(), q.x(), q.y(), q.z(), q.w(), q.x(), q.y(), q.z());
  const MotionSequence qseq = motion::parse_motion_json(buf, "<mem>");
  CHECK((qseq.root_rot[0] - r).norm() < 1e-12);
  CHECK((qseq.part_rot[0][0] - r).norm() < 1e-12);

  CHECK_THROWS_AS(motion::parse_motion_json("{\"fps\":30}", "<mem>"), ParseError);
  CHECK_THROWS_AS(
      motion::parse_motion_json(
          "{\"fps\":30,\"parts\":1,\"frames\":[{\"T\":[0,0,0],\"theta\":[1,0,0,0,1,0,0,0,1]}]}",
          "<mem>"),
      ParseError);
}
