#include <doctest.h>

#include <cmath>

#include "momo/body.hpp"
#include "momo/errors.hpp"
#include "momo/losses.hpp"
#include "momo/momentum.hpp"
#include "momo/motion.hpp"
#include "momo/synth.hpp"
#include "support/oracles.hpp"

using namespace momo;
using body_model::BodySpec;
using losses::LossOptions;
using losses::LossWeights;
using losses::NormMode;
using momentum::MomentumProfile;
using motion::MotionSequence;

namespace {

MotionSequence static_seq(const BodySpec& body, int t, double fps) {
  MotionSequence s;
  s.fps = fps;
  s.root_rot.assign(t, Mat3::Identity());
  s.root_trans.assign(t, Vec3::Zero());
  s.part_rot.assign(t, std::vector<Mat3>(body.part_count(), Mat3::Identity()));
  return s;
}

MomentumProfile random_profile(int t, double fps, uint64_t seed) {
  synth::SplitMix64 rng(seed);
  MomentumProfile p;
  p.fps = fps;
  p.linear.setZero(t, 3);
  p.angular.setZero(t, 3);
  p.transfer.setZero(t, 3);
  for (int f = 0; f < t; ++f) {
    for (int c = 0; c < 3; ++c) {
      p.linear(f, c) = rng.normal();
      p.angular(f, c) = rng.normal();
    }
  }
  return p;
}

}  // namespace

TEST_CASE("momentum deltas") {
  const auto a = random_profile(12, 30, 1);
  const auto b = random_profile(12, 30, 2);
  const auto [dam0, dlm0] = losses::momentum_deltas(a, a);
  CHECK(dam0.norm() == 0.0);
  CHECK(dlm0.norm() == 0.0);

  const auto [dam, dlm] = losses::momentum_deltas(a, b);
  CHECK((dam - (a.angular - b.angular)).norm() == 0.0);
  CHECK((dlm - (a.linear - b.linear)).norm() == 0.0);
  const auto [dam_r, dlm_r] = losses::momentum_deltas(b, a);
  CHECK((dam + dam_r).norm() == 0.0);
  CHECK((dlm + dlm_r).norm() == 0.0);

  const auto off = random_profile(13, 30, 3);
  CHECK_THROWS_AS(losses::momentum_deltas(a, off), LengthMismatch);
  auto off_rate = b;
  off_rate.fps = 31;
  CHECK_THROWS_AS(losses::momentum_deltas(a, off_rate), LengthMismatch);
}

TEST_CASE("momentum-delta losses") {
  const int t = 25;
  const auto gt = random_profile(t, 60, 7);
  CHECK(losses::loss_amo(gt, gt) == 0.0);
  CHECK(losses::loss_lmo(gt, gt) == 0.0);

  // constant delta: the derivative term vanishes, the norm term is |c|*sqrt(T)
  const Vec3 c(0.3, -0.4, 1.2);
  auto pred = gt;
  pred.linear.rowwise() += c.transpose();
  CHECK(losses::loss_lmo(pred, gt) ==
        doctest::Approx(c.norm() * std::sqrt(double(t))).epsilon(1e-12));
  CHECK(losses::loss_lmo(pred, gt, NormMode::per_frame_mean) ==
        doctest::Approx(c.norm()).epsilon(1e-12));
  CHECK(losses::loss_amo(pred, gt) == 0.0);  // angular untouched

  // positive homogeneity in the delta
  auto near = gt, far = gt;
  synth::SplitMix64 rng(11);
  for (int f = 0; f < t; ++f) {
    for (int k = 0; k < 3; ++k) {
      const double d = rng.normal();
      near.angular(f, k) += d;
      far.angular(f, k) += 3 * d;
    }
  }
  CHECK(losses::loss_amo(far, gt) ==
        doctest::Approx(3 * losses::loss_amo(near, gt)).epsilon(1e-12));
}

TEST_CASE("spectral loss is the time-domain distance") {
  const int t = 31;
  const auto a = random_profile(t, 50, 21);
  const auto b = random_profile(t, 50, 22);
  CHECK(losses::loss_spectrum(a, b) ==
        doctest::Approx((a.angular - b.angular).norm()).epsilon(1e-10));
  CHECK(losses::loss_spectrum(a, a) == 0.0);

  // adding amplitude a of one orthonormal basis cosine moves the loss by a
  const int k = 9;
  const double amp = 0.37;
  auto shifted = a;
  for (int n = 0; n < t; ++n) {
    shifted.angular(n, 1) +=
        amp * std::sqrt(2.0 / t) * std::cos(M_PI * k * (2 * n + 1) / (2.0 * t));
  }
  CHECK(losses::loss_spectrum(shifted, a) == doctest::Approx(amp).epsilon(1e-12));
}

TEST_CASE("combined momentum loss is the weighted sum") {
  const auto a = random_profile(20, 60, 31);
  const auto b = random_profile(20, 60, 32);
  LossWeights w;
  w.lambda_amo = 0.1;
  w.lambda_lmo = 1.0;
  w.lambda_s = 10.0;
  const double expect = 0.1 * losses::loss_amo(a, b) + losses::loss_lmo(a, b) +
                        10.0 * losses::loss_spectrum(a, b);
  CHECK(losses::loss_tmo(a, b, w) == doctest::Approx(expect).epsilon(1e-13));
  CHECK(losses::loss_tmo(a, b, LossWeights{0, 0, 0}) == 0.0);
  CHECK(losses::loss_tmo(a, b, LossWeights{1, 0, 0}) ==
        doctest::Approx(losses::loss_amo(a, b)).epsilon(1e-13));
}

TEST_CASE("transfer loss") {
  const auto body = synth::make_dumbbell_body(0.6);
  const int t = 120;
  const double fps = 240;

  synth::SynthConfig cfg;
  cfg.kind = synth::SynthKind::rigid_spin;
  cfg.fps = fps;
  cfg.duration_s = t / fps;
  cfg.spin_axis = Vec3(0, 0, 1);
  cfg.spin_rate = 1.0;
  const auto spin = synth::generate(cfg, body).seq;
  const auto still = static_seq(body, spin.frame_count(), fps);

  CHECK(losses::loss_transfer(spin, spin, body) == 0.0);

  // a uniform extra velocity moves the CoM with the parts: the orbital term
  // never sees it
  auto drifting = spin;
  for (int f = 0; f < drifting.frame_count(); ++f) {
    drifting.root_trans[f] += (f / fps) * Vec3(0.7, -0.2, 0.4);
  }
  CHECK(losses::loss_transfer(drifting, spin, body) < 1e-12);

  // two point-ish masses m at radius r about the axis: orbital momentum
  // 2*m*r^2*omega along z
  const double expect = 2 * 0.5 * 0.3 * 0.3 * cfg.spin_rate *
                        std::sqrt(double(spin.frame_count()));
  CHECK(losses::loss_transfer(spin, still, body) ==
        doctest::Approx(expect).epsilon(1e-4));

  // with the part inertias zeroed the angular channel IS the orbital term
  BodySpec zero_inertia = body;
  for (auto& part : zero_inertia.parts) part.inertia = Mat3::Zero();
  const auto pa = momentum::momentum_profile(spin, zero_inertia);
  const auto pb = momentum::momentum_profile(still, zero_inertia);
  CHECK(losses::loss_transfer(spin, still, zero_inertia) ==
        doctest::Approx((pa.angular - pb.angular).norm()).epsilon(1e-14));

  auto short_seq = spin;
  short_seq.root_trans.pop_back();
  short_seq.root_rot.pop_back();
  short_seq.part_rot.pop_back();
  CHECK_THROWS_AS(losses::loss_transfer(short_seq, spin, body), LengthMismatch);
}

TEST_CASE("swing loss") {
  const auto body = synth::make_biped_body();
  const int t = 11;
  auto seq = static_seq(body, t, 30);
  CHECK(losses::loss_swing(seq) == doctest::Approx(0.0));

  // pure twist about the vertical: the swing component never moves
  for (int f = 0; f < t; ++f) {
    seq.root_rot[f] = oracle::rodrigues(Vec3(0, 0, 1), 0.4 * f);
  }
  CHECK(losses::loss_swing(seq) < 1e-9);

  // one degree of tilt per frame reads as exactly ten degrees over ten steps,
  // with or without a twist riding on top
  const double deg = M_PI / 180;
  for (int f = 0; f < t; ++f) {
    seq.root_rot[f] = oracle::rodrigues(Vec3(1, 0, 0), f * deg);
  }
  CHECK(losses::loss_swing(seq) == doctest::Approx(10 * deg).epsilon(1e-10));
  for (int f = 0; f < t; ++f) {
    seq.root_rot[f] = oracle::rodrigues(Vec3(1, 0, 0), f * deg) *
                      oracle::rodrigues(Vec3(0, 0, 1), 1.3 * f);
  }
  CHECK(losses::loss_swing(seq) == doctest::Approx(10 * deg).epsilon(1e-9));

  MotionSequence one = static_seq(body, 1, 30);
  CHECK_THROWS_AS(losses::loss_swing(one), TooShort);
}

TEST_CASE("joint-velocity loss") {
  const auto body = synth::make_biped_body();
  const int t = 40;
  const double fps = 60;
  const auto gt = static_seq(body, t, fps);
  CHECK(losses::loss_joint_velocity(gt, gt, body) == 0.0);

  // a constant positional offset has no velocity signature
  auto offset = gt;
  for (auto& tr : offset.root_trans) tr += Vec3(5, -2, 1);
  CHECK(losses::loss_joint_velocity(offset, gt, body) < 1e-12);

  // a uniform extra velocity v shifts every part's velocity by v exactly
  const Vec3 v(0.3, -0.1, 0.2);
  auto moving = gt;
  for (int f = 0; f < t; ++f) moving.root_trans[f] += (f / fps) * v;
  const double expect = v.norm() * std::sqrt(double(t) * body.part_count());
  CHECK(losses::loss_joint_velocity(moving, gt, body) ==
        doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("jitter loss") {
  const auto body = synth::make_box_body(3);
  const int t = 24;
  const double fps = 60;

  auto seq = static_seq(body, t, fps);
  for (int f = 0; f < t; ++f) seq.root_trans[f] = (f / fps) * Vec3(1, 2, 0);
  CHECK(losses::loss_jitter(seq, body) < 1e-9);  // constant velocity

  // cubic translation: constant jerk 6*|a| on every frame, summed over frames
  const Vec3 a(0, 0, 0.5);
  for (int f = 0; f < t; ++f) {
    const double s = f / fps;
    seq.root_trans[f] = a * s * s * s;
  }
  CHECK(losses::loss_jitter(seq, body) ==
        doctest::Approx(t * 6 * a.norm()).epsilon(1e-6));
}

TEST_CASE("foot-sliding loss") {
  const auto body = synth::make_biped_body();
  const int t = 30;
  const double fps = 60;

  CHECK(losses::loss_foot_sliding(static_seq(body, t, fps), body) == 0.0);

  // slide the whole body horizontally: feet keep ground contact (no vertical
  // motion) while moving s metres per frame pair -> 2 feet * (T-1) pairs * s
  const double s = 0.01;
  auto slide = static_seq(body, t, fps);
  for (int f = 0; f < t; ++f) slide.root_trans[f] = Vec3(s * f, 0, 0);
  CHECK(losses::loss_foot_sliding(slide, body) ==
        doctest::Approx(2 * (t - 1) * s).epsilon(1e-10));

  // airborne: no contact pair ever forms
  auto air = static_seq(body, t, fps);
  for (auto& tr : air.root_trans) tr += Vec3(0, 0, 2.0);
  CHECK(losses::loss_foot_sliding(air, body) == 0.0);
}

TEST_CASE("robust penalty") {
  CHECK(losses::geman_mcclure(0) == 0.0);
  CHECK(losses::geman_mcclure(2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(losses::geman_mcclure(10) == doctest::Approx(200.0 / 104).epsilon(1e-14));
  CHECK(losses::geman_mcclure(1e6) > 2.0 - 1e-9);
  CHECK(losses::geman_mcclure(1e6) < 2.0);
  CHECK(losses::geman_mcclure(0.5) < losses::geman_mcclure(1.0));
}

TEST_CASE("stability loss on explicit tracks") {
  Track2 zmp = Track2::Zero(4, 2);
  Track2 cop = Track2::Zero(4, 2);
  CHECK(losses::loss_humos(zmp, cop) == 0.0);

  zmp.col(0).array() = 2.0;  // every frame 2 away -> penalty 1
  CHECK(losses::loss_humos(zmp, cop) == doctest::Approx(1.0).epsilon(1e-14));

  std::vector<char> valid = {1, 0, 1, 0};
  CHECK(losses::loss_humos(zmp, cop, valid) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(losses::loss_humos(zmp, cop, std::vector<char>(4, 0)) == 0.0);

  Track2 short_cop = Track2::Zero(3, 2);
  CHECK_THROWS_AS(losses::loss_humos(zmp, short_cop), LengthMismatch);
  CHECK_THROWS_AS(losses::loss_humos(zmp, cop, std::vector<char>(3, 1)),
                  LengthMismatch);
}

TEST_CASE("balance points: quiet standing") {
  const auto body = synth::make_biped_body();
  const auto seq = static_seq(body, 12, 60);
  const auto zc = losses::compute_zmp_cop(seq, body);

  const Vec3 com = body.com();
  for (int f = 0; f < 12; ++f) {
    CHECK(zc.valid[f]);
    CHECK(zc.zmp(f, 0) == doctest::Approx(com.x()).epsilon(1e-12));
    CHECK(zc.zmp(f, 1) == doctest::Approx(com.y()).epsilon(1e-12));
    // feet sit at (-0.10, 0.03) and (0.10, 0.03) with equal mass
    CHECK(zc.cop(f, 0) == doctest::Approx(0.0));
    CHECK(zc.cop(f, 1) == doctest::Approx(0.03).epsilon(1e-12));
  }
}

TEST_CASE("balance points: cart-table acceleration offset") {
  // grounded slab + elevated block, both accelerating along x at a = 1 m/s^2:
  // the balance point trails the CoM by h*a/g
  using body_model::make_box_mesh;
  std::vector<body_model::PartMesh> meshes = {
      make_box_mesh({0.1, 0.1, 0.01}, {0, 0, 0.01}),
      make_box_mesh({0.05, 0.05, 0.05}, {0, 0, 1.0}),
  };
  const BodySpec body =
      body_model::build_body_spec(meshes, {-1, 0}, Vec3(0, 0, 1));
  const double h_com = body.com().z();

  const int t = 40;
  const double fps = 60, a = 1.0, g = 9.80665;
  auto seq = static_seq(body, t, fps);
  for (int f = 0; f < t; ++f) {
    const double s = f / fps;
    seq.root_trans[f] = Vec3(0.5 * a * s * s, 0, 0);
  }
  const auto zc = losses::compute_zmp_cop(seq, body);
  for (int f = 0; f < t; ++f) {
    REQUIRE(zc.valid[f]);
    const double com_x = 0.5 * a * (f / fps) * (f / fps);
    CHECK(zc.zmp(f, 0) == doctest::Approx(com_x - h_com * a / g).epsilon(1e-9));
    CHECK(zc.zmp(f, 1) == doctest::Approx(0.0));
    CHECK(zc.cop(f, 0) == doctest::Approx(com_x).epsilon(1e-12));
  }
}

TEST_CASE("balance points: free fall is excluded") {
  const auto body = synth::make_biped_body();
  const int t = 20;
  const double fps = 60, g = 9.80665;
  auto seq = static_seq(body, t, fps);
  for (int f = 0; f < t; ++f) {
    const double s = f / fps;
    seq.root_trans[f] = Vec3(0, 0, -0.5 * g * s * s);
  }
  const auto zc = losses::compute_zmp_cop(seq, body);
  int n_valid = 0;
  for (char v : zc.valid) n_valid += v;
  CHECK(n_valid == 0);
  CHECK(losses::loss_humos(zc.zmp, zc.cop, zc.valid) == 0.0);
}

TEST_CASE("full comparison report") {
  const auto body = synth::make_biped_body();
  const auto res = synth::generate(
      synth::randomized_config(synth::SynthKind::polynomial_root, 60, 1.0, 5),
      body);

  // identical inputs: every reported number is exactly zero
  const auto rep = losses::compare_losses(res.seq, res.seq, body);
  CHECK(rep.l_amo == 0.0);
  CHECK(rep.l_lmo == 0.0);
  CHECK(rep.l_s == 0.0);
  CHECK(rep.l_tmo == 0.0);
  CHECK(rep.l_sw == 0.0);
  CHECK(rep.l_tf == 0.0);
  CHECK(rep.l_jv == 0.0);
  CHECK(rep.l_jitter == 0.0);
  CHECK(rep.l_fs == 0.0);
  CHECK(rep.l_humos == 0.0);

  // the combined loss respects the weights
  const auto other = synth::generate(
      synth::randomized_config(synth::SynthKind::polynomial_root, 60, 1.0, 6),
      body);
  LossOptions opt;
  opt.weights = {0.5, 2.0, 4.0};
  const auto r = losses::compare_losses(res.seq, other.seq, body, opt);
  CHECK(r.l_tmo ==
        doctest::Approx(0.5 * r.l_amo + 2.0 * r.l_lmo + 4.0 * r.l_s).epsilon(1e-13));

  // momentum terms scale with the subject mass, kinematic terms don't
  LossOptions heavy = opt;
  heavy.mass_scale = 80.0;
  const auto rh = losses::compare_losses(res.seq, other.seq, body, heavy);
  CHECK(rh.l_lmo == doctest::Approx(80 * r.l_lmo).epsilon(1e-12));
  CHECK(rh.l_amo == doctest::Approx(80 * r.l_amo).epsilon(1e-12));
  CHECK(rh.l_s == doctest::Approx(80 * r.l_s).epsilon(1e-12));
  CHECK(rh.l_jv == doctest::Approx(r.l_jv).epsilon(1e-14));

  auto truncated = res.seq;
  truncated.root_trans.pop_back();
  truncated.root_rot.pop_back();
  truncated.part_rot.pop_back();
  CHECK_THROWS_AS(losses::compare_losses(truncated, res.seq, body), LengthMismatch);

  const std::string j = losses::loss_report_to_json(rep);
  for (const char* key : {"l_amo", "l_lmo", "l_s", "l_tmo", "l_sw", "l_tf",
                          "l_jv", "l_jitter", "l_fs", "l_humos", "weights"}) {
    CHECK(j.find(std::string("\"") + key + "\"") != std::string::npos);
  }
}
