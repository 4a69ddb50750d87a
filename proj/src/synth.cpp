#include "momo/synth.hpp"

#include <cmath>
#include <fstream>

#include <Eigen/Eigenvalues>
#include <nlohmann/json.hpp>

#include "momo/errors.hpp"
#include "momo/mesh.hpp"

namespace momo::synth {

using nlohmann::json;

const char* kind_name(SynthKind kind) {
  switch (kind) {
    case SynthKind::static_pose: return "static";
    case SynthKind::uniform_translation: return "uniform_translation";
    case SynthKind::rigid_spin: return "rigid_spin";
    case SynthKind::ballistic_tumble: return "ballistic_tumble";
    case SynthKind::polynomial_root: return "polynomial_root";
    case SynthKind::counter_rotating_pair: return "counter_rotating_pair";
  }
  return "?";
}

std::optional<SynthKind> kind_from_name(const std::string& name) {
  for (SynthKind k : all_kinds()) {
    if (name == kind_name(k)) return k;
  }
  return std::nullopt;
}

std::vector<SynthKind> all_kinds() {
  return {SynthKind::static_pose,     SynthKind::uniform_translation,
          SynthKind::rigid_spin,      SynthKind::ballistic_tumble,
          SynthKind::polynomial_root, SynthKind::counter_rotating_pair};
}

double SplitMix64::normal() {
  const double u1 = ((next() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
  const double u2 = (next() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Vec3 SplitMix64::unit_vector() {
  for (;;) {
    const Vec3 v(normal(), normal(), normal());
    const double n = v.norm();
    if (n > 1e-9) return v / n;
  }
}

Mat3 composite_inertia(const BodySpec& body) {
  const Vec3 com = body.com();
  Mat3 total = Mat3::Zero();
  for (const auto& p : body.parts) {
    const Vec3 d = p.centroid - com;
    total += p.inertia + p.mass * (d.squaredNorm() * Mat3::Identity() - d * d.transpose());
  }
  return total;
}

namespace {

int frame_count_for(const SynthConfig& cfg) {
  if (!(cfg.fps > 0)) throw BadConfig("fps must be positive");
  const int t = static_cast<int>(std::lround(cfg.duration_s * cfg.fps));
  if (t < 4) throw BadConfig("duration must span at least 4 frames");
  return t;
}

MotionSequence blank_sequence(int t, int p, double fps) {
  MotionSequence seq;
  seq.fps = fps;
  seq.root_rot.assign(t, Mat3::Identity());
  seq.root_trans.assign(t, Vec3::Zero());
  seq.part_rot.assign(t, std::vector<Mat3>(p, Mat3::Identity()));
  return seq;
}

// Eigenvector of the composite inertia closest to the hint direction,
// oriented along it.
Vec3 principal_axis_near(const Mat3& inertia, const Vec3& hint) {
  Eigen::SelfAdjointEigenSolver<Mat3> eig(inertia);
  const Mat3 axes = eig.eigenvectors();
  int best = 0;
  double best_dot = -1;
  for (int i = 0; i < 3; ++i) {
    const double d = std::abs(axes.col(i).dot(hint));
    if (d > best_dot) {
      best_dot = d;
      best = i;
    }
  }
  Vec3 e = axes.col(best);
  if (e.dot(hint) < 0) e = -e;
  return e;
}

}  // namespace

SynthResult generate(const SynthConfig& cfg, const BodySpec& body) {
  const int t = frame_count_for(cfg);
  const int p = body.part_count();
  const double total = body.total_mass();
  const Vec3 up = body.gravity_axis;

  SynthResult out;
  out.seq = blank_sequence(t, p, cfg.fps);
  out.lmo_true.setZero(t, 3);
  out.amo_true.setZero(t, 3);

  switch (cfg.kind) {
    case SynthKind::static_pose:
      break;

    case SynthKind::uniform_translation: {
      for (int f = 0; f < t; ++f) {
        const double s = f / cfg.fps;
        out.seq.root_trans[f] = cfg.velocity * s;
        out.lmo_true.row(f) = (total * cfg.velocity).transpose();
      }
      break;
    }

    case SynthKind::rigid_spin: {
      if (cfg.spin_axis.norm() < 1e-12) throw BadConfig("spin axis is zero");
      const Vec3 u = cfg.spin_axis.normalized();
      const Vec3 omega = cfg.spin_rate * u;
      const Vec3 com0 = body.com();
      const Mat3 itot = composite_inertia(body);
      for (int f = 0; f < t; ++f) {
        const double s = f / cfg.fps;
        const Mat3 rot = Eigen::AngleAxisd(cfg.spin_rate * s, u).toRotationMatrix();
        out.seq.root_rot[f] = rot;
        for (int i = 0; i < p; ++i) out.seq.part_rot[f][i] = rot;
        out.seq.root_trans[f] = com0 - rot * com0;
        out.amo_true.row(f) = (rot * (itot * omega)).transpose();
      }
      break;
    }

    case SynthKind::ballistic_tumble: {
      if (cfg.spin_axis.norm() < 1e-12) throw BadConfig("spin axis is zero");
      const Mat3 itot = composite_inertia(body);
      const Vec3 e = principal_axis_near(itot, cfg.spin_axis.normalized());
      const Vec3 omega = cfg.spin_rate * e;
      const Vec3 com0 = body.com();
      const Vec3 amo = itot * omega;  // constant: e is principal, so ∥ e
      for (int f = 0; f < t; ++f) {
        const double s = f / cfg.fps;
        const Mat3 rot = Eigen::AngleAxisd(cfg.spin_rate * s, e).toRotationMatrix();
        const Vec3 com = com0 + cfg.initial_velocity * s - 0.5 * cfg.gravity * s * s * up;
        out.seq.root_rot[f] = rot;
        for (int i = 0; i < p; ++i) out.seq.part_rot[f][i] = rot;
        out.seq.root_trans[f] = com - rot * com0;
        out.lmo_true.row(f) =
            (total * (cfg.initial_velocity - cfg.gravity * s * up)).transpose();
        out.amo_true.row(f) = amo.transpose();
      }
      break;
    }

    case SynthKind::polynomial_root: {
      for (int f = 0; f < t; ++f) {
        const double s = f / cfg.fps;
        Vec3 pos = Vec3::Zero(), vel = Vec3::Zero();
        for (int k = static_cast<int>(cfg.poly_coeffs.size()) - 1; k >= 0; --k) {
          pos = pos * s + cfg.poly_coeffs[k];
          if (k >= 1) vel = vel * s + static_cast<double>(k) * cfg.poly_coeffs[k];
        }
        out.seq.root_trans[f] = pos;
        out.lmo_true.row(f) = (total * vel).transpose();
      }
      break;
    }

    case SynthKind::counter_rotating_pair: {
      if (p != 2) throw BadConfig("counter_rotating_pair needs a two-part body");
      const Vec3 c0 = body.parts[0].centroid;
      const Vec3 c1 = body.parts[1].centroid;
      if ((c0 + c1).norm() > 1e-9 || c1.norm() < 1e-9) {
        throw BadConfig("counter_rotating_pair needs origin-antipodal centroids");
      }
      const Vec3 u = (c1 - c0).normalized();
      for (int f = 0; f < t; ++f) {
        const double s = f / cfg.fps;
        const Mat3 fwd = Eigen::AngleAxisd(cfg.spin_rate * s, u).toRotationMatrix();
        const Mat3 bwd = Eigen::AngleAxisd(-cfg.spin_rate * s, u).toRotationMatrix();
        out.seq.part_rot[f][0] = fwd;
        out.seq.part_rot[f][1] = bwd;
        const Vec3 spin = cfg.spin_rate *
                          (fwd * (body.parts[0].inertia * u) -
                           bwd * (body.parts[1].inertia * u));
        out.amo_true.row(f) = spin.transpose();
      }
      break;
    }
  }
  return out;
}

MotionSequence inject_noise(const MotionSequence& seq, const MotionSequence& source,
                            double alpha) {
  if (seq.frame_count() != source.frame_count() ||
      seq.part_count() != source.part_count() || seq.fps != source.fps) {
    throw ShapeMismatch("sequences differ in shape or rate");
  }
  if (alpha < 0 || alpha > 1) throw BadConfig("alpha must be in [0, 1]");
  if (alpha == 0.0) return seq;
  if (alpha == 1.0) return source;

  MotionSequence out = seq;
  const int t = seq.frame_count();
  const int p = seq.part_count();
  auto blend = [alpha](const Mat3& a, const Mat3& b) {
    const Eigen::Quaterniond qa(a), qb(b);
    return qa.slerp(alpha, qb).toRotationMatrix();
  };
  for (int f = 0; f < t; ++f) {
    out.root_rot[f] = blend(seq.root_rot[f], source.root_rot[f]);
    out.root_trans[f] =
        (1.0 - alpha) * seq.root_trans[f] + alpha * source.root_trans[f];
    for (int i = 0; i < p; ++i) {
      out.part_rot[f][i] = blend(seq.part_rot[f][i], source.part_rot[f][i]);
    }
  }
  return out;
}

MotionSequence inject_hf_corruption(const MotionSequence& seq, double amplitude,
                                    double frequency_hz) {
  if (amplitude == 0.0) return seq;
  MotionSequence out = seq;
  const int t = seq.frame_count();
  int k = static_cast<int>(std::lround(2.0 * t * frequency_hz / seq.fps));
  k = std::max(0, std::min(k, t - 1));
  for (int f = 0; f < t; ++f) {
    const double phase = M_PI * k * (2 * f + 1) / (2.0 * t);
    out.root_trans[f].x() += amplitude * std::sin(phase);
  }
  return out;
}

SynthConfig randomized_config(SynthKind kind, double fps, double duration_s,
                              uint64_t seed) {
  SynthConfig cfg;
  cfg.kind = kind;
  cfg.fps = fps;
  cfg.duration_s = duration_s;
  cfg.seed = seed;
  SplitMix64 rng(seed);
  switch (kind) {
    case SynthKind::static_pose:
      break;
    case SynthKind::uniform_translation:
      cfg.velocity = rng.uniform(0.3, 1.5) * rng.unit_vector();
      break;
    case SynthKind::rigid_spin:
      cfg.spin_axis = rng.unit_vector();
      cfg.spin_rate = rng.uniform(0.5, 3.0);
      break;
    case SynthKind::ballistic_tumble:
      cfg.spin_axis = rng.unit_vector();
      cfg.spin_rate = rng.uniform(0.5, 4.0);
      cfg.initial_velocity = Vec3(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5),
                                  rng.uniform(0.5, 2.5));
      break;
    case SynthKind::polynomial_root:
      cfg.poly_coeffs = {
          Vec3(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(1, 2)),
          0.5 * rng.unit_vector(),
          0.2 * rng.unit_vector(),
          0.1 * rng.unit_vector(),
          0.05 * rng.unit_vector(),
      };
      break;
    case SynthKind::counter_rotating_pair:
      cfg.spin_rate = rng.uniform(1.0, 4.0);
      break;
  }
  return cfg;
}

namespace {

using body_model::PartMesh;
using body_model::build_body_spec;
using body_model::make_box_mesh;

}  // namespace

BodySpec make_biped_body() {
  std::vector<PartMesh> meshes;
  std::vector<int> parents;
  auto add = [&](const Vec3& half, const Vec3& center, int parent) {
    meshes.push_back(make_box_mesh(half, center));
    parents.push_back(parent);
  };
  add({0.15, 0.10, 0.10}, {0, 0, 1.00}, -1);  // pelvis
  add({0.14, 0.09, 0.20}, {0, 0, 1.35}, 0);   // torso
  add({0.08, 0.08, 0.10}, {0, 0, 1.70}, 1);   // head
  add({0.06, 0.06, 0.18}, {-0.10, 0, 0.72}, 0);   // left thigh
  add({0.05, 0.05, 0.17}, {-0.10, 0, 0.35}, 3);   // left shin
  add({0.09, 0.05, 0.02}, {-0.10, 0.03, 0.02}, 4);  // left foot
  add({0.06, 0.06, 0.18}, {0.10, 0, 0.72}, 0);    // right thigh
  add({0.05, 0.05, 0.17}, {0.10, 0, 0.35}, 6);    // right shin
  add({0.09, 0.05, 0.02}, {0.10, 0.03, 0.02}, 7);   // right foot
  return build_body_spec(meshes, parents, Vec3(0, 0, 1));
}

BodySpec make_box_body(int parts) {
  if (parts < 1) throw BadConfig("need at least one part");
  std::vector<PartMesh> meshes;
  std::vector<int> parents;
  for (int i = 0; i < parts; ++i) {
    const double x = (i - 0.5 * (parts - 1)) * 0.3;
    meshes.push_back(make_box_mesh({0.1, 0.1, 0.1}, {x, 0, 0.5}));
    parents.push_back(i - 1);
  }
  return build_body_spec(meshes, parents, Vec3(0, 0, 1));
}

BodySpec make_dumbbell_body(double separation) {
  if (!(separation > 0)) throw BadConfig("separation must be positive");
  std::vector<PartMesh> meshes = {
      make_box_mesh({0.1, 0.1, 0.1}, {-0.5 * separation, 0, 0}),
      make_box_mesh({0.1, 0.1, 0.1}, {0.5 * separation, 0, 0}),
  };
  return build_body_spec(meshes, {-1, 0}, Vec3(0, 0, 1));
}

std::string synth_meta_json(const SynthResult& result, SynthKind kind) {
  json j;
  j["kind"] = kind_name(kind);
  j["fps"] = result.seq.fps;
  j["frames"] = result.seq.frame_count();
  json lmo = json::array(), amo = json::array();
  for (int f = 0; f < result.seq.frame_count(); ++f) {
    lmo.push_back({result.lmo_true(f, 0), result.lmo_true(f, 1), result.lmo_true(f, 2)});
    amo.push_back({result.amo_true(f, 0), result.amo_true(f, 1), result.amo_true(f, 2)});
  }
  j["lmo_true"] = std::move(lmo);
  j["amo_true"] = std::move(amo);
  return j.dump();
}

void save_synth_meta(const std::string& path, const SynthResult& result,
                     SynthKind kind) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open metadata file for writing: " + path);
  out << synth_meta_json(result, kind) << '\n';
}

}  // namespace momo::synth
