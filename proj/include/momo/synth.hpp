#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "momo/body.hpp"
#include "momo/motion.hpp"
#include "momo/types.hpp"

namespace momo::synth {

using body_model::BodySpec;
using motion::MotionSequence;

enum class SynthKind {
  static_pose,
  uniform_translation,
  rigid_spin,
  ballistic_tumble,
  polynomial_root,
  counter_rotating_pair,
};

const char* kind_name(SynthKind kind);
std::optional<SynthKind> kind_from_name(const std::string& name);  // "static", ...
std::vector<SynthKind> all_kinds();

struct SynthConfig {
  SynthKind kind = SynthKind::static_pose;
  double fps = 60.0;
  double duration_s = 2.0;
  uint64_t seed = 0;

  Vec3 velocity = Vec3::Zero();          // uniform_translation
  Vec3 spin_axis = Vec3(0, 0, 1);        // rigid_spin axis / tumble axis hint
  double spin_rate = 1.0;                // rad/s
  Vec3 initial_velocity = Vec3::Zero();  // ballistic_tumble
  double gravity = 9.80665;              // m/s², along −gravity_axis
  std::vector<Vec3> poly_coeffs;         // T_vec(s) = Σ coeffs[k]·s^k
};

/// A generated clip with its closed-form momentum tracks (unit total mass).
struct SynthResult {
  MotionSequence seq;
  Track3 lmo_true;
  Track3 amo_true;
};

/// Deterministic analytic motions. Rotating kinds place every part on one
/// rigid transform, encoding the pivot into the root translation, so the
/// closed-form momentum is exact:
///  - rigid_spin turns about the canonical CoM;
///  - ballistic_tumble turns about a principal axis of the composite inertia
///    (the hint axis picks the nearest one) while the CoM falls freely;
///  - counter_rotating_pair needs a two-part body with origin-antipodal
///    centroids and spins them oppositely about their common axis.
/// Throws BadConfig on bad parameters or an incompatible body.
SynthResult generate(const SynthConfig& cfg, const BodySpec& body);

/// Blend toward `source`: per-part quaternion slerp with coefficient alpha,
/// linear interpolation of translations. alpha 0 and 1 return the inputs
/// verbatim. Throws ShapeMismatch unless shapes and rates agree.
MotionSequence inject_noise(const MotionSequence& seq, const MotionSequence& source,
                            double alpha);

/// Adds a sinusoid along world x to the root translation, phase-aligned so
/// that its finite-difference velocity lands on a single DCT bin (the one
/// nearest `frequency_hz`) at interior frames.
MotionSequence inject_hf_corruption(const MotionSequence& seq, double amplitude,
                                    double frequency_hz);

/// Composite canonical inertia about the body CoM (parts rigidly attached).
Mat3 composite_inertia(const BodySpec& body);

/// Portable 64-bit PRNG (SplitMix64: Steele, Lea & Flood's mixing constants);
/// the same seed reproduces streams across platforms and languages.
struct SplitMix64 {
  uint64_t state = 0;
  explicit SplitMix64(uint64_t seed = 0) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double uniform() { return (next() >> 11) * 0x1.0p-53; }  // [0, 1)
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  double normal();
  Vec3 unit_vector();
};

/// Kind-appropriate random parameters drawn from a SplitMix64 stream.
SynthConfig randomized_config(SynthKind kind, double fps, double duration_s,
                              uint64_t seed);

// Ready-made bodies for tests and corpora (z-up, unit total mass).
BodySpec make_biped_body();
BodySpec make_box_body(int parts);
BodySpec make_dumbbell_body(double separation = 0.6);

/// Metadata side-file with the analytic momentum tracks.
std::string synth_meta_json(const SynthResult& result, SynthKind kind);
void save_synth_meta(const std::string& path, const SynthResult& result,
                     SynthKind kind);

}  // namespace momo::synth
