#pragma once

#include <string>
#include <utility>
#include <vector>

#include "momo/body.hpp"
#include "momo/contact.hpp"
#include "momo/momentum.hpp"
#include "momo/motion.hpp"
#include "momo/types.hpp"

namespace momo::losses {

using body_model::BodySpec;
using momentum::MomentumProfile;
using motion::MotionSequence;

struct LossWeights {
  double lambda_amo = 1.0;
  double lambda_lmo = 1.0;
  double lambda_s = 1.0;
};

/// How a T×3 delta track is reduced to a scalar: one norm over the whole
/// stack (default), or the mean of per-frame norms (scale-stable variant).
enum class NormMode { stacked, per_frame_mean };

struct LossOptions {
  NormMode norm = NormMode::stacked;
  LossWeights weights{};
  double mass_scale = 1.0;  // momenta are unit-total-mass; set subject kg here
  contact::ContactOptions contact{};
  double gravity = 9.80665;
};

/// (Δ_AMo, Δ_LMo): per-frame momentum differences, prediction minus truth.
std::pair<Track3, Track3> momentum_deltas(const MomentumProfile& pred,
                                          const MomentumProfile& gt);

/// Norm of the momentum delta plus norm of the delta's time derivative.
double loss_amo(const MomentumProfile& pred, const MomentumProfile& gt,
                NormMode norm = NormMode::stacked);
double loss_lmo(const MomentumProfile& pred, const MomentumProfile& gt,
                NormMode norm = NormMode::stacked);

/// L2 distance between the DCT coefficient stacks of the angular-momentum
/// channels. Always stacked: with the orthonormal transform this equals the
/// time-domain L2 distance, which is the property tests rely on.
double loss_spectrum(const MomentumProfile& pred, const MomentumProfile& gt);

double loss_tmo(const MomentumProfile& pred, const MomentumProfile& gt,
                const LossWeights& weights, NormMode norm = NormMode::stacked);

/// Norm of the difference of the orbital (point-mass) momentum terms.
double loss_transfer(const MotionSequence& pred, const MotionSequence& gt,
                     const BodySpec& body, NormMode norm = NormMode::stacked);

/// Sum of geodesic angles between consecutive swing components of the root
/// rotation (twist about `up` removed first).
double loss_swing(const MotionSequence& seq, const Vec3& up = Vec3(0, 0, 1));

/// Norm of the difference between per-part world centroid velocity tracks,
/// stacked over parts.
double loss_joint_velocity(const MotionSequence& pred, const MotionSequence& gt,
                           const BodySpec& body, NormMode norm = NormMode::stacked);

/// Sum over frames of the mean-over-parts jerk magnitude of world centroids.
double loss_jitter(const MotionSequence& seq, const BodySpec& body);

/// Total horizontal displacement (m) of foot parts across frame pairs that
/// are in contact at both ends.
double loss_foot_sliding(const MotionSequence& seq, const BodySpec& body,
                         const contact::ContactOptions& opt = {});

/// Bounded robust penalty 2x²/(4+x²), saturating at 2.
double geman_mcclure(double x);

/// Mean over frames of the Geman–McClure penalty of the planar ZMP–CoP gap.
double loss_humos(const Track2& zmp, const Track2& cop);
/// Same, restricted to frames marked valid; 0 when none are.
double loss_humos(const Track2& zmp, const Track2& cop,
                  const std::vector<char>& valid);

/// Planar balance points per frame, in the deterministic ground basis.
/// A frame is valid when the vertical-dynamics denominator is away from zero
/// AND at least one foot part is grounded (CoP needs support).
struct ZmpCop {
  Track2 zmp;
  Track2 cop;
  std::vector<char> valid;
};
ZmpCop compute_zmp_cop(const MotionSequence& seq, const BodySpec& body,
                       const contact::ContactOptions& opt = {},
                       double gravity = 9.80665);

/// Every loss the comparison pipeline reports. Momentum-delta terms come from
/// the operations above; the single-sequence regularizers (swing, jitter,
/// foot sliding, stability) are reported as |value(pred) − value(truth)| so
/// the whole report vanishes when the inputs agree.
struct LossReport {
  double l_amo = 0, l_lmo = 0, l_s = 0, l_tmo = 0;
  double l_sw = 0, l_tf = 0, l_jv = 0, l_jitter = 0, l_fs = 0, l_humos = 0;
  LossWeights weights{};
};

LossReport compare_losses(const MotionSequence& pred, const MotionSequence& gt,
                          const BodySpec& body, const LossOptions& opt = {});

std::string loss_report_to_json(const LossReport& report);

}  // namespace momo::losses
