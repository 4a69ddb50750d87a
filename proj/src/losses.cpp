#include "momo/losses.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "momo/errors.hpp"
#include "momo/spectrum.hpp"

namespace momo::losses {

namespace {

void check_compatible(const MomentumProfile& a, const MomentumProfile& b) {
  if (a.frame_count() != b.frame_count() || a.fps != b.fps) {
    throw LengthMismatch("momentum profiles differ in length or rate (" +
                         std::to_string(a.frame_count()) + "@" +
                         std::to_string(a.fps) + " vs " +
                         std::to_string(b.frame_count()) + "@" +
                         std::to_string(b.fps) + ")");
  }
}

double reduce(const Track3& delta, NormMode norm) {
  if (norm == NormMode::stacked) return delta.norm();
  double acc = 0;
  for (Eigen::Index f = 0; f < delta.rows(); ++f) acc += delta.row(f).norm();
  return acc / delta.rows();
}

double delta_loss(const Track3& delta, double fps, NormMode norm) {
  const Track3 ddelta = motion::time_derivative(delta, fps);
  return reduce(delta, norm) + reduce(ddelta, norm);
}

}  // namespace

std::pair<Track3, Track3> momentum_deltas(const MomentumProfile& pred,
                                          const MomentumProfile& gt) {
  check_compatible(pred, gt);
  return {pred.angular - gt.angular, pred.linear - gt.linear};
}

double loss_amo(const MomentumProfile& pred, const MomentumProfile& gt,
                NormMode norm) {
  check_compatible(pred, gt);
  return delta_loss(pred.angular - gt.angular, pred.fps, norm);
}

double loss_lmo(const MomentumProfile& pred, const MomentumProfile& gt,
                NormMode norm) {
  check_compatible(pred, gt);
  return delta_loss(pred.linear - gt.linear, pred.fps, norm);
}

double loss_spectrum(const MomentumProfile& pred, const MomentumProfile& gt) {
  check_compatible(pred, gt);
  const Track dp = spectrum::dct_columns(pred.angular);
  const Track dg = spectrum::dct_columns(gt.angular);
  return (dp - dg).norm();
}

double loss_tmo(const MomentumProfile& pred, const MomentumProfile& gt,
                const LossWeights& w, NormMode norm) {
  return w.lambda_amo * loss_amo(pred, gt, norm) +
         w.lambda_lmo * loss_lmo(pred, gt, norm) +
         w.lambda_s * loss_spectrum(pred, gt);
}

double loss_transfer(const MotionSequence& pred, const MotionSequence& gt,
                     const BodySpec& body, NormMode norm) {
  if (pred.frame_count() != gt.frame_count() || pred.fps != gt.fps) {
    throw LengthMismatch("sequences differ in length or rate");
  }
  const Track3 tp = momentum::transfer_term(pred, body);
  const Track3 tg = momentum::transfer_term(gt, body);
  return reduce(tp - tg, norm);
}

double loss_swing(const MotionSequence& seq, const Vec3& up) {
  if (seq.frame_count() < 2) throw TooShort("swing loss needs at least 2 frames");
  double acc = 0;
  Mat3 prev = momentum::swing_twist(seq.root_rot[0], up).swing;
  for (int f = 1; f < seq.frame_count(); ++f) {
    const Mat3 cur = momentum::swing_twist(seq.root_rot[f], up).swing;
    acc += momentum::geodesic_angle(cur, prev);
    prev = cur;
  }
  return acc;
}

double loss_joint_velocity(const MotionSequence& pred, const MotionSequence& gt,
                           const BodySpec& body, NormMode norm) {
  if (pred.frame_count() != gt.frame_count() || pred.fps != gt.fps) {
    throw LengthMismatch("sequences differ in length or rate");
  }
  const motion::CentroidTracks cp = motion::part_centroids(pred, body);
  const motion::CentroidTracks cg = motion::part_centroids(gt, body);
  const int p = body.part_count();
  const int t = pred.frame_count();
  Track delta(t, 3 * p);
  for (int i = 0; i < p; ++i) {
    delta.middleCols(3 * i, 3) =
        motion::time_derivative(cp.world[i], pred.fps) -
        motion::time_derivative(cg.world[i], gt.fps);
  }
  if (norm == NormMode::stacked) return delta.norm();
  double acc = 0;
  for (int f = 0; f < t; ++f) acc += delta.row(f).norm();
  return acc / t;
}

double loss_jitter(const MotionSequence& seq, const BodySpec& body) {
  return motion::jerk_magnitude_track(seq, body).sum();
}

double loss_foot_sliding(const MotionSequence& seq, const BodySpec& body,
                         const contact::ContactOptions& opt) {
  const contact::ContactTable table = contact::detect_contacts(seq, body, opt);
  const int t = seq.frame_count();
  double acc = 0;
  for (size_t f = 0; f < table.foot_parts.size(); ++f) {
    for (int k = 0; k + 1 < t; ++k) {
      if (table.in_contact[f][k] && table.in_contact[f][k + 1]) {
        acc += (table.planar[f].row(k + 1) - table.planar[f].row(k)).norm();
      }
    }
  }
  return acc;
}

double geman_mcclure(double x) { return 2.0 * x * x / (4.0 + x * x); }

double loss_humos(const Track2& zmp, const Track2& cop) {
  if (zmp.rows() != cop.rows()) throw LengthMismatch("zmp/cop lengths differ");
  if (zmp.rows() == 0) return 0;
  double acc = 0;
  for (Eigen::Index f = 0; f < zmp.rows(); ++f) {
    acc += geman_mcclure((zmp.row(f) - cop.row(f)).norm());
  }
  return acc / zmp.rows();
}

double loss_humos(const Track2& zmp, const Track2& cop,
                  const std::vector<char>& valid) {
  if (zmp.rows() != cop.rows() ||
      static_cast<Eigen::Index>(valid.size()) != zmp.rows()) {
    throw LengthMismatch("zmp/cop/validity lengths differ");
  }
  double acc = 0;
  int n = 0;
  for (Eigen::Index f = 0; f < zmp.rows(); ++f) {
    if (!valid[f]) continue;
    acc += geman_mcclure((zmp.row(f) - cop.row(f)).norm());
    ++n;
  }
  return n ? acc / n : 0.0;
}

ZmpCop compute_zmp_cop(const MotionSequence& seq, const BodySpec& body,
                       const contact::ContactOptions& opt, double gravity) {
  const int t = seq.frame_count();
  const motion::CentroidTracks tracks = motion::part_centroids(seq, body);
  const Track3 amo = momentum::angular_momentum(seq, body);
  const Track3 ldot = motion::time_derivative(amo, seq.fps);
  const Track3 cddot = motion::time_derivative(
      motion::time_derivative(tracks.com, seq.fps), seq.fps);
  const contact::ContactTable table = contact::detect_contacts(seq, body, opt);

  const Vec3 up = body.gravity_axis;
  Vec3 e1, e2;
  contact::ground_basis(up, &e1, &e2);
  const double total = body.total_mass();

  ZmpCop out;
  out.zmp.setZero(t, 2);
  out.cop.setZero(t, 2);
  out.valid.assign(t, 0);

  for (int f = 0; f < t; ++f) {
    const Vec3 com = tracks.com.row(f);
    const Vec3 acc = cddot.row(f);
    const Vec3 ld = ldot.row(f);
    const double height = com.dot(up) - opt.ground_height;
    const double denom = acc.dot(up) + gravity;
    const bool dynamics_ok = std::abs(denom) >= 1e-6 * gravity;
    if (dynamics_ok) {
      // cart-table balance point with the angular-momentum rate correction
      const double c1 = com.dot(e1), c2 = com.dot(e2);
      const double a1 = acc.dot(e1), a2 = acc.dot(e2);
      out.zmp(f, 0) = c1 - (height * a1 + ld.dot(e2) / total) / denom;
      out.zmp(f, 1) = c2 - (height * a2 - ld.dot(e1) / total) / denom;
    }

    double mass_sum = 0;
    Vec2 cop = Vec2::Zero();
    for (size_t foot = 0; foot < table.foot_parts.size(); ++foot) {
      if (!table.in_contact[foot][f]) continue;
      const double m = body.parts[table.foot_parts[foot]].mass;
      cop += m * Vec2(table.planar[foot](f, 0), table.planar[foot](f, 1));
      mass_sum += m;
    }
    if (mass_sum > 0) out.cop.row(f) = (cop / mass_sum).transpose();
    out.valid[f] = dynamics_ok && mass_sum > 0;
  }
  return out;
}

LossReport compare_losses(const MotionSequence& pred, const MotionSequence& gt,
                          const BodySpec& body, const LossOptions& opt) {
  if (pred.frame_count() != gt.frame_count() || pred.fps != gt.fps ||
      pred.part_count() != gt.part_count()) {
    throw LengthMismatch("pred/gt sequences differ in shape or rate");
  }
  MomentumProfile mp = momentum::momentum_profile(pred, body);
  MomentumProfile mg = momentum::momentum_profile(gt, body);
  if (opt.mass_scale != 1.0) {
    for (auto* m : {&mp, &mg}) {
      m->linear *= opt.mass_scale;
      m->angular *= opt.mass_scale;
      m->transfer *= opt.mass_scale;
    }
  }

  LossReport rep;
  rep.weights = opt.weights;
  rep.l_amo = loss_amo(mp, mg, opt.norm);
  rep.l_lmo = loss_lmo(mp, mg, opt.norm);
  rep.l_s = loss_spectrum(mp, mg);
  rep.l_tmo = opt.weights.lambda_amo * rep.l_amo +
              opt.weights.lambda_lmo * rep.l_lmo + opt.weights.lambda_s * rep.l_s;
  rep.l_tf = reduce(mp.transfer - mg.transfer, opt.norm);
  rep.l_jv = loss_joint_velocity(pred, gt, body, opt.norm);
  rep.l_sw = std::abs(loss_swing(pred, body.gravity_axis) -
                      loss_swing(gt, body.gravity_axis));
  rep.l_jitter = std::abs(loss_jitter(pred, body) - loss_jitter(gt, body));
  rep.l_fs = std::abs(loss_foot_sliding(pred, body, opt.contact) -
                      loss_foot_sliding(gt, body, opt.contact));
  const ZmpCop zp = compute_zmp_cop(pred, body, opt.contact, opt.gravity);
  const ZmpCop zg = compute_zmp_cop(gt, body, opt.contact, opt.gravity);
  rep.l_humos = std::abs(loss_humos(zp.zmp, zp.cop, zp.valid) -
                         loss_humos(zg.zmp, zg.cop, zg.valid));
  return rep;
}

std::string loss_report_to_json(const LossReport& report) {
  nlohmann::json j;
  j["l_amo"] = report.l_amo;
  j["l_lmo"] = report.l_lmo;
  j["l_s"] = report.l_s;
  j["l_tmo"] = report.l_tmo;
  j["l_sw"] = report.l_sw;
  j["l_tf"] = report.l_tf;
  j["l_jv"] = report.l_jv;
  j["l_jitter"] = report.l_jitter;
  j["l_fs"] = report.l_fs;
  j["l_humos"] = report.l_humos;
  j["weights"] = {{"lambda_AMo", report.weights.lambda_amo},
                  {"lambda_LMo", report.weights.lambda_lmo},
                  {"lambda_S", report.weights.lambda_s}};
  return j.dump(2);
}

}  // namespace momo::losses
