#include "momo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <Eigen/SVD>
#include <nlohmann/json.hpp>

#include "momo/errors.hpp"

namespace momo::metrics {

RigidTransform rigid_align(const Track3& from, const Track3& to) {
  if (from.rows() != to.rows()) throw LengthMismatch("trajectories differ in length");
  if (from.rows() < 1) throw TooShort("empty trajectory");

  const Eigen::RowVector3d mu_from = from.colwise().mean();
  const Eigen::RowVector3d mu_to = to.colwise().mean();
  const Mat3 cov = (from.rowwise() - mu_from).transpose() * (to.rowwise() - mu_to);

  Eigen::JacobiSVD<Mat3> svd(cov, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 d = Mat3::Identity();
  d(2, 2) = (svd.matrixV() * svd.matrixU().transpose()).determinant() < 0 ? -1.0 : 1.0;
  RigidTransform out;
  out.rotation = svd.matrixV() * d * svd.matrixU().transpose();
  out.translation = mu_to.transpose() - out.rotation * mu_from.transpose();
  return out;
}

double rte(const Track3& pred_root, const Track3& gt_root, RteNormalizer normalizer) {
  if (pred_root.rows() != gt_root.rows()) {
    throw LengthMismatch("trajectories differ in length");
  }
  const Eigen::Index t = gt_root.rows();
  if (t < 2) throw TooShort("trajectory needs at least 2 frames");

  double displacement = 0;
  if (normalizer == RteNormalizer::path_length) {
    for (Eigen::Index f = 1; f < t; ++f) {
      displacement += (gt_root.row(f) - gt_root.row(f - 1)).norm();
    }
  } else {
    displacement = (gt_root.row(t - 1) - gt_root.row(0)).norm();
  }
  if (displacement < 1e-6) {
    throw ZeroDisplacement("reference trajectory moves less than 1e-6 m");
  }

  const RigidTransform a = rigid_align(pred_root, gt_root);
  double err = 0;
  for (Eigen::Index f = 0; f < t; ++f) {
    const Vec3 mapped = a.rotation * pred_root.row(f).transpose() + a.translation;
    err += (mapped - gt_root.row(f).transpose()).norm();
  }
  return 100.0 * (err / t) / displacement;
}

double jitter(const MotionSequence& seq, const BodySpec& body) {
  return motion::jerk_magnitude_track(seq, body).mean() / 10.0;
}

FootSlidingResult foot_sliding(const MotionSequence& seq, const BodySpec& body,
                               const contact::ContactOptions& opt) {
  const contact::ContactTable table = contact::detect_contacts(seq, body, opt);
  const int t = seq.frame_count();
  double acc = 0;
  long pairs = 0;
  for (size_t f = 0; f < table.foot_parts.size(); ++f) {
    for (int k = 0; k + 1 < t; ++k) {
      if (table.in_contact[f][k] && table.in_contact[f][k + 1]) {
        acc += (table.planar[f].row(k + 1) - table.planar[f].row(k)).norm();
        ++pairs;
      }
    }
  }
  FootSlidingResult out;
  out.no_contact = !table.any_contact;
  out.mm = pairs ? 1000.0 * acc / pairs : 0.0;
  return out;
}

double fs_percent(const MotionSequence& seq, const BodySpec& body,
                  const contact::ContactOptions& opt) {
  const contact::ContactTable table = contact::detect_contacts(seq, body, opt);
  const int t = seq.frame_count();
  if (t < 2) throw TooShort("need at least 2 frames");
  int sliding = 0;
  for (int k = 0; k + 1 < t; ++k) {
    double speed = 0;
    int grounded = 0;
    for (size_t f = 0; f < table.foot_parts.size(); ++f) {
      if (table.in_contact[f][k] && table.in_contact[f][k + 1]) {
        speed += (table.planar[f].row(k + 1) - table.planar[f].row(k)).norm() * seq.fps;
        ++grounded;
      }
    }
    if (grounded && speed / grounded > opt.vel_thresh) ++sliding;
  }
  return 100.0 * sliding / (t - 1);
}

namespace {

double lowest_vertex_height(const MotionSequence& seq, const BodySpec& body,
                            const std::vector<std::vector<Vec3>>& part_vertices,
                            double ground_height, int frame) {
  const Vec3 up = body.gravity_axis;
  double lowest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < body.part_count(); ++i) {
    const Mat3& rot = seq.part_rot[frame][i];
    const Vec3& trans = seq.root_trans[frame];
    if (i < static_cast<int>(part_vertices.size()) && !part_vertices[i].empty()) {
      for (const Vec3& v : part_vertices[i]) {
        lowest = std::min(lowest, (rot * v + trans).dot(up));
      }
    } else {
      lowest = std::min(lowest, (rot * body.parts[i].centroid + trans).dot(up));
    }
  }
  return lowest - ground_height;
}

}  // namespace

double floating_cm(const MotionSequence& seq, const BodySpec& body,
                   const std::vector<std::vector<Vec3>>& part_vertices,
                   double ground_height) {
  const int t = seq.frame_count();
  double acc = 0;
  for (int f = 0; f < t; ++f) {
    acc += std::max(0.0, lowest_vertex_height(seq, body, part_vertices, ground_height, f));
  }
  return 100.0 * acc / t;
}

double floor_penetration_cm(const MotionSequence& seq, const BodySpec& body,
                            const std::vector<std::vector<Vec3>>& part_vertices,
                            double ground_height) {
  const int t = seq.frame_count();
  double acc = 0;
  for (int f = 0; f < t; ++f) {
    acc += std::max(0.0, -lowest_vertex_height(seq, body, part_vertices, ground_height, f));
  }
  return 100.0 * acc / t;
}

CompositeResult composite_measure(const PlausibilityReport& a,
                                  const PlausibilityReport& b) {
  CompositeResult out;
  if (!a.rte_percent || !b.rte_percent) {
    out.reason = "RTE undefined (no reference trajectory)";
    return out;
  }
  if (*b.rte_percent == 0 || b.jitter == 0 || b.foot_sliding_mm == 0) {
    out.reason = "zero denominator in RTE, jitter or foot-sliding ratio";
    return out;
  }
  out.defined = true;
  out.value = (*a.rte_percent / *b.rte_percent) * (a.jitter / b.jitter) *
              (a.foot_sliding_mm / b.foot_sliding_mm);
  return out;
}

std::string report_to_json(const PlausibilityReport& report) {
  nlohmann::json j;
  if (report.rte_percent) {
    j["rte_percent"] = *report.rte_percent;
  } else {
    j["rte_percent"] = nullptr;
  }
  j["jitter"] = report.jitter;
  j["foot_sliding_mm"] = report.foot_sliding_mm;
  j["no_contact"] = report.no_contact;
  j["fs_percent"] = report.fs_percent;
  j["floating_cm"] = report.floating_cm;
  j["floor_penetration_cm"] = report.floor_penetration_cm;
  j["hf_flag"] = report.hf_flag;
  return j.dump(2);
}

std::string report_csv_header() {
  return "name,rte_percent,jitter,foot_sliding_mm,no_contact,fs_percent,"
         "floating_cm,floor_penetration_cm,hf_flag\n";
}

std::string report_csv_row(const std::string& name, const PlausibilityReport& r) {
  char buf[512];
  char rte_buf[40] = "";
  if (r.rte_percent) std::snprintf(rte_buf, sizeof rte_buf, "%.17g", *r.rte_percent);
  std::snprintf(buf, sizeof buf, "%s,%s,%.17g,%.17g,%d,%.17g,%.17g,%.17g,%d\n",
                name.c_str(), rte_buf, r.jitter, r.foot_sliding_mm,
                r.no_contact ? 1 : 0, r.fs_percent, r.floating_cm,
                r.floor_penetration_cm, r.hf_flag ? 1 : 0);
  return buf;
}

}  // namespace momo::metrics
