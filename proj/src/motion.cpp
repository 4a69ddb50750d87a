#include "momo/motion.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "momo/errors.hpp"

namespace momo::motion {

using nlohmann::json;

void validate_sequence(const MotionSequence& seq) {
  if (!(seq.fps > 0)) throw BadConfig("fps must be positive");
  const int t = seq.frame_count();
  if (t < 2) throw TooShort("sequence has " + std::to_string(t) + " frames, need at least 2");
  if (static_cast<int>(seq.root_rot.size()) != t ||
      static_cast<int>(seq.part_rot.size()) != t) {
    throw ShapeMismatch("frame arrays have inconsistent lengths");
  }
  const int p = seq.part_count();
  for (int f = 0; f < t; ++f) {
    if (static_cast<int>(seq.part_rot[f].size()) != p) {
      throw PartCountMismatch("frame " + std::to_string(f) + " has " +
                              std::to_string(seq.part_rot[f].size()) +
                              " part rotations, expected " + std::to_string(p));
    }
    if (!is_rotation(seq.root_rot[f])) {
      throw NonOrthonormal("root rotation at frame " + std::to_string(f));
    }
    for (int i = 0; i < p; ++i) {
      if (!is_rotation(seq.part_rot[f][i])) {
        throw NonOrthonormal("part " + std::to_string(i) + " rotation at frame " +
                             std::to_string(f));
      }
    }
  }
}

CentroidTracks part_centroids(const MotionSequence& seq, const BodySpec& body) {
  const int t = seq.frame_count();
  const int p = seq.part_count();
  if (p != body.part_count()) {
    throw PartCountMismatch("sequence has " + std::to_string(p) +
                            " parts, body has " + std::to_string(body.part_count()));
  }
  CentroidTracks out;
  out.world.assign(p, Track3(t, 3));
  out.body.assign(p, Track3(t, 3));
  out.com.resize(t, 3);

  const double total = body.total_mass();
  for (int f = 0; f < t; ++f) {
    Vec3 com = Vec3::Zero();
    for (int i = 0; i < p; ++i) {
      const Vec3 c = seq.part_rot[f][i] * body.parts[i].centroid + seq.root_trans[f];
      out.world[i].row(f) = c;
      com += body.parts[i].mass * c;
    }
    com /= total;
    out.com.row(f) = com;
    for (int i = 0; i < p; ++i) {
      out.body[i].row(f) = out.world[i].row(f) - com.transpose();
    }
  }
  return out;
}

Track time_derivative(const Track& x, double fps) {
  const Eigen::Index t = x.rows();
  if (t < 2) throw TooShort("need at least 2 frames to differentiate");
  Track d(t, x.cols());
  if (t == 2) {
    d.row(0) = (x.row(1) - x.row(0)) * fps;
    d.row(1) = d.row(0);
    return d;
  }
  const double half = 0.5 * fps;
  d.row(0) = (-3.0 * x.row(0) + 4.0 * x.row(1) - x.row(2)) * half;
  for (Eigen::Index f = 1; f + 1 < t; ++f) {
    d.row(f) = (x.row(f + 1) - x.row(f - 1)) * half;
  }
  d.row(t - 1) = (3.0 * x.row(t - 1) - 4.0 * x.row(t - 2) + x.row(t - 3)) * half;
  return d;
}

std::vector<Vec3> angular_velocity(const std::vector<Mat3>& rotations, double fps) {
  const int t = static_cast<int>(rotations.size());
  if (t < 2) throw TooShort("need at least 2 frames for angular velocity");
  Track flat(t, 9);
  for (int f = 0; f < t; ++f) {
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) flat(f, 3 * r + c) = rotations[f](r, c);
  }
  const Track dflat = time_derivative(flat, fps);
  std::vector<Vec3> omega(t);
  for (int f = 0; f < t; ++f) {
    Mat3 rdot;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) rdot(r, c) = dflat(f, 3 * r + c);
    omega[f] = unskew(rdot * rotations[f].transpose());
  }
  return omega;
}

Eigen::VectorXd jerk_magnitude_track(const MotionSequence& seq, const BodySpec& body) {
  const int t = seq.frame_count();
  if (t < 4) throw TooShort("jerk needs at least 4 frames");
  const CentroidTracks tracks = part_centroids(seq, body);
  const int p = seq.part_count();
  const double fps = seq.fps;

  Eigen::VectorXd out = Eigen::VectorXd::Zero(t);
  for (int i = 0; i < p; ++i) {
    const Track jerk = time_derivative(
        time_derivative(time_derivative(tracks.world[i], fps), fps), fps);
    for (int f = 0; f < t; ++f) out[f] += jerk.row(f).norm();
  }
  out /= p;

  if (t >= 7) {
    // rows [3, t-4] are untouched by one-sided stencils across all passes
    for (int f = 0; f < 3; ++f) out[f] = out[3];
    for (int f = t - 3; f < t; ++f) out[f] = out[t - 4];
  }
  return out;
}

namespace {

Mat3 rot_from_flat9(const json& a, const std::string& what) {
  if (!a.is_array() || a.size() != 9) {
    throw ParseError(what + " must be 9 row-major numbers");
  }
  Mat3 m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = a[3 * r + c].get<double>();
  return m;
}

Mat3 rot_from_quat(const json& a, const std::string& what) {
  if (!a.is_array() || a.size() != 4) {
    throw ParseError(what + " must be 4 numbers (w,x,y,z)");
  }
  Eigen::Quaterniond q(a[0].get<double>(), a[1].get<double>(),
                       a[2].get<double>(), a[3].get<double>());
  if (q.norm() < 1e-12) throw ParseError(what + ": zero quaternion");
  return q.normalized().toRotationMatrix();
}

}  // namespace

MotionSequence parse_motion_json(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  try {
    MotionSequence seq;
    seq.fps = j.at("fps").get<double>();
    const int p = j.at("parts").get<int>();
    if (p < 1) throw ParseError(origin + ": parts must be >= 1");
    const auto& frames = j.at("frames");
    if (!frames.is_array()) throw ParseError(origin + ": frames must be an array");
    for (size_t f = 0; f < frames.size(); ++f) {
      const auto& fr = frames[f];
      const std::string where = origin + ": frame " + std::to_string(f);
      if (fr.contains("R")) {
        seq.root_rot.push_back(rot_from_flat9(fr["R"], where + " R"));
      } else if (fr.contains("q")) {
        seq.root_rot.push_back(rot_from_quat(fr["q"], where + " q"));
      } else {
        throw ParseError(where + ": missing R or q");
      }
      const auto& tv = fr.at("T");
      if (!tv.is_array() || tv.size() != 3) throw ParseError(where + ": T must be 3 numbers");
      seq.root_trans.emplace_back(tv[0].get<double>(), tv[1].get<double>(),
                                  tv[2].get<double>());
      std::vector<Mat3> parts;
      parts.reserve(p);
      if (fr.contains("theta")) {
        const auto& th = fr["theta"];
        if (!th.is_array() || static_cast<int>(th.size()) != 9 * p) {
          throw ParseError(where + ": theta must hold " + std::to_string(9 * p) + " numbers");
        }
        for (int i = 0; i < p; ++i) {
          Mat3 m;
          for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m(r, c) = th[9 * i + 3 * r + c].get<double>();
          parts.push_back(m);
        }
      } else if (fr.contains("theta_q")) {
        const auto& th = fr["theta_q"];
        if (!th.is_array() || static_cast<int>(th.size()) != 4 * p) {
          throw ParseError(where + ": theta_q must hold " + std::to_string(4 * p) + " numbers");
        }
        for (int i = 0; i < p; ++i) {
          json q = json::array({th[4 * i], th[4 * i + 1], th[4 * i + 2], th[4 * i + 3]});
          parts.push_back(rot_from_quat(q, where + " theta_q[" + std::to_string(i) + "]"));
        }
      } else {
        throw ParseError(where + ": missing theta or theta_q");
      }
      seq.part_rot.push_back(std::move(parts));
    }
    validate_sequence(seq);
    return seq;
  } catch (const json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

MotionSequence load_motion_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open motion file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_motion_json(ss.str(), path);
}

std::string motion_to_json(const MotionSequence& seq) {
  json j;
  j["fps"] = seq.fps;
  j["parts"] = seq.part_count();
  json frames = json::array();
  for (int f = 0; f < seq.frame_count(); ++f) {
    json fr;
    json rr = json::array();
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) rr.push_back(seq.root_rot[f](r, c));
    fr["R"] = std::move(rr);
    fr["T"] = json::array({seq.root_trans[f].x(), seq.root_trans[f].y(),
                           seq.root_trans[f].z()});
    json th = json::array();
    for (const auto& m : seq.part_rot[f]) {
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) th.push_back(m(r, c));
    }
    fr["theta"] = std::move(th);
    frames.push_back(std::move(fr));
  }
  j["frames"] = std::move(frames);
  return j.dump();
}

void save_motion_json(const std::string& path, const MotionSequence& seq) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open motion file for writing: " + path);
  out << motion_to_json(seq) << '\n';
}

}  // namespace momo::motion
