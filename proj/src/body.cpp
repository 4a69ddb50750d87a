#include "momo/body.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "momo/errors.hpp"

namespace momo::body_model {

using nlohmann::json;

double BodySpec::total_mass() const {
  double m = 0;
  for (const auto& p : parts) m += p.mass;
  return m;
}

Vec3 BodySpec::com() const {
  Vec3 c = Vec3::Zero();
  double m = 0;
  for (const auto& p : parts) {
    c += p.mass * p.centroid;
    m += p.mass;
  }
  return c / m;
}

void validate_parents(const std::vector<int>& parents) {
  const int n = static_cast<int>(parents.size());
  for (int i = 0; i < n; ++i) {
    if (parents[i] < -1 || parents[i] >= n) {
      throw CyclicParents("parent index " + std::to_string(parents[i]) +
                          " of part " + std::to_string(i) + " out of range");
    }
    if (parents[i] == i) {
      throw CyclicParents("part " + std::to_string(i) + " is its own parent");
    }
  }
  // walk each chain to the root; a chain longer than n parts must loop
  for (int i = 0; i < n; ++i) {
    int cur = i;
    for (int steps = 0; cur != -1; ++steps) {
      if (steps > n) {
        throw CyclicParents("cycle through part " + std::to_string(i));
      }
      cur = parents[cur];
    }
  }
}

BodySpec build_body_spec(const std::vector<PartMesh>& meshes,
                         const std::vector<int>& parents,
                         const Vec3& gravity_axis) {
  if (meshes.size() != parents.size()) {
    throw PartCountMismatch("got " + std::to_string(meshes.size()) +
                            " meshes but " + std::to_string(parents.size()) +
                            " parent entries");
  }
  if (meshes.empty()) throw PartCountMismatch("need at least one part");
  validate_parents(parents);

  BodySpec body;
  body.parents = parents;
  body.gravity_axis = gravity_axis.normalized();
  body.parts.resize(meshes.size());

  double total_volume = 0;
  for (size_t i = 0; i < meshes.size(); ++i) {
    auto& p = body.parts[i];
    p.volume = mesh_volume(meshes[i]);
    p.centroid = mesh_centroid(meshes[i]);
    total_volume += p.volume;
  }
  // uniform density: normalized mass is the volume fraction
  for (size_t i = 0; i < meshes.size(); ++i) {
    auto& p = body.parts[i];
    p.mass = p.volume / total_volume;
    p.inertia = mesh_inertia(meshes[i], p.mass);
  }
  return body;
}

std::vector<int> leaf_parts(const BodySpec& body) {
  const int n = body.part_count();
  std::vector<char> has_child(n, 0);
  for (int i = 0; i < n; ++i) {
    if (body.parents[i] >= 0) has_child[body.parents[i]] = 1;
  }
  std::vector<int> leaves;
  for (int i = 0; i < n; ++i) {
    if (!has_child[i]) leaves.push_back(i);
  }
  return leaves;
}

std::vector<int> default_foot_parts(const BodySpec& body) {
  std::vector<int> cand = leaf_parts(body);
  if (cand.size() < 2) {
    cand.resize(body.part_count());
    for (int i = 0; i < body.part_count(); ++i) cand[i] = i;
  }
  const Vec3 up = body.gravity_axis;
  std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
    return body.parts[a].centroid.dot(up) < body.parts[b].centroid.dot(up);
  });
  if (cand.size() > 2) cand.resize(2);
  std::sort(cand.begin(), cand.end());
  return cand;
}

namespace {

Vec3 parse_vec3(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3) {
    throw ParseError(what + " must be an array of 3 numbers");
  }
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

Mat3 parse_mat3(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 9) {
    throw ParseError(what + " must be a row-major array of 9 numbers");
  }
  Mat3 m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = j[r * 3 + c].get<double>();
  return m;
}

json vec3_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

json mat3_json(const Mat3& m) {
  json a = json::array();
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a.push_back(m(r, c));
  return a;
}

}  // namespace

BodySpec parse_body_json(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  try {
    BodySpec body;
    if (!j.contains("parts") || !j["parts"].is_array() || j["parts"].empty()) {
      throw ParseError("missing or empty 'parts' array");
    }
    for (const auto& pj : j["parts"]) {
      PartProperties p;
      p.mass = pj.at("mass").get<double>();
      p.volume = p.mass;  // volume is not serialized; density stays uniform
      p.centroid = parse_vec3(pj.at("centroid"), "centroid");
      p.inertia = parse_mat3(pj.at("inertia"), "inertia");
      body.parts.push_back(p);
    }
    body.parents = j.at("parents").get<std::vector<int>>();
    if (body.parents.size() != body.parts.size()) {
      throw PartCountMismatch(
          "parents has " + std::to_string(body.parents.size()) +
          " entries for " + std::to_string(body.parts.size()) + " parts");
    }
    validate_parents(body.parents);
    if (j.contains("gravity_axis")) {
      body.gravity_axis = parse_vec3(j["gravity_axis"], "gravity_axis").normalized();
    }
    return body;
  } catch (const json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

BodySpec load_body_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open body file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_body_json(ss.str(), path);
}

std::string body_to_json(const BodySpec& body) {
  json j;
  j["parts"] = json::array();
  for (const auto& p : body.parts) {
    json pj;
    pj["mass"] = p.mass;
    pj["centroid"] = vec3_json(p.centroid);
    pj["inertia"] = mat3_json(p.inertia);
    j["parts"].push_back(pj);
  }
  j["parents"] = body.parents;
  j["gravity_axis"] = vec3_json(body.gravity_axis);
  return j.dump(2);
}

void save_body_json(const std::string& path, const BodySpec& body) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open body file for writing: " + path);
  out << body_to_json(body) << '\n';
}

}  // namespace momo::body_model
