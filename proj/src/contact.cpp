#include "momo/contact.hpp"

#include "momo/errors.hpp"

namespace momo::contact {

void ground_basis(const Vec3& up, Vec3* e1, Vec3* e2) {
  const Vec3 u = up.normalized();
  Vec3 a = Vec3::UnitX() - Vec3::UnitX().dot(u) * u;
  if (a.norm() < 1e-9) a = Vec3::UnitY() - Vec3::UnitY().dot(u) * u;
  *e1 = a.normalized();
  *e2 = u.cross(*e1);
}

ContactTable detect_contacts(const MotionSequence& seq, const BodySpec& body,
                             const ContactOptions& opt) {
  ContactTable table;
  table.foot_parts = opt.foot_parts.empty() ? body_model::default_foot_parts(body)
                                            : opt.foot_parts;
  for (int f : table.foot_parts) {
    if (f < 0 || f >= body.part_count()) {
      throw BadConfig("foot part index " + std::to_string(f) + " out of range");
    }
  }

  const motion::CentroidTracks tracks = motion::part_centroids(seq, body);
  const int t = seq.frame_count();
  const Vec3 up = body.gravity_axis;
  Vec3 e1, e2;
  ground_basis(up, &e1, &e2);

  for (int foot : table.foot_parts) {
    const Track3& world = tracks.world[foot];
    Eigen::VectorXd height(t);
    Track2 planar(t, 2);
    for (int f = 0; f < t; ++f) {
      const Vec3 c = world.row(f);
      height[f] = c.dot(up) - opt.ground_height;
      planar(f, 0) = c.dot(e1);
      planar(f, 1) = c.dot(e2);
    }
    const Track dh = motion::time_derivative(height, seq.fps);
    std::vector<char> contact(t);
    for (int f = 0; f < t; ++f) {
      contact[f] = height[f] < opt.height_thresh &&
                   std::abs(dh(f, 0)) < opt.vel_thresh;
      if (contact[f]) table.any_contact = true;
    }
    table.in_contact.push_back(std::move(contact));
    table.planar.push_back(std::move(planar));
  }
  return table;
}

}  // namespace momo::contact
