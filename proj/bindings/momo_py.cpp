// Python bindings for the main operations: body construction, motion IO,
// momentum profiles, losses, plausibility metrics, spectral detection and
// synthetic oracles.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "momo/body.hpp"
#include "momo/contact.hpp"
#include "momo/errors.hpp"
#include "momo/losses.hpp"
#include "momo/mesh.hpp"
#include "momo/metrics.hpp"
#include "momo/momentum.hpp"
#include "momo/motion.hpp"
#include "momo/spectrum.hpp"
#include "momo/synth.hpp"

namespace py = pybind11;

using namespace momo;

PYBIND11_MODULE(_momo, m) {
  m.doc() = "Whole-body momentum of articulated motion: losses, metrics and "
            "spectral implausibility detection.";

  py::register_exception<Error>(m, "Error");

  // ------------------------------------------------------------- body ----
  py::class_<body_model::PartMesh>(m, "PartMesh")
      .def(py::init<>())
      .def_readwrite("vertices", &body_model::PartMesh::vertices)
      .def_readwrite("triangles", &body_model::PartMesh::triangles);
  m.def("make_box_mesh", &body_model::make_box_mesh, py::arg("half_extents"),
        py::arg("center") = Vec3::Zero());
  m.def("mesh_volume", &body_model::mesh_volume);
  m.def("mesh_centroid", &body_model::mesh_centroid);
  m.def("mesh_inertia", &body_model::mesh_inertia, py::arg("mesh"), py::arg("mass"));

  py::class_<body_model::PartProperties>(m, "PartProperties")
      .def(py::init<>())
      .def_readwrite("volume", &body_model::PartProperties::volume)
      .def_readwrite("mass", &body_model::PartProperties::mass)
      .def_readwrite("centroid", &body_model::PartProperties::centroid)
      .def_readwrite("inertia", &body_model::PartProperties::inertia);

  py::class_<body_model::BodySpec>(m, "BodySpec")
      .def(py::init<>())
      .def_readwrite("parts", &body_model::BodySpec::parts)
      .def_readwrite("parents", &body_model::BodySpec::parents)
      .def_readwrite("gravity_axis", &body_model::BodySpec::gravity_axis)
      .def("part_count", &body_model::BodySpec::part_count)
      .def("total_mass", &body_model::BodySpec::total_mass)
      .def("com", &body_model::BodySpec::com);

  m.def("build_body_spec", &body_model::build_body_spec, py::arg("meshes"),
        py::arg("parents"), py::arg("gravity_axis") = Vec3(0, 0, 1));
  m.def("default_foot_parts", &body_model::default_foot_parts);
  m.def("load_body_json", &body_model::load_body_json);
  m.def("parse_body_json", &body_model::parse_body_json, py::arg("text"),
        py::arg("origin") = "<string>");
  m.def("body_to_json", &body_model::body_to_json);
  m.def("save_body_json", &body_model::save_body_json);

  // ----------------------------------------------------------- motion ----
  py::class_<motion::MotionSequence>(m, "MotionSequence")
      .def(py::init<>())
      .def_readwrite("fps", &motion::MotionSequence::fps)
      .def_readwrite("root_rot", &motion::MotionSequence::root_rot)
      .def_readwrite("root_trans", &motion::MotionSequence::root_trans)
      .def_readwrite("part_rot", &motion::MotionSequence::part_rot)
      .def("frame_count", &motion::MotionSequence::frame_count)
      .def("part_count", &motion::MotionSequence::part_count);

  py::class_<motion::CentroidTracks>(m, "CentroidTracks")
      .def_readonly("world", &motion::CentroidTracks::world)
      .def_readonly("body", &motion::CentroidTracks::body)
      .def_readonly("com", &motion::CentroidTracks::com);

  m.def("validate_sequence", &motion::validate_sequence);
  m.def("part_centroids", &motion::part_centroids);
  m.def("time_derivative", &motion::time_derivative, py::arg("track"), py::arg("fps"));
  m.def("angular_velocity", &motion::angular_velocity, py::arg("rotations"),
        py::arg("fps"));
  m.def("jerk_magnitude_track", &motion::jerk_magnitude_track);
  m.def("parse_motion_json", &motion::parse_motion_json, py::arg("text"),
        py::arg("origin") = "<string>");
  m.def("load_motion_json", &motion::load_motion_json);
  m.def("motion_to_json", &motion::motion_to_json);
  m.def("save_motion_json", &motion::save_motion_json);

  // --------------------------------------------------------- momentum ----
  py::class_<momentum::MomentumProfile>(m, "MomentumProfile")
      .def(py::init<>())
      .def_readwrite("fps", &momentum::MomentumProfile::fps)
      .def_readwrite("linear", &momentum::MomentumProfile::linear)
      .def_readwrite("angular", &momentum::MomentumProfile::angular)
      .def_readwrite("transfer", &momentum::MomentumProfile::transfer)
      .def("frame_count", &momentum::MomentumProfile::frame_count);

  m.def("rotated_inertia", &momentum::rotated_inertia);
  m.def("linear_momentum", &momentum::linear_momentum);
  m.def("angular_momentum", &momentum::angular_momentum);
  m.def("transfer_term", &momentum::transfer_term);
  m.def("momentum_profile", &momentum::momentum_profile);
  m.def("momentum_to_csv", &momentum::momentum_to_csv);

  py::class_<momentum::SwingTwist>(m, "SwingTwist")
      .def_readonly("swing", &momentum::SwingTwist::swing)
      .def_readonly("twist", &momentum::SwingTwist::twist)
      .def_readonly("degenerate", &momentum::SwingTwist::degenerate);
  m.def("swing_twist", &momentum::swing_twist, py::arg("r"), py::arg("axis"));
  m.def("geodesic_angle", &momentum::geodesic_angle);

  // --------------------------------------------------------- spectrum ----
  m.def("dct", &spectrum::dct);
  m.def("dct_columns", &spectrum::dct_columns);
  m.def("dct_bin_frequency", &spectrum::dct_bin_frequency, py::arg("index_1based"),
        py::arg("frames"), py::arg("fps"));
  m.def("k0_for_cutoff", &spectrum::k0_for_cutoff, py::arg("frames"), py::arg("fps"),
        py::arg("cutoff_hz"));
  m.def("high_freq_score", &spectrum::high_freq_score, py::arg("channel"),
        py::arg("k0"));

  py::class_<spectrum::DetectorCalibration>(m, "DetectorCalibration")
      .def(py::init<>())
      .def_readwrite("mu_lm", &spectrum::DetectorCalibration::mu_lm)
      .def_readwrite("sigma_lm", &spectrum::DetectorCalibration::sigma_lm)
      .def_readwrite("mu_am", &spectrum::DetectorCalibration::mu_am)
      .def_readwrite("sigma_am", &spectrum::DetectorCalibration::sigma_am)
      .def_readwrite("k", &spectrum::DetectorCalibration::k)
      .def_readwrite("k0", &spectrum::DetectorCalibration::k0)
      .def_readwrite("frames", &spectrum::DetectorCalibration::frames)
      .def_readwrite("fps", &spectrum::DetectorCalibration::fps);
  m.def("calibrate_detector", &spectrum::calibrate_detector, py::arg("corpus"),
        py::arg("k") = 20.0, py::arg("k0") = 1);

  py::class_<spectrum::DetectResult>(m, "DetectResult")
      .def_readonly("flag", &spectrum::DetectResult::flag)
      .def_readonly("h_lm", &spectrum::DetectResult::h_lm)
      .def_readonly("h_am", &spectrum::DetectResult::h_am);
  m.def("is_implausible", &spectrum::is_implausible);
  m.def("calibration_to_json", &spectrum::calibration_to_json);
  m.def("parse_calibration_json", &spectrum::parse_calibration_json, py::arg("text"),
        py::arg("origin") = "<string>");

  py::class_<spectrum::DampingBin>(m, "DampingBin")
      .def_readonly("k", &spectrum::DampingBin::k)
      .def_readonly("omega", &spectrum::DampingBin::omega)
      .def_readonly("ratio", &spectrum::DampingBin::ratio);
  m.def("spectral_damping_check", &spectrum::spectral_damping_check,
        py::arg("torque"), py::arg("mom"), py::arg("fps"));

  // ---------------------------------------------------------- contact ----
  py::class_<contact::ContactOptions>(m, "ContactOptions")
      .def(py::init<>())
      .def_readwrite("ground_height", &contact::ContactOptions::ground_height)
      .def_readwrite("height_thresh", &contact::ContactOptions::height_thresh)
      .def_readwrite("vel_thresh", &contact::ContactOptions::vel_thresh)
      .def_readwrite("foot_parts", &contact::ContactOptions::foot_parts);

  // ----------------------------------------------------------- losses ----
  py::enum_<losses::NormMode>(m, "NormMode")
      .value("stacked", losses::NormMode::stacked)
      .value("per_frame_mean", losses::NormMode::per_frame_mean);

  py::class_<losses::LossWeights>(m, "LossWeights")
      .def(py::init<>())
      .def_readwrite("lambda_amo", &losses::LossWeights::lambda_amo)
      .def_readwrite("lambda_lmo", &losses::LossWeights::lambda_lmo)
      .def_readwrite("lambda_s", &losses::LossWeights::lambda_s);

  py::class_<losses::LossOptions>(m, "LossOptions")
      .def(py::init<>())
      .def_readwrite("norm", &losses::LossOptions::norm)
      .def_readwrite("weights", &losses::LossOptions::weights)
      .def_readwrite("mass_scale", &losses::LossOptions::mass_scale)
      .def_readwrite("contact", &losses::LossOptions::contact)
      .def_readwrite("gravity", &losses::LossOptions::gravity);

  m.def("momentum_deltas", &losses::momentum_deltas);
  m.def("loss_amo", &losses::loss_amo, py::arg("pred"), py::arg("gt"),
        py::arg("norm") = losses::NormMode::stacked);
  m.def("loss_lmo", &losses::loss_lmo, py::arg("pred"), py::arg("gt"),
        py::arg("norm") = losses::NormMode::stacked);
  m.def("loss_spectrum", &losses::loss_spectrum);
  m.def("loss_tmo", &losses::loss_tmo, py::arg("pred"), py::arg("gt"),
        py::arg("weights"), py::arg("norm") = losses::NormMode::stacked);
  m.def("loss_transfer", &losses::loss_transfer, py::arg("pred"), py::arg("gt"),
        py::arg("body"), py::arg("norm") = losses::NormMode::stacked);
  m.def("loss_swing", &losses::loss_swing, py::arg("seq"),
        py::arg("up") = Vec3(0, 0, 1));
  m.def("loss_joint_velocity", &losses::loss_joint_velocity, py::arg("pred"),
        py::arg("gt"), py::arg("body"), py::arg("norm") = losses::NormMode::stacked);
  m.def("loss_jitter", &losses::loss_jitter);
  m.def("loss_foot_sliding", &losses::loss_foot_sliding, py::arg("seq"),
        py::arg("body"), py::arg("opt") = contact::ContactOptions{});
  m.def("geman_mcclure", &losses::geman_mcclure);
  m.def("loss_humos",
        py::overload_cast<const Track2&, const Track2&>(&losses::loss_humos),
        py::arg("zmp"), py::arg("cop"));
  m.def("loss_humos",
        py::overload_cast<const Track2&, const Track2&, const std::vector<char>&>(
            &losses::loss_humos),
        py::arg("zmp"), py::arg("cop"), py::arg("valid"));

  py::class_<losses::ZmpCop>(m, "ZmpCop")
      .def_readonly("zmp", &losses::ZmpCop::zmp)
      .def_readonly("cop", &losses::ZmpCop::cop)
      .def_readonly("valid", &losses::ZmpCop::valid);
  m.def("compute_zmp_cop", &losses::compute_zmp_cop, py::arg("seq"), py::arg("body"),
        py::arg("opt") = contact::ContactOptions{}, py::arg("gravity") = 9.80665);

  py::class_<losses::LossReport>(m, "LossReport")
      .def_readonly("l_amo", &losses::LossReport::l_amo)
      .def_readonly("l_lmo", &losses::LossReport::l_lmo)
      .def_readonly("l_s", &losses::LossReport::l_s)
      .def_readonly("l_tmo", &losses::LossReport::l_tmo)
      .def_readonly("l_sw", &losses::LossReport::l_sw)
      .def_readonly("l_tf", &losses::LossReport::l_tf)
      .def_readonly("l_jv", &losses::LossReport::l_jv)
      .def_readonly("l_jitter", &losses::LossReport::l_jitter)
      .def_readonly("l_fs", &losses::LossReport::l_fs)
      .def_readonly("l_humos", &losses::LossReport::l_humos);
  m.def("compare_losses", &losses::compare_losses, py::arg("pred"), py::arg("gt"),
        py::arg("body"), py::arg("opt") = losses::LossOptions{});
  m.def("loss_report_to_json", &losses::loss_report_to_json);

  // ---------------------------------------------------------- metrics ----
  py::class_<metrics::RigidTransform>(m, "RigidTransform")
      .def_readonly("rotation", &metrics::RigidTransform::rotation)
      .def_readonly("translation", &metrics::RigidTransform::translation);
  m.def("rigid_align", &metrics::rigid_align, py::arg("from_track"), py::arg("to"));

  py::enum_<metrics::RteNormalizer>(m, "RteNormalizer")
      .value("path_length", metrics::RteNormalizer::path_length)
      .value("net_displacement", metrics::RteNormalizer::net_displacement);
  m.def("rte", &metrics::rte, py::arg("pred_root"), py::arg("gt_root"),
        py::arg("normalizer") = metrics::RteNormalizer::path_length);
  m.def("jitter", &metrics::jitter);

  py::class_<metrics::FootSlidingResult>(m, "FootSlidingResult")
      .def_readonly("mm", &metrics::FootSlidingResult::mm)
      .def_readonly("no_contact", &metrics::FootSlidingResult::no_contact);
  m.def("foot_sliding", &metrics::foot_sliding, py::arg("seq"), py::arg("body"),
        py::arg("opt") = contact::ContactOptions{});
  m.def("fs_percent", &metrics::fs_percent, py::arg("seq"), py::arg("body"),
        py::arg("opt") = contact::ContactOptions{});
  m.def("floating_cm", &metrics::floating_cm, py::arg("seq"), py::arg("body"),
        py::arg("part_vertices"), py::arg("ground_height") = 0.0);
  m.def("floor_penetration_cm", &metrics::floor_penetration_cm, py::arg("seq"),
        py::arg("body"), py::arg("part_vertices"), py::arg("ground_height") = 0.0);

  py::class_<metrics::PlausibilityReport>(m, "PlausibilityReport")
      .def(py::init<>())
      .def_readwrite("rte_percent", &metrics::PlausibilityReport::rte_percent)
      .def_readwrite("jitter", &metrics::PlausibilityReport::jitter)
      .def_readwrite("foot_sliding_mm", &metrics::PlausibilityReport::foot_sliding_mm)
      .def_readwrite("no_contact", &metrics::PlausibilityReport::no_contact)
      .def_readwrite("fs_percent", &metrics::PlausibilityReport::fs_percent)
      .def_readwrite("floating_cm", &metrics::PlausibilityReport::floating_cm)
      .def_readwrite("floor_penetration_cm",
                     &metrics::PlausibilityReport::floor_penetration_cm)
      .def_readwrite("hf_flag", &metrics::PlausibilityReport::hf_flag);

  py::class_<metrics::CompositeResult>(m, "CompositeResult")
      .def_readonly("defined", &metrics::CompositeResult::defined)
      .def_readonly("value", &metrics::CompositeResult::value)
      .def_readonly("reason", &metrics::CompositeResult::reason);
  m.def("composite_measure", &metrics::composite_measure, py::arg("a"), py::arg("b"));
  m.def("report_to_json", &metrics::report_to_json);

  // ------------------------------------------------------------ synth ----
  py::enum_<synth::SynthKind>(m, "SynthKind")
      .value("static_pose", synth::SynthKind::static_pose)
      .value("uniform_translation", synth::SynthKind::uniform_translation)
      .value("rigid_spin", synth::SynthKind::rigid_spin)
      .value("ballistic_tumble", synth::SynthKind::ballistic_tumble)
      .value("polynomial_root", synth::SynthKind::polynomial_root)
      .value("counter_rotating_pair", synth::SynthKind::counter_rotating_pair);

  py::class_<synth::SynthConfig>(m, "SynthConfig")
      .def(py::init<>())
      .def_readwrite("kind", &synth::SynthConfig::kind)
      .def_readwrite("fps", &synth::SynthConfig::fps)
      .def_readwrite("duration_s", &synth::SynthConfig::duration_s)
      .def_readwrite("seed", &synth::SynthConfig::seed)
      .def_readwrite("velocity", &synth::SynthConfig::velocity)
      .def_readwrite("spin_axis", &synth::SynthConfig::spin_axis)
      .def_readwrite("spin_rate", &synth::SynthConfig::spin_rate)
      .def_readwrite("initial_velocity", &synth::SynthConfig::initial_velocity)
      .def_readwrite("gravity", &synth::SynthConfig::gravity)
      .def_readwrite("poly_coeffs", &synth::SynthConfig::poly_coeffs);

  py::class_<synth::SynthResult>(m, "SynthResult")
      .def_readonly("seq", &synth::SynthResult::seq)
      .def_readonly("lmo_true", &synth::SynthResult::lmo_true)
      .def_readonly("amo_true", &synth::SynthResult::amo_true);

  m.def("generate", &synth::generate, py::arg("cfg"), py::arg("body"));
  m.def("randomized_config", &synth::randomized_config, py::arg("kind"),
        py::arg("fps"), py::arg("duration_s"), py::arg("seed"));
  m.def("inject_noise", &synth::inject_noise, py::arg("seq"), py::arg("source"),
        py::arg("alpha"));
  m.def("inject_hf_corruption", &synth::inject_hf_corruption, py::arg("seq"),
        py::arg("amplitude"), py::arg("frequency_hz"));
  m.def("composite_inertia", &synth::composite_inertia);
  m.def("make_biped_body", &synth::make_biped_body);
  m.def("make_box_body", &synth::make_box_body, py::arg("parts"));
  m.def("make_dumbbell_body", &synth::make_dumbbell_body,
        py::arg("separation") = 0.6);
}
