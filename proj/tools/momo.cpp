// Batch front-end: corpus analysis, loss comparison, detector calibration,
// implausibility detection and synthetic-corpus generation.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 internal error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "momo/batch.hpp"
#include "momo/body.hpp"
#include "momo/contact.hpp"
#include "momo/errors.hpp"
#include "momo/log.hpp"
#include "momo/losses.hpp"
#include "momo/metrics.hpp"
#include "momo/momentum.hpp"
#include "momo/motion.hpp"
#include "momo/spectrum.hpp"
#include "momo/synth.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kData = 2;
constexpr int kInternal = 3;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw momo::ParseError("cannot write " + path.string());
  out << text;
}

bool is_meta_file(const std::string& name) {
  static const std::string suffix = ".meta.json";
  return name.size() > suffix.size() &&
         name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Motion files from a mix of files and directories, sorted by filename so
// batch output is independent of directory iteration order.
std::vector<fs::path> gather_motion_files(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const auto& raw : inputs) {
    fs::path p(raw);
    if (fs::is_directory(p)) {
      for (const auto& entry : fs::directory_iterator(p)) {
        if (!entry.is_regular_file()) continue;
        const fs::path f = entry.path();
        if (f.extension() != ".json") continue;
        const std::string name = f.filename().string();
        if (name == "body.json" || name == "calibration.json") continue;
        if (is_meta_file(name)) continue;
        files.push_back(f);
      }
    } else if (fs::is_regular_file(p)) {
      files.push_back(p);
    } else {
      throw momo::ParseError("no such input: " + raw);
    }
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    const std::string an = a.filename().string(), bn = b.filename().string();
    return an != bn ? an < bn : a.string() < b.string();
  });
  return files;
}

// Shared tuning knobs; every one of these can also come from the flat
// key=value file passed via --config (flags win).
struct Tuning {
  std::string body_path;
  std::string out_dir = ".";
  std::vector<double> weights{1.0, 1.0, 1.0};
  double k0_hz = 5.0;
  double band_k = 20.0;
  double contact_height_m = 0.03;
  double contact_vel_ms = 0.10;
  int jobs = 1;
  uint64_t seed = 0;
  std::string norm = "stacked";
  double mass_scale = 1.0;

  momo::contact::ContactOptions contact() const {
    momo::contact::ContactOptions opt;
    opt.height_thresh = contact_height_m;
    opt.vel_thresh = contact_vel_ms;
    return opt;
  }
  momo::losses::LossOptions loss_options() const {
    momo::losses::LossOptions opt;
    opt.norm = norm == "per_frame_mean" ? momo::losses::NormMode::per_frame_mean
                                        : momo::losses::NormMode::stacked;
    opt.weights = {weights[0], weights[1], weights[2]};
    opt.mass_scale = mass_scale;
    opt.contact = contact();
    return opt;
  }
};

// Missing required flags on otherwise-valid commands are usage errors, not
// data errors; this separates them from momo::Error in the exit-code mapping.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

momo::body_model::BodySpec require_body(const Tuning& t) {
  if (t.body_path.empty()) throw UsageError("this command requires --body");
  return momo::body_model::load_body_json(t.body_path);
}

int report_file_errors(const std::vector<std::pair<std::string, std::string>>& errors) {
  for (const auto& [name, what] : errors) {
    std::cerr << "error: " << name << ": " << what << "\n";
  }
  if (!errors.empty()) {
    std::cerr << errors.size() << " file(s) failed\n";
    return kData;
  }
  return kOk;
}

momo::metrics::PlausibilityReport parse_report_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw momo::ParseError("cannot open report: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  momo::metrics::PlausibilityReport rep;
  try {
    json j = json::parse(ss.str());
    if (j.contains("rte_percent") && !j["rte_percent"].is_null()) {
      rep.rte_percent = j["rte_percent"].get<double>();
    }
    rep.jitter = j.value("jitter", 0.0);
    rep.foot_sliding_mm = j.value("foot_sliding_mm", 0.0);
    rep.no_contact = j.value("no_contact", false);
    rep.fs_percent = j.value("fs_percent", 0.0);
    rep.floating_cm = j.value("floating_cm", 0.0);
    rep.floor_penetration_cm = j.value("floor_penetration_cm", 0.0);
    rep.hf_flag = j.value("hf_flag", false);
  } catch (const json::exception& e) {
    throw momo::ParseError(path + ": " + e.what());
  }
  return rep;
}

// ---------------------------------------------------------------- analyze --

int run_analyze(const std::vector<std::string>& inputs, const std::string& cal_path,
                const Tuning& t) {
  const auto body = require_body(t);
  const auto files = gather_motion_files(inputs);
  if (files.empty()) {
    std::cerr << "no sequences found\n";
    return kData;
  }
  std::optional<momo::spectrum::DetectorCalibration> cal;
  if (!cal_path.empty()) cal = momo::spectrum::load_calibration_json(cal_path);
  const auto copt = t.contact();

  struct Item {
    std::string name, error, momentum_csv, report_json, row;
    momo::metrics::PlausibilityReport rep;
    bool ok = false;
  };
  const auto items = momo::batch::parallel_map<Item>(
      static_cast<int>(files.size()), t.jobs, [&](int i) {
        Item it;
        it.name = files[i].stem().string();
        try {
          const auto seq = momo::motion::load_motion_json(files[i].string());
          const auto prof = momo::momentum::momentum_profile(seq, body);
          it.momentum_csv = momo::momentum::momentum_to_csv(prof);
          momo::metrics::PlausibilityReport rep;
          rep.jitter = momo::metrics::jitter(seq, body);
          const auto fsr = momo::metrics::foot_sliding(seq, body, copt);
          rep.foot_sliding_mm = fsr.mm;
          rep.no_contact = fsr.no_contact;
          rep.fs_percent = momo::metrics::fs_percent(seq, body, copt);
          const std::vector<std::vector<momo::Vec3>> verts(body.part_count());
          rep.floating_cm =
              momo::metrics::floating_cm(seq, body, verts, copt.ground_height);
          rep.floor_penetration_cm = momo::metrics::floor_penetration_cm(
              seq, body, verts, copt.ground_height);
          if (cal) rep.hf_flag = momo::spectrum::is_implausible(prof, *cal).flag;
          it.rep = rep;
          it.report_json = momo::metrics::report_to_json(rep);
          it.row = momo::metrics::report_csv_row(it.name, rep);
          it.ok = true;
        } catch (const momo::Error& e) {
          it.error = e.what();
        }
        return it;
      });

  fs::create_directories(t.out_dir);
  std::string agg = momo::metrics::report_csv_header();
  int n = 0;
  double jit = 0, fsmm = 0, nc = 0, fsp = 0, flo = 0, pen = 0, hf = 0;
  std::vector<std::pair<std::string, std::string>> errors;
  for (const auto& it : items) {
    if (!it.ok) {
      errors.emplace_back(it.name, it.error);
      continue;
    }
    write_text(fs::path(t.out_dir) / (it.name + "_momentum.csv"), it.momentum_csv);
    write_text(fs::path(t.out_dir) / (it.name + "_report.json"), it.report_json);
    agg += it.row;
    ++n;
    jit += it.rep.jitter;
    fsmm += it.rep.foot_sliding_mm;
    nc += it.rep.no_contact ? 1 : 0;
    fsp += it.rep.fs_percent;
    flo += it.rep.floating_cm;
    pen += it.rep.floor_penetration_cm;
    hf += it.rep.hf_flag ? 1 : 0;
  }
  if (n > 0) {
    agg += "mean,," + fmt(jit / n) + "," + fmt(fsmm / n) + "," + fmt(nc / n) + "," +
           fmt(fsp / n) + "," + fmt(flo / n) + "," + fmt(pen / n) + "," +
           fmt(hf / n) + "\n";
  }
  write_text(fs::path(t.out_dir) / "aggregate.csv", agg);
  std::cout << "analyzed " << n << "/" << items.size() << " sequence(s) -> "
            << t.out_dir << "\n";
  return report_file_errors(errors);
}

// ---------------------------------------------------------------- compare --

int run_compare(const std::string& pred_dir, const std::string& gt_dir,
                const std::string& baseline_path, const Tuning& t) {
  const auto body = require_body(t);
  const auto pred_files = gather_motion_files({pred_dir});
  if (pred_files.empty()) {
    std::cerr << "no sequences found\n";
    return kData;
  }
  std::vector<std::string> skipped;
  std::vector<std::pair<fs::path, fs::path>> pairs;
  for (const auto& p : pred_files) {
    const fs::path g = fs::path(gt_dir) / p.filename();
    if (fs::is_regular_file(g)) {
      pairs.emplace_back(p, g);
    } else {
      skipped.push_back(p.filename().string());
    }
  }
  if (pairs.empty()) {
    std::cerr << "no prediction/truth pairs found\n";
    return kData;
  }
  const auto opt = t.loss_options();

  struct Item {
    std::string name, error, loss_json;
    momo::losses::LossReport losses;
    momo::metrics::PlausibilityReport rep;
    bool ok = false;
  };
  const auto items = momo::batch::parallel_map<Item>(
      static_cast<int>(pairs.size()), t.jobs, [&](int i) {
        Item it;
        it.name = pairs[i].first.stem().string();
        try {
          const auto pred = momo::motion::load_motion_json(pairs[i].first.string());
          const auto gt = momo::motion::load_motion_json(pairs[i].second.string());
          it.losses = momo::losses::compare_losses(pred, gt, body, opt);
          it.loss_json = momo::losses::loss_report_to_json(it.losses);

          momo::metrics::PlausibilityReport rep;
          momo::Track3 pr(pred.frame_count(), 3), gr(gt.frame_count(), 3);
          for (int f = 0; f < pred.frame_count(); ++f) pr.row(f) = pred.root_trans[f];
          for (int f = 0; f < gt.frame_count(); ++f) gr.row(f) = gt.root_trans[f];
          try {
            rep.rte_percent = momo::metrics::rte(pr, gr);
          } catch (const momo::ZeroDisplacement&) {
            // static reference: RTE undefined, leave the field empty
          }
          rep.jitter = momo::metrics::jitter(pred, body);
          const auto fsr = momo::metrics::foot_sliding(pred, body, opt.contact);
          rep.foot_sliding_mm = fsr.mm;
          rep.no_contact = fsr.no_contact;
          rep.fs_percent = momo::metrics::fs_percent(pred, body, opt.contact);
          const std::vector<std::vector<momo::Vec3>> verts(body.part_count());
          rep.floating_cm = momo::metrics::floating_cm(pred, body, verts,
                                                       opt.contact.ground_height);
          rep.floor_penetration_cm = momo::metrics::floor_penetration_cm(
              pred, body, verts, opt.contact.ground_height);
          it.rep = rep;
          it.ok = true;
        } catch (const momo::Error& e) {
          it.error = e.what();
        }
        return it;
      });

  fs::create_directories(t.out_dir);
  std::string agg = "name,amo,lmo,spectrum,tmo,swing,transfer,joint_velocity,"
                    "jitter,foot_sliding,humos\n";
  int n = 0, rte_n = 0;
  double s[10] = {};
  double rte_sum = 0;
  momo::metrics::PlausibilityReport mean_rep;
  double jit = 0, fsmm = 0, fsp = 0, flo = 0, pen = 0;
  bool any_contact = false;
  std::vector<std::pair<std::string, std::string>> errors;
  for (const auto& it : items) {
    if (!it.ok) {
      errors.emplace_back(it.name, it.error);
      continue;
    }
    write_text(fs::path(t.out_dir) / (it.name + "_losses.json"), it.loss_json);
    const auto& l = it.losses;
    const double vals[10] = {l.l_amo, l.l_lmo, l.l_s,      l.l_tmo, l.l_sw,
                             l.l_tf,  l.l_jv,  l.l_jitter, l.l_fs,  l.l_humos};
    agg += it.name;
    for (int k = 0; k < 10; ++k) {
      agg += "," + fmt(vals[k]);
      s[k] += vals[k];
    }
    agg += "\n";
    ++n;
    if (it.rep.rte_percent) {
      rte_sum += *it.rep.rte_percent;
      ++rte_n;
    }
    jit += it.rep.jitter;
    fsmm += it.rep.foot_sliding_mm;
    fsp += it.rep.fs_percent;
    flo += it.rep.floating_cm;
    pen += it.rep.floor_penetration_cm;
    any_contact = any_contact || !it.rep.no_contact;
  }
  if (n > 0) {
    agg += "mean";
    for (int k = 0; k < 10; ++k) agg += "," + fmt(s[k] / n);
    agg += "\n";
    if (rte_n > 0) mean_rep.rte_percent = rte_sum / rte_n;
    mean_rep.jitter = jit / n;
    mean_rep.foot_sliding_mm = fsmm / n;
    mean_rep.no_contact = !any_contact;
    mean_rep.fs_percent = fsp / n;
    mean_rep.floating_cm = flo / n;
    mean_rep.floor_penetration_cm = pen / n;
  }
  write_text(fs::path(t.out_dir) / "losses.csv", agg);
  write_text(fs::path(t.out_dir) / "compare_report.json",
             momo::metrics::report_to_json(mean_rep));

  json summary;
  summary["pairs"] = n;
  summary["skipped"] = skipped;
  json mean_losses;
  const char* keys[10] = {"amo",      "lmo",            "spectrum", "tmo",
                          "swing",    "transfer",       "joint_velocity",
                          "jitter",   "foot_sliding",   "humos"};
  for (int k = 0; k < 10; ++k) mean_losses[keys[k]] = n > 0 ? s[k] / n : 0.0;
  summary["mean_losses"] = mean_losses;
  if (!baseline_path.empty()) {
    const auto base = parse_report_json(baseline_path);
    const auto m = momo::metrics::composite_measure(mean_rep, base);
    if (m.defined) {
      summary["m_ab"] = m.value;
    } else {
      summary["m_ab"] = nullptr;
      summary["m_ab_reason"] = m.reason;
    }
  }
  write_text(fs::path(t.out_dir) / "compare_summary.json", summary.dump(2));

  for (const auto& name : skipped) {
    std::cerr << "skipped (no matching truth file): " << name << "\n";
  }
  std::cout << "compared " << n << " pair(s) -> " << t.out_dir << "\n";
  return report_file_errors(errors);
}

// ------------------------------------------------------ calibrate / detect --

int run_calibrate(const std::vector<std::string>& inputs, const Tuning& t) {
  const auto body = require_body(t);
  const auto files = gather_motion_files(inputs);
  if (files.empty()) {
    std::cerr << "no sequences found\n";
    return kData;
  }
  struct Item {
    std::string name, error;
    momo::momentum::MomentumProfile prof;
    bool ok = false;
  };
  const auto items = momo::batch::parallel_map<Item>(
      static_cast<int>(files.size()), t.jobs, [&](int i) {
        Item it;
        it.name = files[i].stem().string();
        try {
          const auto seq = momo::motion::load_motion_json(files[i].string());
          it.prof = momo::momentum::momentum_profile(seq, body);
          it.ok = true;
        } catch (const momo::Error& e) {
          it.error = e.what();
        }
        return it;
      });
  std::vector<momo::momentum::MomentumProfile> corpus;
  std::vector<std::pair<std::string, std::string>> errors;
  for (const auto& it : items) {
    if (it.ok) {
      corpus.push_back(it.prof);
    } else {
      errors.emplace_back(it.name, it.error);
    }
  }
  if (corpus.empty()) {
    report_file_errors(errors);
    std::cerr << "no usable sequences\n";
    return kData;
  }
  const int k0 = momo::spectrum::k0_for_cutoff(corpus[0].frame_count(),
                                               corpus[0].fps, t.k0_hz);
  const auto cal = momo::spectrum::calibrate_detector(corpus, t.band_k, k0);
  fs::create_directories(t.out_dir);
  momo::spectrum::save_calibration_json(
      (fs::path(t.out_dir) / "calibration.json").string(), cal);
  std::cout << "calibrated on " << corpus.size() << " sequence(s): mu_LM="
            << fmt(cal.mu_lm) << " sigma_LM=" << fmt(cal.sigma_lm)
            << " mu_AM=" << fmt(cal.mu_am) << " sigma_AM=" << fmt(cal.sigma_am)
            << " k0=" << cal.k0 << "\n";
  return report_file_errors(errors);
}

int run_detect(const std::vector<std::string>& inputs, const std::string& cal_path,
               const Tuning& t) {
  const auto body = require_body(t);
  const auto cal = momo::spectrum::load_calibration_json(cal_path);
  const auto files = gather_motion_files(inputs);
  if (files.empty()) {
    std::cerr << "no sequences found\n";
    return kData;
  }
  struct Item {
    std::string name, error;
    momo::spectrum::DetectResult res;
    bool ok = false;
  };
  const auto items = momo::batch::parallel_map<Item>(
      static_cast<int>(files.size()), t.jobs, [&](int i) {
        Item it;
        it.name = files[i].stem().string();
        try {
          const auto seq = momo::motion::load_motion_json(files[i].string());
          const auto prof = momo::momentum::momentum_profile(seq, body);
          it.res = momo::spectrum::is_implausible(prof, cal);
          it.ok = true;
        } catch (const momo::Error& e) {
          it.error = e.what();
        }
        return it;
      });
  std::string csv = "name,h_lm,h_am,flag\n";
  int n = 0, flagged = 0;
  std::vector<std::pair<std::string, std::string>> errors;
  for (const auto& it : items) {
    if (!it.ok) {
      errors.emplace_back(it.name, it.error);
      continue;
    }
    csv += it.name + "," + fmt(it.res.h_lm) + "," + fmt(it.res.h_am) + "," +
           (it.res.flag ? "1" : "0") + "\n";
    ++n;
    flagged += it.res.flag ? 1 : 0;
  }
  fs::create_directories(t.out_dir);
  write_text(fs::path(t.out_dir) / "detect.csv", csv);
  std::cout << "flagged " << flagged << "/" << n << " sequence(s)";
  if (n > 0) std::cout << " (rate " << fmt(100.0 * flagged / n) << "%)";
  std::cout << "\n";
  return report_file_errors(errors);
}

// ------------------------------------------------------------------ synth --

int run_synth(const std::string& kind_arg, int count, double fps, double duration_s,
              const std::string& body_kind, int parts, const Tuning& t) {
  namespace sy = momo::synth;
  momo::body_model::BodySpec body;
  if (body_kind == "biped") {
    body = sy::make_biped_body();
  } else if (body_kind == "boxes") {
    body = sy::make_box_body(parts);
  } else if (body_kind == "dumbbell") {
    body = sy::make_dumbbell_body();
  } else {
    throw momo::BadConfig("unknown body kind: " + body_kind);
  }

  std::vector<sy::SynthKind> cycle;
  if (kind_arg == "mixed") {
    cycle = {sy::SynthKind::static_pose, sy::SynthKind::uniform_translation,
             sy::SynthKind::rigid_spin, sy::SynthKind::ballistic_tumble,
             sy::SynthKind::polynomial_root};
    if (body_kind == "dumbbell") cycle.push_back(sy::SynthKind::counter_rotating_pair);
  } else {
    const auto k = sy::kind_from_name(kind_arg);
    if (!k) throw momo::BadConfig("unknown kind: " + kind_arg);
    cycle = {*k};
  }

  fs::create_directories(t.out_dir);
  momo::body_model::save_body_json((fs::path(t.out_dir) / "body.json").string(), body);
  for (int i = 0; i < count; ++i) {
    const sy::SynthKind kind = cycle[i % cycle.size()];
    const auto cfg = sy::randomized_config(kind, fps, duration_s,
                                           t.seed + static_cast<uint64_t>(i));
    const auto res = sy::generate(cfg, body);
    char stem[64];
    std::snprintf(stem, sizeof stem, "%03d_%s", i, sy::kind_name(kind));
    momo::motion::save_motion_json(
        (fs::path(t.out_dir) / (std::string(stem) + ".json")).string(), res.seq);
    sy::save_synth_meta(
        (fs::path(t.out_dir) / (std::string(stem) + ".meta.json")).string(), res, kind);
  }
  std::cout << "wrote body.json and " << count << " sequence(s) -> " << t.out_dir
            << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"whole-body momentum toolkit: corpus analysis, loss comparison,\n"
               "spectral implausibility detection and synthetic oracles"};
  app.set_config("--config", "", "flat key=value config file (flags win)");
  app.fallthrough();
  app.require_subcommand(1);

  Tuning t;
  app.add_option("--body", t.body_path, "body spec JSON file");
  app.add_option("--out", t.out_dir, "output directory")->capture_default_str();
  app.add_option("--weights", t.weights,
                 "loss weights a,b,c for the angular, linear and spectrum terms")
      ->delimiter(',')
      ->expected(3);
  app.add_option("--k0-hz", t.k0_hz, "high-frequency cutoff in Hz")
      ->capture_default_str();
  app.add_option("--K", t.band_k, "detector band half-width in sigmas")
      ->capture_default_str();
  app.add_option("--contact-height-m", t.contact_height_m,
                 "foot contact height threshold (m)")
      ->capture_default_str();
  app.add_option("--contact-vel-ms", t.contact_vel_ms,
                 "foot contact vertical-speed threshold (m/s)")
      ->capture_default_str();
  app.add_option("--jobs", t.jobs, "worker threads (0 = all cores)")
      ->capture_default_str();
  app.add_option("--seed", t.seed, "RNG seed")->capture_default_str();
  app.add_option("--norm", t.norm, "loss reduction: stacked or per_frame_mean")
      ->check(CLI::IsMember({"stacked", "per_frame_mean"}))
      ->capture_default_str();
  app.add_option("--mass-scale", t.mass_scale,
                 "subject mass (kg) applied to unit-mass momenta")
      ->capture_default_str();

  auto* analyze =
      app.add_subcommand("analyze", "momentum profiles + plausibility reports");
  std::vector<std::string> an_inputs;
  std::string an_cal;
  analyze->add_option("inputs", an_inputs, "motion files or directories")->required();
  analyze->add_option("--cal", an_cal, "detector calibration JSON (sets hf_flag)");

  auto* compare = app.add_subcommand("compare", "loss reports for prediction/truth pairs");
  std::string pred_dir, gt_dir, baseline_path;
  compare->add_option("--pred", pred_dir, "directory of predicted motions")->required();
  compare->add_option("--gt", gt_dir, "directory of reference motions")->required();
  compare->add_option("--baseline", baseline_path,
                      "plausibility report JSON used as the composite-ratio baseline");

  auto* calibrate =
      app.add_subcommand("calibrate", "fit detector statistics on a clean corpus");
  std::vector<std::string> cal_inputs;
  calibrate->add_option("inputs", cal_inputs, "motion files or directories")->required();

  auto* detect = app.add_subcommand("detect", "flag implausible sequences");
  std::vector<std::string> det_inputs;
  std::string det_cal;
  detect->add_option("inputs", det_inputs, "motion files or directories")->required();
  detect->add_option("--cal", det_cal, "detector calibration JSON")->required();

  auto* synth = app.add_subcommand("synth", "generate a synthetic corpus with oracles");
  std::string kind = "mixed", body_kind = "biped";
  int count = 10, parts = 20;
  double fps = 60.0, duration_s = 2.0;
  synth->add_option("--kind", kind,
                    "static|uniform_translation|rigid_spin|ballistic_tumble|"
                    "polynomial_root|counter_rotating_pair|mixed")
      ->capture_default_str();
  synth->add_option("--count", count, "number of sequences")->capture_default_str();
  synth->add_option("--fps", fps, "frame rate")->capture_default_str();
  synth->add_option("--duration-s", duration_s, "clip length in seconds")
      ->capture_default_str();
  synth->add_option("--body-kind", body_kind, "biped|boxes|dumbbell")
      ->check(CLI::IsMember({"biped", "boxes", "dumbbell"}))
      ->capture_default_str();
  synth->add_option("--parts", parts, "part count for --body-kind boxes")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (analyze->parsed()) return run_analyze(an_inputs, an_cal, t);
    if (compare->parsed()) return run_compare(pred_dir, gt_dir, baseline_path, t);
    if (calibrate->parsed()) return run_calibrate(cal_inputs, t);
    if (detect->parsed()) return run_detect(det_inputs, det_cal, t);
    if (synth->parsed())
      return run_synth(kind, count, fps, duration_s, body_kind, parts, t);
    std::cerr << "no command given\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const momo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
