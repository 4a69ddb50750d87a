#include "momo/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "momo/errors.hpp"

namespace momo::spectrum {

using nlohmann::json;

Eigen::VectorXd dct(const Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size());
  if (n < 1) throw BadConfig("dct of empty signal");
  Eigen::VectorXd c(n);
  const double s0 = std::sqrt(1.0 / n);
  const double sk = std::sqrt(2.0 / n);
  for (int k = 0; k < n; ++k) {
    double acc = 0;
    const double w = M_PI * k / (2.0 * n);
    for (int t = 0; t < n; ++t) acc += x[t] * std::cos(w * (2 * t + 1));
    c[k] = (k == 0 ? s0 : sk) * acc;
  }
  return c;
}

Track dct_columns(const Track& x) {
  Track out(x.rows(), x.cols());
  for (Eigen::Index c = 0; c < x.cols(); ++c) out.col(c) = dct(x.col(c));
  return out;
}

std::vector<std::complex<double>> dft(const Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size());
  std::vector<std::complex<double>> out(n);
  for (int k = 0; k < n; ++k) {
    std::complex<double> acc(0, 0);
    const double w = -2.0 * M_PI * k / n;
    for (int t = 0; t < n; ++t) {
      acc += x[t] * std::complex<double>(std::cos(w * t), std::sin(w * t));
    }
    out[k] = acc;
  }
  return out;
}

double dct_bin_frequency(int index_1based, int frames, double fps) {
  return (index_1based - 1) * fps / (2.0 * frames);
}

int k0_for_cutoff(int frames, double fps, double cutoff_hz) {
  if (!(cutoff_hz > 0)) throw BadCutoff("cutoff must be positive");
  if (frames < 1 || !(fps > 0)) throw BadCutoff("need frames >= 1 and fps > 0");
  // (i-1)·fps/(2T) >= cutoff  =>  i >= 1 + 2T·cutoff/fps
  const int i = 1 + static_cast<int>(std::ceil(2.0 * frames * cutoff_hz / fps));
  return std::clamp(i, 1, frames);
}

double high_freq_score(const Track3& channel, int k0) {
  const int t = static_cast<int>(channel.rows());
  if (k0 < 1 || k0 > t) {
    throw BadCutoff("k0 = " + std::to_string(k0) + " outside [1, " +
                    std::to_string(t) + "]");
  }
  Track coeffs = dct_columns(channel);
  double acc = 0;
  for (int i = k0 - 1; i < t; ++i) acc += coeffs.row(i).norm();
  return acc / (t - k0 + 1);
}

namespace {

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double mad(const std::vector<double>& v) {
  const double med = median_of(v);
  std::vector<double> dev(v.size());
  for (size_t i = 0; i < v.size(); ++i) dev[i] = std::abs(v[i] - med);
  return median_of(std::move(dev));
}

}  // namespace

DetectorCalibration calibrate_detector(const std::vector<MomentumProfile>& corpus,
                                       double k, int k0) {
  if (corpus.empty()) throw EmptyCorpus("calibration corpus is empty");
  const int t = corpus.front().frame_count();
  const double fps = corpus.front().fps;
  std::vector<double> h_lm, h_am;
  h_lm.reserve(corpus.size());
  h_am.reserve(corpus.size());
  for (const auto& profile : corpus) {
    if (profile.frame_count() != t || profile.fps != fps) {
      throw HeterogeneousCorpus(
          "calibration needs equal length and rate; got " +
          std::to_string(profile.frame_count()) + " frames at " +
          std::to_string(profile.fps) + " fps vs " + std::to_string(t) +
          " at " + std::to_string(fps));
    }
    h_lm.push_back(high_freq_score(profile.linear, k0));
    h_am.push_back(high_freq_score(profile.angular, k0));
  }
  DetectorCalibration cal;
  cal.mu_lm = std::accumulate(h_lm.begin(), h_lm.end(), 0.0) / h_lm.size();
  cal.mu_am = std::accumulate(h_am.begin(), h_am.end(), 0.0) / h_am.size();
  cal.sigma_lm = mad(h_lm);
  cal.sigma_am = mad(h_am);
  cal.k = k;
  cal.k0 = k0;
  cal.frames = t;
  cal.fps = fps;
  return cal;
}

DetectResult is_implausible(const MomentumProfile& profile,
                            const DetectorCalibration& cal) {
  if (profile.frame_count() != cal.frames) {
    throw LengthMismatch("profile has " + std::to_string(profile.frame_count()) +
                         " frames, calibration expects " +
                         std::to_string(cal.frames));
  }
  DetectResult r;
  r.h_lm = high_freq_score(profile.linear, cal.k0);
  r.h_am = high_freq_score(profile.angular, cal.k0);
  const bool lm_out = r.h_lm < cal.mu_lm - cal.k * cal.sigma_lm ||
                      r.h_lm > cal.mu_lm + cal.k * cal.sigma_lm;
  const bool am_out = r.h_am < cal.mu_am - cal.k * cal.sigma_am ||
                      r.h_am > cal.mu_am + cal.k * cal.sigma_am;
  r.flag = lm_out || am_out;
  return r;
}

std::string calibration_to_json(const DetectorCalibration& cal) {
  json j;
  j["mu_LM"] = cal.mu_lm;
  j["sigma_LM"] = cal.sigma_lm;
  j["mu_AM"] = cal.mu_am;
  j["sigma_AM"] = cal.sigma_am;
  j["K"] = cal.k;
  j["k0"] = cal.k0;
  j["T"] = cal.frames;
  j["fps"] = cal.fps;
  return j.dump(2);
}

DetectorCalibration parse_calibration_json(const std::string& text,
                                           const std::string& origin) {
  try {
    const json j = json::parse(text);
    DetectorCalibration cal;
    cal.mu_lm = j.at("mu_LM").get<double>();
    cal.sigma_lm = j.at("sigma_LM").get<double>();
    cal.mu_am = j.at("mu_AM").get<double>();
    cal.sigma_am = j.at("sigma_AM").get<double>();
    cal.k = j.at("K").get<double>();
    cal.k0 = j.at("k0").get<int>();
    cal.frames = j.at("T").get<int>();
    cal.fps = j.at("fps").get<double>();
    return cal;
  } catch (const json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

DetectorCalibration load_calibration_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open calibration file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_calibration_json(ss.str(), path);
}

void save_calibration_json(const std::string& path, const DetectorCalibration& cal) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open calibration file for writing: " + path);
  out << calibration_to_json(cal) << '\n';
}

std::vector<DampingBin> spectral_damping_check(const Track3& torque,
                                               const Track3& mom, double fps) {
  const int t = static_cast<int>(torque.rows());
  if (mom.rows() != t) {
    throw LengthMismatch("torque and momentum lengths differ");
  }
  if (t < 4) throw TooShort("damping check needs at least 4 frames");

  // Remove the endpoint-to-endpoint line per momentum column. Integrated
  // noise behaves like a random walk; without this the walk's broadband
  // leakage swamps every bin ratio.
  Track3 detrended = mom;
  for (int c = 0; c < 3; ++c) {
    const double a = mom(0, c);
    const double b = mom(t - 1, c);
    for (int f = 0; f < t; ++f) {
      detrended(f, c) -= a + (b - a) * (static_cast<double>(f) / (t - 1));
    }
  }

  std::vector<std::vector<std::complex<double>>> tq(3), mq(3);
  for (int c = 0; c < 3; ++c) {
    tq[c] = dft(torque.col(c));
    mq[c] = dft(detrended.col(c));
  }

  const int half = t / 2;
  double max_den = 0;
  std::vector<double> num(half + 1, 0), den(half + 1, 0);
  for (int k = 1; k <= half; ++k) {
    double n2 = 0, d2 = 0;
    for (int c = 0; c < 3; ++c) {
      n2 += std::norm(mq[c][k]);
      d2 += std::norm(tq[c][k]);
    }
    num[k] = std::sqrt(n2);
    den[k] = std::sqrt(d2);
    max_den = std::max(max_den, den[k]);
  }
  const double floor = std::max(1e-12, 1e-9 * max_den);

  std::vector<DampingBin> out;
  out.reserve(half);
  for (int k = 1; k <= half; ++k) {
    if (den[k] <= floor) continue;
    DampingBin bin;
    bin.k = k;
    bin.omega = 2.0 * M_PI * k * fps / t;
    bin.ratio = num[k] * bin.omega / den[k];
    out.push_back(bin);
  }
  return out;
}

}  // namespace momo::spectrum
