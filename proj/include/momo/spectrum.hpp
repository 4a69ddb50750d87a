#pragma once

#include <complex>
#include <string>
#include <vector>

#include "momo/momentum.hpp"
#include "momo/types.hpp"

namespace momo::spectrum {

using momentum::MomentumProfile;

/// Orthonormal DCT-II of a real signal: C_k = s_k Σ_n x_n cos(πk(2n+1)/(2N)),
/// s_0 = √(1/N), s_{k≥1} = √(2/N). Parseval holds exactly in this scaling.
Eigen::VectorXd dct(const Eigen::VectorXd& x);

/// DCT-II of each column of a track.
Track dct_columns(const Track& x);

/// Plain DFT: X_k = Σ_n x_n e^{-2πikn/N}.
std::vector<std::complex<double>> dft(const Eigen::VectorXd& x);

/// Frequency (Hz) represented by 1-based DCT coefficient index i at the given
/// length and sampling rate: (i−1)·fps/(2T).
double dct_bin_frequency(int index_1based, int frames, double fps);

/// Smallest 1-based index whose bin frequency reaches `cutoff_hz`, clamped to
/// [1, T]. Throws BadCutoff on nonpositive cutoff.
int k0_for_cutoff(int frames, double fps, double cutoff_hz);

/// Mean magnitude of the high-frequency DCT coefficients of a 3-channel
/// track: per-bin magnitude is the Euclidean norm across the x,y,z
/// coefficients, averaged over 1-based bins k0..T. Throws BadCutoff when k0
/// is outside [1, T].
double high_freq_score(const Track3& channel, int k0);

/// Reference-corpus statistics for the high-frequency implausibility test.
struct DetectorCalibration {
  double mu_lm = 0, sigma_lm = 0;  // mean and median absolute deviation of H_LM
  double mu_am = 0, sigma_am = 0;
  double k = 20.0;                 // band half-width in sigmas
  int k0 = 1;                      // first high-frequency bin (1-based)
  int frames = 0;
  double fps = 0;
};

/// Mean and MAD of the high-frequency scores over a corpus of
/// equal-length, equal-rate momentum profiles.
DetectorCalibration calibrate_detector(const std::vector<MomentumProfile>& corpus,
                                       double k, int k0);

struct DetectResult {
  bool flag = false;
  double h_lm = 0;
  double h_am = 0;
};

/// Flags a profile whose H_LM or H_AM falls outside μ ± Kσ (inclusive band).
DetectResult is_implausible(const MomentumProfile& profile,
                            const DetectorCalibration& cal);

std::string calibration_to_json(const DetectorCalibration& cal);
DetectorCalibration parse_calibration_json(const std::string& text,
                                           const std::string& origin);
DetectorCalibration load_calibration_json(const std::string& path);
void save_calibration_json(const std::string& path, const DetectorCalibration& cal);

/// One retained DFT bin of the damping check.
struct DampingBin {
  int k = 0;        // DFT bin index (1..T/2)
  double omega = 0; // angular frequency, rad/s
  double ratio = 0; // |M̂(ω)|·ω / |τ̂(ω)|
};

/// Ratio |M̂(ω)|·ω / |τ̂(ω)| per positive-frequency DFT bin, where momentum is
/// expected to be the running integral of torque. The momentum track is
/// endpoint-detrended before the transform (integrated noise carries a strong
/// linear component that would leak across all bins). Bins whose torque
/// magnitude is numerically zero are omitted.
std::vector<DampingBin> spectral_damping_check(const Track3& torque,
                                               const Track3& mom, double fps);

}  // namespace momo::spectrum
