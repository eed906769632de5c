#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "spinstress/coupling.hpp"
#include "spinstress/spin.hpp"
#include "spinstress/tensors.hpp"
#include "spinstress/types.hpp"

namespace spinstress {

// Extraction of the six strain couplings from (strain, D matrix) datasets
// by ordinary least squares, plus the synthetic-data generator that stands
// in for the electronic-structure pipeline producing such datasets.

struct ZfsSample {
  StrainTensor strain;
  ZfsMatrix d_matrix;  // MHz
  std::string label;
};

// Sanity bound on strain magnitudes in a sample (linear model regime).
inline constexpr double kMaxSampleStrain = 0.1;

void validate_sample(const ZfsSample& sample);

struct FitResult {
  CouplingSet h;  // strain kind, standard errors from the residual variance
  std::array<double, 5> channel_residual_rms{};  // MHz, order (c_z, c_d, c_xy, c_xz, c_yz)
  double condition_number = 0.0;  // of the stacked design matrix
  std::size_t sample_count = 0;
};

// 5x6 design block B with channels(eps) = B(eps) * h for every h.
// Rows follow ChannelCoefficients order, columns the coupling order.
Matrix5x6d design_row(const StrainTensor& strain);

// OLS fit of all six parameters in one stacked system. Baseline channels are
// subtracted sample-wise. Throws IdentifiabilityError when the design is
// rank-deficient (naming the unresolved parameters) and ValidationError for
// fewer than two samples.
FitResult fit(std::span<const ZfsSample> samples, const ZfsMatrix& baseline);

// Six Voigt directions x magnitudes (+-0.001, +-0.002): 24 configurations,
// rank 6. Shear magnitudes are tensor components.
std::vector<StrainTensor> default_strain_battery();

// Deterministic synthetic dataset: D assembled from the model channels plus
// i.i.d. Gaussian noise of the given RMS per channel (zero baseline).
std::vector<ZfsSample> generate_synthetic(const CouplingSet& h,
                                          std::span<const StrainTensor> battery,
                                          double noise_rms_mhz, std::uint64_t seed);

// --- dataset file format (JSON) ---
// { "samples": [ { "strain": {"exx":..,"eyy":..,"ezz":..,"eyz":..,"ezx":..,"exy":..},
//                  "d_matrix": [9 numbers, row-major, MHz],
//                  "label": "optional" }, ... ] }
// Strain keys are tensor components. One record with exactly zero strain is
// required and becomes the baseline; further zero-strain records stay samples.

struct Dataset {
  std::vector<ZfsSample> samples;  // baseline excluded
  ZfsMatrix baseline;
};

Dataset load_dataset(std::istream& in);
Dataset load_dataset_file(const std::string& path);
void save_dataset(std::ostream& out, std::span<const ZfsSample> samples,
                  const ZfsMatrix& baseline);

// --- Monte Carlo recovery kernel ---
// Trial i: regenerate the battery dataset with seed base_seed + i, refit,
// record whether every parameter lands within 5 combined standard errors of
// the truth. Trials are independent, so the parallel path gives bit-identical
// results to the serial one in any thread order.

struct TrialRecord {
  bool within_5se = false;
  Vector6d fitted = Vector6d::Zero();
  Vector6d stderr_ = Vector6d::Zero();
};

enum class Execution { serial, parallel };

std::vector<TrialRecord> monte_carlo_recovery(const CouplingSet& h_true,
                                              std::span<const StrainTensor> battery,
                                              double noise_rms_mhz, int n_trials,
                                              std::uint64_t base_seed,
                                              Execution mode = Execution::parallel);

}  // namespace spinstress
