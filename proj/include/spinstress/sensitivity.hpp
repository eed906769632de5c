#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace spinstress {

// Shot-noise-limited stress sensitivity of a spin readout,
//
//   eta = 1 / (4 g C sqrt(beta T2)),   [GPa Hz^-1/2]
//
// with g the spin-stress coupling (converted to Hz/GPa), C the readout
// contrast and beta the photon yield. The yield convention is ambiguous in
// practice, so it is selectable and recorded on every result:
//   per_readout (default): beta = count_rate * readout_duration (photons per readout)
//   per_t2:                beta = count_rate * readout_duration / t2_ref
//   raw_rate:              beta = count_rate
// t2_ref defaults to the scenario's own T2 but can be pinned (e.g. to the
// natural-abundance value when comparing isotopically purified samples).

enum class BetaConvention { per_readout, per_t2, raw_rate };

const char* beta_convention_name(BetaConvention c);
BetaConvention parse_beta_convention(const std::string& name);

struct ReadoutScenario {
  std::string label;
  double contrast = 0.0;          // fraction in [0, 1]
  double count_rate = 0.0;        // counts/s
  double readout_duration = 0.0;  // s
  double t2 = 0.0;                // s
  double coupling_mhz_per_gpa = 0.0;  // |g| is used
  std::optional<double> beta_reference_t2;  // s, for per_t2 with pinned beta

  void validate() const;
};

struct SensitivityResult {
  double eta = 0.0;          // GPa Hz^-1/2
  double inverse_eta = 0.0;  // GPa^-1 Hz^1/2
  double beta_used = 0.0;
  BetaConvention convention = BetaConvention::per_readout;
  bool insensitive = false;  // zero contrast or coupling: eta diverges
  std::string assumptions;
};

// Readout contrast C = (p0 - p1) / (p0 + p1) from bright/dark photon counts.
double contrast(double p0, double p1);

SensitivityResult eta(const ReadoutScenario& scenario,
                      BetaConvention convention = BetaConvention::per_readout);

struct ScenarioRow {
  std::string label;
  SensitivityResult result;
  const ReadoutScenario* scenario = nullptr;
};

std::vector<ScenarioRow> scenario_table(std::span<const ReadoutScenario> scenarios,
                                        BetaConvention convention = BetaConvention::per_readout);

// The eight bar-chart cases: {divacancy, NV} x {axial g43, transverse g41}
// x {natural, isotopically purified}. Divacancy: C = 0.15, 26 kcts/s,
// T2 = 1.2 / 3.6 ms; NV: C = 0.30, 28 kcts/s, T2 = 0.6 / 1.8 ms; 350 ns
// readout for both. Purified rows pin beta_reference_t2 at the natural T2.
std::vector<ReadoutScenario> comparison_scenarios();

}  // namespace spinstress
