#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinstress/coupling.hpp"
#include "spinstress/elasticity.hpp"

namespace spinstress {

// Shipped material descriptions: elastic constants, the defect frame in
// crystal coordinates and, where known, the strain couplings plus the
// stress couplings they convert to (used as a consistency self-check).

struct MaterialPreset {
  std::string name;
  std::string description;
  SymmetryClass symmetry = SymmetryClass::cubic;
  std::vector<double> elastic_constants;  // cubic: (c11,c12,c44); hexagonal: (c11,c12,c13,c33,c44)
  Eigen::Vector3d frame_z = Eigen::Vector3d::UnitZ();
  Eigen::Vector3d frame_x = Eigen::Vector3d::UnitX();
  std::optional<CouplingSet> strain_couplings;            // kind = strain
  std::optional<CouplingSet> expected_stress_couplings;   // kind = stress, for self-check

  DefectFrame defect_frame() const;
  StiffnessMatrix crystal_stiffness() const;
  StiffnessMatrix defect_stiffness() const;  // rotated into the defect frame
};

// Built-in presets: "3c-sic-divacancy", "4h-sic-divacancy-hh".
const std::vector<MaterialPreset>& builtin_presets();

// Lookup order: $SPINSTRESS_PRESET_DIR/<name>.toml if the variable is set,
// then the built-in table. Throws ValidationError when not found.
MaterialPreset find_preset(const std::string& name);

MaterialPreset load_preset_file(const std::string& path);

// Converts the preset's strain couplings through its defect-frame stiffness
// and compares with the shipped stress couplings (within quoted errors plus
// rounding slack). Returns a human-readable report; ok = false on mismatch.
struct PresetCheck {
  bool ok = true;
  std::string report;
};
PresetCheck verify_preset(const MaterialPreset& preset);

}  // namespace spinstress
