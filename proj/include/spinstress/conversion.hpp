#pragma once

#include "spinstress/coupling.hpp"
#include "spinstress/elasticity.hpp"
#include "spinstress/types.hpp"

namespace spinstress {

// Conversion between strain-type (h) and stress-type (g) coupling sets
// through the defect-frame elasticity.
//
// For each of the six unit loads the induced deformation is converted to
// channel amplitudes, and the resulting 30 equations (6 loads x 5 channels)
// are matched against the symmetry-allowed pattern of the target form by
// least squares. The relative defect of that fit is reported as `residual`;
// it vanishes for any stiffness matrix with an exact three-fold-compatible
// structure in the defect frame and blows up loudly for a wrong frame or
// symmetry class. The residual is a property of the map itself (computed
// from all six unit couplings), so a zero input coupling set cannot mask a
// bad frame.

struct ConversionReport {
  CouplingSet couplings;  // converted set, errors propagated
  Matrix6d linear_map;    // output = linear_map * input, parameter order (41,43,25,26,15,16)
  double residual = 0.0;  // relative pattern defect, dimensionless
};

enum class ConversionDirection { strain_to_stress, stress_to_strain };

// Residual threshold separating genuine symmetry breaking from round-off.
inline constexpr double kConversionResidualTolerance = 1e-6;

// Full report without the residual gate; used by diagnostics and tests.
ConversionReport convert_couplings(const CouplingSet& input, const StiffnessMatrix& c_defect,
                                   ConversionDirection direction);

// Gated conversions: throw SymmetryError when residual > tolerance.
ConversionReport strain_to_stress_couplings(const CouplingSet& h, const StiffnessMatrix& c_defect);
ConversionReport stress_to_strain_couplings(const CouplingSet& g, const StiffnessMatrix& c_defect);

}  // namespace spinstress
