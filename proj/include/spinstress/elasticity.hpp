#pragma once

#include <Eigen/Dense>

#include "spinstress/tensors.hpp"
#include "spinstress/types.hpp"

namespace spinstress {

enum class Frame { crystal, defect };
enum class SymmetryClass { cubic, hexagonal, trigonal, general };

const char* frame_name(Frame f);
const char* symmetry_name(SymmetryClass s);

// Local defect coordinates expressed in crystal coordinates: z along the
// three-fold axis, x picked so the xz-plane is a mirror plane of the defect.
// y is derived as z x x; the triad is orthonormal and right-handed.
class DefectFrame {
 public:
  // Normalizes both axes; requires |z . x| <= 1e-9 after normalization.
  DefectFrame(const Eigen::Vector3d& z_axis, const Eigen::Vector3d& x_axis);
  static DefectFrame identity();

  const Eigen::Vector3d& x() const { return x_; }
  const Eigen::Vector3d& y() const { return y_; }
  const Eigen::Vector3d& z() const { return z_; }

  // Rows (x, y, z): maps crystal components to defect components.
  Eigen::Matrix3d rotation() const;

 private:
  Eigen::Vector3d x_, y_, z_;
};

// 6x6 Voigt-notation stiffness, GPa. Validated symmetric (1e-9 relative)
// and positive definite on construction.
class StiffnessMatrix {
 public:
  StiffnessMatrix(const Matrix6d& m, Frame frame, SymmetryClass symmetry);

  const Matrix6d& matrix() const { return m_; }
  Frame frame() const { return frame_; }
  SymmetryClass symmetry() const { return symmetry_; }

 private:
  Matrix6d m_;
  Frame frame_;
  SymmetryClass symmetry_;
};

class ComplianceMatrix {
 public:
  ComplianceMatrix(const Matrix6d& m, Frame frame) : m_(m), frame_(frame) {}
  const Matrix6d& matrix() const { return m_; }
  Frame frame() const { return frame_; }

 private:
  Matrix6d m_;  // GPa^-1
  Frame frame_;
};

// Crystal-frame builders. Born stability is checked first and a violated
// inequality is named in the error message.
StiffnessMatrix stiffness_cubic(double c11, double c12, double c44);
StiffnessMatrix stiffness_hexagonal(double c11, double c12, double c13,
                                    double c33, double c44);

// Frame rotation of the rank-4 elastic tensor, C'_ijkl = R_ia R_jb R_kc R_ld C_abcd.
//
// rotate_stiffness packs the rotation into the 6x6 Bond matrix (fast path);
// rotate_stiffness_reference performs the direct index sum over the unpacked
// 3x3x3x3 tensor and is kept as the serial reference the tests compare
// against — the Voigt shear-factor bookkeeping lives or dies here.
StiffnessMatrix rotate_stiffness(const StiffnessMatrix& c, const DefectFrame& frame);
StiffnessMatrix rotate_stiffness(const StiffnessMatrix& c, const Eigen::Matrix3d& rotation,
                                 Frame result_frame);
StiffnessMatrix rotate_stiffness_reference(const StiffnessMatrix& c,
                                           const Eigen::Matrix3d& rotation,
                                           Frame result_frame);

// Bond 6x6 transformation matrix for the stress Voigt vector: sigma' = M sigma.
Matrix6d bond_stress_matrix(const Eigen::Matrix3d& rotation);

// Tensor invariants C_iijj and C_ijij (GPa), preserved under rotation.
double invariant_iijj(const StiffnessMatrix& c);
double invariant_ijij(const StiffnessMatrix& c);

// Matrix inverse; fails if the condition number exceeds 1e12.
ComplianceMatrix compliance(const StiffnessMatrix& c);

// Voigt products with the engineering-shear convention: the returned strain
// holds tensor shears (half the engineering values).
StrainTensor strain_from_stress(const ComplianceMatrix& s, const StressTensor& stress);
StressTensor stress_from_strain(const StiffnessMatrix& c, const StrainTensor& strain);

}  // namespace spinstress
