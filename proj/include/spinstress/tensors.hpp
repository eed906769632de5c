#pragma once

#include <Eigen/Dense>

#include "spinstress/types.hpp"

namespace spinstress {

// Symmetric rank-2 tensors in the frame the caller is working in.
// Voigt component order is (xx, yy, zz, yz, zx, xy) throughout.
//
// Strain is dimensionless (negative = compressive) and its Voigt view
// carries engineering shears (exx, eyy, ezz, 2eyz, 2ezx, 2exy); stress
// is in GPa and its Voigt view carries the plain tensor components.

class StrainTensor {
 public:
  StrainTensor() = default;
  static StrainTensor from_components(double exx, double eyy, double ezz,
                                      double eyz, double ezx, double exy);
  // Accepts a nearly symmetric matrix (1e-12 relative) and symmetrizes it.
  static StrainTensor from_matrix(const Eigen::Matrix3d& m);
  // Voigt vector with engineering shears.
  static StrainTensor from_voigt(const Vector6d& v);

  Eigen::Matrix3d matrix() const;
  Vector6d voigt() const;  // (exx, eyy, ezz, 2eyz, 2ezx, 2exy)

  double xx() const { return c_[0]; }
  double yy() const { return c_[1]; }
  double zz() const { return c_[2]; }
  double yz() const { return c_[3]; }
  double zx() const { return c_[4]; }
  double xy() const { return c_[5]; }

  double max_abs() const;
  bool is_zero() const;

 private:
  Vector6d c_ = Vector6d::Zero();  // tensor components (xx,yy,zz,yz,zx,xy)
};

class StressTensor {
 public:
  StressTensor() = default;
  static StressTensor from_components(double sxx, double syy, double szz,
                                      double syz, double szx, double sxy);
  static StressTensor from_matrix(const Eigen::Matrix3d& m);
  static StressTensor from_voigt(const Vector6d& v);  // no shear factor

  Eigen::Matrix3d matrix() const;
  Vector6d voigt() const;  // (sxx, syy, szz, syz, szx, sxy)

  double xx() const { return c_[0]; }
  double yy() const { return c_[1]; }
  double zz() const { return c_[2]; }
  double yz() const { return c_[3]; }
  double zx() const { return c_[4]; }
  double xy() const { return c_[5]; }

 private:
  Vector6d c_ = Vector6d::Zero();
};

}  // namespace spinstress
