#include "spinstress/tensors.hpp"

#include <cmath>

#include "spinstress/errors.hpp"

namespace spinstress {

namespace {

Vector6d components_from_matrix(const Eigen::Matrix3d& m, const char* what) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw ValidationError(std::string(what) + " matrix is not symmetric");
  }
  Vector6d c;
  c << m(0, 0), m(1, 1), m(2, 2),
      0.5 * (m(1, 2) + m(2, 1)), 0.5 * (m(2, 0) + m(0, 2)), 0.5 * (m(0, 1) + m(1, 0));
  return c;
}

Eigen::Matrix3d matrix_from_components(const Vector6d& c) {
  Eigen::Matrix3d m;
  m << c[0], c[5], c[4],
       c[5], c[1], c[3],
       c[4], c[3], c[2];
  return m;
}

}  // namespace

StrainTensor StrainTensor::from_components(double exx, double eyy, double ezz,
                                           double eyz, double ezx, double exy) {
  StrainTensor t;
  t.c_ << exx, eyy, ezz, eyz, ezx, exy;
  return t;
}

StrainTensor StrainTensor::from_matrix(const Eigen::Matrix3d& m) {
  StrainTensor t;
  t.c_ = components_from_matrix(m, "strain");
  return t;
}

StrainTensor StrainTensor::from_voigt(const Vector6d& v) {
  StrainTensor t;
  t.c_ << v[0], v[1], v[2], 0.5 * v[3], 0.5 * v[4], 0.5 * v[5];
  return t;
}

Eigen::Matrix3d StrainTensor::matrix() const { return matrix_from_components(c_); }

Vector6d StrainTensor::voigt() const {
  Vector6d v;
  v << c_[0], c_[1], c_[2], 2.0 * c_[3], 2.0 * c_[4], 2.0 * c_[5];
  return v;
}

double StrainTensor::max_abs() const { return c_.cwiseAbs().maxCoeff(); }

bool StrainTensor::is_zero() const { return (c_.array() == 0.0).all(); }

StressTensor StressTensor::from_components(double sxx, double syy, double szz,
                                           double syz, double szx, double sxy) {
  StressTensor t;
  t.c_ << sxx, syy, szz, syz, szx, sxy;
  return t;
}

StressTensor StressTensor::from_matrix(const Eigen::Matrix3d& m) {
  StressTensor t;
  t.c_ = components_from_matrix(m, "stress");
  return t;
}

StressTensor StressTensor::from_voigt(const Vector6d& v) {
  StressTensor t;
  t.c_ = v;
  return t;
}

Eigen::Matrix3d StressTensor::matrix() const { return matrix_from_components(c_); }

Vector6d StressTensor::voigt() const { return c_; }

}  // namespace spinstress
