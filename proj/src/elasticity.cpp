#include "spinstress/elasticity.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "spinstress/errors.hpp"

namespace spinstress {

namespace {

// Voigt index pairs, order (xx, yy, zz, yz, zx, xy).
constexpr int kPair[6][2] = {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {2, 0}, {0, 1}};

constexpr int kVoigtOf[3][3] = {{0, 5, 4}, {5, 1, 3}, {4, 3, 2}};

void check_rotation(const Eigen::Matrix3d& r) {
  if ((r * r.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > 1e-9 ||
      r.determinant() < 0.0) {
    throw ValidationError("rotation matrix is not a proper orthonormal rotation");
  }
}

}  // namespace

const char* frame_name(Frame f) { return f == Frame::crystal ? "crystal" : "defect"; }

const char* symmetry_name(SymmetryClass s) {
  switch (s) {
    case SymmetryClass::cubic: return "cubic";
    case SymmetryClass::hexagonal: return "hexagonal";
    case SymmetryClass::trigonal: return "trigonal";
    default: return "general";
  }
}

DefectFrame::DefectFrame(const Eigen::Vector3d& z_axis, const Eigen::Vector3d& x_axis) {
  const double nz = z_axis.norm();
  const double nx = x_axis.norm();
  if (nz == 0.0 || nx == 0.0) {
    throw ValidationError("defect frame axes must be nonzero");
  }
  z_ = z_axis / nz;
  x_ = x_axis / nx;
  if (std::abs(z_.dot(x_)) > 1e-9) {
    throw ValidationError("defect frame x-axis is not orthogonal to the z-axis");
  }
  y_ = z_.cross(x_);
}

DefectFrame DefectFrame::identity() {
  return DefectFrame(Eigen::Vector3d::UnitZ(), Eigen::Vector3d::UnitX());
}

Eigen::Matrix3d DefectFrame::rotation() const {
  Eigen::Matrix3d r;
  r.row(0) = x_;
  r.row(1) = y_;
  r.row(2) = z_;
  return r;
}

StiffnessMatrix::StiffnessMatrix(const Matrix6d& m, Frame frame, SymmetryClass symmetry)
    : m_(m), frame_(frame), symmetry_(symmetry) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
    throw ValidationError("stiffness matrix is not symmetric");
  }
  m_ = 0.5 * (m_ + m_.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix6d> solver(m_);
  if (solver.eigenvalues().minCoeff() <= 0.0) {
    throw ValidationError("stiffness matrix is not positive definite (Born stability)");
  }
}

StiffnessMatrix stiffness_cubic(double c11, double c12, double c44) {
  if (!(c11 - c12 > 0.0)) throw ValidationError("cubic stability violated: C11 - C12 > 0");
  if (!(c11 + 2.0 * c12 > 0.0)) throw ValidationError("cubic stability violated: C11 + 2 C12 > 0");
  if (!(c44 > 0.0)) throw ValidationError("cubic stability violated: C44 > 0");
  Matrix6d m = Matrix6d::Zero();
  m.topLeftCorner<3, 3>().setConstant(c12);
  for (int i = 0; i < 3; ++i) {
    m(i, i) = c11;
    m(3 + i, 3 + i) = c44;
  }
  return StiffnessMatrix(m, Frame::crystal, SymmetryClass::cubic);
}

StiffnessMatrix stiffness_hexagonal(double c11, double c12, double c13, double c33,
                                    double c44) {
  if (!(c44 > 0.0)) throw ValidationError("hexagonal stability violated: C44 > 0");
  if (!(c11 > std::abs(c12))) throw ValidationError("hexagonal stability violated: C11 > |C12|");
  if (!(c33 * (c11 + c12) > 2.0 * c13 * c13)) {
    throw ValidationError("hexagonal stability violated: C33 (C11 + C12) > 2 C13^2");
  }
  Matrix6d m = Matrix6d::Zero();
  m(0, 0) = m(1, 1) = c11;
  m(0, 1) = m(1, 0) = c12;
  m(0, 2) = m(2, 0) = m(1, 2) = m(2, 1) = c13;
  m(2, 2) = c33;
  m(3, 3) = m(4, 4) = c44;
  m(5, 5) = 0.5 * (c11 - c12);
  return StiffnessMatrix(m, Frame::crystal, SymmetryClass::hexagonal);
}

Matrix6d bond_stress_matrix(const Eigen::Matrix3d& r) {
  Matrix6d m;
  for (int a = 0; a < 6; ++a) {
    const int i = kPair[a][0], j = kPair[a][1];
    for (int b = 0; b < 6; ++b) {
      const int k = kPair[b][0], l = kPair[b][1];
      m(a, b) = (k == l) ? r(i, k) * r(j, k) : r(i, k) * r(j, l) + r(i, l) * r(j, k);
    }
  }
  return m;
}

namespace {

SymmetryClass rotated_class(const StiffnessMatrix& c, const Matrix6d& rotated) {
  // Keep the tag only when the matrix is unchanged (a symmetry operation);
  // we do not classify the general rotated tensor.
  const double scale = std::max(1.0, c.matrix().cwiseAbs().maxCoeff());
  if ((rotated - c.matrix()).cwiseAbs().maxCoeff() < 1e-9 * scale) return c.symmetry();
  return SymmetryClass::general;
}

}  // namespace

StiffnessMatrix rotate_stiffness(const StiffnessMatrix& c, const DefectFrame& frame) {
  return rotate_stiffness(c, frame.rotation(), Frame::defect);
}

StiffnessMatrix rotate_stiffness(const StiffnessMatrix& c, const Eigen::Matrix3d& rotation,
                                 Frame result_frame) {
  check_rotation(rotation);
  const Matrix6d m = bond_stress_matrix(rotation);
  Matrix6d rotated = m * c.matrix() * m.transpose();
  rotated = 0.5 * (rotated + rotated.transpose());
  return StiffnessMatrix(rotated, result_frame, rotated_class(c, rotated));
}

StiffnessMatrix rotate_stiffness_reference(const StiffnessMatrix& c,
                                           const Eigen::Matrix3d& r, Frame result_frame) {
  check_rotation(r);
  // Unpack to the full rank-4 tensor (stiffness has no Voigt shear factors),
  // rotate by the direct index sum, repack.
  double t[3][3][3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          t[i][j][k][l] = c.matrix()(kVoigtOf[i][j], kVoigtOf[k][l]);

  double out[3][3][3][3] = {};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          double sum = 0.0;
          for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
              for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 3; ++q)
                  sum += r(i, a) * r(j, b) * r(k, p) * r(l, q) * t[a][b][p][q];
          out[i][j][k][l] = sum;
        }

  Matrix6d packed;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      packed(a, b) = out[kPair[a][0]][kPair[a][1]][kPair[b][0]][kPair[b][1]];
  packed = 0.5 * (packed + packed.transpose());
  return StiffnessMatrix(packed, result_frame, rotated_class(c, packed));
}

double invariant_iijj(const StiffnessMatrix& c) {
  return c.matrix().topLeftCorner<3, 3>().sum();
}

double invariant_ijij(const StiffnessMatrix& c) {
  const Matrix6d& m = c.matrix();
  return m(0, 0) + m(1, 1) + m(2, 2) + 2.0 * (m(3, 3) + m(4, 4) + m(5, 5));
}

ComplianceMatrix compliance(const StiffnessMatrix& c) {
  Eigen::SelfAdjointEigenSolver<Matrix6d> solver(c.matrix());
  const double lmin = solver.eigenvalues().minCoeff();
  const double lmax = solver.eigenvalues().maxCoeff();
  if (lmin <= 0.0 || lmax / lmin > 1e12) {
    std::ostringstream msg;
    msg << "stiffness matrix is singular or ill-conditioned (condition number "
        << (lmin > 0.0 ? lmax / lmin : std::numeric_limits<double>::infinity()) << ")";
    throw NumericalError(msg.str());
  }
  Matrix6d inv = solver.eigenvectors() *
                 solver.eigenvalues().cwiseInverse().asDiagonal() *
                 solver.eigenvectors().transpose();
  inv = 0.5 * (inv + inv.transpose());
  return ComplianceMatrix(inv, c.frame());
}

StrainTensor strain_from_stress(const ComplianceMatrix& s, const StressTensor& stress) {
  return StrainTensor::from_voigt(s.matrix() * stress.voigt());
}

StressTensor stress_from_strain(const StiffnessMatrix& c, const StrainTensor& strain) {
  return StressTensor::from_voigt(c.matrix() * strain.voigt());
}

}  // namespace spinstress
