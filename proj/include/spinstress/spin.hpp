#pragma once

#include <Eigen/Dense>

#include "spinstress/coupling.hpp"
#include "spinstress/tensors.hpp"
#include "spinstress/types.hpp"

namespace spinstress {

// Spin-1 operator algebra and the deformation Hamiltonian
//
//   H/h = c_z Sz^2 + c_d (Sy^2 - Sx^2) + c_xy {Sx,Sy} + c_xz {Sx,Sz} + c_yz {Sy,Sz}
//
// in the (|+1>, |0>, |-1>) basis, frequency units (MHz). The basis order is
// fixed here because the signs of the off-diagonal Sy elements depend on it.

struct SpinOperators {
  Eigen::Matrix3cd sx, sy, sz;
};

// Canonical (Sx, Sy, Sz); Sz = diag(1, 0, -1).
const SpinOperators& spin_matrices();

// Amplitudes of the five traceless operator channels, MHz.
struct ChannelCoefficients {
  double c_z = 0.0;   // Sz^2
  double c_d = 0.0;   // Sy^2 - Sx^2
  double c_xy = 0.0;  // {Sx,Sy}
  double c_xz = 0.0;  // {Sx,Sz}
  double c_yz = 0.0;  // {Sy,Sz}

  // Order used by the regression design blocks: (c_z, c_d, c_xy, c_xz, c_yz).
  Vector5d vector() const;
  static ChannelCoefficients from_vector(const Vector5d& v);
};

// Symmetric 3x3 zero-field-splitting matrix, MHz.
class ZfsMatrix {
 public:
  ZfsMatrix() : m_(Eigen::Matrix3d::Zero()) {}
  // Validates symmetry to 1e-12 relative, then symmetrizes exactly.
  explicit ZfsMatrix(const Eigen::Matrix3d& m);
  const Eigen::Matrix3d& matrix() const { return m_; }

 private:
  Eigen::Matrix3d m_;
};

struct ZfsDecomposition {
  double identity_part = 0.0;  // coefficient of the identity operator, MHz
  ChannelCoefficients channels;
};

// Expands S^T D S over {Identity, Sz^2, Sy^2-Sx^2, {Sx,Sy}, {Sx,Sz}, {Sy,Sz}}:
//   c_z = D_zz - (D_xx+D_yy)/2, c_d = (D_yy-D_xx)/2,
//   c_xy = D_xy, c_xz = D_xz, c_yz = D_yz, identity_part = D_xx + D_yy.
ZfsDecomposition decompose_zfs(const ZfsMatrix& d);

// Inverse of decompose_zfs; exact reassembly.
ZfsMatrix zfs_from_channels(double identity_part, const ChannelCoefficients& c);

// Channel amplitudes of the deformation Hamiltonian. The strain and stress
// forms share the same symmetry-allowed structure:
//   c_z  = p41 (t_xx + t_yy) + p43 t_zz
//   c_xz = 1/2 [p26 t_zx - 1/2 p25 (t_xx - t_yy)]
//   c_yz = 1/2 (p26 t_yz + p25 t_xy)
//   c_d  = 1/2 [p16 t_zx - 1/2 p15 (t_xx - t_yy)]
//   c_xy = 1/2 (p16 t_yz + p15 t_xy)
// with t the strain (p = h, MHz/strain) or stress (p = g, MHz/GPa) tensor.
ChannelCoefficients channels_from_strain(const CouplingSet& h, const StrainTensor& strain);
ChannelCoefficients channels_from_stress(const CouplingSet& g, const StressTensor& stress);

// Hermitian 3x3 Hamiltonian (MHz) assembled from the channel amplitudes.
Eigen::Matrix3cd build_hamiltonian(const ChannelCoefficients& c);

// Frequencies of the two transitions out of the m = 0 level for
// H = base_splitting * Sz^2 + perturbation, by exact diagonalization.
// f_plus >= f_minus.
struct TransitionShifts {
  double f_plus = 0.0;   // MHz
  double f_minus = 0.0;  // MHz
};

TransitionShifts transition_shifts(double base_splitting_mhz, const ChannelCoefficients& c);

}  // namespace spinstress
