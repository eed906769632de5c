#include "spinstress/spin.hpp"

#include <cmath>
#include <complex>

#include "spinstress/errors.hpp"

namespace spinstress {

namespace {
using std::complex;
constexpr complex<double> I{0.0, 1.0};
}  // namespace

const SpinOperators& spin_matrices() {
  static const SpinOperators ops = [] {
    const double a = 1.0 / std::sqrt(2.0);
    SpinOperators s;
    s.sx << 0, a, 0,
            a, 0, a,
            0, a, 0;
    s.sy << 0, -I * a, 0,
            I * a, 0, -I * a,
            0, I * a, 0;
    s.sz << 1, 0, 0,
            0, 0, 0,
            0, 0, -1;
    return s;
  }();
  return ops;
}

Vector5d ChannelCoefficients::vector() const {
  Vector5d v;
  v << c_z, c_d, c_xy, c_xz, c_yz;
  return v;
}

ChannelCoefficients ChannelCoefficients::from_vector(const Vector5d& v) {
  return {v[0], v[1], v[2], v[3], v[4]};
}

ZfsMatrix::ZfsMatrix(const Eigen::Matrix3d& m) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw ValidationError("zero-field-splitting matrix is not symmetric");
  }
  m_ = 0.5 * (m + m.transpose());
}

ZfsDecomposition decompose_zfs(const ZfsMatrix& d) {
  const Eigen::Matrix3d& m = d.matrix();
  ZfsDecomposition out;
  out.identity_part = m(0, 0) + m(1, 1);
  out.channels.c_z = m(2, 2) - 0.5 * (m(0, 0) + m(1, 1));
  out.channels.c_d = 0.5 * (m(1, 1) - m(0, 0));
  out.channels.c_xy = m(0, 1);
  out.channels.c_xz = m(0, 2);
  out.channels.c_yz = m(1, 2);
  return out;
}

ZfsMatrix zfs_from_channels(double identity_part, const ChannelCoefficients& c) {
  Eigen::Matrix3d m;
  const double dxx = 0.5 * identity_part - c.c_d;
  const double dyy = 0.5 * identity_part + c.c_d;
  const double dzz = c.c_z + 0.5 * identity_part;
  m << dxx, c.c_xy, c.c_xz,
       c.c_xy, dyy, c.c_yz,
       c.c_xz, c.c_yz, dzz;
  return ZfsMatrix(m);
}

namespace {

// Shared between the strain and stress forms; t holds the tensor components.
ChannelCoefficients channel_pattern(const Vector6d& p, double txx, double tyy, double tzz,
                                    double tyz, double tzx, double txy) {
  const double p41 = p[0], p43 = p[1], p25 = p[2], p26 = p[3], p15 = p[4], p16 = p[5];
  ChannelCoefficients c;
  c.c_z = p41 * (txx + tyy) + p43 * tzz;
  c.c_xz = 0.5 * (p26 * tzx - 0.5 * p25 * (txx - tyy));
  c.c_yz = 0.5 * (p26 * tyz + p25 * txy);
  c.c_d = 0.5 * (p16 * tzx - 0.5 * p15 * (txx - tyy));
  c.c_xy = 0.5 * (p16 * tyz + p15 * txy);
  return c;
}

}  // namespace

ChannelCoefficients channels_from_strain(const CouplingSet& h, const StrainTensor& strain) {
  if (h.kind != CouplingKind::strain) {
    throw ValidationError("strain tensor paired with a stress-type coupling set");
  }
  return channel_pattern(h.values(), strain.xx(), strain.yy(), strain.zz(),
                         strain.yz(), strain.zx(), strain.xy());
}

ChannelCoefficients channels_from_stress(const CouplingSet& g, const StressTensor& stress) {
  if (g.kind != CouplingKind::stress) {
    throw ValidationError("stress tensor paired with a strain-type coupling set");
  }
  return channel_pattern(g.values(), stress.xx(), stress.yy(), stress.zz(),
                         stress.yz(), stress.zx(), stress.xy());
}

Eigen::Matrix3cd build_hamiltonian(const ChannelCoefficients& c) {
  const SpinOperators& s = spin_matrices();
  const auto anti = [](const Eigen::Matrix3cd& a, const Eigen::Matrix3cd& b) {
    return (a * b + b * a).eval();
  };
  Eigen::Matrix3cd h = c.c_z * (s.sz * s.sz)
                     + c.c_d * (s.sy * s.sy - s.sx * s.sx)
                     + c.c_xy * anti(s.sx, s.sy)
                     + c.c_xz * anti(s.sx, s.sz)
                     + c.c_yz * anti(s.sy, s.sz);
  return 0.5 * (h + h.adjoint());  // kill round-off in the imaginary diagonal
}

TransitionShifts transition_shifts(double base_splitting_mhz, const ChannelCoefficients& c) {
  if (!(base_splitting_mhz > 0.0)) {
    throw ValidationError("base splitting must be positive");
  }
  const SpinOperators& s = spin_matrices();
  Eigen::Matrix3cd h = base_splitting_mhz * (s.sz * s.sz) + build_hamiltonian(c);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(h);
  const auto& evals = solver.eigenvalues();
  const auto& evecs = solver.eigenvectors();

  // The reference level is the eigenstate with the largest |<0|psi>|.
  int i0 = 0;
  double best = -1.0;
  for (int i = 0; i < 3; ++i) {
    const double overlap = std::abs(evecs(1, i));
    if (overlap > best) {
      best = overlap;
      i0 = i;
    }
  }
  double f[2];
  int k = 0;
  for (int i = 0; i < 3; ++i) {
    if (i != i0) f[k++] = evals[i] - evals[i0];
  }
  TransitionShifts out;
  out.f_plus = std::max(f[0], f[1]);
  out.f_minus = std::min(f[0], f[1]);
  return out;
}

}  // namespace spinstress
