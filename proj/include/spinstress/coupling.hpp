#pragma once

#include <array>
#include <string>

#include "spinstress/types.hpp"

namespace spinstress {

// The six symmetry-allowed linear couplings between deformation and the
// S = 1 ground-state Hamiltonian. One set describes strain couplings
// (MHz/strain), the other stress couplings (MHz/GPa); both share the
// subscript labels 41, 43, 25, 26, 15, 16.

enum class CouplingKind { strain, stress };

const char* coupling_unit(CouplingKind kind);  // "MHz/strain" or "MHz/GPa"

struct Measurement {
  double value = 0.0;
  double error = 0.0;  // 1-sigma standard error, >= 0
};

struct CouplingSet {
  CouplingKind kind = CouplingKind::strain;
  Measurement p41, p43, p25, p26, p15, p16;

  // Parameter order used for all vector/matrix views: (41, 43, 25, 26, 15, 16).
  static constexpr std::array<const char*, 6> labels{"41", "43", "25", "26", "15", "16"};

  Vector6d values() const;
  Vector6d errors() const;

  static CouplingSet from_vectors(CouplingKind kind, const Vector6d& values,
                                  const Vector6d& errors = Vector6d::Zero());

  // All values finite, errors finite and non-negative.
  void validate() const;
};

}  // namespace spinstress
