#include "spinstress/coupling.hpp"

#include <cmath>

#include "spinstress/errors.hpp"

namespace spinstress {

const char* coupling_unit(CouplingKind kind) {
  return kind == CouplingKind::strain ? "MHz/strain" : "MHz/GPa";
}

Vector6d CouplingSet::values() const {
  Vector6d v;
  v << p41.value, p43.value, p25.value, p26.value, p15.value, p16.value;
  return v;
}

Vector6d CouplingSet::errors() const {
  Vector6d v;
  v << p41.error, p43.error, p25.error, p26.error, p15.error, p16.error;
  return v;
}

CouplingSet CouplingSet::from_vectors(CouplingKind kind, const Vector6d& values,
                                      const Vector6d& errors) {
  CouplingSet s;
  s.kind = kind;
  Measurement* slots[6] = {&s.p41, &s.p43, &s.p25, &s.p26, &s.p15, &s.p16};
  for (int i = 0; i < 6; ++i) *slots[i] = {values[i], errors[i]};
  s.validate();
  return s;
}

void CouplingSet::validate() const {
  const Measurement* slots[6] = {&p41, &p43, &p25, &p26, &p15, &p16};
  for (int i = 0; i < 6; ++i) {
    if (!std::isfinite(slots[i]->value)) {
      throw ValidationError(std::string("coupling ") + labels[i] + " is not finite");
    }
    if (!std::isfinite(slots[i]->error) || slots[i]->error < 0.0) {
      throw ValidationError(std::string("coupling ") + labels[i] +
                            " has a negative or non-finite standard error");
    }
  }
}

}  // namespace spinstress
