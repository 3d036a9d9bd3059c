#include "euclid/magnitude.hpp"

namespace euclid {

const char* magnitude_kind_name(MagnitudeKind k) {
  switch (k) {
    case MagnitudeKind::Segment: return "segment";
    case MagnitudeKind::Angle: return "angle";
    case MagnitudeKind::TriangleArea: return "triangle-area";
  }
  return "?";
}

const char* axiom_name(AxiomId id) {
  switch (id) {
    case AxiomId::E1: return "E1";
    case AxiomId::E2: return "E2";
    case AxiomId::E3: return "E3";
    case AxiomId::E4: return "E4";
    case AxiomId::E5: return "E5";
    case AxiomId::CN1: return "CN1";
    case AxiomId::CN2: return "CN2";
    case AxiomId::CN3: return "CN3";
    case AxiomId::CN5: return "CN5";
    case AxiomId::Trichotomy: return "Trichotomy";
  }
  return "?";
}

}  // namespace euclid
