#pragma once

#include "euclid/rational.hpp"
#include "euclid/tower.hpp"

namespace euclid {

// The L / Psi / Omega partition of an ordered field: limited-appreciable,
// infinite, infinitesimal, with zero split out. Zero and Infinitesimal
// together form Omega; everything except Infinite forms L.
enum class MagnitudeClass { Zero, Infinitesimal, LimitedAppreciable, Infinite };

const char* magnitude_class_name(MagnitudeClass c);

inline bool is_limited(MagnitudeClass c) { return c != MagnitudeClass::Infinite; }

// Archimedean backends only ever see Zero or LimitedAppreciable.
inline MagnitudeClass classify_value(const Rational& x) {
  return x.is_zero() ? MagnitudeClass::Zero : MagnitudeClass::LimitedAppreciable;
}

inline MagnitudeClass classify_value(const TowerReal& x) {
  return x.is_zero() ? MagnitudeClass::Zero : MagnitudeClass::LimitedAppreciable;
}

}  // namespace euclid
