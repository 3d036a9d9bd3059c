#pragma once

#include <string>

#include "euclid/execute.hpp"

namespace euclid {

// Deterministic SVG rendering of serialized geometry. Every verdict upstream
// is exact; decimal approximation happens only here, at the drawing boundary.
// Limited coordinates project through the standard part; infinite
// coordinates become border arrows labeled with their symbolic value;
// infinitesimal slopes draw as their standard-part line with the exact slope
// annotated.
std::string svg_from_objects(const std::vector<SerializedObj>& objects, FieldTag tag);

}  // namespace euclid
