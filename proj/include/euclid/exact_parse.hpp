#pragma once

#include <string>

#include "euclid/field.hpp"

namespace euclid {

// Parse an exact value string back into the field: the inverse of
// scalar_str. Handles rationals ("-3/2"), tower expressions
// ("1/2 + (3/2)*sqrt(2)", nested radicands), and series
// ("2*eps + (1 + sqrt(2))*eps^2 + O(eps^16)", "eps^(1/2)", "eps^-1").
template <class S>
S parse_exact(const std::string& text);

}  // namespace euclid
