#pragma once

#include "toric/rational.hpp"

#include <optional>
#include <vector>

namespace toric {

using RationalMatrix = std::vector<std::vector<Rational>>;  // row-major

/// Solves A x = b exactly. Returns nothing when the system is inconsistent
/// or A does not have full column rank.
std::optional<std::vector<Rational>> solve_exact(RationalMatrix a, std::vector<Rational> b);

Rational determinant(RationalMatrix a);

}  // namespace toric
