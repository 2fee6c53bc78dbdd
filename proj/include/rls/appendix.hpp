#pragma once

#include <array>

#include "rls/matrix.hpp"
#include "rls/tuple.hpp"

namespace rls {

/// The reference rank-7 matrices h1, h2, h3 over Q(zeta_3); the fourth slot
/// is (h1 h2 h3)^-1.
std::array<Matrix, 3> appendix_matrices();

/// h1, h2, h3 followed by the stored h4 = (h1 h2 h3)^-1.
std::array<Matrix, 4> appendix_fixture();

/// (h1, h2, h3, h4) on the labels x1 x2 x3 inf.
MonodromyTuple appendix_tuple();

}  // namespace rls
