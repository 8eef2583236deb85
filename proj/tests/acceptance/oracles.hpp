#pragma once

#include <vector>

#include "conecalc/rational.hpp"

namespace conecalc::testing {

/// Membership in cone(gens) by Caratheodory: v lies in the cone iff it is a
/// nonnegative combination of some linearly independent subset of the
/// generators. Exhaustive over subsets; meant for small inputs only.
/// Self-contained elimination, no use of the cone engine.
bool caratheodory_contains(const std::vector<QVector>& gens, const QVector& v);

/// Cone equality via the oracle: every generator of each lies in the other.
bool caratheodory_equal(const std::vector<QVector>& a, const std::vector<QVector>& b);

}  // namespace conecalc::testing
