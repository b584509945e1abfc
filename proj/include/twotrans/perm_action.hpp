#pragma once

#include <vector>

namespace twotrans {

/// Permutations of {0..n-1} given as image arrays; a finite group action is a
/// list of generator permutations.
using PointPerm = std::vector<int>;

std::vector<int> orbit_of_point(int start, const std::vector<PointPerm>& gens);

bool action_is_transitive(int n, const std::vector<PointPerm>& gens);

/// Transitivity on ordered pairs of distinct points.
bool action_is_two_transitive(int n, const std::vector<PointPerm>& gens);

/// No nontrivial invariant equivalence relation (requires a transitive
/// action on at least 2 points).
bool action_is_primitive(int n, const std::vector<PointPerm>& gens);

}  // namespace twotrans
