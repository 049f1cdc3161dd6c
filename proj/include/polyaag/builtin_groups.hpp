#ifndef POLYAAG_BUILTIN_GROUPS_HPP
#define POLYAAG_BUILTIN_GROUPS_HPP

#include "polyaag/group.hpp"

namespace polyaag {

// Ships group data for degrees 1, 2 and 3:
//   d=1: f = x - 1, O = Z, U = {+-1}            (infinite dihedral)
//   d=2: f = x^2 - x - 1, fundamental unit = golden ratio
//   d=3: f = x^3 - x - 1, fundamental unit = plastic number
// In each case the infinite-order unit is the root of f itself, so its
// action on the power basis is the companion matrix of f. Degrees 5 and 7
// need externally computed unit-group data and are accepted only via spec
// files.
GroupSpec builtin_group_spec(int degree);

bool has_builtin_group(int degree);

}  // namespace polyaag

#endif
