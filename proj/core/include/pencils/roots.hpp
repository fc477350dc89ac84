#ifndef PENCILS_ROOTS_HPP
#define PENCILS_ROOTS_HPP

#include <utility>
#include <vector>

#include "pencils/kpoly.hpp"

namespace pencils {

/// All roots of p lying in its coefficient field K, with multiplicities,
/// sorted by coordinate order. p must be nonzero. Complete for any field
/// degree: Trager's method (shifted norm, bounded-degree factorization over
/// Z, gcd extraction in K[x]).
std::vector<std::pair<FieldElement, int>> k_rational_roots(const KPoly& p);

/// Divides out every K-rational root of p (with multiplicity) and returns
/// the root-free cofactor, scaled monic. Used to report witnesses for
/// ExtensionRequired.
KPoly deflate_k_rational_roots(const KPoly& p);

}  // namespace pencils

#endif
