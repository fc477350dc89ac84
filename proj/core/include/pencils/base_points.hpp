#ifndef PENCILS_BASE_POINTS_HPP
#define PENCILS_BASE_POINTS_HPP

#include "pencils/cluster.hpp"
#include "pencils/multipoly.hpp"

namespace pencils {

/// A pencil of plane projective curves spanned by two degree-d forms.
struct Pencil {
    FieldPtr field;
    MultiPoly F, G;
    int degree = 0;
};

/// Validates and packages a pair of generators. Throws InputError when the
/// forms are not homogeneous of equal positive degree or are proportional,
/// and FixedComponentError when they share a positive-degree factor.
Pencil make_pencil(const FieldPtr& field, MultiPoly F, MultiPoly G);

struct BasePointOptions {
    /// Re-check each generic multiplicity against a random pencil member.
    bool probe = false;
    unsigned long probe_seed = 1;
};

/// Computes the weighted cluster of base points, including infinitely near
/// ones, by resolving the pencil point by point. The sum of squared
/// multiplicities must reach degree^2; a shortfall means some base point is
/// not rational over the coefficient field, reported as
/// ExtensionRequiredError with a witness polynomial.
Cluster compute_base_points(const Pencil& pencil,
                            const BasePointOptions& options = {});

/// The pair (F, G) restricted to the affine chart of a plane point and
/// translated so the point sits at the origin.
std::pair<MultiPoly, MultiPoly> local_pair_at_root(const Pencil& pencil,
                                                   const ClusterPoint& root);

}  // namespace pencils

#endif
