#ifndef PENCILS_LINEAR_SYSTEMS_HPP
#define PENCILS_LINEAR_SYSTEMS_HPP

#include <optional>
#include <vector>

#include "pencils/cluster.hpp"
#include "pencils/enumerator.hpp"
#include "pencils/matrix.hpp"

namespace pencils {

/// Linear conditions on the coefficients of a generic degree-e plane form,
/// accumulated from passing through the cluster with prescribed virtual
/// multiplicities.
struct ConditionSystem {
    int e = 0;
    int unknown_count = 0;  // (e+1)(e+2)/2 monomials of degree e
    KMatrix conditions;
};

/// The degree-e monomials in X, Y, Z, in the fixed term order. This is the
/// coefficient indexing used by ConditionSystem and unique_member.
std::vector<Monomial> monomials_of_degree(int e);

/// Builds the condition system of the candidate: the generic form is
/// transported to each cluster point (translation, then virtual transforms
/// dropping the prescribed v of each ancestor), and all terms of total
/// degree < v_p are required to vanish there.
ConditionSystem impose_cluster_conditions(const FieldPtr& field, int e,
                                          const Candidate& candidate,
                                          const Cluster& cluster);

/// unknown_count - rank - 1; the value -1 means the system is empty.
int projective_dimension(const ConditionSystem& sys);

/// The single curve of a zero-dimensional system, reassembled as a
/// degree-e form in canonical form. Throws InternalError unless the
/// projective dimension is exactly 0.
MultiPoly unique_member(const ConditionSystem& sys);

/// Actual multiplicities m_p(C) of a plane curve at every cluster point,
/// computed through strict transforms (drops equal to the multiplicities
/// found on the way down).
std::vector<int> actual_multiplicities(const Cluster& cluster,
                                       const MultiPoly& curve);

/// Algorithm filter: the unique member has an exceptional part exactly when
/// some actual multiplicity differs from the prescribed v_p.
bool has_exceptional_part(const MultiPoly& curve, const Candidate& candidate,
                          const Cluster& cluster);

/// Algorithm filter: Q is a component of C when the forms divide exactly.
bool is_component(const MultiPoly& Q, const MultiPoly& C);

}  // namespace pencils

#endif
