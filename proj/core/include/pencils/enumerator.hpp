#ifndef PENCILS_ENUMERATOR_HPP
#define PENCILS_ENUMERATOR_HPP

#include <vector>

#include "pencils/cluster.hpp"

namespace pencils {

/// A candidate pair W = (e*H, (v_p)): a degree-e class together with
/// virtual multiplicities at the cluster points.
struct Candidate {
    int e = 0;
    std::vector<int> v;  // indexed by cluster point id
};

/// The five defining conditions of a candidate on the plane, where
/// L = e*H gives L^2 = e^2 and K*L = -3e:
///   (a) 0 <= v_p <= e;
///   (b) v_p >= sum of v_q over q proximate to p;
///   (c) e^2 <= sum v_p^2;
///   (d) either (-3e + sum v_p >= 0 and e^2 - 3e + 2 >= sum v_p(v_p - 1)),
///       or (e^2 = sum v_p^2 and -3e + sum v_p = -2),
///       or (-3e + sum v_p = e^2 - sum v_p^2 = -1);
///   (e) e*d = sum v_p * m_p.
bool candidate_is_valid(const Cluster& cluster, int d, const Candidate& w);

/// All candidates of degree e for a pencil of degree d, in lexicographic
/// order of the multiplicity vector. Complete and duplicate-free.
std::vector<Candidate> enumerate_candidates(const Cluster& cluster, int e, int d);

/// Effective classes of degree e. Degenerate on the plane: the single class
/// e*H, represented by its degree. Kept as a seam for other surfaces.
std::vector<int> effective_classes(int e);

}  // namespace pencils

#endif
