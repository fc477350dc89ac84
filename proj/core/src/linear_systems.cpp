#include "pencils/linear_systems.hpp"

#include "pencils/errors.hpp"
#include "pencils/lincoeff.hpp"

namespace pencils {

std::vector<Monomial> monomials_of_degree(int e) {
    std::vector<Monomial> out;
    for (int i = e; i >= 0; --i)
        for (int j = e - i; j >= 0; --j) {
            Monomial m;
            m.e = {i, j, e - i - j};
            out.push_back(m);
        }
    return out;
}

namespace {

// exponent pair after setting variable `var` to 1, keeping relative order
Monomial drop_var(const Monomial& m, int var) {
    Monomial d;
    int k = 0;
    for (int i = 0; i < 3; ++i)
        if (i != var) d.e[k++] = m.e[i];
    return d;
}

void impose_at(const Cluster& cluster, const Candidate& candidate, int id,
               const LinCoeffPoly& local, KMatrix& conditions) {
    for (auto& row : local.low_degree_conditions(candidate.v[id]))
        conditions.append_row(row);
    for (int q : cluster.children(id)) {
        const ClusterPoint& child = cluster.point(q);
        std::vector<LinForm> extra;
        LinCoeffPoly next =
            local.blowup(child.chart, child.center, candidate.v[id], extra);
        for (auto& row : extra) conditions.append_row(row);
        impose_at(cluster, candidate, q, next, conditions);
    }
}

void mults_at(const Cluster& cluster, int id, const MultiPoly& local,
              std::vector<int>& out) {
    int m = local.multiplicity_at_origin();
    out[id] = m;
    for (int q : cluster.children(id)) {
        const ClusterPoint& child = cluster.point(q);
        MultiPoly next = blowup_transform(local, child.chart, child.center, m);
        mults_at(cluster, q, next, out);
    }
}

}  // namespace

ConditionSystem impose_cluster_conditions(const FieldPtr& field, int e,
                                          const Candidate& candidate,
                                          const Cluster& cluster) {
    if (candidate.e != e || static_cast<int>(candidate.v.size()) != cluster.size())
        throw InternalError("impose_cluster_conditions: mismatched candidate");
    auto monomials = monomials_of_degree(e);
    int n = static_cast<int>(monomials.size());
    ConditionSystem sys{e, n, KMatrix(field, 0, n)};

    for (int r : cluster.roots()) {
        const ClusterPoint& root = cluster.point(r);
        LinCoeffPoly generic(field, n);
        for (int u = 0; u < n; ++u)
            generic.add_unknown(drop_var(monomials[u], root.plane_var), u,
                                field->one());
        impose_at(cluster, candidate, r, generic.translate2(root.px, root.py),
                  sys.conditions);
    }
    return sys;
}

int projective_dimension(const ConditionSystem& sys) {
    return sys.unknown_count - rank_and_kernel(sys.conditions).rank - 1;
}

MultiPoly unique_member(const ConditionSystem& sys) {
    auto rk = rank_and_kernel(sys.conditions);
    if (static_cast<int>(rk.kernel.size()) != 1)
        throw InternalError("unique_member: projective dimension is not 0");
    const FieldPtr& field = sys.conditions.field();
    auto monomials = monomials_of_degree(sys.e);
    MultiPoly out(field, 3);
    for (int u = 0; u < sys.unknown_count; ++u)
        out.add_term(monomials[u], rk.kernel[0][u]);
    if (out.is_zero()) throw InternalError("unique_member: zero kernel vector");
    return out.canonical_form();
}

std::vector<int> actual_multiplicities(const Cluster& cluster,
                                       const MultiPoly& curve) {
    if (curve.is_zero() || curve.nvars() != 3)
        throw InternalError("actual_multiplicities: bad curve");
    std::vector<int> out(cluster.size(), 0);
    for (int r : cluster.roots()) {
        const ClusterPoint& root = cluster.point(r);
        MultiPoly local =
            curve.dehomogenize(root.plane_var).translate2(root.px, root.py);
        mults_at(cluster, r, local, out);
    }
    return out;
}

bool has_exceptional_part(const MultiPoly& curve, const Candidate& candidate,
                          const Cluster& cluster) {
    auto actual = actual_multiplicities(cluster, curve);
    for (int p = 0; p < cluster.size(); ++p)
        if (actual[p] != candidate.v[p]) return true;
    return false;
}

bool is_component(const MultiPoly& Q, const MultiPoly& C) {
    if (Q.is_zero() || C.is_zero())
        throw InternalError("is_component: zero polynomial");
    return C.divide_exact(Q).has_value();
}

}  // namespace pencils
