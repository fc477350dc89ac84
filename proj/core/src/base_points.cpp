#include "pencils/base_points.hpp"

#include <algorithm>
#include <random>

#include "pencils/errors.hpp"
#include "pencils/roots.hpp"

namespace pencils {

namespace {

// f viewed as a univariate polynomial in `main`, with coefficients that are
// univariate KPoly in the other variable; outer index is the main exponent
std::vector<KPoly> to_nested(const MultiPoly& f, int main) {
    int other = 1 - main;
    std::vector<std::vector<FieldElement>> raw;
    for (auto& [m, c] : f.terms()) {
        int k = m.e[main];
        if (static_cast<int>(raw.size()) <= k) raw.resize(k + 1);
        int j = m.e[other];
        auto& row = raw[static_cast<size_t>(k)];
        if (static_cast<int>(row.size()) <= j)
            row.resize(j + 1, f.field()->zero());
        row[j] = c;
    }
    std::vector<KPoly> out;
    out.reserve(raw.size());
    for (auto& row : raw) out.emplace_back(f.field(), std::move(row));
    return out;
}

int degree_in(const MultiPoly& f, int var) {
    int d = -1;
    for (auto& [m, c] : f.terms()) d = std::max(d, m.e[var]);
    return d;
}

// leading coefficient of f in `var` as a polynomial in the other variable
KPoly leading_in(const MultiPoly& f, int var) {
    auto nested = to_nested(f, var);
    return nested.empty() ? KPoly(f.field()) : nested.back();
}

KPoly specialize_other(const MultiPoly& f, int main, const FieldElement& t) {
    auto nested = to_nested(f, 1 - main);  // coefficients in `main`
    KPoly acc(f.field());
    // Horner in the specialized variable
    for (size_t i = nested.size(); i-- > 0;) acc = acc * t + nested[i];
    return acc;
}

// Res_{elim}(f, g) as a univariate polynomial in the kept variable, by exact
// interpolation at nodes where neither leading coefficient degenerates.
KPoly bivariate_resultant(const MultiPoly& f, const MultiPoly& g, int elim) {
    const FieldPtr& field = f.field();
    int kept = 1 - elim;
    int df_e = std::max(0, degree_in(f, elim));
    int dg_e = std::max(0, degree_in(g, elim));
    int df_k = std::max(0, degree_in(f, kept));
    int dg_k = std::max(0, degree_in(g, kept));
    int bound = dg_e * df_k + df_e * dg_k;

    KPoly lf = leading_in(f, elim);
    KPoly lg = leading_in(g, elim);

    std::vector<FieldElement> nodes;
    std::vector<FieldElement> values;
    long t = 0;
    long step = 0;
    while (static_cast<int>(nodes.size()) <= bound) {
        // nodes 0, 1, -1, 2, -2, ... skipping degenerate ones
        t = (step % 2 == 1) ? (step + 1) / 2 : -(step + 1) / 2;
        ++step;
        if (step > 4L * (bound + df_k + dg_k) + 16)
            throw InternalError("bivariate_resultant: node search exhausted");
        FieldElement tv = field->from_int(t);
        if (lf.eval(tv).is_zero() || lg.eval(tv).is_zero()) continue;
        KPoly fs = specialize_other(f, elim, tv);
        KPoly gs = specialize_other(g, elim, tv);
        nodes.push_back(tv);
        values.push_back(kpoly_resultant(fs, gs));
    }

    // Newton interpolation over K
    size_t m = nodes.size();
    std::vector<FieldElement> dd = values;
    for (size_t level = 1; level < m; ++level)
        for (size_t i = m; i-- > level;)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
    KPoly result(field);
    KPoly basis = KPoly::constant(field->one());
    for (size_t k = 0; k < m; ++k) {
        result = result + basis * dd[k];
        KPoly lin(field, {-nodes[k], field->one()});
        basis = basis * lin;
    }
    return result;
}

// restriction of F to the line Z = 0 as a polynomial in X (with Y = 1)
KPoly at_infinity(const MultiPoly& F) {
    std::vector<FieldElement> coeffs;
    for (auto& [m, c] : F.terms()) {
        if (m.e[2] != 0) continue;
        int k = m.e[0];
        if (static_cast<int>(coeffs.size()) <= k)
            coeffs.resize(k + 1, F.field()->zero());
        coeffs[k] = c;
    }
    return KPoly(F.field(), std::move(coeffs));
}

int min_mult(const MultiPoly& f, const MultiPoly& g) {
    return std::min(f.multiplicity_at_origin(), g.multiplicity_at_origin());
}

KPoly axis_restriction(const MultiPoly& f, const FieldPtr& field) {
    return KPoly(field, f.restrict_to_axis(0));
}

struct Resolver {
    const FieldPtr& field;
    Cluster& cluster;
    std::vector<std::string>& witnesses;
    int depth_limit;
    bool probe = false;
    std::mt19937_64 rng;

    void check_probe(const MultiPoly& f, const MultiPoly& g, int m) {
        if (!probe) return;
        std::uniform_int_distribution<long> dist(1, 997);
        for (int attempt = 0; attempt < 8; ++attempt) {
            MultiPoly member = f * field->from_int(dist(rng)) +
                               g * field->from_int(dist(rng));
            if (member.is_zero()) continue;
            int pm = member.multiplicity_at_origin();
            if (pm < m)
                throw InternalError("probe found a member below the generic "
                                    "multiplicity");
            if (pm == m) return;
        }
        throw InternalError("probe never matched the generic multiplicity");
    }

    // f, g are local with the point `id` at the origin; its multiplicity is
    // already recorded. Finds and resolves the points in its first
    // neighbourhood.
    void resolve(int id, const MultiPoly& f, const MultiPoly& g, int depth) {
        if (depth > depth_limit)
            throw NonTerminationError("blow-up depth guard exceeded");
        int m = cluster.point(id).generic_mult;
        check_probe(f, g, m);

        MultiPoly f1 = blowup_transform(f, BlowupChart::XPrimary, field->zero(), m);
        MultiPoly g1 = blowup_transform(g, BlowupChart::XPrimary, field->zero(), m);
        KPoly a = axis_restriction(f1, field);
        KPoly b = axis_restriction(g1, field);
        KPoly h = kpoly_gcd(a, b);
        if (h.is_zero())
            throw InternalError("both restrictions to the exceptional line vanish");
        if (h.degree() >= 1) {
            for (auto& [c, mult] : k_rational_roots(h)) {
                MultiPoly fc = blowup_transform(f, BlowupChart::XPrimary, c, m);
                MultiPoly gc = blowup_transform(g, BlowupChart::XPrimary, c, m);
                int mc = min_mult(fc, gc);
                int child = cluster.add_child(id, BlowupChart::XPrimary, c, mc);
                resolve(child, fc, gc, depth + 1);
            }
            KPoly leftover = deflate_k_rational_roots(h);
            if (leftover.degree() >= 1)
                witnesses.push_back(leftover.to_string("t"));
        }

        // the remaining direction x = 0, visible only in the other chart
        MultiPoly f2 = blowup_transform(f, BlowupChart::YPrimary, field->zero(), m);
        MultiPoly g2 = blowup_transform(g, BlowupChart::YPrimary, field->zero(), m);
        if (f2.coeff(Monomial{}).is_zero() && g2.coeff(Monomial{}).is_zero()) {
            int mc = min_mult(f2, g2);
            int child = cluster.add_child(id, BlowupChart::YPrimary,
                                          field->zero(), mc);
            resolve(child, f2, g2, depth + 1);
        }
    }
};

}  // namespace

Pencil make_pencil(const FieldPtr& field, MultiPoly F, MultiPoly G) {
    if (F.nvars() != 3 || G.nvars() != 3)
        throw InputError("pencil generators must be forms in X, Y, Z");
    if (F.is_zero() || G.is_zero())
        throw InputError("pencil generators must be nonzero");
    if (!F.is_homogeneous() || !G.is_homogeneous())
        throw InputError("pencil generators must be homogeneous");
    if (F.total_degree() != G.total_degree())
        throw InputError("pencil generators must have equal degrees");
    if (F.total_degree() < 1)
        throw InputError("pencil generators must have positive degree");
    if (F.canonical_form() == G.canonical_form())
        throw InputError("pencil generators are proportional");

    // shared factor of Z
    bool zf = at_infinity(F).is_zero(), zg = at_infinity(G).is_zero();
    if (zf && zg)
        throw FixedComponentError("generators share the component Z");

    MultiPoly f = F.dehomogenize(2);
    MultiPoly g = G.dehomogenize(2);

    // shared factor free of y: gcd of all coefficient polynomials in x
    KPoly content(field);
    for (auto& c : to_nested(f, 1)) content = kpoly_gcd(content, c);
    for (auto& c : to_nested(g, 1)) content = kpoly_gcd(content, c);
    if (content.degree() >= 1)
        throw FixedComponentError("generators share a component free of Y");

    // shared factor with positive y-degree
    if (degree_in(f, 1) >= 1 || degree_in(g, 1) >= 1) {
        KPoly rx = bivariate_resultant(f, g, 1);
        if (rx.is_zero())
            throw FixedComponentError("generators share a component");
    }

    Pencil p;
    p.field = field;
    p.F = std::move(F);
    p.G = std::move(G);
    p.degree = p.F.total_degree();
    return p;
}

std::pair<MultiPoly, MultiPoly> local_pair_at_root(const Pencil& pencil,
                                                   const ClusterPoint& root) {
    MultiPoly f = pencil.F.dehomogenize(root.plane_var);
    MultiPoly g = pencil.G.dehomogenize(root.plane_var);
    return {f.translate2(root.px, root.py), g.translate2(root.px, root.py)};
}

Cluster compute_base_points(const Pencil& pencil, const BasePointOptions& options) {
    const FieldPtr& field = pencil.field;
    int d = pencil.degree;
    Cluster cluster(field);
    std::vector<std::string> witnesses;

    Resolver resolver{field, cluster, witnesses, 4 * d * d,
                      options.probe, std::mt19937_64(options.probe_seed)};

    MultiPoly f = pencil.F.dehomogenize(2);
    MultiPoly g = pencil.G.dehomogenize(2);

    // affine base points: K-rational roots of Res_y give the candidate
    // x-coordinates; the gcd over each one gives the y-coordinates
    KPoly rx = bivariate_resultant(f, g, 1);
    if (rx.is_zero()) throw InternalError("vanishing resultant for a valid pencil");
    if (rx.degree() >= 1) {
        for (auto& [x0, xmult] : k_rational_roots(rx)) {
            KPoly fy = specialize_other(f, 1, x0);
            KPoly gy = specialize_other(g, 1, x0);
            KPoly h = kpoly_gcd(fy, gy);
            if (h.is_zero()) {
                // the whole line x = x0 would be a shared component
                throw InternalError("specialized generators both vanish");
            }
            if (h.degree() < 1) continue;
            for (auto& [y0, ymult] : k_rational_roots(h)) {
                auto fp = f.translate2(x0, y0);
                auto gp = g.translate2(x0, y0);
                int m = min_mult(fp, gp);
                int id = cluster.add_root(2, x0, y0, m);
                resolver.resolve(id, fp, gp, 0);
            }
            KPoly leftover = deflate_k_rational_roots(h);
            if (leftover.degree() >= 1)
                witnesses.push_back(leftover.to_string("t"));
        }
        KPoly rx_left = deflate_k_rational_roots(rx);
        if (rx_left.degree() >= 1) witnesses.push_back(rx_left.to_string("t"));
    }

    // base points on the line Z = 0 with Y != 0, in the chart Y = 1
    KPoly pf = at_infinity(pencil.F);
    KPoly pg = at_infinity(pencil.G);
    KPoly hinf = kpoly_gcd(pf, pg);
    if (hinf.degree() >= 1) {
        MultiPoly fy = pencil.F.dehomogenize(1);
        MultiPoly gy = pencil.G.dehomogenize(1);
        for (auto& [t0, tmult] : k_rational_roots(hinf)) {
            auto fp = fy.translate2(t0, field->zero());
            auto gp = gy.translate2(t0, field->zero());
            int m = min_mult(fp, gp);
            int id = cluster.add_root(1, t0, field->zero(), m);
            resolver.resolve(id, fp, gp, 0);
        }
        KPoly leftover = deflate_k_rational_roots(hinf);
        if (leftover.degree() >= 1)
            witnesses.push_back(leftover.to_string("t"));
    }

    // the remaining point (1 : 0 : 0), in the chart X = 1
    Monomial xd;
    xd.e[0] = d;
    if (pencil.F.coeff(xd).is_zero() && pencil.G.coeff(xd).is_zero()) {
        MultiPoly fx = pencil.F.dehomogenize(0);
        MultiPoly gx = pencil.G.dehomogenize(0);
        int m = min_mult(fx, gx);
        int id = cluster.add_root(0, field->zero(), field->zero(), m);
        resolver.resolve(id, fx, gx, 0);
    }

    long checksum = cluster.multiplicity_checksum();
    if (checksum < static_cast<long>(d) * d) {
        std::string w;
        for (auto& s : witnesses) {
            if (!w.empty()) w += "; ";
            w += s;
        }
        if (w.empty())
            throw InternalError("cluster checksum short with no witness");
        throw ExtensionRequiredError(w);
    }
    cluster.validate(d);
    return cluster;
}

}  // namespace pencils
