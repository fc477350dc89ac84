#include "pencils/roots.hpp"

#include <algorithm>
#include <set>

#include "pencils/errors.hpp"
#include "pencils/zfactor.hpp"

namespace pencils {

namespace {

using QP = std::vector<Rational>;  // constant first, trimmed

void qtrim(QP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// determinant of a square rational matrix by Gaussian elimination
Rational qdet(std::vector<std::vector<Rational>> m) {
    size_t n = m.size();
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv = 1 / m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] * inv;
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

// Norm_{K/Q}(a) = det of multiplication-by-a in the power basis
Rational field_norm(const FieldElement& a) {
    const NumberField& k = *a.field();
    int n = k.degree();
    if (n == 1) return a.coords()[0];
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    FieldElement cur = a;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) m[i][j] = cur.coords()[i];
        if (j + 1 < n) cur = cur * k.generator();
    }
    return qdet(std::move(m));
}

// Newton interpolation through (nodes[i], values[i]), exact over Q
QP interpolate(const std::vector<Rational>& nodes, std::vector<Rational> values) {
    size_t m = nodes.size();
    // divided differences in place
    for (size_t level = 1; level < m; ++level)
        for (size_t i = m; i-- > level;)
            values[i] = (values[i] - values[i - 1]) / (nodes[i] - nodes[i - level]);
    // assemble sum of dd[k] * prod_{j<k} (x - nodes[j])
    QP result;
    QP basis{Rational(1)};
    for (size_t k = 0; k < m; ++k) {
        result.resize(std::max(result.size(), basis.size()), Rational(0));
        for (size_t i = 0; i < basis.size(); ++i) result[i] += values[k] * basis[i];
        // basis *= (x - nodes[k])
        basis.insert(basis.begin(), Rational(0));
        for (size_t i = 0; i + 1 < basis.size(); ++i) basis[i] -= nodes[k] * basis[i + 1];
    }
    qtrim(result);
    return result;
}

bool q_squarefree(QP f) {
    QP d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
    qtrim(d);
    qtrim(f);
    while (!d.empty()) {
        // f mod d
        while (f.size() >= d.size() && !f.empty()) {
            Rational c = f.back() / d.back();
            size_t off = f.size() - d.size();
            for (size_t i = 0; i < d.size(); ++i) f[off + i] -= c * d[i];
            qtrim(f);
        }
        std::swap(f, d);
    }
    return f.size() <= 1;
}

zfactor::ZPoly clear_denominators(const QP& f) {
    mpz_class den(1);
    for (auto& c : f)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    zfactor::ZPoly z;
    for (auto& c : f) {
        Rational s = c * den;
        z.push_back(s.get_num());
    }
    return zfactor::primitive_part(zfactor::normalize(std::move(z)));
}

// nodes 0, 1, -1, 2, -2, ...
Rational node_at(size_t i) {
    long k = static_cast<long>((i + 1) / 2);
    return Rational(i % 2 == 1 ? k : -k);
}

std::vector<FieldElement> roots_of_squarefree(const KPoly& ps) {
    const FieldPtr& field = ps.field();
    int n = field->degree();
    std::vector<FieldElement> roots;

    if (ps.degree() < 1) return roots;
    if (ps.degree() == 1) {
        roots.push_back(-(ps.coeff(0) / ps.coeff(1)));
        return roots;
    }

    if (n == 1) {
        QP q;
        for (auto& c : ps.coeffs()) q.push_back(c.coords()[0]);
        qtrim(q);
        for (auto& fac : zfactor::factors_up_to_degree(clear_denominators(q), 1)) {
            if (zfactor::degree(fac) != 1) continue;
            roots.push_back(field->from_rational(Rational(-fac[0]) / Rational(fac[1])));
        }
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    FieldElement alpha = field->generator();
    for (int s = 0; s < 100; ++s) {
        // qs(x) = ps(x - s*alpha)
        KPoly qs = ps.shift(-(alpha * field->from_int(s)));
        int norm_deg = n * qs.degree();
        std::vector<Rational> nodes, values;
        for (int i = 0; i <= norm_deg; ++i) {
            nodes.push_back(node_at(i));
            values.push_back(field_norm(qs.eval(field->from_rational(nodes.back()))));
        }
        QP norm = interpolate(nodes, std::move(values));
        if (!q_squarefree(norm)) continue;

        for (auto& fac : zfactor::factors_up_to_degree(clear_denominators(norm), n)) {
            // lift the factor to K[x], undo the shift, and take a gcd
            std::vector<FieldElement> fc;
            for (auto& c : fac) fc.push_back(field->from_rational(Rational(c)));
            KPoly qk = KPoly(field, std::move(fc)).shift(alpha * field->from_int(s));
            KPoly g = kpoly_gcd(ps, qk);
            if (g.degree() == 1) roots.push_back(-g.coeff(0));
        }
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    throw InternalError("k_rational_roots: no squarefree shifted norm found");
}

}  // namespace

std::vector<std::pair<FieldElement, int>> k_rational_roots(const KPoly& p) {
    if (p.is_zero()) throw InternalError("k_rational_roots of zero polynomial");
    KPoly sqfree = p;
    KPoly g = kpoly_gcd(p, p.derivative());
    if (g.degree() > 0) sqfree = p.divide_exact(g);
    sqfree = sqfree.monic();

    std::vector<std::pair<FieldElement, int>> out;
    for (auto& r : roots_of_squarefree(sqfree)) {
        KPoly lin(p.field(), {-r, p.field()->one()});
        int mult = 0;
        KPoly cur = p;
        while (cur.degree() >= 1) {
            KPoly q;
            KPoly rem = cur.divmod(lin, q);
            if (!rem.is_zero()) break;
            ++mult;
            cur = std::move(q);
        }
        if (mult == 0)
            throw InternalError("k_rational_roots: reported root does not divide");
        out.emplace_back(r, mult);
    }
    return out;
}

KPoly deflate_k_rational_roots(const KPoly& p) {
    KPoly cur = p;
    for (auto& [r, mult] : k_rational_roots(p)) {
        KPoly lin(p.field(), {-r, p.field()->one()});
        for (int i = 0; i < mult; ++i) cur = cur.divide_exact(lin);
    }
    return cur.monic();
}

}  // namespace pencils
