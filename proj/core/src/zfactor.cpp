#include "pencils/zfactor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "pencils/errors.hpp"

namespace pencils::zfactor {

namespace {

// ---------------------------------------------------------------------------
// arithmetic over F_l, l an odd word-sized prime
// ---------------------------------------------------------------------------

using u64 = std::uint64_t;
using FPoly = std::vector<u64>;  // constant first, no trailing zeros

u64 addm(u64 a, u64 b, u64 l) { u64 s = a + b; return s >= l ? s - l : s; }
u64 subm(u64 a, u64 b, u64 l) { return a >= b ? a - b : a + l - b; }
u64 mulm(u64 a, u64 b, u64 l) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % l);
}
u64 powm(u64 a, u64 e, u64 l) {
    u64 r = 1 % l;
    while (e) {
        if (e & 1) r = mulm(r, a, l);
        a = mulm(a, a, l);
        e >>= 1;
    }
    return r;
}
u64 invm(u64 a, u64 l) { return powm(a % l, l - 2, l); }

int fdeg(const FPoly& f) { return static_cast<int>(f.size()) - 1; }

FPoly ftrim(FPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

FPoly fmul(const FPoly& a, const FPoly& b, u64 l) {
    if (a.empty() || b.empty()) return {};
    FPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = addm(r[i + j], mulm(a[i], b[j], l), l);
    }
    return ftrim(std::move(r));
}

// remainder of a mod b, b nonzero
FPoly fmod(FPoly a, const FPoly& b, u64 l) {
    u64 inv = invm(b.back(), l);
    while (fdeg(a) >= fdeg(b)) {
        u64 c = mulm(a.back(), inv, l);
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[off + i] = subm(a[off + i], mulm(c, b[i], l), l);
        a = ftrim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

FPoly fdivexact(FPoly a, const FPoly& b, u64 l) {
    u64 inv = invm(b.back(), l);
    FPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (fdeg(a) >= fdeg(b)) {
        u64 c = mulm(a.back(), inv, l);
        size_t off = a.size() - b.size();
        q[off] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[off + i] = subm(a[off + i], mulm(c, b[i], l), l);
        a = ftrim(std::move(a));
        if (a.empty()) break;
    }
    return ftrim(std::move(q));
}

FPoly fmonic(FPoly f, u64 l) {
    if (f.empty()) return f;
    u64 inv = invm(f.back(), l);
    for (auto& c : f) c = mulm(c, inv, l);
    return f;
}

FPoly fgcd(FPoly a, FPoly b, u64 l) {
    while (!b.empty()) {
        FPoly r = fmod(a, b, l);
        a = std::move(b);
        b = std::move(r);
    }
    return fmonic(std::move(a), l);
}

FPoly fderiv(const FPoly& f, u64 l) {
    FPoly d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(mulm(f[i], i % l, l));
    return ftrim(std::move(d));
}

FPoly fpowmod(FPoly base, mpz_class e, const FPoly& m, u64 l) {
    FPoly r{1};
    base = fmod(std::move(base), m, l);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = fmod(fmul(r, base, l), m, l);
        base = fmod(fmul(base, base, l), m, l);
        e >>= 1;
    }
    return r;
}

// distinct-degree decomposition of a squarefree monic f: (factor product, degree) pairs
std::vector<std::pair<FPoly, int>> ddf(FPoly f, u64 l) {
    std::vector<std::pair<FPoly, int>> out;
    FPoly x{0, 1};
    FPoly h = x;  // x^(l^i) mod f
    int i = 0;
    while (fdeg(f) > 0) {
        ++i;
        if (2 * i > fdeg(f)) {
            out.emplace_back(f, fdeg(f));
            break;
        }
        h = fpowmod(std::move(h), mpz_class(static_cast<unsigned long>(l)), f, l);
        FPoly hx = h;
        // h - x
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = subm(hx[1], 1, l);
        hx = ftrim(std::move(hx));
        FPoly g = fgcd(f, hx, l);
        if (fdeg(g) > 0) {
            out.emplace_back(g, i);
            f = fdivexact(std::move(f), g, l);
            h = fmod(std::move(h), f, l);
        }
    }
    return out;
}

// equal-degree splitting (Cantor-Zassenhaus), f = product of irreducibles of degree d
void edf(const FPoly& f, int d, u64 l, std::mt19937_64& rng, std::vector<FPoly>& out) {
    if (fdeg(f) == d) {
        out.push_back(fmonic(f, l));
        return;
    }
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(l), static_cast<unsigned long>(d));
    mpz_class e = (q - 1) / 2;
    for (;;) {
        FPoly a(fdeg(f), 0);
        for (auto& c : a) c = rng() % l;
        a = ftrim(std::move(a));
        if (fdeg(a) < 1) continue;
        FPoly b = fpowmod(a, e, f, l);
        if (b.empty()) continue;
        b[0] = subm(b[0], 1, l);
        b = ftrim(std::move(b));
        FPoly g = fgcd(f, b, l);
        if (fdeg(g) > 0 && fdeg(g) < fdeg(f)) {
            edf(g, d, l, rng, out);
            edf(fdivexact(f, g, l), d, l, rng, out);
            return;
        }
    }
}

std::vector<FPoly> factor_mod_p(const FPoly& f, u64 l) {
    std::mt19937_64 rng(0x5eedf00du);
    std::vector<FPoly> out;
    for (auto& [prod, d] : ddf(fmonic(f, l), l)) edf(prod, d, l, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// lifting and recombination over Z
// ---------------------------------------------------------------------------

using ZP = ZPoly;

mpz_class symmetric_mod(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

ZP zsym(ZP f, const mpz_class& m) {
    for (auto& c : f) c = symmetric_mod(c, m);
    return normalize(std::move(f));
}

ZP zmul_mod(const ZP& a, const ZP& b, const mpz_class& m) {
    return zsym(multiply(a, b), m);
}

// remainder of a modulo monic b, coefficients mod m
ZP zmod_monic(ZP a, const ZP& b, const mpz_class& m) {
    while (degree(a) >= degree(b)) {
        mpz_class c = a.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
        a = zsym(std::move(a), m);
        if (a.empty()) break;
    }
    return a;
}

// Linear Hensel lifting: g monic squarefree mod l with factorization `facs`
// (monic, pairwise coprime mod l); lifts to monic factors mod l^k with
// g == prod(facs) (mod l^k).
std::vector<ZP> hensel_lift(const ZP& g, std::vector<FPoly> facs, u64 l, int k) {
    mpz_class lz(static_cast<unsigned long>(l));
    size_t n = facs.size();
    std::vector<ZP> gi(n);
    for (size_t i = 0; i < n; ++i)
        for (u64 c : facs[i]) gi[i].push_back(mpz_class(static_cast<unsigned long>(c)));

    if (n == 1) {
        mpz_class lk;
        mpz_pow_ui(lk.get_mpz_t(), lz.get_mpz_t(), static_cast<unsigned long>(k));
        return {zsym(g, lk)};
    }

    // Bezout cofactors mod l: u_i = (prod_{j!=i} g_j)^(-1) mod g_i
    std::vector<FPoly> ui(n);
    for (size_t i = 0; i < n; ++i) {
        FPoly p{1};
        for (size_t j = 0; j < n; ++j)
            if (j != i) p = fmod(fmul(p, facs[j], l), facs[i], l);
        // invert p mod facs[i] via extended Euclid in F_l[x]
        FPoly r0 = facs[i], r1 = p, s0 = {}, s1 = {1};
        while (fdeg(r1) > 0) {
            FPoly q = fdivexact(r0, r1, l);
            // handle non-exact: use fmod pair
            FPoly r2 = fmod(r0, r1, l);
            // s2 = s0 - q*s1
            FPoly qs = fmul(q, s1, l);
            FPoly s2 = s0;
            s2.resize(std::max(s2.size(), qs.size()), 0);
            for (size_t t = 0; t < qs.size(); ++t) s2[t] = subm(s2[t], qs[t], l);
            s2 = ftrim(std::move(s2));
            r0 = std::move(r1); r1 = std::move(r2);
            s0 = std::move(s1); s1 = std::move(s2);
        }
        if (r1.empty()) throw InternalError("hensel_lift: factors not coprime mod l");
        u64 inv = invm(r1[0], l);
        for (auto& c : s1) c = mulm(c, inv, l);
        ui[i] = fmod(std::move(s1), facs[i], l);
    }

    mpz_class lk = lz;  // l^k_cur
    for (int step = 1; step < k; ++step) {
        mpz_class lnext = lk * lz;
        // e = (g - prod gi) / l^step, reduced mod l
        ZP prod{mpz_class(1)};
        for (auto& gf : gi) prod = multiply(prod, gf);
        ZP e;
        {
            ZP diff = g;
            diff.resize(std::max(diff.size(), prod.size()), mpz_class(0));
            for (size_t i = 0; i < prod.size(); ++i) diff[i] -= prod[i];
            diff = normalize(std::move(diff));
            for (auto& c : diff) {
                mpz_class q = c / lk;
                if (q * lk != c) throw InternalError("hensel_lift: inexact error division");
                c = q;
            }
            e = zsym(std::move(diff), lz);
        }
        if (e.empty()) { lk = lnext; continue; }
        for (size_t i = 0; i < n; ++i) {
            // delta_i = (u_i * e) mod g_i, mod l
            FPoly ef(e.size());
            for (size_t t = 0; t < e.size(); ++t) {
                mpz_class c = e[t] % lz;
                if (c < 0) c += lz;
                ef[t] = c.get_ui();
            }
            FPoly delta = fmod(fmul(ui[i], ftrim(std::move(ef)), l), facs[i], l);
            ZP& target = gi[i];
            if (target.size() < delta.size() + 1)
                throw InternalError("hensel_lift: delta degree overflow");
            for (size_t t = 0; t < delta.size(); ++t)
                target[t] += lk * mpz_class(static_cast<unsigned long>(delta[t]));
            target = zsym(std::move(target), lnext);
        }
        lk = lnext;
    }
    mpz_class lfinal = lk;
    for (auto& gf : gi) gf = zsym(std::move(gf), lfinal);
    return gi;
}

mpz_class norm2_ceil(const ZP& f) {
    mpz_class s = 0;
    for (auto& c : f) s += c * c;
    mpz_class r = sqrt(s);
    if (r * r < s) ++r;
    return r;
}

// factor search for a monic squarefree integer polynomial
std::vector<ZP> monic_factors_up_to_degree(ZP g, int max_deg) {
    std::vector<ZP> result;
    if (degree(g) < 1) return result;
    max_deg = std::min(max_deg, degree(g));

    // prime selection: l coprime to disc (g squarefree mod l)
    u64 l = 0;
    mpz_class cand(101);
    for (int tries = 0; tries < 1000; ++tries) {
        u64 p = cand.get_ui();
        FPoly gm(g.size());
        bool ok = true;
        for (size_t i = 0; i < g.size(); ++i) {
            mpz_class c = g[i] % static_cast<unsigned long>(p);
            if (c < 0) c += static_cast<unsigned long>(p);
            gm[i] = c.get_ui();
        }
        gm = ftrim(std::move(gm));
        ok = fdeg(gm) == degree(g);  // monic, so always true unless p | 1
        if (ok) {
            FPoly d = fderiv(gm, p);
            ok = fdeg(fgcd(gm, d, p)) == 0;
        }
        if (ok) { l = p; break; }
        mpz_nextprime(cand.get_mpz_t(), cand.get_mpz_t());
    }
    if (l == 0) throw InternalError("factor search: no good prime found");

    FPoly gm(g.size());
    for (size_t i = 0; i < g.size(); ++i) {
        mpz_class c = g[i] % static_cast<unsigned long>(l);
        if (c < 0) c += static_cast<unsigned long>(l);
        gm[i] = c.get_ui();
    }
    std::vector<FPoly> modular = factor_mod_p(ftrim(std::move(gm)), l);

    // Mignotte bound for degree <= max_deg monic factors
    mpz_class bound = norm2_ceil(g);
    bound <<= max_deg;
    mpz_class target = 2 * bound + 1;
    int k = 1;
    mpz_class lk(static_cast<unsigned long>(l));
    while (lk < target) { lk *= static_cast<unsigned long>(l); ++k; }

    std::vector<ZP> lifted = hensel_lift(g, modular, l, k);
    std::vector<int> active(lifted.size());
    for (size_t i = 0; i < active.size(); ++i) active[i] = static_cast<int>(i);

    // subset recombination, smallest subsets first
    auto next_combination = [](std::vector<size_t>& idx, size_t n) {
        size_t k = idx.size();
        for (size_t i = k; i-- > 0;) {
            if (idx[i] < n - k + i) {
                ++idx[i];
                for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    size_t size = 1;
    while (size <= active.size()) {
        bool found = false;
        std::vector<size_t> idx(size);
        for (size_t i = 0; i < size; ++i) idx[i] = i;
        do {
            int total = 0;
            for (size_t i : idx) total += degree(lifted[active[i]]);
            if (total > max_deg || total >= degree(g)) continue;
            ZP h{mpz_class(1)};
            for (size_t i : idx) h = zmul_mod(h, lifted[active[i]], lk);
            ZP q;
            if (!h.empty() && divide_exact(g, h, q)) {
                result.push_back(h);
                std::vector<int> rest;
                for (size_t a = 0; a < active.size(); ++a)
                    if (std::find(idx.begin(), idx.end(), a) == idx.end())
                        rest.push_back(active[a]);
                active = std::move(rest);
                g = std::move(q);
                found = true;
                break;
            }
        } while (next_combination(idx, active.size()));
        if (!found) ++size;  // on success retry the same subset size on the cofactor
    }
    if (degree(g) >= 1 && degree(g) <= max_deg) result.push_back(g);
    return result;
}

}  // namespace

// ---------------------------------------------------------------------------
// public interface
// ---------------------------------------------------------------------------

int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly normalize(ZPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

mpz_class content(const ZPoly& f) {
    mpz_class g = 0;
    for (auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly primitive_part(const ZPoly& f) {
    if (f.empty()) return f;
    mpz_class c = content(f);
    if (f.back() < 0) c = -c;
    ZPoly r = f;
    for (auto& x : r) x /= c;
    return r;
}

ZPoly multiply(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return normalize(std::move(r));
}

bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
    if (b.empty()) return false;
    ZPoly rem = a;
    ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpz_class(0));
    while (degree(rem) >= degree(b)) {
        mpz_class c = rem.back() / b.back();
        if (c * b.back() != rem.back()) return false;
        size_t off = rem.size() - b.size();
        q[off] = c;
        for (size_t i = 0; i < b.size(); ++i) rem[off + i] -= c * b[i];
        rem = normalize(std::move(rem));
        if (rem.empty()) break;
    }
    if (!rem.empty()) return false;
    quotient = normalize(std::move(q));
    return true;
}

bool is_squarefree(const ZPoly& f) {
    // gcd(f, f') over Q via Euclid with rational arithmetic
    std::vector<mpq_class> a(f.begin(), f.end()), b;
    for (size_t i = 1; i < f.size(); ++i) b.emplace_back(f[i] * static_cast<long>(i));
    auto trim = [](std::vector<mpq_class>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim(a); trim(b);
    while (!b.empty()) {
        while (a.size() >= b.size() && !a.empty()) {
            mpq_class c = a.back() / b.back();
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a.size() <= 1;
}

std::vector<ZPoly> factors_up_to_degree(const ZPoly& f, int max_deg) {
    ZPoly g = primitive_part(normalize(f));
    int d = degree(g);
    if (d < 1) return {};
    if (max_deg < 1) return {};
    mpz_class lc = g.back();
    std::vector<ZPoly> out;
    if (lc == 1) {
        out = monic_factors_up_to_degree(g, max_deg);
    } else {
        // monicize: m(x) = lc^(d-1) * g(x/lc), so m_i = g_i * lc^(d-1-i)
        ZPoly m(g.size());
        m[d] = 1;
        mpz_class pw = 1;
        for (int i = d - 1; i >= 0; --i) {
            m[i] = g[i] * pw;
            pw *= lc;
        }
        for (ZPoly& h : monic_factors_up_to_degree(std::move(m), max_deg)) {
            // map back: h(lc * x), then primitive part
            mpz_class p = 1;
            for (size_t i = 0; i < h.size(); ++i) {
                h[i] *= p;
                p *= lc;
            }
            out.push_back(primitive_part(h));
        }
    }
    std::sort(out.begin(), out.end(), [](const ZPoly& a, const ZPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return out;
}

bool is_irreducible(const ZPoly& f) {
    ZPoly g = primitive_part(normalize(f));
    int d = degree(g);
    if (d < 1) return false;
    if (d == 1) return true;
    if (!is_squarefree(g)) return false;
    return factors_up_to_degree(g, d / 2).empty();
}

}  // namespace pencils::zfactor
