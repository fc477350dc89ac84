#ifndef PENCILS_ZFACTOR_HPP
#define PENCILS_ZFACTOR_HPP

#include <gmpxx.h>

#include <vector>

namespace pencils::zfactor {

/// Dense integer polynomial, constant term first, no trailing zero
/// coefficients (the zero polynomial is the empty vector).
using ZPoly = std::vector<mpz_class>;

int degree(const ZPoly& f);
ZPoly normalize(ZPoly f);
mpz_class content(const ZPoly& f);
ZPoly primitive_part(const ZPoly& f);
ZPoly multiply(const ZPoly& a, const ZPoly& b);

/// Exact division over Z; returns false when b does not divide a.
bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient);

bool is_squarefree(const ZPoly& f);

/// All irreducible factors of f over Q with degree <= max_deg, returned as
/// primitive integer polynomials with positive leading coefficient, each
/// listed once. f must be squarefree of degree >= 1.
///
/// Zassenhaus bounded to small factor degrees: factor mod a good prime,
/// Hensel-lift past the Mignotte bound, recombine subsets of total degree
/// <= max_deg. Deterministic (fixed prime search order and a fixed seed for
/// the equal-degree splitting).
std::vector<ZPoly> factors_up_to_degree(const ZPoly& f, int max_deg);

/// Irreducibility over Q. f must have degree >= 1.
bool is_irreducible(const ZPoly& f);

}  // namespace pencils::zfactor

#endif
