#ifndef PENCILS_MULTIPOLY_HPP
#define PENCILS_MULTIPOLY_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pencils/number_field.hpp"

namespace pencils {

/// Exponent vector for up to 3 variables; unused slots stay 0.
struct Monomial {
    std::array<int, 3> e{0, 0, 0};
    int total() const { return e[0] + e[1] + e[2]; }
    bool divides(const Monomial& o) const {
        return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2];
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

/// Graded lexicographic order with var0 > var1 > var2, descending
/// (so map iteration starts at the leading term).
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total() != b.total()) return a.total() > b.total();
        return a.e > b.e;
    }
};

class MultiPoly;
MultiPoly operator*(const FieldElement& c, const MultiPoly& p);

/// Sparse multivariate polynomial over K in 2 (affine) or 3 (projective)
/// variables. Immutable in spirit: operations return new values.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, FieldElement, GrlexDesc>;

    MultiPoly() = default;
    MultiPoly(FieldPtr field, int nvars);

    static MultiPoly constant(const FieldPtr& field, int nvars, const FieldElement& c);
    static MultiPoly variable(const FieldPtr& field, int nvars, int index);

    const FieldPtr& field() const { return field_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int total_degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;
    const TermMap& terms() const { return terms_; }

    /// Accumulates c on the monomial, dropping the term if it cancels.
    void add_term(const Monomial& m, const FieldElement& c);
    FieldElement coeff(const Monomial& m) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const FieldElement& c) const;
    bool operator==(const MultiPoly& o) const { return cmp(o) == 0; }
    bool operator!=(const MultiPoly& o) const { return cmp(o) != 0; }

    /// Deterministic total order (by term sequence), for sorting output.
    int cmp(const MultiPoly& o) const;

    FieldElement eval(const std::vector<FieldElement>& point) const;
    MultiPoly derivative(int var) const;

    /// Substitute a polynomial for one variable.
    MultiPoly substitute(int var, const MultiPoly& value) const;

    /// Affine translation (x, y) -> (x + a, y + b); 2-variable only.
    MultiPoly translate2(const FieldElement& a, const FieldElement& b) const;

    /// Minimal total degree among terms; throws InternalError on zero input.
    int multiplicity_at_origin() const;
    /// Sum of the terms of minimal total degree.
    MultiPoly lowest_form() const;

    /// Exact quotient, or nullopt when den does not divide (a normal outcome).
    std::optional<MultiPoly> divide_exact(const MultiPoly& den) const;
    /// Normal form modulo the single divisor den (grlex reduction); the
    /// remainder map is K-linear in *this.
    MultiPoly mod(const MultiPoly& den) const;

    /// Scales so the lexicographically greatest monomial has coefficient 1.
    MultiPoly canonical_form() const;

    /// Sets the given variable to 1 and drops it; remaining variables keep
    /// their relative order (3 vars -> 2 vars).
    MultiPoly dehomogenize(int var) const;

    /// Restriction to {var = 0} of a 2-variable polynomial, as a univariate
    /// coefficient list in the other variable (constant first).
    std::vector<FieldElement> restrict_to_axis(int var) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    FieldPtr field_;
    int nvars_ = 0;
    TermMap terms_;
};

enum class BlowupChart { XPrimary, YPrimary };

/// One blow-up step on a 2-variable affine polynomial: substitutes
/// (x, y) -> (x, x*(y + center)) for the x-primary chart (symmetrically
/// (x, y) -> (y*(x + center), y)), then divides exactly by the chart
/// variable to the given power. Throws InternalError (inexact division)
/// when the substituted polynomial is not divisible; with drop equal to the
/// actual multiplicity the result is the strict transform in that chart.
MultiPoly blowup_transform(const MultiPoly& f, BlowupChart chart,
                           const FieldElement& center, int drop);

}  // namespace pencils

#endif
