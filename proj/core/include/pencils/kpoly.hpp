#ifndef PENCILS_KPOLY_HPP
#define PENCILS_KPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "pencils/number_field.hpp"

namespace pencils {

/// Dense univariate polynomial over a number field K, constant term first.
class KPoly {
public:
    KPoly() = default;
    explicit KPoly(FieldPtr field) : field_(std::move(field)) {}
    KPoly(FieldPtr field, std::vector<FieldElement> coeffs);

    static KPoly constant(const FieldElement& c);
    /// The monomial x over the given field.
    static KPoly variable(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    FieldElement coeff(int i) const;
    const FieldElement& leading() const;
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    KPoly operator-() const;
    KPoly operator+(const KPoly& o) const;
    KPoly operator-(const KPoly& o) const;
    KPoly operator*(const KPoly& o) const;
    KPoly operator*(const FieldElement& c) const;
    bool operator==(const KPoly& o) const { return coeffs_ == o.coeffs_; }

    /// Division with remainder; quotient into q, returns remainder.
    KPoly divmod(const KPoly& divisor, KPoly& q) const;
    KPoly mod(const KPoly& divisor) const;
    /// Exact division; throws InternalError if the division leaves a remainder.
    KPoly divide_exact(const KPoly& divisor) const;

    KPoly monic() const;
    KPoly derivative() const;
    FieldElement eval(const FieldElement& x) const;
    /// p(x + c).
    KPoly shift(const FieldElement& c) const;

    std::string to_string(const std::string& var) const;

private:
    FieldPtr field_;
    std::vector<FieldElement> coeffs_;
    void trim();
};

/// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
KPoly kpoly_gcd(KPoly a, KPoly b);

/// Resultant of two univariate polynomials over K (0 if either is zero and
/// the other nonconstant, by the usual conventions).
FieldElement kpoly_resultant(KPoly a, KPoly b);

}  // namespace pencils

#endif
