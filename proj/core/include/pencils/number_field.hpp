#ifndef PENCILS_NUMBER_FIELD_HPP
#define PENCILS_NUMBER_FIELD_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace pencils {

using Rational = mpq_class;

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of K = Q(alpha), stored as rational coordinates in the power
/// basis 1, alpha, ..., alpha^(deg-1). Immutable value type; all arithmetic
/// is exact and reduced modulo the minimal polynomial.
class FieldElement {
public:
    FieldElement() = default;  // detached zero; only valid as a placeholder
    FieldElement(FieldPtr field, std::vector<Rational> coords);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    FieldElement inverse() const;  // requires nonzero

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Total order on coordinate vectors (for deterministic containers).
    int cmp(const FieldElement& o) const;
    bool operator<(const FieldElement& o) const { return cmp(o) < 0; }

    /// Expression in the generator symbol, e.g. "7/2*r+17/2". Round-trips
    /// through the expression parser.
    std::string to_string() const;

private:
    FieldPtr field_;
    std::vector<Rational> coords_;
};

/// A number field K = Q(alpha) presented by a monic irreducible minimal
/// polynomial over Q (constant term first). Degree 1 means K = Q.
/// Irreducibility is verified at construction.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    /// Throws InputError if min_poly is not monic of degree >= 1 or not
    /// irreducible over Q.
    static FieldPtr create(std::string generator_symbol,
                           std::vector<Rational> min_poly);

    /// K = Q, presented by the minimal polynomial t.
    static FieldPtr rationals();

    int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
    const std::string& generator_symbol() const { return generator_symbol_; }
    const std::vector<Rational>& min_poly() const { return min_poly_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_rational(const Rational& r) const;
    FieldElement from_int(long n) const { return from_rational(Rational(n)); }
    FieldElement generator() const;  // the class of alpha
    FieldElement element(std::vector<Rational> coords) const;

    /// alpha^(degree+i) in the power basis, for i in [0, degree-2].
    const std::vector<std::vector<Rational>>& power_table() const {
        return power_table_;
    }

    /// Structural equality (same symbol and minimal polynomial).
    bool same_field(const NumberField& o) const;

private:
    NumberField(std::string generator_symbol, std::vector<Rational> min_poly);

    std::string generator_symbol_;
    std::vector<Rational> min_poly_;
    std::vector<std::vector<Rational>> power_table_;
};

/// Throws InternalError unless both elements live in the same field.
void require_same_field(const FieldElement& a, const FieldElement& b);

std::string rational_to_string(const Rational& r);

}  // namespace pencils

#endif
