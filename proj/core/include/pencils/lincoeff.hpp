#ifndef PENCILS_LINCOEFF_HPP
#define PENCILS_LINCOEFF_HPP

#include <map>
#include <vector>

#include "pencils/multipoly.hpp"

namespace pencils {

/// Homogeneous linear form in a fixed number of unknowns over K, stored as
/// its coefficient vector.
using LinForm = std::vector<FieldElement>;

/// Two-variable polynomial whose coefficients are linear forms in N
/// unknowns. Transporting a generic curve through translations and blow-up
/// substitutions keeps every coefficient linear in the unknowns, so vanishing
/// conditions read off as matrix rows.
class LinCoeffPoly {
public:
    LinCoeffPoly(FieldPtr field, int nunknowns);

    const FieldPtr& field() const { return field_; }
    int nunknowns() const { return nunknowns_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, LinForm, GrlexDesc>& terms() const { return terms_; }

    /// Accumulates the form on the monomial, dropping the term if it cancels.
    void add_term(const Monomial& m, const LinForm& f);
    /// Adds c * unknown[k] on the monomial.
    void add_unknown(const Monomial& m, int k, const FieldElement& c);

    LinCoeffPoly translate2(const FieldElement& a, const FieldElement& b) const;

    /// Vanishing of all terms of total degree below v (the multiplicity
    /// conditions at the origin), one linear form per monomial in map order.
    std::vector<LinForm> low_degree_conditions(int v) const;

    /// Blow-up substitution followed by division by the chart variable to
    /// the power drop. Terms blocking the division contribute their linear
    /// forms to `conditions` and are discarded, which is exactly the virtual
    /// transform at assigned multiplicity drop.
    LinCoeffPoly blowup(BlowupChart chart, const FieldElement& center, int drop,
                        std::vector<LinForm>& conditions) const;

    /// Specializes the unknowns, yielding an ordinary polynomial.
    MultiPoly specialize(const std::vector<FieldElement>& values) const;

private:
    LinCoeffPoly substitute(int var, const MultiPoly& value) const;

    FieldPtr field_;
    int nunknowns_;
    std::map<Monomial, LinForm, GrlexDesc> terms_;
};

}  // namespace pencils

#endif
