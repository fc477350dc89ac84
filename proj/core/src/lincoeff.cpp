#include "pencils/lincoeff.hpp"

#include "pencils/errors.hpp"

namespace pencils {

namespace {

bool form_is_zero(const LinForm& f) {
    for (auto& c : f)
        if (!c.is_zero()) return false;
    return true;
}

void form_add_scaled(LinForm& dst, const LinForm& src, const FieldElement& s) {
    for (size_t i = 0; i < dst.size(); ++i)
        if (!src[i].is_zero()) dst[i] += src[i] * s;
}

}  // namespace

LinCoeffPoly::LinCoeffPoly(FieldPtr field, int nunknowns)
    : field_(std::move(field)), nunknowns_(nunknowns) {}

void LinCoeffPoly::add_term(const Monomial& m, const LinForm& f) {
    if (form_is_zero(f)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, f);
        return;
    }
    for (int i = 0; i < nunknowns_; ++i) it->second[i] += f[i];
    if (form_is_zero(it->second)) terms_.erase(it);
}

void LinCoeffPoly::add_unknown(const Monomial& m, int k, const FieldElement& c) {
    LinForm f(nunknowns_, field_->zero());
    f[k] = c;
    add_term(m, f);
}

LinCoeffPoly LinCoeffPoly::substitute(int var, const MultiPoly& value) const {
    std::vector<MultiPoly> pow{MultiPoly::constant(field_, 2, field_->one())};
    LinCoeffPoly out(field_, nunknowns_);
    for (auto& [m, f] : terms_) {
        while (static_cast<int>(pow.size()) <= m.e[var])
            pow.push_back(pow.back() * value);
        Monomial rest = m;
        rest.e[var] = 0;
        for (auto& [vm, vc] : pow[m.e[var]].terms()) {
            Monomial prod;
            for (int i = 0; i < 3; ++i) prod.e[i] = rest.e[i] + vm.e[i];
            LinForm scaled(nunknowns_, field_->zero());
            form_add_scaled(scaled, f, vc);
            out.add_term(prod, scaled);
        }
    }
    return out;
}

LinCoeffPoly LinCoeffPoly::translate2(const FieldElement& a,
                                      const FieldElement& b) const {
    MultiPoly x = MultiPoly::variable(field_, 2, 0) + MultiPoly::constant(field_, 2, a);
    MultiPoly y = MultiPoly::variable(field_, 2, 1) + MultiPoly::constant(field_, 2, b);
    return substitute(0, x).substitute(1, y);
}

std::vector<LinForm> LinCoeffPoly::low_degree_conditions(int v) const {
    std::vector<LinForm> out;
    for (auto& [m, f] : terms_)
        if (m.total() < v) out.push_back(f);
    return out;
}

LinCoeffPoly LinCoeffPoly::blowup(BlowupChart chart, const FieldElement& center,
                                  int drop, std::vector<LinForm>& conditions) const {
    MultiPoly x = MultiPoly::variable(field_, 2, 0);
    MultiPoly y = MultiPoly::variable(field_, 2, 1);
    LinCoeffPoly sub(field_, nunknowns_);
    int exc_var;
    if (chart == BlowupChart::XPrimary) {
        sub = substitute(1, x * (y + MultiPoly::constant(field_, 2, center)));
        exc_var = 0;
    } else {
        sub = substitute(0, y * (x + MultiPoly::constant(field_, 2, center)));
        exc_var = 1;
    }
    LinCoeffPoly out(field_, nunknowns_);
    for (auto& [m, f] : sub.terms_) {
        if (m.e[exc_var] < drop) {
            conditions.push_back(f);
            continue;
        }
        Monomial d = m;
        d.e[exc_var] -= drop;
        out.add_term(d, f);
    }
    return out;
}

MultiPoly LinCoeffPoly::specialize(const std::vector<FieldElement>& values) const {
    if (static_cast<int>(values.size()) != nunknowns_)
        throw InternalError("LinCoeffPoly::specialize: wrong value count");
    MultiPoly out(field_, 2);
    for (auto& [m, f] : terms_) {
        FieldElement c = field_->zero();
        for (int i = 0; i < nunknowns_; ++i)
            if (!f[i].is_zero()) c += f[i] * values[i];
        out.add_term(m, c);
    }
    return out;
}

}  // namespace pencils
