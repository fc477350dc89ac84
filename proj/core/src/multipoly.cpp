#include "pencils/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "pencils/errors.hpp"

namespace pencils {

namespace {

// pure lex order on exponents (var0 > var1 > var2), ignoring the grading
bool lex_less(const Monomial& a, const Monomial& b) { return a.e < b.e; }

}  // namespace

MultiPoly::MultiPoly(FieldPtr field, int nvars)
    : field_(std::move(field)), nvars_(nvars) {
    if (nvars < 1 || nvars > 3) throw InternalError("MultiPoly: nvars out of range");
}

MultiPoly MultiPoly::constant(const FieldPtr& field, int nvars, const FieldElement& c) {
    MultiPoly p(field, nvars);
    p.add_term(Monomial{}, c);
    return p;
}

MultiPoly MultiPoly::variable(const FieldPtr& field, int nvars, int index) {
    if (index < 0 || index >= nvars) throw InternalError("MultiPoly::variable index");
    MultiPoly p(field, nvars);
    Monomial m;
    m.e[index] = 1;
    p.add_term(m, field->one());
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.total();
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.total();
    for (auto& [m, c] : terms_)
        if (m.total() != d) return false;
    return true;
}

void MultiPoly::add_term(const Monomial& m, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FieldElement MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_->zero() : it->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(field_, nvars_);
    for (auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly out(field_, nvars_);
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) {
            Monomial m;
            for (int i = 0; i < 3; ++i) m.e[i] = ma.e[i] + mb.e[i];
            out.add_term(m, ca * cb);
        }
    return out;
}

MultiPoly MultiPoly::operator*(const FieldElement& c) const {
    MultiPoly out(field_, nvars_);
    if (c.is_zero()) return out;
    for (auto& [m, t] : terms_) out.terms_.emplace(m, t * c);
    return out;
}

MultiPoly operator*(const FieldElement& c, const MultiPoly& p) { return p * c; }

int MultiPoly::cmp(const MultiPoly& o) const {
    auto a = terms_.begin(), b = o.terms_.begin();
    GrlexDesc less;
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (less(a->first, b->first)) return 1;
        if (less(b->first, a->first)) return -1;
        int c = a->second.cmp(b->second);
        if (c != 0) return c;
    }
    if (a != terms_.end()) return 1;
    if (b != o.terms_.end()) return -1;
    return 0;
}

FieldElement MultiPoly::eval(const std::vector<FieldElement>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw InternalError("MultiPoly::eval: wrong point size");
    FieldElement acc = field_->zero();
    for (auto& [m, c] : terms_) {
        FieldElement t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < m.e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly out(field_, nvars_);
    for (auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        Monomial d = m;
        --d.e[var];
        out.add_term(d, c * field_->from_int(m.e[var]));
    }
    return out;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
    // cache powers of the substituted value
    std::vector<MultiPoly> pow{MultiPoly::constant(field_, nvars_, field_->one())};
    MultiPoly out(field_, nvars_);
    for (auto& [m, c] : terms_) {
        while (static_cast<int>(pow.size()) <= m.e[var])
            pow.push_back(pow.back() * value);
        Monomial rest = m;
        rest.e[var] = 0;
        MultiPoly term(field_, nvars_);
        term.add_term(rest, c);
        out = out + term * pow[m.e[var]];
    }
    return out;
}

MultiPoly MultiPoly::translate2(const FieldElement& a, const FieldElement& b) const {
    if (nvars_ != 2) throw InternalError("translate2 needs 2 variables");
    MultiPoly x = variable(field_, 2, 0) + constant(field_, 2, a);
    MultiPoly y = variable(field_, 2, 1) + constant(field_, 2, b);
    return substitute(0, x).substitute(1, y);
}

int MultiPoly::multiplicity_at_origin() const {
    if (terms_.empty())
        throw InternalError("multiplicity_at_origin of zero polynomial");
    int m = terms_.begin()->first.total();
    for (auto& [mon, c] : terms_) m = std::min(m, mon.total());
    return m;
}

MultiPoly MultiPoly::lowest_form() const {
    int m = multiplicity_at_origin();
    MultiPoly out(field_, nvars_);
    for (auto& [mon, c] : terms_)
        if (mon.total() == m) out.terms_.emplace(mon, c);
    return out;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& den) const {
    if (den.is_zero()) throw InternalError("divide_exact by zero");
    MultiPoly rem = *this;
    MultiPoly q(field_, nvars_);
    const Monomial& lead = den.terms_.begin()->first;
    FieldElement lead_inv = den.terms_.begin()->second.inverse();
    while (!rem.is_zero()) {
        const Monomial& top = rem.terms_.begin()->first;
        if (!lead.divides(top)) return std::nullopt;
        Monomial d;
        for (int i = 0; i < 3; ++i) d.e[i] = top.e[i] - lead.e[i];
        FieldElement c = rem.terms_.begin()->second * lead_inv;
        q.add_term(d, c);
        MultiPoly piece(field_, nvars_);
        piece.add_term(d, c);
        rem = rem - piece * den;
    }
    return q;
}

MultiPoly MultiPoly::mod(const MultiPoly& den) const {
    if (den.is_zero()) throw InternalError("mod by zero");
    MultiPoly rem = *this;
    MultiPoly out(field_, nvars_);
    const Monomial& lead = den.terms_.begin()->first;
    FieldElement lead_inv = den.terms_.begin()->second.inverse();
    while (!rem.is_zero()) {
        const Monomial& top = rem.terms_.begin()->first;
        if (!lead.divides(top)) {
            // move the irreducible leading term to the remainder
            out.terms_.emplace(top, rem.terms_.begin()->second);
            rem.terms_.erase(rem.terms_.begin());
            continue;
        }
        Monomial d;
        for (int i = 0; i < 3; ++i) d.e[i] = top.e[i] - lead.e[i];
        FieldElement c = rem.terms_.begin()->second * lead_inv;
        MultiPoly piece(field_, nvars_);
        piece.add_term(d, c);
        rem = rem - piece * den;
    }
    return out;
}

MultiPoly MultiPoly::canonical_form() const {
    if (terms_.empty()) return *this;
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
        if (lex_less(best->first, it->first)) best = it;
    return *this * best->second.inverse();
}

MultiPoly MultiPoly::dehomogenize(int var) const {
    if (nvars_ != 3) throw InternalError("dehomogenize needs 3 variables");
    MultiPoly out(field_, 2);
    for (auto& [m, c] : terms_) {
        Monomial d;
        int k = 0;
        for (int i = 0; i < 3; ++i)
            if (i != var) d.e[k++] = m.e[i];
        out.add_term(d, c);
    }
    return out;
}

std::vector<FieldElement> MultiPoly::restrict_to_axis(int var) const {
    if (nvars_ != 2) throw InternalError("restrict_to_axis needs 2 variables");
    int other = 1 - var;
    std::vector<FieldElement> out;
    for (auto& [m, c] : terms_) {
        if (m.e[var] != 0) continue;
        int k = m.e[other];
        if (static_cast<int>(out.size()) <= k)
            out.resize(k + 1, field_->zero());
        out[k] = c;
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        std::string cs = c.to_string();
        bool negated = false;
        if (!first && !cs.empty() && cs[0] == '-' &&
            cs.find('+', 1) == std::string::npos &&
            cs.find('-', 1) == std::string::npos) {
            cs = cs.substr(1);
            negated = true;
        }
        if (!first) os << (negated ? " - " : " + ");
        first = false;
        bool composite = cs.find('+') != std::string::npos ||
                         (cs.find('-', 1) != std::string::npos);
        std::string vars;
        for (int i = 0; i < nvars_; ++i) {
            if (m.e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[i];
            if (m.e[i] > 1) vars += "^" + std::to_string(m.e[i]);
        }
        if (vars.empty()) {
            os << (composite ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            os << vars;
        } else {
            os << (composite ? "(" + cs + ")" : cs) << "*" << vars;
        }
    }
    return os.str();
}

MultiPoly blowup_transform(const MultiPoly& f, BlowupChart chart,
                           const FieldElement& center, int drop) {
    if (f.nvars() != 2) throw InternalError("blowup_transform needs 2 variables");
    const FieldPtr& field = f.field();
    MultiPoly x = MultiPoly::variable(field, 2, 0);
    MultiPoly y = MultiPoly::variable(field, 2, 1);
    MultiPoly sub;
    int exc_var;
    if (chart == BlowupChart::XPrimary) {
        sub = f.substitute(1, x * (y + MultiPoly::constant(field, 2, center)));
        exc_var = 0;
    } else {
        sub = f.substitute(0, y * (x + MultiPoly::constant(field, 2, center)));
        exc_var = 1;
    }
    MultiPoly div(field, 2);
    Monomial m;
    m.e[exc_var] = drop;
    div.add_term(m, field->one());
    auto q = sub.divide_exact(div);
    if (!q) throw InternalError("blowup_transform: inexact division");
    return *q;
}

}  // namespace pencils
