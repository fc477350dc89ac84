#include "pencils/kpoly.hpp"

#include <sstream>

#include "pencils/errors.hpp"

namespace pencils {

KPoly::KPoly(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    trim();
}

void KPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

KPoly KPoly::constant(const FieldElement& c) {
    return KPoly(c.field(), {c});
}

KPoly KPoly::variable(const FieldPtr& field) {
    return KPoly(field, {field->zero(), field->one()});
}

FieldElement KPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_->zero();
    return coeffs_[i];
}

const FieldElement& KPoly::leading() const {
    if (coeffs_.empty()) throw InternalError("leading() of zero polynomial");
    return coeffs_.back();
}

KPoly KPoly::operator-() const {
    std::vector<FieldElement> c = coeffs_;
    for (auto& x : c) x = -x;
    return KPoly(field_, std::move(c));
}

KPoly KPoly::operator+(const KPoly& o) const {
    std::vector<FieldElement> c(std::max(coeffs_.size(), o.coeffs_.size()),
                                field_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = c[i] + coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] = c[i] + o.coeffs_[i];
    return KPoly(field_, std::move(c));
}

KPoly KPoly::operator-(const KPoly& o) const { return *this + (-o); }

KPoly KPoly::operator*(const KPoly& o) const {
    if (is_zero() || o.is_zero()) return KPoly(field_);
    std::vector<FieldElement> c(coeffs_.size() + o.coeffs_.size() - 1,
                                field_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
    }
    return KPoly(field_, std::move(c));
}

KPoly KPoly::operator*(const FieldElement& s) const {
    std::vector<FieldElement> c = coeffs_;
    for (auto& x : c) x = x * s;
    return KPoly(field_, std::move(c));
}

KPoly KPoly::divmod(const KPoly& divisor, KPoly& q) const {
    if (divisor.is_zero()) throw InternalError("division by zero polynomial");
    KPoly rem = *this;
    std::vector<FieldElement> qc(
        degree() >= divisor.degree() ? degree() - divisor.degree() + 1 : 0,
        field_->zero());
    FieldElement inv = divisor.leading().inverse();
    while (rem.degree() >= divisor.degree() && !rem.is_zero()) {
        int off = rem.degree() - divisor.degree();
        FieldElement c = rem.leading() * inv;
        qc[off] = c;
        std::vector<FieldElement> rc = rem.coeffs_;
        for (size_t i = 0; i < divisor.coeffs_.size(); ++i)
            rc[off + i] = rc[off + i] - c * divisor.coeffs_[i];
        rem = KPoly(field_, std::move(rc));
    }
    q = KPoly(field_, std::move(qc));
    return rem;
}

KPoly KPoly::mod(const KPoly& divisor) const {
    KPoly q;
    return divmod(divisor, q);
}

KPoly KPoly::divide_exact(const KPoly& divisor) const {
    KPoly q;
    KPoly r = divmod(divisor, q);
    if (!r.is_zero()) throw InternalError("inexact univariate division");
    return q;
}

KPoly KPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

KPoly KPoly::derivative() const {
    std::vector<FieldElement> c;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        c.push_back(coeffs_[i] * field_->from_int(static_cast<long>(i)));
    return KPoly(field_, std::move(c));
}

FieldElement KPoly::eval(const FieldElement& x) const {
    FieldElement r = field_->zero();
    for (size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
}

KPoly KPoly::shift(const FieldElement& c) const {
    // Horner in (x + c)
    KPoly xc(field_, {c, field_->one()});
    KPoly r(field_);
    for (size_t i = coeffs_.size(); i-- > 0;)
        r = r * xc + KPoly::constant(coeffs_[i]);
    return r;
}

std::string KPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        std::string cs = coeffs_[i].to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        bool composite = cs.find_first_of("+-", 1) != std::string::npos;
        if (!first) os << (neg && !composite ? "-" : "+");
        if (neg && !composite && !first) cs = cs.substr(1);
        first = false;
        if (i == 0) {
            os << (composite ? "(" + cs + ")" : cs);
        } else {
            if (cs != "1") os << (composite ? "(" + cs + ")" : cs) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

KPoly kpoly_gcd(KPoly a, KPoly b) {
    while (!b.is_zero()) {
        KPoly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FieldElement kpoly_resultant(KPoly a, KPoly b) {
    const FieldPtr& field = a.field() ? a.field() : b.field();
    if (a.is_zero() || b.is_zero()) return field->zero();
    FieldElement res = field->one();
    bool negate = false;
    auto pow_into = [&res](const FieldElement& base, int e) {
        for (int i = 0; i < e; ++i) res = res * base;
    };
    while (true) {
        if (a.degree() < b.degree()) {
            if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
            std::swap(a, b);
        }
        if (b.degree() == 0) {
            pow_into(b.leading(), a.degree());
            break;
        }
        KPoly r = a.mod(b);
        if (r.is_zero()) return field->zero();
        // res(a, b) = (-1)^(deg a * deg b) * lc(b)^(deg a - deg r) * res(b, r)
        if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
        pow_into(b.leading(), a.degree() - r.degree());
        a = std::move(b);
        b = std::move(r);
    }
    if (negate) res = -res;
    return res;
}

}  // namespace pencils
