#include "pencils/number_field.hpp"

#include <sstream>

#include "pencils/errors.hpp"
#include "pencils/zfactor.hpp"

namespace pencils {

namespace {

// extended Euclid in Q[t]: returns (g, s) with s*a == g (mod m), g = gcd(a, m)
// polynomials constant-first, trimmed
using QP = std::vector<Rational>;

void qtrim(QP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QP qmul(const QP& a, const QP& b) {
    if (a.empty() || b.empty()) return {};
    QP r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qtrim(r);
    return r;
}

QP qsub(QP a, const QP& b) {
    a.resize(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qtrim(a);
    return a;
}

// a mod b with quotient out-param
QP qdivmod(QP a, const QP& b, QP& q) {
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = c;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
        qtrim(a);
    }
    qtrim(q);
    return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw InternalError("FieldElement: null field");
    coords_.resize(field_->degree(), Rational(0));
}

bool FieldElement::is_zero() const {
    for (auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rational FieldElement::rational_value() const {
    if (!is_rational()) throw InternalError("rational_value on irrational element");
    return coords_.empty() ? Rational(0) : coords_[0];
}

FieldElement FieldElement::operator-() const {
    std::vector<Rational> c = coords_;
    for (auto& x : c) x = -x;
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(*this, o);
    std::vector<Rational> c = coords_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_field(*this, o);
    std::vector<Rational> c = coords_;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(*this, o);
    int n = field_->degree();
    std::vector<Rational> prod(2 * n - 1, Rational(0));
    for (int i = 0; i < n; ++i) {
        if (coords_[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (o.coords_[j] == 0) continue;
            prod[i + j] += coords_[i] * o.coords_[j];
        }
    }
    // fold alpha^(n+i) via the power table
    std::vector<Rational> c(prod.begin(), prod.begin() + n);
    const auto& table = field_->power_table();
    for (int i = n; i < 2 * n - 1; ++i) {
        if (prod[i] == 0) continue;
        const auto& row = table[i - n];
        for (int j = 0; j < n; ++j) c[j] += prod[i] * row[j];
    }
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw InternalError("inverse of zero field element");
    // extended Euclid between this (as polynomial in alpha) and min_poly
    QP a(coords_.begin(), coords_.end());
    qtrim(a);
    QP m(field_->min_poly().begin(), field_->min_poly().end());
    QP r0 = m, r1 = a;
    QP s0 = {}, s1 = {Rational(1)};
    while (!r1.empty() && r1.size() > 1) {
        QP q;
        QP r2 = qdivmod(r0, r1, q);
        QP s2 = qsub(s0, qmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty())
        throw InternalError("inverse: zero divisor (minimal polynomial reducible?)");
    // r1 is a nonzero constant: s1 * a == r1 (mod m)
    Rational inv = 1 / r1[0];
    std::vector<Rational> c(field_->degree(), Rational(0));
    for (size_t i = 0; i < s1.size(); ++i) c[i] = s1[i] * inv;
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const {
    return cmp(o) == 0;
}

int FieldElement::cmp(const FieldElement& o) const {
    require_same_field(*this, o);
    for (size_t i = 0; i < coords_.size(); ++i) {
        int c = ::cmp(coords_[i], o.coords_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

std::string FieldElement::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const std::string& g = field_->generator_symbol();
    for (size_t i = coords_.size(); i-- > 0;) {
        const Rational& c = coords_[i];
        if (c == 0) continue;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (i == 0) {
            os << rational_to_string(abs);
        } else {
            if (abs != 1) os << rational_to_string(abs) << "*";
            os << g;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// NumberField
// ---------------------------------------------------------------------------

NumberField::NumberField(std::string generator_symbol,
                         std::vector<Rational> min_poly)
    : generator_symbol_(std::move(generator_symbol)),
      min_poly_(std::move(min_poly)) {
    int n = degree();
    // power_table_[i] = alpha^(n+i) in the basis, i = 0 .. n-2
    std::vector<Rational> cur(n, Rational(0));  // alpha^n = -(lower part)
    for (int j = 0; j < n; ++j) cur[j] = -min_poly_[j];
    for (int i = 0; i + 1 < n; ++i) {
        power_table_.push_back(cur);
        // multiply by alpha: shift, reduce top
        std::vector<Rational> next(n, Rational(0));
        Rational top = cur[n - 1];
        for (int j = n - 1; j > 0; --j) next[j] = cur[j - 1];
        if (top != 0)
            for (int j = 0; j < n; ++j) next[j] += top * -min_poly_[j];
        cur = std::move(next);
    }
    if (n == 1) power_table_.clear();
}

FieldPtr NumberField::create(std::string generator_symbol,
                             std::vector<Rational> min_poly) {
    while (min_poly.size() > 1 && min_poly.back() == 0) min_poly.pop_back();
    if (min_poly.size() < 2)
        throw InputError("min_poly must have degree >= 1");
    if (min_poly.back() != 1)
        throw InputError("min_poly must be monic");
    if (min_poly.size() > 2) {
        // clear denominators and check irreducibility over Q
        mpz_class den(1);
        for (auto& c : min_poly)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        zfactor::ZPoly z;
        for (auto& c : min_poly) {
            Rational s = c * den;
            z.push_back(s.get_num());
        }
        if (!zfactor::is_irreducible(z))
            throw InputError("min_poly is reducible over Q");
    }
    if (generator_symbol.empty()) generator_symbol = "a";
    return std::shared_ptr<const NumberField>(
        new NumberField(std::move(generator_symbol), std::move(min_poly)));
}

FieldPtr NumberField::rationals() {
    static FieldPtr q = std::shared_ptr<const NumberField>(
        new NumberField("a", {Rational(0), Rational(1)}));
    return q;
}

FieldElement NumberField::zero() const {
    return FieldElement(shared_from_this(), {});
}

FieldElement NumberField::one() const { return from_rational(Rational(1)); }

FieldElement NumberField::from_rational(const Rational& r) const {
    std::vector<Rational> c(degree(), Rational(0));
    c[0] = r;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::generator() const {
    std::vector<Rational> c(degree(), Rational(0));
    if (degree() == 1) {
        c[0] = -min_poly_[0];  // the rational root of the degree-1 min poly
    } else {
        c[1] = 1;
    }
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::element(std::vector<Rational> coords) const {
    if (static_cast<int>(coords.size()) > degree())
        throw InternalError("element: coordinate vector too long");
    return FieldElement(shared_from_this(), std::move(coords));
}

bool NumberField::same_field(const NumberField& o) const {
    return generator_symbol_ == o.generator_symbol_ && min_poly_ == o.min_poly_;
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() == b.field()) return;
    if (a.field() && b.field() && a.field()->same_field(*b.field())) return;
    throw InternalError("field elements from different number fields");
}

}  // namespace pencils
