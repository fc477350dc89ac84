#ifndef PENCILS_TEST_HELPERS_HPP
#define PENCILS_TEST_HELPERS_HPP

#include <string>
#include <vector>

#include "pencils/base_points.hpp"
#include "pencils/parser.hpp"

namespace pencils::testing {

inline FieldPtr q() { return NumberField::rationals(); }

/// Q(r) with r^2 = 5.
inline FieldPtr q_sqrt5() {
    return NumberField::create("r", {Rational(-5), Rational(0), Rational(1)});
}

/// Q(g) with g = sqrt(2) + sqrt(5), minimal polynomial t^4 - 14 t^2 + 9.
/// Inside it, sqrt(5) = (17 g - g^3) / 6.
inline FieldPtr q_gamma() {
    return NumberField::create(
        "g", {Rational(9), Rational(0), Rational(-14), Rational(0), Rational(1)});
}

inline MultiPoly p3(const std::string& text, const FieldPtr& field) {
    return parse_polynomial(text, field, {"X", "Y", "Z"});
}

inline MultiPoly p2(const std::string& text, const FieldPtr& field) {
    return parse_polynomial(text, field, {"x", "y"});
}

inline Pencil pencil_of(const std::string& f, const std::string& g,
                        const FieldPtr& field) {
    return make_pencil(field, p3(f, field), p3(g, field));
}

inline const char* kPaperF =
    "27*X^3 - 27*X^2*Y + 9*X*Y^2 - Y^3 - 8*X*Z^2 + 5*Y*Z^2";
inline const char* kPaperG =
    "X^3 + 6*X^2*Y + 12*X*Y^2 + 8*Y^3 - 7*Y*Z^2";

}  // namespace pencils::testing

#endif
