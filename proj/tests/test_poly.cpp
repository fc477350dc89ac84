#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "pencils/errors.hpp"
#include "pencils/lincoeff.hpp"

using namespace pencils;
using namespace pencils::testing;

TEST_CASE("multipoly arithmetic and degree") {
    auto k = q();
    auto f = p3("X^2 + Y*Z", k);
    auto g = p3("X^2 - Y*Z", k);
    CHECK((f + g) == p3("2*X^2", k));
    CHECK((f - g) == p3("2*Y*Z", k));
    CHECK((f * g) == p3("X^4 - Y^2*Z^2", k));
    CHECK(f.total_degree() == 2);
    CHECK(f.is_homogeneous());
    CHECK(!p3("X^2 + Y", k).is_homogeneous());
}

TEST_CASE("canonical form scales the lex-greatest monomial to 1") {
    auto k = q();
    CHECK(p3("2*Y^2 + 4*X*Z", k).canonical_form() ==
          p3("X*Z + 1/2*Y^2", k));
    CHECK(p3("3*Z^3", k).canonical_form() == p3("Z^3", k));
    CHECK(p3("4*X + Y", k).canonical_form() == p3("X + 1/4*Y", k));
}

TEST_CASE("exact division of forms") {
    auto k = q();
    auto F = p3(kPaperF, k);
    auto G = p3(kPaperG, k);
    auto L1 = p3("4*X + Y", k);
    auto C4 = p3("7*Y^2 - 7*X*Y + 7*X^2 - 2*Z^2", k);
    auto quo = (F + G).divide_exact(L1);
    REQUIRE(quo.has_value());
    CHECK(quo->canonical_form() == C4.canonical_form());
    CHECK(!(F + G).divide_exact(p3("X", k)).has_value());
}

TEST_CASE("single-divisor remainder is linear in the dividend") {
    auto k = q();
    auto P = p3("X^2 + Y*Z", k);
    auto F = p3(kPaperF, k);
    auto G = p3(kPaperG, k);
    auto lhs = (F * k->from_int(3) + G * k->from_int(-2)).mod(P);
    auto rhs = F.mod(P) * k->from_int(3) + G.mod(P) * k->from_int(-2);
    CHECK(lhs == rhs);
    // remainder plus a multiple of P reconstructs the dividend
    auto diff = F - F.mod(P);
    CHECK(diff.divide_exact(P).has_value());
}

TEST_CASE("translation and multiplicity") {
    auto k = q();
    auto f = p2("y^2 - x^3", k);
    CHECK(f.multiplicity_at_origin() == 2);
    CHECK(f.lowest_form() == p2("y^2", k));
    auto shifted = f.translate2(k->one(), k->one());
    CHECK(shifted.eval({k->from_int(-1), k->from_int(0)}) ==
          f.eval({k->from_int(0), k->from_int(1)}));
    CHECK(p2("x*y + x^3", k).multiplicity_at_origin() == 2);
}

TEST_CASE("blow-up of the cusp") {
    auto k = q();
    auto f = p2("y^2 - x^3", k);
    auto t = blowup_transform(f, BlowupChart::XPrimary, k->zero(), 2);
    CHECK(t == p2("y^2 - x", k));
    // other chart: y^2 - x^3 -> y^2 (1 - y x^3) / y^2
    auto u = blowup_transform(f, BlowupChart::YPrimary, k->zero(), 2);
    CHECK(u == p2("1 - y*x^3", k));
}

TEST_CASE("dehomogenize keeps the remaining variable order") {
    auto k = q();
    auto F = p3("X^2*Z + Y^3 + Z^3", k);
    CHECK(F.dehomogenize(2) == p2("x^2 + y^3 + 1", k));
    // chart Y = 1: variables become (X, Z)
    CHECK(F.dehomogenize(1) == p2("x^2*y + 1 + y^3", k));
}

TEST_CASE("lincoeff transports mirror plain polynomials") {
    auto k = q();
    int nu = 3;
    // generic conic restricted to a line of unknowns: u0 x^2 + u1 x y + u2 y^2
    LinCoeffPoly lc(k, nu);
    lc.add_unknown(Monomial{{2, 0, 0}}, 0, k->one());
    lc.add_unknown(Monomial{{1, 1, 0}}, 1, k->one());
    lc.add_unknown(Monomial{{0, 2, 0}}, 2, k->one());

    std::vector<FieldElement> vals = {k->from_int(3), k->from_int(-1),
                                      k->from_int(2)};
    auto plain = lc.specialize(vals);
    auto a = k->from_int(5), b = k->from_int(-7);
    CHECK(lc.translate2(a, b).specialize(vals) == plain.translate2(a, b));

    std::vector<LinForm> conds;
    auto blown = lc.blowup(BlowupChart::XPrimary, k->from_int(2), 0, conds);
    CHECK(conds.empty());
    auto direct = plain.substitute(
        1, p2("x*y + 2*x", k));
    CHECK(blown.specialize(vals) == direct);
}

TEST_CASE("lincoeff blow-up collects blocked terms as conditions") {
    auto k = q();
    // single unknown times y: dividing by x^1 blocks the term
    LinCoeffPoly lc(k, 1);
    lc.add_unknown(Monomial{{0, 0, 0}}, 0, k->one());
    std::vector<LinForm> conds;
    auto blown = lc.blowup(BlowupChart::XPrimary, k->zero(), 1, conds);
    CHECK(blown.is_zero());
    REQUIRE(conds.size() == 1);
    CHECK(conds[0][0] == k->one());
}

TEST_CASE("parser golden input and round trips") {
    auto k = q_sqrt5();
    auto F = p3(kPaperF, k);
    CHECK(F.total_degree() == 3);
    CHECK(F.coeff(Monomial{{3, 0, 0}}) == k->from_int(27));
    CHECK(F.coeff(Monomial{{0, 1, 2}}) == k->from_int(5));

    auto e = p3("(r-1)*X^2", k);
    CHECK(e.coeff(Monomial{{2, 0, 0}}) == k->generator() - k->one());

    for (const char* text : {kPaperF, kPaperG, "X^2 + (1/2*r+3)*Y*Z"}) {
        auto p = p3(text, k);
        CHECK(p3(p.to_string({"X", "Y", "Z"}), k) == p);
    }
}

TEST_CASE("parser errors carry positions") {
    auto k = q();
    try {
        parse_polynomial("X +\n* Y", k, {"X", "Y", "Z"});
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 1);
    }
    CHECK_THROWS_AS(parse_polynomial("X + W", k, {"X", "Y", "Z"}), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("X / Y", k, {"X", "Y", "Z"}), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("X + 1", k, {"X", "Y", "Z"}, true),
                    InputError);  // not homogeneous
}

TEST_CASE("input document parsing") {
    auto input = parse_input(
        "# comment\n[field]\ngenerator = \"r\"\nmin_poly = \"-5, 0, 1\"\n\n"
        "[pencil]\nF = \"X*Y\"\nG = \"Z^2\"\n");
    CHECK(input.field->degree() == 2);
    CHECK(input.F == p3("X*Y", input.field));
    CHECK(input.G == p3("Z^2", input.field));

    auto plain = parse_input("[pencil]\nF = \"X\"\nG = \"Y\"\n");
    CHECK(plain.field->degree() == 1);

    CHECK_THROWS_AS(parse_input("[pencil]\nF = \"X\"\n"), InputError);
    CHECK_THROWS_AS(parse_input("[pencil]\nF = X\nG = \"Y\"\n"), InputError);
    CHECK_THROWS_AS(parse_input("[stuff]\nF = \"X\"\n"), InputError);
}
