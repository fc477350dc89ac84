#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "pencils/errors.hpp"
#include "pencils/kpoly.hpp"
#include "pencils/matrix.hpp"
#include "pencils/roots.hpp"
#include "pencils/zfactor.hpp"

using namespace pencils;
using namespace pencils::testing;

namespace {

zfactor::ZPoly zp(std::vector<long> coeffs) {
    zfactor::ZPoly out;
    for (long c : coeffs) out.emplace_back(c);
    return out;
}

KPoly kp(const FieldPtr& field, std::vector<long> coeffs) {
    std::vector<FieldElement> out;
    for (long c : coeffs) out.push_back(field->from_int(c));
    return KPoly(field, std::move(out));
}

}  // namespace

TEST_CASE("integer factorization basics") {
    // (x - 1)(x + 2)
    auto f = zfactor::multiply(zp({-1, 1}), zp({2, 1}));
    auto facs = zfactor::factors_up_to_degree(f, 1);
    REQUIRE(facs.size() == 2);
    CHECK(facs[0] == zp({-1, 1}));
    CHECK(facs[1] == zp({2, 1}));

    // (x^2 - 2)(x^2 - 3): no factor of degree 1, both of degree 2
    auto g = zfactor::multiply(zp({-2, 0, 1}), zp({-3, 0, 1}));
    CHECK(zfactor::factors_up_to_degree(g, 1).empty());
    auto gf = zfactor::factors_up_to_degree(g, 2);
    REQUIRE(gf.size() == 2);
    CHECK(gf[0] == zp({-3, 0, 1}));
    CHECK(gf[1] == zp({-2, 0, 1}));
}

TEST_CASE("non-monic factorization uses the root-scaling transform") {
    // 3x^2 - 5x - 2 = (3x + 1)(x - 2)
    auto facs = zfactor::factors_up_to_degree(zp({-2, -5, 3}), 1);
    REQUIRE(facs.size() == 2);
    CHECK(facs[0] == zp({-2, 1}));
    CHECK(facs[1] == zp({1, 3}));

    // regression: large non-monic squarefree input, product of quadratics
    auto h = zfactor::multiply(zp({-2, 0, 7}), zp({3, 1, 7}));
    auto hf = zfactor::factors_up_to_degree(h, 2);
    REQUIRE(hf.size() == 2);
    CHECK(zfactor::multiply(hf[0], hf[1]) == h);
}

TEST_CASE("irreducibility") {
    CHECK(zfactor::is_irreducible(zp({9, 0, -14, 0, 1})));  // min poly of g
    CHECK(zfactor::is_irreducible(zp({-5, 0, 1})));
    CHECK(zfactor::is_irreducible(zp({1, 0, 1})));
    CHECK(!zfactor::is_irreducible(zp({-1, 0, 1})));
    CHECK(!zfactor::is_irreducible(zp({0, 1, 1})));
    CHECK(!zfactor::is_irreducible(zp({1, 2, 1})));  // square
}

TEST_CASE("number field arithmetic in Q(sqrt 5)") {
    auto k = q_sqrt5();
    FieldElement r = k->generator();
    CHECK(r * r == k->from_int(5));
    CHECK((k->one() + r) * (k->one() - r) == k->from_int(-4));
    CHECK(r.inverse() * r == k->one());
    CHECK(r.inverse() == r / k->from_int(5));

    auto e = parse_field_element("7/2*r+17/2", k);
    CHECK(e.to_string() == "7/2*r+17/2");
    CHECK(parse_field_element(e.to_string(), k) == e);
}

TEST_CASE("number field construction rejects bad presentations") {
    CHECK_THROWS_AS(NumberField::create("r", {Rational(-1), Rational(0), Rational(1)}),
                    InputError);  // reducible
    CHECK_THROWS_AS(NumberField::create("r", {Rational(1), Rational(2)}),
                    InputError);  // not monic
    CHECK(q()->degree() == 1);
    CHECK(q()->from_rational(Rational(3, 4)).is_rational());
}

TEST_CASE("quartic field contains sqrt 5") {
    auto k = q_gamma();
    auto s5 = parse_field_element("(17*g-g^3)/6", k);
    CHECK(s5 * s5 == k->from_int(5));
    auto s2 = parse_field_element("g", k) - s5;
    CHECK(s2 * s2 == k->from_int(2));
}

TEST_CASE("kpoly division and gcd") {
    auto k = q_sqrt5();
    KPoly a = kp(k, {-5, 0, 1}) * kp(k, {1, 1});
    KPoly b = kp(k, {-5, 0, 1}) * kp(k, {2, 1});
    KPoly g = kpoly_gcd(a, b);
    CHECK(g == kp(k, {-5, 0, 1}));

    KPoly quo;
    KPoly rem = a.divmod(kp(k, {1, 1}), quo);
    CHECK(rem.is_zero());
    CHECK(quo == kp(k, {-5, 0, 1}));
}

TEST_CASE("kpoly resultant") {
    auto k = q();
    // res(x^2 - 5, x + 1) = value of x^2 - 5 at -1
    CHECK(kpoly_resultant(kp(k, {-5, 0, 1}), kp(k, {1, 1})) == k->from_int(-4));
    // res(x^2 - 1, x^2 - 4) = product of (r^2 - 4) over r = 1, -1
    CHECK(kpoly_resultant(kp(k, {-1, 0, 1}), kp(k, {-4, 0, 1})) == k->from_int(9));
    // shared root
    CHECK(kpoly_resultant(kp(k, {-1, 1}), kp(k, {-1, 0, 1})).is_zero());
}

TEST_CASE("k-rational roots over the base field") {
    auto k = q();
    // x(x - 1)^2 (x^2 - 5): rational part only
    KPoly f = kp(k, {0, 1}) * kp(k, {-1, 1}) * kp(k, {-1, 1}) * kp(k, {-5, 0, 1});
    auto roots = k_rational_roots(f);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].first == k->from_int(0));
    CHECK(roots[0].second == 1);
    CHECK(roots[1].first == k->from_int(1));
    CHECK(roots[1].second == 2);
    CHECK(deflate_k_rational_roots(f) == kp(k, {-5, 0, 1}));
}

TEST_CASE("k-rational roots over Q(sqrt 5)") {
    auto k = q_sqrt5();
    FieldElement r = k->generator();
    KPoly f = kp(k, {0, 1}) * kp(k, {-5, 0, 1});  // roots 0, +-sqrt5
    auto roots = k_rational_roots(f);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].first == -r);
    CHECK(roots[1].first == k->zero());
    CHECK(roots[2].first == r);
}

TEST_CASE("k-rational roots over the quartic field") {
    auto k = q_gamma();
    auto s5 = parse_field_element("(17*g-g^3)/6", k);
    KPoly f = kp(k, {-5, 0, 1});  // x^2 - 5 splits here
    auto roots = k_rational_roots(f);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].first == -s5);
    CHECK(roots[1].first == s5);
    // x^2 - 3 does not split in Q(sqrt2 + sqrt5)
    CHECK(k_rational_roots(kp(k, {-3, 0, 1})).empty());
    CHECK(deflate_k_rational_roots(kp(k, {-3, 0, 1})) == kp(k, {-3, 0, 1}));
}

TEST_CASE("rank and kernel") {
    auto k = q_sqrt5();
    FieldElement r = k->generator();
    KMatrix m(k, 0, 2);
    m.append_row({k->one(), r});
    m.append_row({r, k->from_int(5)});
    auto rk = rank_and_kernel(m);
    CHECK(rk.rank == 1);
    REQUIRE(rk.kernel.size() == 1);
    CHECK(rk.kernel[0][0] == -r);
    CHECK(rk.kernel[0][1] == k->one());
    // kernel vectors really annihilate
    auto img = m.apply(rk.kernel[0]);
    CHECK(img[0].is_zero());
    CHECK(img[1].is_zero());
}

TEST_CASE("full rank kernel is empty") {
    auto k = q();
    KMatrix m(k, 0, 3);
    m.append_row({k->one(), k->zero(), k->zero()});
    m.append_row({k->one(), k->one(), k->zero()});
    m.append_row({k->from_int(2), k->one(), k->one()});
    auto rk = rank_and_kernel(m);
    CHECK(rk.rank == 3);
    CHECK(rk.kernel.empty());
}
