#include "jordalg/laurent.hpp"
#include "jordalg/series.hpp"
#include "support.hpp"

using namespace jordalg;
using testing_support::h;

TEST_CASE("rational canonical text") {
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(-6, 3).str() == "-2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
}

TEST_CASE("rational field axioms on a grid") {
    std::vector<Rational> xs;
    for (long p = -3; p <= 3; ++p)
        for (long q = 1; q <= 3; ++q) xs.push_back(Rational(p, q));
    for (const auto& a : xs)
        for (const auto& b : xs) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a - b) + b == a);
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
}

TEST_CASE("binomial and factorial") {
    CHECK(factorial(5) == Rational(120));
    CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(binomial(Rational(-1), 3) == Rational(-1));
    CHECK(binomial(Rational(5), 2) == Rational(10));
}

TEST_CASE("polynomials in h") {
    ScalarPoly p = ScalarPoly(Rational(1)) + h(2) - h(1, 3, 2);
    CHECK(p.str() == "1 + 2*h - 1/2*h^3");
    CHECK(p.to_strings() == std::vector<std::string>{"1", "2", "0", "-1/2"});
    CHECK(ScalarPoly::from_strings(p.to_strings()) == p);
    CHECK(*p.degree() == 3);
    CHECK(!ScalarPoly().degree());
    CHECK(ScalarPoly().str() == "0");
    CHECK(p.truncated(1) == ScalarPoly(Rational(1)) + h(2));
    CHECK(p.evaluate(Rational(2)) == Rational(1));
    CHECK((h(3, 2) - h(1)).divided_by_h() == h(3) - ScalarPoly(1));
    CHECK_THROWS_AS(p.divided_by_h(), DivisionByZero);
    // (1 + h)(1 - h) = 1 - h^2
    CHECK((ScalarPoly(1) + h()) * (ScalarPoly(1) - h()) == ScalarPoly(1) - h(1, 2));
    CHECK((p - p).is_zero());
}

TEST_CASE("polynomial ring axioms, random") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-5, 5);
    auto rnd = [&] {
        std::vector<Rational> c;
        for (int k = 0; k < 4; ++k) c.push_back(Rational(d(rng), 1 + (d(rng) + 5) % 4));
        return ScalarPoly(c);
    };
    for (int trial = 0; trial < 50; ++trial) {
        ScalarPoly a = rnd(), b = rnd(), c = rnd();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK((a * b).evaluate(Rational(3)) == a.evaluate(Rational(3)) * b.evaluate(Rational(3)));
    }
}

TEST_CASE("series coefficients") {
    CHECK(SeriesSpec::exp().coefficient(4) == Rational(1, 24));
    CHECK(SeriesSpec::sqrt1p().coefficient(2) == Rational(-1, 8));
    CHECK(SeriesSpec::arcsinh().coefficient(3) == Rational(-1, 6));
    CHECK(SeriesSpec::arcsinh().coefficient(5) == Rational(3, 40));
    CHECK(SeriesSpec::arcsinh().coefficient(2) == Rational(0));
    CHECK(SeriesSpec::log1p().coefficient(3) == Rational(1, 3));
    CHECK(SeriesSpec::binomial(Rational(-1)).coefficient(5) == Rational(-1));
}

namespace {
const Window kW{-12, 6};
constexpr int kL = 6;
}

TEST_CASE("laurent: u powers and t") {
    // u^2 = 1 + 2t + t^2
    QScalar u2 = QScalar::u_power(2, kW, kL);
    CHECK(u2.coeff(0) == Rational(1));
    CHECK(u2.coeff(1) == Rational(2));
    CHECK(u2.coeff(2) == Rational(1));
    CHECK(u2.coeff(3) == Rational(0));
    // u^-1 = 1 - t + t^2 - ...
    QScalar um = QScalar::u_power(-1, kW, kL);
    for (int k = 0; k <= 6; ++k) CHECK(um.coeff(k) == Rational(k % 2 ? -1 : 1));
    CHECK(um.max_order() == 6);
    CHECK((u2 * QScalar::u_power(-2, kW, kL) - QScalar(1)).is_zero());
}

TEST_CASE("laurent: inverse of q - 1 has a simple pole") {
    QScalar qm1 = q_power<Rational>(kL, kL, kW) - QScalar(1);
    QScalar inv = qm1.invert();
    CHECK(inv.min_order() == -1);
    CHECK(inv.coeff(-1) == Rational(1, 6));
    // 1/(6t + 15t^2 + ...) = (1/6) t^-1 - 15/36 + ...
    CHECK(inv.coeff(0) == Rational(-5, 12));
    QScalar one = inv * qm1;
    CHECK(one.coeff(0) == Rational(1));
    for (int k = 1; k <= 5; ++k) CHECK(one.coeff(k) == Rational(0));
    CHECK_THROWS_AS(inv.limit_at_1(), PoleAtOne);
    CHECK(qm1.limit_at_1() == Rational(0));
}

TEST_CASE("laurent: q-integers and the window") {
    // [2] = q + q^-1 -> 2 at q = 1; [3]! -> 6.
    CHECK(q_integer<Rational>(2, kL, kW).limit_at_1() == Rational(2));
    CHECK(q_factorial<Rational>(3, kL, kW).limit_at_1() == Rational(6));
    // [2] is symmetric in q <-> 1/q: first order in t cancels.
    CHECK(q_integer<Rational>(2, kL, kW).coeff(1) == Rational(0));
    CHECK_THROWS_AS(q_power_rational<Rational>(Rational(1, 4), kL, kW), IncompatibleRoot);
    CHECK(q_power_rational<Rational>(Rational(1, 3), kL, kW).coeff(1) == Rational(2));
    QScalar t = QScalar::t(Window{-2, 6}, kL);
    QScalar tinv = t.invert();
    CHECK_THROWS_AS(tinv * tinv * tinv, WindowUnderflow);
}

TEST_CASE("laurent with polynomial coefficients") {
    QhScalar a = QhScalar::from_coeffs(-1, {h(), h(2, 2)}, kW, kL);
    QhScalar b = QhScalar::t(kW, kL);
    QhScalar ab = a * b;
    CHECK(ab.coeff(0) == h());
    CHECK(ab.coeff(1) == h(2, 2));
    CHECK(ab.limit_at_1() == h());
    CHECK_THROWS_AS(QhScalar::from_coeffs(0, {h()}, kW, kL).invert(), InvertOfZero);
    CHECK_THROWS_AS(QScalar::t(kW, 6) * QScalar::t(kW, 4), IncompatibleRoot);
}
