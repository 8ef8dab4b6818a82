#include "cwalg/pyramid.hpp"
#include "cwalg/scalar.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace cwalg;

namespace {

Scalar random_scalar(std::mt19937& rng)
{
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::uniform_int_distribution<int> deg(-1, 3);
    Scalar s;
    for (int e = 0; e <= deg(rng); ++e)
        s += Scalar::monomial(make_rational(num(rng), den(rng)), e);
    return s;
}

}  // namespace

TEST_CASE("ring axioms and evaluation homomorphism")
{
    std::mt19937 rng(7);
    const Rational points[] = {make_rational(0), make_rational(-3), make_rational(5, 7)};
    for (int trial = 0; trial < 200; ++trial) {
        const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Scalar());
        CHECK((a * Scalar(1L)) == a);
        CHECK((a * Scalar()).is_zero());
        for (const Rational& x : points) {
            CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
            CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
        }
        CHECK(Scalar::from_json(a.to_json()) == a);
    }
}

TEST_CASE("canonical text")
{
    const Scalar k = Scalar::k();
    CHECK(Scalar().to_string() == "0");
    CHECK((k * make_rational(2, 3) + Scalar(1L)).to_string() == "(2/3)k + 1");
    CHECK((k * k - Scalar(4L)).to_string() == "k^2 - 4");
    CHECK((k * k - Scalar(4L)).degree() == 2);
    CHECK(Scalar().degree() == -1);
}

TEST_CASE("form examples")
{
    const Pyramid p = Pyramid::build({2, 3, 4});
    CHECK(form(p, {GenKind::E, 1, 1, 0}, {GenKind::E, 1, 1, 0}) == make_rational(4, 9));
    CHECK(form(p, {GenKind::E, 1, 1, 0}, {GenKind::E, 2, 2, 0}) == make_rational(-2, 9));
    CHECK(form(p, {GenKind::E, 1, 2, 1}, {GenKind::E, 2, 1, 0}) == 0);
}

TEST_CASE("form equals the normalized Killing form of the degree-zero part")
{
    for (const std::vector<int>& shape : std::vector<std::vector<int>>{{1}, {1, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {1, 2, 2}, {2, 3, 4}}) {
        const Pyramid p = Pyramid::build(shape);
        const oracle::Tableau t(shape);
        for (const GenIndex& x : p.basis_E())
            for (const GenIndex& y : p.basis_E()) {
                CAPTURE(to_string(x));
                CAPTURE(to_string(y));
                const Rational expected = x.r || y.r ? Rational(0) : t.degree_zero_killing(t.E(x.i, x.j, 0), t.E(y.i, y.j, 0));
                CHECK(form(p, x, y) == expected);
            }
    }
}

TEST_CASE("alpha examples")
{
    const Scalar k = Scalar::k();
    const Pyramid p12 = Pyramid::build({1, 2});
    CHECK(alpha(p12, 1) == k * make_rational(2, 3) + Scalar(1L));
    CHECK(alpha(p12, 2) == k + Scalar(1L));
    for (int n = 1; n <= 6; ++n) {
        const Pyramid ones = Pyramid::build(std::vector<int>(n, 1));
        for (int i = 1; i <= n; ++i)
            CHECK(alpha(ones, i) == k + Scalar(static_cast<long>(n - 1)));
    }
    CHECK_THROWS_AS(alpha(p12, 3), std::out_of_range);
}

TEST_CASE("alpha at the critical level is minus the row length")
{
    for (const std::vector<int>& shape : std::vector<std::vector<int>>{{1}, {1, 2}, {2, 2}, {1, 1, 2}, {2, 3, 4}}) {
        const Pyramid p = Pyramid::build(shape);
        for (int i = 1; i <= p.n(); ++i)
            CHECK(alpha(p, i).evaluate(-p.N()) == -p.lambda(i));
    }
}
