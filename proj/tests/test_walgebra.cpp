#include "cwalg/walgebra.hpp"
#include "checks.hpp"

#include <doctest.h>

using namespace cwalg;

namespace {

const std::vector<std::vector<int>> kSuite = {{1}, {1, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {1, 1, 2}};

std::string fixture(const char* name)
{
    return std::string(CWALG_FIXTURES) + "/" + name;
}

void check_fixture(const char* name)
{
    const nlohmann::json fx = checks::load_json(fixture(name));
    Complex cx(Pyramid::build(fx.at("pyramid").get<std::vector<int>>()));
    const Scalar a = Scalar::from_json(fx.at("alpha"));
    for (int i = 1; i <= cx.pyramid().n(); ++i)
        CHECK(alpha(cx.pyramid(), i) == a);

    const Coefficients reduced = generators(cx, Backend::Reduced);
    const Coefficients full = generators(cx, Backend::Full);
    CHECK(reduced.size() == fx.at("generators").size());
    for (const auto& g : fx.at("generators")) {
        const std::pair<int, int> key{g.at("l").get<int>(), g.at("r").get<int>()};
        CAPTURE(key.first);
        const State expected = cx.reduced().from_json(g.at("state"));
        REQUIRE(reduced.count(key));
        CHECK(reduced.at(key) == expected);
        CHECK(full.at(key) == dress(cx, expected));
    }
}

}  // namespace

TEST_CASE("hand-expanded determinants for e = 0")
{
    check_fixture("e0_n2.json");
    check_fixture("e0_n3.json");
}

TEST_CASE("admissible windows")
{
    const Pyramid p = Pyramid::build({2, 3, 4});
    CHECK(admissible_window(p, 1).lo == 0);
    CHECK(admissible_window(p, 1).hi == 3);
    CHECK(admissible_window(p, 3).lo == 5);
    CHECK(admissible_window(p, 3).hi == 6);
    CHECK(admissible_window(Pyramid::build({1}), 1).size() == 1);
    CHECK_THROWS_AS(admissible_window(p, 4), std::out_of_range);
    for (const auto& shape : kSuite) {
        const Pyramid q = Pyramid::build(shape);
        int total = 0;
        for (int l = 1; l <= q.n(); ++l) {
            CHECK(admissible_window(q, l).size() == q.lambda(q.n() - l + 1));
            total += admissible_window(q, l).size();
        }
        CHECK(total == q.N());
    }
}

TEST_CASE("generators are closed and number N")
{
    for (const auto& shape : std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 2}}) {
        Complex cx(Pyramid::build(shape));
        const auto r = certify_generators(cx);
        CHECK(r["status"] == "pass");
        CHECK(r["count"].get<int>() == cx.pyramid().N());
    }
}

TEST_CASE("a coefficient outside the window is not closed")
{
    // the u^0 coefficient of x^{n-2} for (1,2) lies below the window of l = 2
    Complex cx(Pyramid::build({1, 2}));
    const Coefficients all = coefficients(cx.pyramid(), cdet_apply(cx, Backend::Full));
    REQUIRE(all.count({2, 0}));
    CHECK_FALSE(admissible_window(cx.pyramid(), 2).contains(0));
    CHECK_FALSE(cx.d(all.at({2, 0})).is_zero());
}

TEST_CASE("leading terms")
{
    Complex one(Pyramid::build({1}));
    StateSpace& s1 = one.reduced();
    CHECK(leading_term(one, 1, 0) == State::of({s1.mode({GenKind::ELow, 1, 1, 0}, -1)}));

    Complex c11(Pyramid::build({1, 1}));
    StateSpace& s = c11.reduced();
    const State diag = s.monomial_state(std::vector<Mode>{s.mode({GenKind::ELow, 1, 1, 0}, -1)}) +
                       s.monomial_state(std::vector<Mode>{s.mode({GenKind::ELow, 2, 2, 0}, -1)});
    CHECK(p_vacuum_state(c11, 1, 0) == diag);
    CHECK(leading_term(c11, 1, 0) == diag);

    for (const auto& shape : kSuite) {
        Complex cx(Pyramid::build(shape));
        for (const auto& [key, w] : generators(cx, Backend::Reduced))
            CHECK(leading_term(cx, key.first, key.second) == p_vacuum_state(cx, key.first, key.second));
    }
}

TEST_CASE("column and row determinants agree")
{
    for (const auto& shape : std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 2}, {1, 1, 1}})
        for (Backend b : {Backend::Reduced, Backend::Full}) {
            Complex cx(Pyramid::build(shape));
            CHECK(cdet_apply(cx, b) == rdet_apply(cx, b));
        }
}

TEST_CASE("Hilbert series against partition and product oracles")
{
    CHECK(hilbert_series(Pyramid::build({1}), 4) == std::vector<long>{1, 1, 2, 3, 5});
    CHECK(hilbert_series(Pyramid::build({1}), 12) == oracle::partitions(12));
    CHECK(hilbert_series(Pyramid::build({1, 1}), 3) == oracle::w_series({1, 1}, 3));
    CHECK(hilbert_series(Pyramid::build({2, 3, 4}), 1)[1] == 4);
    for (const auto& shape : kSuite) {
        const Pyramid p = Pyramid::build(shape);
        CHECK(hilbert_series(p, 6) == oracle::w_series(shape, 6));
        CHECK(count_w_monomials(p, 6) == oracle::w_series(shape, 6));
    }
}
