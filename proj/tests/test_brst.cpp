#include "cwalg/brst.hpp"

#include <doctest.h>

using namespace cwalg;

namespace {

State one(StateSpace& s, std::vector<Mode> word)
{
    return s.monomial_state(word);
}

}  // namespace

TEST_CASE("differentials kill the vacuum")
{
    Complex cx(Pyramid::build({1, 2}));
    CHECK(cx.d_st(State::vacuum()).is_zero());
    CHECK(cx.chi(State::vacuum()).is_zero());
    CHECK(cx.d(State::vacuum()).is_zero());
}

TEST_CASE("chi examples")
{
    Complex cx(Pyramid::build({1, 2}));
    StateSpace& s = cx.full();
    CHECK(cx.chi(one(s, {s.mode({GenKind::Psi, 1, 2, 1}, -1)})) == State::vacuum());
    CHECK(cx.chi(one(s, {s.mode({GenKind::E, 1, 1, 0}, -1)})).is_zero());
}

TEST_CASE("d on psi gives the dressed generator plus the character")
{
    Complex cx(Pyramid::build({1, 2}));
    StateSpace& s = cx.full();
    const State psi = one(s, {s.mode({GenKind::Psi, 1, 2, 1}, -1)});
    CHECK(cx.d(psi) == cx.dressed_mode(1, 2, 1, -1, State::vacuum()) + State::vacuum());
}

TEST_CASE("d_st on psi[-1]|0> is the dressed mode")
{
    for (const auto& shape : std::vector<std::vector<int>>{{1, 1}, {1, 2}, {1, 1, 1}, {1, 2, 2}}) {
        Complex cx(Pyramid::build(shape));
        StateSpace& s = cx.full();
        const Pyramid& p = cx.pyramid();
        for (int i = 1; i <= p.n(); ++i)
            for (int j = i + 1; j <= p.n(); ++j) {
                const Window w = p.shifts(GenKind::Psi, i, j);
                for (int r = w.lo; r <= w.hi; ++r)
                    CHECK(cx.d_st(one(s, {s.mode({GenKind::Psi, i, j, r}, -1)})) ==
                          cx.dressed_mode(i, j, r, -1, State::vacuum()));
            }
    }
}

TEST_CASE("d_st on psi*[0]|0> is minus the fermion product")
{
    Complex cx(Pyramid::build({1, 1, 1}));
    StateSpace& s = cx.full();
    const State lhs = cx.d_st(one(s, {s.mode({GenKind::PsiStar, 1, 3, 0}, 0)}));
    const State rhs = -s.apply(s.mode({GenKind::PsiStar, 1, 2, 0}, 0),
                               one(s, {s.mode({GenKind::PsiStar, 2, 3, 0}, 0)}));
    CHECK(lhs == rhs);
    CHECK(!lhs.is_zero());
}

TEST_CASE("dressed modes on the vacuum")
{
    Complex cx(Pyramid::build({1, 1, 1}));
    StateSpace& s = cx.full();
    for (int i = 1; i <= 3; ++i)
        CHECK(cx.dressed_mode(i, i, 0, 0, State::vacuum()).is_zero());
    const State expected = one(s, {s.mode({GenKind::E, 1, 2, 0}, -1)}) +
                           s.apply(s.mode({GenKind::Psi, 1, 3, 0}, -1), one(s, {s.mode({GenKind::PsiStar, 2, 3, 0}, 0)}));
    CHECK(cx.dressed_mode(1, 2, 0, -1, State::vacuum()) == expected);
    CHECK_THROWS_AS(cx.dressed_mode(1, 2, 1, -1, State::vacuum()), InadmissibleIndex);
    CHECK(cx.dressed_field(1, 2, 1)->is_zero());
}

TEST_CASE("dressed e11 rotates psi*")
{
    Complex cx(Pyramid::build({1, 1}));
    StateSpace& s = cx.full();
    for (const Monomial& mono : s.basis({2, 2, 1}))
        for (int m = -2; m <= 2; ++m)
            for (int p = -2; p <= 2; ++p) {
                const State v = State::of(mono);
                const Mode ps = s.mode({GenKind::PsiStar, 1, 2, 0}, p);
                const State lhs = cx.dressed_mode(1, 1, 0, m, s.apply(ps, v)) - s.apply(ps, cx.dressed_mode(1, 1, 0, m, v));
                CHECK(lhs == -s.apply(s.mode({GenKind::PsiStar, 1, 2, 0}, m + p), v));
            }
}

TEST_CASE("dressed lower modes see the shifted level")
{
    Complex cx(Pyramid::build({1, 1}));
    const State v = cx.dressed_mode(1, 1, 0, 1, cx.dressed_mode(1, 1, 0, -1, State::vacuum()));
    const Scalar f(form(cx.pyramid(), {GenKind::E, 1, 1, 0}, {GenKind::E, 1, 1, 0}));
    CHECK(v == (Scalar::k() + Scalar(2L)) * f * State::vacuum());
    CHECK(v != Scalar::k() * f * State::vacuum());
}

TEST_CASE("P and I field summands")
{
    Complex c11(Pyramid::build({1, 1}));
    // l = 1 runs down the whole diagonal
    const auto p1 = c11.p_field_terms(1, 0);
    REQUIRE(p1.size() == 2);
    CHECK(p1[0].i == 2);
    CHECK(p1[0].j == 2);
    CHECK(p1[1].i == 1);
    CHECK(p1[1].j == 1);
    CHECK(c11.p_field_terms(2, 0).size() == 1);

    // second summand shifted by lambda_3 - lambda_2
    Complex c(Pyramid::build({2, 2, 3}));
    const auto p2 = c.p_field_terms(2, 0);
    REQUIRE(p2.size() == 2);
    CHECK(p2[0].i == 3);
    CHECK(p2[0].j == 2);
    CHECK(p2[0].r == 0);
    CHECK(p2[1].i == 2);
    CHECK(p2[1].j == 1);
    CHECK(p2[1].r == 1);
    // out-of-range summands are dropped
    Complex d(Pyramid::build({1, 2, 3}));
    CHECK(d.p_field_terms(2, 1).size() == 1);
}

TEST_CASE("lemma names round trip")
{
    for (Lemma l : {Lemma::Nilpotency, Lemma::LowerBrackets, Lemma::UpperBrackets, Lemma::DifferentialAction, Lemma::ChiAction})
        CHECK(lemma_from_name(lemma_name(l)) == l);
    CHECK_FALSE(lemma_from_name("nope"));
}

TEST_CASE("identity sweeps pass on small pyramids")
{
    SweepOptions o;
    o.degree_cap = 2;
    {
        Complex cx(Pyramid::build({1, 2}));
        SweepOptions o3;
        const auto r = verify_lemma(cx, Lemma::Nilpotency, o3);
        CHECK(r["status"] == "pass");
        CHECK(r["checked"].get<int>() > 0);
    }
    {
        Complex cx(Pyramid::build({1, 1}));
        const auto r = verify_lemma(cx, Lemma::LowerBrackets, o);
        CHECK(r["status"] == "pass");
        CHECK(r["central_level"] == "k + 2");
        for (Lemma l : {Lemma::UpperBrackets, Lemma::DifferentialAction, Lemma::ChiAction})
            CHECK(verify_lemma(cx, l, o)["status"] == "pass");
    }
    {
        Complex cx(Pyramid::build({2, 2}));
        CHECK(verify_lemma(cx, Lemma::ChiAction, o)["status"] == "pass");
    }
}

TEST_CASE("nilpotency on the larger pyramids")
{
    for (const auto& shape : std::vector<std::vector<int>>{{2, 2}, {1, 1, 1}}) {
        Complex cx(Pyramid::build(shape));
        CHECK(verify_lemma(cx, Lemma::Nilpotency, SweepOptions{})["status"] == "pass");
    }
}
