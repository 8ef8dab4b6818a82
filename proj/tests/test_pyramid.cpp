#include "cwalg/pyramid.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace cwalg;

namespace {

const std::vector<std::vector<int>> kShapes = {{1}, {1, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 3, 4}, {1, 3}};

}  // namespace

TEST_CASE("build computes column lengths and size")
{
    const Pyramid p = Pyramid::build({2, 3, 4});
    CHECK(p.q() == std::vector<int>{3, 3, 2, 1});
    CHECK(p.N() == 9);
    CHECK(Pyramid::build({1}).q() == std::vector<int>{1});
    CHECK(Pyramid::build({1}).N() == 1);
    CHECK(Pyramid::build({1, 1, 1}).q() == std::vector<int>{3});
    CHECK(Pyramid::build({1, 1, 1}).N() == 3);
}

TEST_CASE("column lengths match the conjugate partition by direct count")
{
    for (const auto& shape : kShapes) {
        const Pyramid p = Pyramid::build(shape);
        for (int c = 1; c <= shape.back(); ++c) {
            int count = 0;
            for (int l : shape)
                count += l >= c;
            CHECK(p.q()[c - 1] == count);
        }
    }
}

TEST_CASE("bad shapes are rejected with a code")
{
    auto code_of = [](auto fn) {
        try {
            fn();
        } catch (const ShapeError& e) {
            return static_cast<int>(e.code());
        }
        return -1;
    };
    CHECK(code_of([] { Pyramid::build({}); }) == static_cast<int>(ShapeError::Code::EmptyShape));
    CHECK(code_of([] { Pyramid::build({3, 2}); }) == static_cast<int>(ShapeError::Code::NonMonotoneShape));
    CHECK(code_of([] { Pyramid::build({0, 2}); }) == static_cast<int>(ShapeError::Code::NonPositivePart));
    CHECK(code_of([] { Pyramid::parse("1,x"); }) == static_cast<int>(ShapeError::Code::Parse));
    CHECK(Pyramid::parse("2,3,4") == Pyramid::build({2, 3, 4}));
}

TEST_CASE("row_col follows the row tableau")
{
    const Pyramid p = Pyramid::build({2, 3, 4});
    CHECK(p.row_col(5) == std::pair{2, 3});
    CHECK(p.row_col(1) == std::pair{1, 1});
    CHECK(p.row_col(9) == std::pair{3, 4});
    CHECK_THROWS_AS(p.row_col(10), std::out_of_range);
    CHECK_THROWS_AS(p.row_col(0), std::out_of_range);
    for (int a = 1; a <= p.N(); ++a) {
        auto [row, col] = p.row_col(a);
        CHECK(p.box(row, col) == a);
    }
}

TEST_CASE("basis examples")
{
    CHECK(Pyramid::build({2, 3, 4}).basis_E().size() == 23);
    const auto one = Pyramid::build({1}).basis_E();
    REQUIRE(one.size() == 1);
    CHECK(one[0] == GenIndex{GenKind::E, 1, 1, 0});
    const auto gl2 = Pyramid::build({1, 1}).basis_E();
    CHECK(gl2.size() == 4);
    CHECK(std::all_of(gl2.begin(), gl2.end(), [](const GenIndex& g) { return g.r == 0; }));
}

TEST_CASE("basis spans the centralizer of the nilpotent")
{
    for (const auto& shape : kShapes) {
        CAPTURE(shape.size());
        const Pyramid p = Pyramid::build(shape);
        const oracle::Tableau t(shape);
        const auto basis = p.basis_E();

        int expected = 0;
        for (int a : shape)
            for (int b : shape)
                expected += std::min(a, b);
        CHECK(static_cast<int>(basis.size()) == expected);
        CHECK(static_cast<int>(basis.size()) == t.centralizer_dim());

        const oracle::Matrix e = t.nilpotent();
        oracle::Matrix flat;
        std::set<std::pair<int, int>> seen;
        for (const GenIndex& g : basis) {
            const oracle::Matrix m = t.E(g.i, g.j, g.r);
            CHECK(!oracle::is_zero(m));
            CHECK(oracle::is_zero(oracle::commutator(m, e)));
            // matrix units agree with the oracle and never overlap
            for (auto [a, b] : p.matrix_units(g)) {
                CHECK(m[a - 1][b - 1] == 1);
                CHECK(seen.insert({a, b}).second);
            }
            std::vector<oracle::Q> row;
            for (const auto& r : m)
                row.insert(row.end(), r.begin(), r.end());
            flat.push_back(std::move(row));
        }
        CHECK(oracle::rank(flat) == basis.size());
    }
}

TEST_CASE("admissible shifts per family")
{
    const Pyramid p = Pyramid::build({2, 3, 4});
    CHECK(p.admissible({GenKind::E, 1, 3, 2}));
    CHECK_FALSE(p.admissible({GenKind::E, 1, 3, 1}));
    CHECK(p.admissible({GenKind::E, 3, 1, 0}));
    CHECK_FALSE(p.admissible({GenKind::E, 3, 1, 2}));
    CHECK(p.admissible({GenKind::Psi, 1, 2, 1}));
    CHECK_FALSE(p.admissible({GenKind::Psi, 2, 1, 0}));
    CHECK_FALSE(p.admissible({GenKind::Psi, 1, 1, 0}));
    CHECK(p.admissible({GenKind::PsiStar, 2, 3, 3}));
    CHECK(p.admissible({GenKind::ELow, 3, 1, 1}));
    CHECK_FALSE(p.admissible({GenKind::ELow, 1, 3, 2}));
    CHECK_THROWS_AS(p.matrix_units({GenKind::E, 1, 3, 1}), InadmissibleIndex);
}

TEST_CASE("conformal degree and charge")
{
    CHECK(deg_conformal({GenKind::E, 1, 2, 0}, -1) == 0);
    CHECK(deg_conformal({GenKind::PsiStar, 1, 2, 0}, 0) == 1);
    CHECK(deg_conformal({GenKind::E, 1, 1, 0}, -3) == 3);
    CHECK(charge({GenKind::PsiStar, 1, 2, 0}) == 1);
    CHECK(charge({GenKind::Psi, 1, 2, 0}) == -1);
    CHECK(charge({GenKind::E, 1, 2, 0}) == 0);
}
