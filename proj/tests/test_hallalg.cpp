#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "prinhall/errors.hpp"
#include "prinhall/hallalg.hpp"

using namespace prinhall;
using namespace fixtures;

namespace {

const Field F2(2);

std::size_t idx(const HallAlgebraTable& t, const Rep& x)
{
    auto i = t.basis().classify(x);
    REQUIRE(i);
    return *i;
}

} // namespace

TEST_CASE("one-point algebra up to dimension 2")
{
    auto t = build_table(point(), DimBound{{}, 2});
    CHECK(t.size() == 3);
    const auto k1 = idx(t, point_space(F2, 1)), k2 = idx(t, point_space(F2, 2));
    auto uk = AlgebraElement::basis(k1);
    CHECK(multiply(uk, uk, t) == AlgebraElement::basis(k2, IntPoly::T() + 1));
    CHECK_THROWS_AS(multiply(uk, AlgebraElement::basis(k2), t), OutOfBound);
    CHECK(identity_failures(t).empty());
    CHECK(grading_violations(t) == 0);
    auto at2 = evaluate_at(t, 2);
    CHECK(at2.at({k1, k1, k2}) == 3);
    CHECK(at2.at({t.identity(), k1, k1}) == 1);
}

TEST_CASE("chain algebra is graded and noncommutative")
{
    auto c = chain2();
    auto t = build_table(c, DimBound{DimVector{1, 1}, {}});
    const auto s1 = idx(t, simple(c, F2, 0)), s2 = idx(t, simple(c, F2, 1)), p1 = idx(t, projective(c, F2, 0));
    auto a = AlgebraElement::basis(s1), b = AlgebraElement::basis(s2);
    auto ab = multiply(a, b, t), ba = multiply(b, a, t);
    CHECK(ab.terms.at(p1) == IntPoly(1));
    CHECK(ab != ba);
    CHECK_FALSE(ba.terms.count(p1));
    CHECK(multiply(IntPoly(2) * a, b, t) == IntPoly(2) * ab);
    const auto u0 = AlgebraElement::basis(t.identity());
    CHECK(multiply(u0, ab, t) == ab);
    CHECK(grading_violations(t) == 0);
    CHECK(check_associativity(t).violations.empty());
    CHECK_NOTHROW(evaluate_at(t, 3));
}

TEST_CASE("associativity on small algebras")
{
    auto pt = build_table(point(), DimBound{{}, 3});
    auto r = check_associativity(pt);
    CHECK(r.triples > 0);
    CHECK(r.violations.empty());
    CHECK(identity_failures(pt).empty());

    auto v = build_table(vee(), DimBound{{}, 3});
    CHECK(check_associativity(v).violations.empty());
    CHECK(grading_violations(v) == 0);
}

TEST_CASE("json export")
{
    auto t = build_table(point(), DimBound{{}, 2});
    auto j = to_json(t);
    CHECK(j["basis"].size() == 3);
    bool found = false;
    for (const auto& row : j["products"])
        if (row["poly"] == nlohmann::json::array({1, 1}))
            found = true;
    CHECK(found);
    CHECK(j["identity"] == t.identity());
}
