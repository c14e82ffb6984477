#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "prinhall/errors.hpp"
#include "prinhall/intpoly.hpp"

#include <map>
#include <random>

using namespace prinhall;

namespace {

IntPoly poly(std::vector<long> c)
{
    std::vector<mpz_class> z;
    for (auto v : c)
        z.emplace_back(v);
    return IntPoly(std::move(z));
}

mpz_class gl2(std::uint32_t q)
{
    mpz_class Q = q;
    return (Q * Q - 1) * (Q * Q - Q);
}

IntPoly random_poly(std::mt19937& rng, int max_degree)
{
    std::uniform_int_distribution<int> deg(0, max_degree), coef(-9, 9);
    std::vector<long> c(deg(rng) + 1);
    for (auto& v : c)
        v = coef(rng);
    return poly(c);
}

} // namespace

TEST_CASE("arithmetic and printing")
{
    const IntPoly t = IntPoly::T();
    CHECK((t + 1).to_string() == "1 + T");
    CHECK((t - 1).to_string() == "-1 + T");
    CHECK(IntPoly().to_string() == "0");
    CHECK(poly({0, 1, -1, -1, 1}).to_string() == "T - T^2 - T^3 + T^4");
    CHECK(poly({3, 0, -2}).to_string() == "3 - 2*T^2");
    CHECK((t - 1) * (t + 1) == poly({-1, 0, 1}));
    CHECK(poly({1, 2, 0, 0}).degree() == 1);
    CHECK(IntPoly().degree() == -1);
    CHECK(poly({2, 1}).is_monic());
    CHECK_FALSE(poly({1, 2}).is_monic());
    CHECK(poly({1, 1})(mpz_class(2)) == 3);
}

TEST_CASE("exact division")
{
    const IntPoly t = IntPoly::T();
    const IntPoly aut = poly({0, 1, -1, -1, 1});
    CHECK(exact_divide(aut, t * (t - 1) * (t - 1), "test") == t + 1);
    CHECK_THROWS_AS(exact_divide(t + 1, poly({0, 2}), "test"), Falsification);
    CHECK_THROWS_AS(exact_divide(t * t + 1, t + 1, "test"), Falsification);
    auto d = divide(t * t + 1, t + 1);
    CHECK(d.quotient == t - 1);
    CHECK(d.remainder == IntPoly(2));
}

TEST_CASE("division inverts multiplication")
{
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        IntPoly a = random_poly(rng, 5), b = random_poly(rng, 4);
        if (b.is_zero() || !b.is_monic())
            b += IntPoly::T(b.degree() + 1);
        CHECK(exact_divide(a * b, b, "test") == a);
        auto d = divide(a * b + 1, b);
        if (b.degree() > 0)
            CHECK(d.remainder == IntPoly(1));
    }
}

TEST_CASE("fit examples")
{
    std::map<std::uint32_t, long> lines{{2, 3}, {3, 4}, {5, 6}};
    FitPlan plan{{2, 3, 5}, {}, 1};
    CHECK(fit([&](std::uint32_t p) { return mpz_class(lines.at(p)); }, plan).poly.to_string() == "1 + T");

    CHECK(fit([](std::uint32_t) { return mpz_class(1); }, FitPlan::standard(0)).poly == IntPoly(1));

    auto r = fit(gl2, FitPlan::standard(4));
    CHECK(r.poly.to_string() == "T - T^2 - T^3 + T^4");
    CHECK(r.samples.size() == 5);
    CHECK(r.verified.size() == 2);
    CHECK(r.verified[0].prime == 13);
}

TEST_CASE("fit rejects impossible data")
{
    CHECK_THROWS_AS(fit(gl2, FitPlan::standard(2)), Falsification);
    // Integer data without an integer-coefficient interpolant.
    FitPlan plan{{2, 3, 5}, {}, 2};
    CHECK_THROWS_AS(fit([](std::uint32_t p) { return mpz_class(p == 3 ? 1 : 0); }, plan), Falsification);
    CHECK_THROWS_AS(fit(gl2, FitPlan{{2, 3}, {}, 4}), ValidationError);
    CHECK_THROWS_AS(fit(gl2, FitPlan{{2, 3, 4}, {}, 1}), ValidationError);
    CHECK_THROWS_AS(fit(gl2, FitPlan{{2, 3}, {3}, 1}), ValidationError);
}

TEST_CASE("fit recovers random integer polynomials")
{
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        const IntPoly f = random_poly(rng, 6);
        auto r = fit([&](std::uint32_t p) { return f(mpz_class(p)); }, FitPlan::standard(6));
        CHECK(r.poly == f);
    }
}

TEST_CASE("primes and degree bounds")
{
    CHECK(first_primes(7) == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17});
    CHECK(primes_above(17, 3) == std::vector<std::uint32_t>{19, 23, 29});
    CHECK(degree_bound_for({2}) == 1);
    CHECK(degree_bound_for({2, 2}) == 2);
    CHECK(degree_bound_for({4}) == 4);
    auto plan = FitPlan::standard(2);
    CHECK(plan.samples == std::vector<std::uint32_t>{2, 3, 5});
    CHECK(plan.verify == std::vector<std::uint32_t>{7, 11});
}
