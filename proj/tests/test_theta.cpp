#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "prinhall/counting.hpp"
#include "prinhall/errors.hpp"
#include "prinhall/theta.hpp"

using namespace prinhall;
using namespace fixtures;

TEST_CASE("theta examples on the chain")
{
    Field f(3);
    auto c = chain2();
    auto p1 = projective(c, f, 0), s1 = simple(c, f, 0);
    CHECK(is_isomorphic(theta(p1).image, p1));
    CHECK(theta(s1).image.is_zero());
    auto t = theta(direct_sum(p1, s1));
    CHECK(is_isomorphic(t.image, p1));
    CHECK(is_homomorphism(t.projection, t.source, t.image));
    CHECK(is_epi(t.projection));
    CHECK(is_socle_projective(t.image));
    CHECK_THROWS_AS(theta(simple(chain3(), f, 0)), ValidationError);
}

TEST_CASE("theta_hom identities and an epi")
{
    Field f(2);
    auto c = chain2();
    auto p1 = projective(c, f, 0), s1 = simple(c, f, 0);
    auto x = direct_sum(p1, s1);
    auto tx = theta(x), tp = theta(p1);
    CHECK(theta_hom(tx, tx, identity_morphism(x)) == identity_morphism(tx.image));
    CHECK(is_zero(theta_hom(tx, tp, zero_morphism(x, p1))));

    // Projection onto the P(1) summand.
    bool found = false;
    for_each_hom(hom_basis(x, p1), kDefaultBudget, [&](const Morphism& g) {
        if (is_epi(g)) {
            found = true;
            CHECK(is_epi(theta_hom(tx, tp, g)));
        }
        return true;
    });
    CHECK(found);
}

TEST_CASE("ker_theta_dim examples")
{
    Field f(2);
    auto c = chain2();
    auto p1 = projective(c, f, 0), s1 = simple(c, f, 0);
    CHECK(ker_theta_dim(s1, s1) == 1);
    CHECK(ker_theta_dim(p1, p1) == 0);
    CHECK(ker_theta_dim(Rep::zero(c, f), p1) == 0);
}

TEST_CASE("split_ker_theta examples")
{
    Field f(3);
    auto c = chain2();
    auto p1 = projective(c, f, 0), s1 = simple(c, f, 0);
    auto a = split_ker_theta(s1);
    CHECK(a.reduced.is_zero());
    CHECK(is_isomorphic(a.kernel_part, s1));
    auto b = split_ker_theta(p1);
    CHECK(is_isomorphic(b.reduced, p1));
    CHECK(b.kernel_part.is_zero());
    auto d = split_ker_theta(direct_sum(p1, s1));
    CHECK(is_isomorphic(d.reduced, p1));
    CHECK(is_isomorphic(d.kernel_part, s1));
}

TEST_CASE("theta is functorial and preserves monos and epis on the 3-chain")
{
    Field f(2);
    auto cat = Catalog::build(chain3(), f, DimBound{{}, 3}, ClassFilter::prinjective);
    std::vector<ThetaImage> th;
    for (const auto& e : cat.entries())
        th.push_back(theta(e.module));
    for (std::size_t a = 0; a < cat.size(); ++a)
        for (std::size_t b = 0; b < cat.size(); ++b) {
            const auto& x = cat[a].module;
            const auto& y = cat[b].module;
            std::uint64_t killed = 0;
            for_each_hom(hom_basis(x, y), kDefaultBudget, [&](const Morphism& g) {
                auto tg = theta_hom(th[a], th[b], g);
                CHECK(is_homomorphism(tg, th[a].image, th[b].image));
                if (is_mono(g))
                    CHECK(is_mono(tg));
                if (is_epi(g))
                    CHECK(is_epi(tg));
                killed += is_zero(tg);
                return true;
            });
            std::uint64_t expected = 1;
            for (std::size_t k = 0; k < ker_theta_dim(x, y); ++k)
                expected *= 2;
            CHECK(killed == expected);
            // Composition with an endomorphism of the target.
            auto hy = hom_basis(y, y), hxy = hom_basis(x, y);
            for (const auto& g : hy.basis)
                for (const auto& h : hxy.basis)
                    CHECK(theta_hom(th[a], th[b], compose(g, h)) ==
                          compose(theta_hom(th[b], th[b], g), theta_hom(th[a], th[b], h)));
        }
}
