#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "prinhall/errors.hpp"

#include <random>

using namespace prinhall;
using namespace fixtures;

namespace {

// Brute-force hom dimension: enumerate all vertexwise matrix tuples and keep
// those commuting with every cover map.
std::size_t brute_hom_count(const Rep& x, const Rep& y)
{
    const Field f = x.field();
    std::size_t unknowns = 0;
    for (std::size_t i = 0; i < x.dims().size(); ++i)
        unknowns += x.dim(i) * y.dim(i);
    std::vector<Residue> digits(unknowns, 0);
    std::size_t count = 0;
    while (true) {
        Morphism m;
        std::size_t pos = 0;
        for (std::size_t i = 0; i < x.dims().size(); ++i) {
            MatFp c(f, y.dim(i), x.dim(i));
            for (std::size_t r = 0; r < y.dim(i); ++r)
                for (std::size_t s = 0; s < x.dim(i); ++s)
                    c(r, s) = digits[pos++];
            m.components.push_back(c);
        }
        count += is_homomorphism(m, x, y);
        std::size_t k = 0;
        while (k < unknowns && ++digits[k] == f.p())
            digits[k++] = 0;
        if (k == unknowns)
            break;
    }
    return count;
}

std::size_t log_p(std::size_t n, std::size_t p)
{
    std::size_t d = 0;
    while (n > 1) {
        n /= p;
        ++d;
    }
    return d;
}

Rep random_base_change(const Rep& x, std::mt19937& rng)
{
    const Field f = x.field();
    std::vector<MatFp> g;
    for (auto d : x.dims()) {
        while (true) {
            MatFp m(f, d, d);
            std::uniform_int_distribution<Residue> u(0, f.p() - 1);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c)
                    m(r, c) = u(rng);
            if (rank(m) == d) {
                g.push_back(m);
                break;
            }
        }
    }
    std::vector<MatFp> maps;
    const auto& covers = x.poset().covers();
    for (std::size_t c = 0; c < covers.size(); ++c) {
        auto [i, j] = covers[c];
        maps.push_back(g[j] * x.cover_map(c) * inverse(g[i]));
    }
    return Rep(x.poset_ptr(), f, x.dims(), maps);
}

} // namespace

TEST_CASE("validate")
{
    Field f(3);
    auto c = chain3();
    CHECK_FALSE(validate(make_rep(c, f, {1, 2, 1}, {{{1}, {2}}, {{1, 1}}})));

    auto diamond = std::make_shared<const Poset>(
        Poset::from_relations({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "4"}, {"1", "3"}, {"3", "4"}}));
    // covers: (1,2), (1,3), (2,4), (3,4)
    auto ok = make_rep(diamond, f, {1, 1, 1, 1}, {{{1}}, {{1}}, {{1}}, {{1}}});
    CHECK_FALSE(validate(ok));
    auto bad = make_rep(diamond, f, {1, 1, 1, 1}, {{{1}}, {{1}}, {{1}}, {{2}}});
    auto v = validate(bad);
    REQUIRE(v);
    CHECK(diamond->label(v->from) == "1");
    CHECK(diamond->label(v->to) == "4");
    CHECK_THROWS_AS(require_valid(bad), ValidationError);

    auto zero_maps = make_rep(diamond, f, {1, 1, 1, 1}, {{{0}}, {{0}}, {{0}}, {{0}}});
    CHECK_FALSE(validate(zero_maps));
}

TEST_CASE("shape errors")
{
    Field f(2);
    auto c = chain2();
    CHECK_THROWS_AS(make_rep(c, f, {1, 2}, {{{1, 0}}}), ValidationError);
}

TEST_CASE("map_of")
{
    Field f(5);
    auto c = chain3();
    auto x = make_rep(c, f, {1, 2, 1}, {{{1}, {2}}, {{3, 1}}});
    CHECK(x.map_of(1, 1) == MatFp::identity(f, 2));
    CHECK(x.map_of(0, 1) == x.cover_map(0));
    CHECK(x.map_of(0, 2) == x.cover_map(1) * x.cover_map(0));
    CHECK_THROWS_AS(x.map_of(2, 0), ValidationError);
}

TEST_CASE("projectives and simples")
{
    Field f(3);
    auto c = chain2();
    auto p1 = projective(c, f, 0);
    CHECK(p1.dims() == DimVector{1, 1});
    CHECK(p1.cover_map(0) == MatFp::identity(f, 1));
    CHECK(projective(c, f, 1).dims() == DimVector{0, 1});

    auto a = std::make_shared<const Poset>(Poset::antichain(3));
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(is_isomorphic(projective(a, f, i), simple(a, f, i)));

    for (auto p : {chain3(), vee()})
        for (std::size_t i = 0; i < p->size(); ++i) {
            CHECK(is_isomorphic(simple(p, f, i), projective(p, f, i)) == p->is_maximal(i));
            for (std::size_t j = 0; j < p->size(); ++j)
                if (i != j)
                    CHECK(hom_dim(simple(p, f, i), simple(p, f, j)) == 0);
        }
}

TEST_CASE("hom_basis examples")
{
    Field f(2);
    auto c = chain2();
    auto p1 = projective(c, f, 0), p2 = projective(c, f, 1);
    CHECK(hom_dim(p1, p2) == 0);
    CHECK(hom_dim(p2, p1) == 1);
    CHECK(brute_hom_count(p1, p2) == 1);
    CHECK(brute_hom_count(p2, p1) == 2);

    auto x = make_rep(chain3(), f, {1, 2, 1}, {{{1}, {1}}, {{1, 0}}});
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(hom_dim(projective(chain3(), f, i), x) == x.dim(i));
}

TEST_CASE("hom_basis agrees with brute force on small reps")
{
    std::mt19937 rng(7);
    for (std::uint32_t p : {2u, 3u}) {
        Field f(p);
        std::vector<Rep> reps;
        for (auto poset : {chain2(), vee()})
            for (std::size_t i = 0; i < poset->size(); ++i) {
                reps.push_back(projective(poset, f, i));
                reps.push_back(simple(poset, f, i));
            }
        reps.push_back(make_rep(chain2(), f, {2, 1}, {{{1, 1}}}));
        reps.push_back(make_rep(vee(), f, {1, 1, 2}, {{{1}, {0}}, {{1}, {1}}}));
        for (const auto& x : reps)
            for (const auto& y : reps) {
                if (!x.compatible(y))
                    continue;
                auto h = hom_basis(x, y);
                for (const auto& b : h.basis)
                    CHECK(is_homomorphism(b, x, y));
                if (x.total_dim() * y.total_dim() <= 8)
                    CHECK(log_p(brute_hom_count(x, y), p) == h.dim());
            }
    }
}

TEST_CASE("direct sums")
{
    Field f(3);
    auto c = chain2();
    auto p1 = projective(c, f, 0), s1 = simple(c, f, 0), s2 = simple(c, f, 1);
    auto zero = Rep::zero(c, f);
    CHECK(is_isomorphic(direct_sum(p1, zero), p1));
    auto sum = direct_sum(p1, s1);
    CHECK(sum.dims() == DimVector{2, 1});
    for (const auto& a : {p1, s1, s2})
        CHECK(hom_dim(a, sum) == hom_dim(a, p1) + hom_dim(a, s1));
    CHECK_THROWS_AS(direct_sum(p1, simple(chain3(), f, 0)), ValidationError);
}

TEST_CASE("counting by enumeration")
{
    Field f2(2), f3(3), f5(5);
    auto c = chain2();
    CHECK(count_aut(simple(c, f5, 0)) == 4);
    CHECK(count_aut(point_space(f2, 2)) == 6);
    CHECK(count_epi(projective(c, f3, 0), simple(c, f3, 0)) == 2);
    CHECK(count_hom(point_space(f3, 2), point_space(f3, 2)) == 81);
    CHECK(count_inj(point_space(f2, 1), point_space(f2, 2)) == 3);
    CHECK_THROWS_AS(count_aut(point_space(f5, 4), 1000), BudgetExceeded);
}

TEST_CASE("count_aut = p^dimEnd - non-invertible endomorphisms")
{
    for (std::uint32_t p : {2u, 3u}) {
        Field f(p);
        std::vector<Rep> reps{point_space(f, 2), direct_sum(projective(chain2(), f, 0), simple(chain2(), f, 0)),
                              make_rep(vee(), f, {1, 1, 2}, {{{1}, {0}}, {{0}, {1}}})};
        for (const auto& x : reps) {
            std::uint64_t singular = 0;
            for_each_hom(hom_basis(x, x), kDefaultBudget, [&](const Morphism& e) {
                singular += !is_iso(e);
                return true;
            });
            std::uint64_t total = 1;
            for (std::size_t k = 0; k < hom_dim(x, x); ++k)
                total *= p;
            CHECK(count_hom(x, x) == total);
            CHECK(count_aut(x) == total - singular);
        }
    }
}

TEST_CASE("is_isomorphic")
{
    Field f(3);
    auto c = chain2();
    auto p1 = projective(c, f, 0);
    CHECK(is_isomorphic(p1, p1));
    CHECK_FALSE(is_isomorphic(simple(c, f, 0), simple(c, f, 1)));
    CHECK(is_isomorphic(p1, make_rep(c, f, {1, 1}, {{{2}}})));
    std::mt19937 rng(5);
    auto x = make_rep(vee(), f, {1, 1, 2}, {{{1}, {0}}, {{1}, {1}}});
    CHECK(is_isomorphic(x, random_base_change(x, rng)));
}

TEST_CASE("radical, top, socle")
{
    Field f(2);
    auto c = chain2();
    auto p1 = projective(c, f, 0);
    CHECK(is_isomorphic(socle(p1).module, simple(c, f, 1)));
    for (auto poset : {chain3(), vee()})
        for (std::size_t i = 0; i < poset->size(); ++i)
            CHECK(is_isomorphic(top(projective(poset, f, i)).module, simple(poset, f, i)));
    auto ss = direct_sum(simple(c, f, 0), simple(c, f, 1));
    CHECK(is_isomorphic(socle(ss).module, ss));
    CHECK(radical(ss).module.is_zero());
}

TEST_CASE("submodules and quotients")
{
    Field f(3);
    auto c = chain2();
    auto p1 = projective(c, f, 0);
    std::vector<MatFp> zero{MatFp(f, 0, 1), MatFp(f, 0, 1)};
    std::vector<MatFp> full{MatFp::identity(f, 1), MatFp::identity(f, 1)};
    CHECK(is_isomorphic(quotient(p1, zero).module, p1));
    CHECK(quotient(p1, full).module.is_zero());
    auto q = quotient(p1, socle_subspaces(p1));
    CHECK(is_isomorphic(q.module, simple(c, f, 0)));
    CHECK(is_homomorphism(q.map, p1, q.module));
    CHECK(is_epi(q.map));

    std::vector<MatFp> bad{MatFp::identity(f, 1), MatFp(f, 0, 1)};
    CHECK_THROWS_AS(submodule(p1, bad), ValidationError);

    auto y = make_rep(chain3(), f, {2, 2, 1}, {{{1, 0}, {0, 1}}, {{1, 2}}});
    auto u = std::vector<MatFp>{MatFp::from_rows(f, {{1, 1}}), MatFp::from_rows(f, {{1, 1}}),
                                MatFp::identity(f, 1)};
    auto sub = submodule(y, u);
    auto quo = quotient(y, u);
    CHECK(is_homomorphism(sub.map, sub.module, y));
    CHECK(is_mono(sub.map));
    CHECK(is_homomorphism(quo.map, y, quo.module));
    CHECK(is_epi(quo.map));
    CHECK_FALSE(validate(sub.module));
    CHECK_FALSE(validate(quo.module));
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(quo.module.dim(i) == y.dim(i) - sub.module.dim(i));
    CHECK(is_zero(compose(quo.map, sub.map)));
}

TEST_CASE("triple view")
{
    Field f(2);
    auto c = chain2();
    auto t = triple_view(projective(c, f, 0));
    CHECK(t.lower.dims() == DimVector{1});
    CHECK(t.upper_dims == DimVector{1});
    REQUIRE(t.cross.size() == 1);
    CHECK(t.cross[0].map == MatFp::identity(f, 1));
    auto ts1 = triple_view(simple(c, f, 0));
    CHECK(ts1.lower.dims() == DimVector{1});
    CHECK(ts1.upper_dims == DimVector{0});
    CHECK(ts1.cross[0].map.rows() == 0);
    auto ts2 = triple_view(simple(c, f, 1));
    CHECK(ts2.lower.dims() == DimVector{0});
    CHECK(ts2.upper_dims == DimVector{1});
}

TEST_CASE("structure predicates")
{
    Field f(2);
    auto c3 = chain3();
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(is_projective(projective(c3, f, i)));
        CHECK(is_prinjective(projective(c3, f, i)));
    }
    CHECK_FALSE(is_projective(simple(c3, f, 0)));
    CHECK(is_projective(Rep::zero(c3, f)));
    // Over 1<2<3 the restriction of S(2) to {1,2} is P(2) there; S(1) restricts to a non-projective.
    CHECK(is_prinjective(simple(c3, f, 1)));
    CHECK_FALSE(is_prinjective(simple(c3, f, 0)));
    CHECK(is_prinjective(simple(c3, f, 2)));

    auto c2 = chain2();
    CHECK(is_socle_projective(projective(c2, f, 0)));
    CHECK_FALSE(is_socle_projective(simple(c2, f, 0)));
    auto a = std::make_shared<const Poset>(Poset::antichain(2));
    CHECK(is_socle_projective(direct_sum(simple(a, f, 0), simple(a, f, 1))));
}

TEST_CASE("proj_hom_dim")
{
    auto c = Poset::chain(2);
    CHECK(proj_hom_dim(c, {1, 0}, {0, 1}) == 0);
    CHECK(proj_hom_dim(c, {0, 1}, {1, 0}) == 1);
    CHECK(proj_hom_dim(c, {1, 0}, {1, 0}) == 1);
    CHECK(proj_hom_dim(c, {0, 1}, {0, 1}) == 1);

    for (std::uint32_t p : {2u, 3u})
        for (auto poset : {chain3(), vee()}) {
            Field f(p);
            std::vector<std::vector<std::size_t>> mults;
            for (std::size_t a = 0; a <= 2; ++a)
                for (std::size_t b = 0; b <= 2; ++b)
                    for (std::size_t d = 0; d <= 1; ++d)
                        mults.push_back({a, b, d});
            for (const auto& n : mults)
                for (const auto& m : mults)
                    CHECK(proj_hom_dim(*poset, n, m) ==
                          hom_dim(projective_sum(poset, f, n), projective_sum(poset, f, m)));
        }
}

TEST_CASE("projective multiplicities")
{
    auto c = Poset::chain(2);
    CHECK(projective_multiplicities(c, {1, 1}) == std::vector<std::size_t>{1, 0});
    CHECK(projective_multiplicities(c, {1, 3}) == std::vector<std::size_t>{1, 2});
    CHECK_FALSE(projective_multiplicities(c, {1, 0}));
}

TEST_CASE("indecompose")
{
    Field f(3);
    auto s = point_space(f, 1);
    auto parts = indecompose(point_space(f, 2));
    CHECK(parts.size() == 2);
    for (const auto& q : parts)
        CHECK(is_isomorphic(q, s));

    auto c = chain2();
    auto p1 = projective(c, f, 0);
    CHECK(indecompose(p1).size() == 1);
    CHECK(is_indecomposable(p1));
    auto mixed = direct_sum(p1, simple(c, f, 0));
    auto mp = indecompose(mixed);
    REQUIRE(mp.size() == 2);
    CHECK(is_isomorphic(direct_sum(mp, c, f), mixed));

    std::mt19937 rng(99);
    auto messy = random_base_change(direct_sum(direct_sum(p1, simple(c, f, 1)), simple(c, f, 0)), rng);
    auto mparts = indecompose(messy);
    CHECK(mparts.size() == 3);
    CHECK(is_isomorphic(direct_sum(mparts, c, f), messy));
    for (const auto& q : mparts) {
        // Local endomorphism ring: every endomorphism invertible or nilpotent.
        for_each_hom(hom_basis(q, q), kDefaultBudget, [&](const Morphism& e) {
            CHECK((is_iso(e) || is_nilpotent(e)));
            return true;
        });
    }
}

TEST_CASE("local summand multiplicities")
{
    Field f(3);
    auto c = chain2();
    auto p1 = projective(c, f, 0), s1 = simple(c, f, 0), s2 = simple(c, f, 1);
    auto w = LocalSummand::probe(p1);
    REQUIRE(w);
    CHECK(w->is_brick());
    auto y = direct_sum(direct_sum(p1, p1), direct_sum(s1, s2));
    CHECK(w->multiplicity_in(y) == 2);
    CHECK(LocalSummand::probe(s2)->multiplicity_in(y) == 1);
    CHECK(LocalSummand::probe(s1)->multiplicity_in(y) == 1);
    CHECK_FALSE(LocalSummand::probe(direct_sum(s1, s2)));
    CHECK(w->isomorphic_to(make_rep(c, f, {1, 1}, {{{2}}})));
    CHECK_FALSE(w->isomorphic_to(direct_sum(s1, s2)));
}

TEST_CASE("ext1")
{
    Field f(2);
    auto c = chain2();
    auto s1 = simple(c, f, 0), s2 = simple(c, f, 1), p1 = projective(c, f, 0);
    CHECK(ext1_dim(s1, s2) == 1);
    CHECK(ext1_dim(s2, s1) == 0);
    CHECK(ext1_dim(p1, s1) == 0);
    CHECK(ext1_dim(s1, s1) == 0);
}
