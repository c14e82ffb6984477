#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "prinhall/counting.hpp"
#include "prinhall/errors.hpp"

#include <random>

using namespace prinhall;
using namespace fixtures;

namespace {

// Oracle: every valid map tuple for every dimension vector in the box,
// deduplicated by exhaustive isomorphism search (no decomposition theory).
std::vector<Rep> brute_classes(const PosetPtr& p, Field f, const DimBound& bound, ClassFilter filter)
{
    std::vector<Rep> classes;
    const auto box = bound.box(p->size());
    DimVector d(p->size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v < p->size()) {
            for (std::size_t k = 0; k <= box[v]; ++k) {
                d[v] = k;
                rec(v + 1);
            }
            return;
        }
        if (!bound.admits(d))
            return;
        std::size_t entries = 0;
        for (auto [i, j] : p->covers())
            entries += d[i] * d[j];
        std::vector<Residue> digits(entries, 0);
        while (true) {
            std::vector<MatFp> maps;
            std::size_t pos = 0;
            for (auto [i, j] : p->covers()) {
                maps.emplace_back(f, d[j], d[i],
                                  std::vector<Residue>(digits.begin() + pos, digits.begin() + pos + d[i] * d[j]));
                pos += d[i] * d[j];
            }
            Rep x(p, f, d, maps);
            if (!validate(x) && passes(filter, x)) {
                bool dup = false;
                for (const auto& c : classes)
                    if (is_isomorphic(c, x)) {
                        dup = true;
                        break;
                    }
                if (!dup)
                    classes.push_back(x);
            }
            std::size_t k = 0;
            while (k < entries && ++digits[k] == f.p())
                digits[k++] = 0;
            if (k == entries)
                break;
        }
    };
    rec(0);
    return classes;
}

Rep random_base_change(const Rep& x, std::mt19937& rng)
{
    const Field f = x.field();
    std::vector<MatFp> g;
    std::uniform_int_distribution<Residue> u(0, f.p() - 1);
    for (auto d : x.dims())
        while (true) {
            MatFp m(f, d, d);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c)
                    m(r, c) = u(rng);
            if (rank(m) == d) {
                g.push_back(m);
                break;
            }
        }
    std::vector<MatFp> maps;
    for (std::size_t c = 0; c < x.poset().covers().size(); ++c) {
        auto [i, j] = x.poset().covers()[c];
        maps.push_back(g[j] * x.cover_map(c) * inverse(g[i]));
    }
    return Rep(x.poset_ptr(), f, x.dims(), maps);
}

} // namespace

TEST_CASE("submodule examples")
{
    Field f(2);
    auto c = chain2();
    CHECK(count_submodules(simple(c, f, 0)) == 2);
    CHECK(count_submodules(projective(c, f, 0)) == 3);
    CHECK(count_submodules(point_space(f, 2)) == 5);
}

TEST_CASE("submodules are closed and distinct")
{
    Field f(3);
    auto y = make_rep(vee(), f, {1, 1, 2}, {{{1}, {0}}, {{0}, {1}}});
    std::set<std::vector<std::vector<Residue>>> seen;
    std::size_t n = 0;
    for_each_submodule(y, [&](const std::vector<MatFp>& u) {
        require_closed(y, u);
        std::vector<std::vector<Residue>> key;
        for (const auto& m : u)
            key.push_back(m.entries());
        seen.insert(key);
        ++n;
        return true;
    });
    CHECK(seen.size() == n);
    // Oracle: all subspace tuples, filtered by closure.
    std::size_t brute = 0;
    for (std::size_t a = 0; a <= 1; ++a)
        for (const auto& u1 : subspaces(1, a, f))
            for (std::size_t b = 0; b <= 1; ++b)
                for (const auto& u2 : subspaces(1, b, f))
                    for (std::size_t e = 0; e <= 2; ++e)
                        for (const auto& u3 : subspaces(2, e, f)) {
                            std::vector<MatFp> u{u1, u2, u3};
                            try {
                                require_closed(y, u);
                                ++brute;
                            } catch (const ValidationError&) {
                            }
                        }
    CHECK(brute == n);
}

TEST_CASE("hall_number examples")
{
    Field f(2);
    auto k1 = point_space(f, 1), k2 = point_space(f, 2);
    CHECK(hall_number(k2, k1, k1) == 3);
    auto c = chain2();
    auto p1 = projective(c, f, 0), s1 = simple(c, f, 0), s2 = simple(c, f, 1);
    CHECK(hall_number(p1, s1, s2) == 1);
    CHECK(hall_number(p1, s2, s1) == 0);
}

TEST_CASE("catalog examples")
{
    Field f(2);
    auto c = chain2();
    auto all = Catalog::build(c, f, DimBound{DimVector{1, 1}, {}}, ClassFilter::all);
    // 0, S(1), S(2), P(1) and S(1) + S(2).
    CHECK(all.size() == 5);
    CHECK(all.indecomposables().size() == 3);
    CHECK(all.classify(direct_sum(simple(c, f, 0), simple(c, f, 1))));
    auto sp = Catalog::build(c, f, DimBound{DimVector{1, 1}, {}}, ClassFilter::socle_projective);
    CHECK(sp.size() == 3);
    for (const auto& e : sp.entries())
        CHECK_FALSE(is_isomorphic(e.module, simple(c, f, 0)));

    auto a = std::make_shared<const Poset>(Poset::antichain(2));
    auto anti = Catalog::build(a, f, DimBound{{}, 3}, ClassFilter::all);
    for (const auto& e : anti.entries())
        CHECK(radical(e.module).module.is_zero());
    CHECK(anti.indecomposables().size() == 2);

    auto pt = Catalog::build(point(), Field(3), DimBound{{}, 4}, ClassFilter::all);
    CHECK(pt.indecomposables().size() == 1);
    CHECK(pt.size() == 5);
}

TEST_CASE("catalogs are exhaustive and irredundant")
{
    struct Case {
        PosetPtr poset;
        std::uint32_t p;
        DimBound bound;
        ClassFilter filter;
    };
    std::vector<Case> cases{
        {chain2(), 2, {DimVector{2, 2}, {}}, ClassFilter::all},
        {chain2(), 3, {DimVector{2, 1}, {}}, ClassFilter::all},
        {chain3(), 2, {{}, 3}, ClassFilter::all},
        {chain3(), 2, {{}, 3}, ClassFilter::prinjective},
        {chain3(), 2, {{}, 3}, ClassFilter::socle_projective},
        {vee(), 2, {{}, 3}, ClassFilter::all},
        {vee(), 3, {DimVector{1, 1, 1}, {}}, ClassFilter::socle_projective},
    };
    for (const auto& tc : cases) {
        Field f(tc.p);
        auto cat = Catalog::build(tc.poset, f, tc.bound, tc.filter);
        auto brute = brute_classes(tc.poset, f, tc.bound, tc.filter);
        CHECK(cat.size() == brute.size());
        for (const auto& b : brute) {
            auto idx = cat.classify(b);
            REQUIRE(idx);
            CHECK(is_isomorphic(cat[*idx].module, b));
        }
        for (std::size_t i = 0; i < cat.size(); ++i)
            for (std::size_t j = i + 1; j < cat.size(); ++j)
                CHECK_FALSE(is_isomorphic(cat[i].module, cat[j].module));
        for (const auto& e : cat.entries())
            CHECK(passes(tc.filter, e.module));
    }
}

TEST_CASE("known indecomposable counts")
{
    Field f(2);
    CHECK(Catalog::build(chain2(), f, {DimVector{2, 2}, {}}, ClassFilter::all).indecomposables().size() == 3);
    CHECK(Catalog::build(chain3(), f, {{}, 3}, ClassFilter::all).indecomposables().size() == 6);
    CHECK(Catalog::build(chain3(), f, {{}, 3}, ClassFilter::prinjective).indecomposables().size() == 5);
    CHECK(Catalog::build(chain3(), f, {{}, 3}, ClassFilter::socle_projective).indecomposables().size() == 3);
    CHECK(Catalog::build(vee(), f, {{}, 4}, ClassFilter::all).indecomposables().size() == 6);
}

TEST_CASE("smaller_specs")
{
    Field f(2);
    auto c = chain2();
    auto cat = Catalog::build(c, f, DimBound{DimVector{1, 1}, {}}, ClassFilter::all);
    CHECK(smaller_specs(cat, Rep::zero(c, f)).empty());
    auto s = smaller_specs(cat, simple(c, f, 0));
    REQUIRE(s.size() == 1);
    CHECK(s[0].is_zero());
    CHECK(smaller_specs(cat, projective(c, f, 0)).size() == 3);
}

TEST_CASE("hall rows partition the submodules and match hall_number")
{
    for (std::uint32_t p : {2u, 3u})
        for (auto poset : {chain2(), chain3(), vee()}) {
            Field f(p);
            auto cat = Catalog::build(poset, f, DimBound{{}, 3}, ClassFilter::all);
            HallTable table(cat);
            for (std::size_t y = 0; y < cat.size(); ++y) {
                const auto& row = table.row(y);
                CHECK(row.outside == 0);
                std::uint64_t sum = 0;
                for (const auto& [qs, n] : row.counts)
                    sum += n;
                CHECK(sum == count_submodules(cat[y].module));
                if (p == 2)
                    for (const auto& [qs, n] : row.counts)
                        CHECK(hall_number(cat[y].module, cat[qs.first].module, cat[qs.second].module) == n);
            }
        }
}

TEST_CASE("hall_number is invariant under base change")
{
    std::mt19937 rng(11);
    Field f(3);
    auto cat = Catalog::build(vee(), f, DimBound{{}, 3}, ClassFilter::all);
    HallTable table(cat);
    for (std::size_t y = 0; y < cat.size(); ++y)
        for (const auto& [qs, n] : table.row(y).counts) {
            auto yy = random_base_change(cat[y].module, rng);
            auto qq = random_base_change(cat[qs.first].module, rng);
            auto ss = random_base_change(cat[qs.second].module, rng);
            CHECK(hall_number(yy, qq, ss) == n);
        }
}

TEST_CASE("epis divided by automorphisms count quotients")
{
    Field f(2);
    auto cat = Catalog::build(chain3(), f, DimBound{{}, 3}, ClassFilter::all);
    HallTable table(cat);
    for (std::size_t y = 0; y < cat.size(); ++y)
        for (std::size_t x = 0; x < cat.size(); ++x) {
            const auto epi = count_epi(cat[y].module, cat[x].module);
            const auto aut = count_aut(cat[x].module);
            CHECK(epi % aut == 0);
            std::uint64_t quotients = 0;
            for (const auto& [qs, n] : table.row(y).counts)
                if (qs.first == x)
                    quotients += n;
            CHECK(epi / aut == quotients);
        }
}

TEST_CASE("count_aut_exact agrees with enumeration")
{
    for (std::uint32_t p : {2u, 3u}) {
        Field f(p);
        for (auto poset : {point(), chain2(), vee()}) {
            auto cat = Catalog::build(poset, f, DimBound{{}, 3}, ClassFilter::all);
            for (const auto& e : cat.entries())
                CHECK(count_aut_exact(e.module) == mpz_class(std::to_string(count_aut(e.module))));
        }
    }
    CHECK(gl_order(2, 2) == 6);
    CHECK(gl_order(3, 2) == 48);
}
