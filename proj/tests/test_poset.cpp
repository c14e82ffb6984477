#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "prinhall/errors.hpp"
#include "prinhall/poset.hpp"

using namespace prinhall;

TEST_CASE("from_relations basics")
{
    auto chain = Poset::from_relations({"1", "2"}, {{"1", "2"}});
    CHECK(chain.leq(0, 1));
    CHECK_FALSE(chain.leq(1, 0));

    auto anti = Poset::from_relations({"1", "2"}, {});
    CHECK_FALSE(anti.leq(0, 1));
    CHECK_FALSE(anti.leq(1, 0));

    CHECK_THROWS_AS(Poset::from_relations({"1", "2"}, {{"1", "2"}, {"2", "1"}}), ValidationError);
    CHECK_THROWS_AS(Poset::from_relations({"1", "1"}, {}), ValidationError);
    CHECK_THROWS_AS(Poset::from_relations({"1"}, {{"1", "9"}}), ValidationError);
}

TEST_CASE("cycle message names the cycle")
{
    try {
        Poset::from_relations({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
        FAIL("expected a cycle error");
    } catch (const ValidationError& e) {
        std::string msg = e.what();
        CHECK(msg.find("a -> b -> c -> a") != std::string::npos);
    }
}

TEST_CASE("linear extension reorders")
{
    auto p = Poset::from_relations({"top", "bottom"}, {{"bottom", "top"}});
    CHECK(p.label(0) == "bottom");
    CHECK(p.label(1) == "top");
    CHECK(p.leq(0, 1));
}

TEST_CASE("max, minus and covers")
{
    auto chain = Poset::chain(2);
    CHECK(chain.max_elements() == std::vector<std::size_t>{1});
    CHECK(chain.minus().labels() == std::vector<std::string>{"1"});

    auto anti = Poset::antichain(2);
    CHECK(anti.max_elements() == std::vector<std::size_t>{0, 1});
    CHECK(anti.minus().size() == 0);

    auto v = Poset::from_relations({"1", "2", "3"}, {{"1", "3"}, {"2", "3"}});
    CHECK(cover_labels(v) == std::vector<Poset::Relation>{{"1", "3"}, {"2", "3"}});
}

TEST_CASE("closure of covers equals strict order")
{
    std::vector<Poset> posets{
        Poset::chain(4),
        Poset::antichain(3),
        Poset::from_relations({"1", "2", "3", "4"}, {{"1", "2"}, {"1", "3"}, {"2", "4"}, {"3", "4"}, {"1", "4"}}),
        Poset::from_relations({"a", "b", "c", "d", "e"}, {{"a", "c"}, {"b", "c"}, {"c", "d"}, {"b", "e"}}),
    };
    for (const auto& p : posets) {
        const std::size_t n = p.size();
        std::vector<bool> reach(n * n, false);
        for (auto [i, j] : p.covers())
            reach[i * n + j] = true;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[i * n + k] && reach[k * n + j])
                        reach[i * n + j] = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(reach[i * n + j] == p.less(i, j));
                if (p.leq(i, j))
                    CHECK(i <= j);
            }

        auto b = bipartition(p);
        CHECK(b.lower.size() + b.upper.size() == n);
        for (auto u : b.upper)
            CHECK(p.is_maximal(u));
        CHECK(p.minus().size() == b.lower.size());
    }
}

TEST_CASE("chain_between follows covers")
{
    auto p = Poset::chain(4);
    auto path = p.chain_between(0, 3);
    CHECK(path.size() == 3);
    CHECK(p.chain_between(2, 2).empty());
    CHECK_THROWS_AS(p.chain_between(3, 0), ValidationError);
}
