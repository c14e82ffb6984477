#pragma once

#include "prinhall/rep.hpp"

#include <memory>

namespace fixtures {

using namespace prinhall;

inline PosetPtr point() { return std::make_shared<const Poset>(Poset::chain(1)); }
inline PosetPtr chain2() { return std::make_shared<const Poset>(Poset::chain(2)); }
inline PosetPtr chain3() { return std::make_shared<const Poset>(Poset::chain(3)); }
/// 1 <= 3, 2 <= 3.
inline PosetPtr vee()
{
    return std::make_shared<const Poset>(Poset::from_relations({"1", "2", "3"}, {{"1", "3"}, {"2", "3"}}));
}

/// K^n at the single point.
inline Rep point_space(Field f, std::size_t n)
{
    return Rep(point(), f, {n}, {});
}

/// Rep over a poset with maps given as integer rows, one per cover.
inline Rep make_rep(const PosetPtr& p, Field f, DimVector dims,
                    const std::vector<std::vector<std::vector<std::int64_t>>>& maps)
{
    std::vector<MatFp> ms;
    const auto& covers = p->covers();
    for (std::size_t c = 0; c < covers.size(); ++c)
        ms.push_back(MatFp::from_rows(f, maps[c], dims[covers[c].first]));
    return Rep(p, f, std::move(dims), std::move(ms));
}

} // namespace fixtures
