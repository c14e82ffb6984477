#include "prinhall/theta.hpp"

#include "prinhall/errors.hpp"

namespace prinhall {

namespace {

bool vanishes_on_max(const Rep& x)
{
    for (auto j : x.poset().max_elements())
        if (x.dim(j) != 0)
            return false;
    return true;
}

} // namespace

ThetaImage theta(const Rep& x)
{
    if (!is_prinjective(x))
        throw ValidationError("theta: module is not prinjective");
    const auto& p = x.poset();
    const Field f = x.field();
    const auto maxes = p.max_elements();
    std::vector<MatFp> kernel(p.size(), MatFp(f, 0, 0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.is_maximal(i)) {
            kernel[i] = MatFp(f, 0, x.dim(i));
            continue;
        }
        MatFp stacked(f, 0, x.dim(i));
        for (auto j : maxes)
            if (p.leq(i, j))
                stacked = stacked.stacked(x.map_of(i, j));
        const auto kb = kernel_basis(stacked);
        MatFp k(f, kb.size(), x.dim(i));
        for (std::size_t r = 0; r < kb.size(); ++r)
            for (std::size_t c = 0; c < x.dim(i); ++c)
                k(r, c) = kb[r][c];
        kernel[i] = std::move(k);
    }
    auto q = quotient(x, kernel);

    // The quotient is realized on the standard complement of each kernel's
    // RREF basis, so the section picks out those coordinates.
    Morphism section;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto e = rref(kernel[i]);
        std::vector<bool> is_pivot(x.dim(i), false);
        for (auto c : e.pivots)
            is_pivot[c] = true;
        MatFp s(f, x.dim(i), q.module.dim(i));
        std::size_t col = 0;
        for (std::size_t c = 0; c < x.dim(i); ++c)
            if (!is_pivot[c])
                s(c, col++) = 1;
        section.components.push_back(std::move(s));
    }
    return {x, std::move(q.module), std::move(q.map), std::move(section)};
}

Morphism theta_hom(const ThetaImage& tx, const ThetaImage& ty, const Morphism& f)
{
    Morphism g;
    for (std::size_t i = 0; i < f.components.size(); ++i)
        g.components.push_back(ty.projection.components[i] * f.components[i] * tx.section.components[i]);
    return g;
}

std::size_t ker_theta_dim(const Rep& x, const Rep& y)
{
    const auto h = hom_basis(x, y);
    if (h.dim() == 0)
        return 0;
    const auto maxes = x.poset().max_elements();
    std::size_t width = 0;
    for (auto j : maxes)
        width += x.dim(j) * y.dim(j);
    MatFp m(x.field(), h.dim(), width);
    for (std::size_t k = 0; k < h.dim(); ++k) {
        std::size_t col = 0;
        for (auto j : maxes)
            for (auto e : h.basis[k].components[j].entries())
                m(k, col++) = e;
    }
    return h.dim() - rank(m);
}

ThetaSplit split_ker_theta(const Rep& x, std::uint64_t budget)
{
    std::vector<Rep> reduced, kernel_part;
    for (auto& w : indecompose(x, budget))
        (vanishes_on_max(w) ? kernel_part : reduced).push_back(std::move(w));
    return {direct_sum(reduced, x.poset_ptr(), x.field()), direct_sum(kernel_part, x.poset_ptr(), x.field())};
}

} // namespace prinhall
