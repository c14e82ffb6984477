#include "prinhall/rep.hpp"

#include "prinhall/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace prinhall {

std::size_t total(const DimVector& d) { return std::accumulate(d.begin(), d.end(), std::size_t{0}); }

bool dominated(const DimVector& a, const DimVector& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

DimVector add_dims(const DimVector& a, const DimVector& b)
{
    DimVector out(a);
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += b[i];
    return out;
}

// ---------------------------------------------------------------------------
// Rep

Rep::Rep(PosetPtr poset, Field field, DimVector dims, std::vector<MatFp> maps)
    : poset_(std::move(poset)), field_(field), dims_(std::move(dims)), maps_(std::move(maps))
{
    const auto& covers = poset_->covers();
    if (dims_.size() != poset_->size())
        throw ValidationError("dimension vector has " + std::to_string(dims_.size()) +
                              " entries, poset has " + std::to_string(poset_->size()));
    if (maps_.size() != covers.size())
        throw ValidationError("expected one map per cover pair");
    for (std::size_t c = 0; c < covers.size(); ++c) {
        auto [i, j] = covers[c];
        const auto& m = maps_[c];
        if (m.field() != field_)
            throw ValidationError("map field mismatch");
        if (m.rows() != dims_[j] || m.cols() != dims_[i])
            throw ValidationError("map " + poset_->label(i) + "->" + poset_->label(j) + " has shape " +
                                  std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                  ", expected " + std::to_string(dims_[j]) + "x" +
                                  std::to_string(dims_[i]));
    }
}

Rep Rep::zero(PosetPtr poset, Field field)
{
    std::vector<MatFp> maps(poset->covers().size(), MatFp(field, 0, 0));
    DimVector dims(poset->size(), 0);
    return Rep(std::move(poset), field, std::move(dims), std::move(maps));
}

MatFp Rep::map_of(std::size_t i, std::size_t j) const
{
    if (!poset_->leq(i, j))
        throw ValidationError("map_of: " + poset_->label(i) + " is not below " + poset_->label(j));
    MatFp m = MatFp::identity(field_, dims_[i]);
    for (auto c : poset_->chain_between(i, j))
        m = maps_[c] * m;
    return m;
}

bool Rep::compatible(const Rep& other) const
{
    return field_ == other.field_ && (poset_ == other.poset_ || *poset_ == *other.poset_);
}

std::string Rep::to_string() const
{
    std::ostringstream os;
    os << "dims(";
    for (std::size_t i = 0; i < dims_.size(); ++i)
        os << (i ? "," : "") << dims_[i];
    os << ")";
    const auto& covers = poset_->covers();
    for (std::size_t c = 0; c < covers.size(); ++c)
        os << " " << poset_->label(covers[c].first) << "->" << poset_->label(covers[c].second) << "="
           << maps_[c].to_string();
    return os.str();
}

namespace {

void require_compatible(const Rep& a, const Rep& b, const char* what)
{
    if (!a.compatible(b))
        throw ValidationError(std::string(what) + ": modules over different posets or fields");
}

} // namespace

std::optional<PathViolation> validate(const Rep& x)
{
    // If every composite from a cover target k up to j is path independent,
    // then all chains i -> j agree iff phi_kj phi_ik is the same for every
    // cover (i, k) with k <= j. Check intervals by increasing length.
    const auto& p = x.poset();
    const std::size_t n = p.size();
    std::vector<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (p.less(i, j)) {
                std::size_t len = 0;
                for (std::size_t k = 0; k < n; ++k)
                    if (p.leq(i, k) && p.leq(k, j))
                        ++len;
                pairs.push_back({len, {i, j}});
            }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [len, ij] : pairs) {
        auto [i, j] = ij;
        const MatFp reference = x.map_of(i, j);
        for (std::size_t c = 0; c < p.covers().size(); ++c) {
            auto [a, k] = p.covers()[c];
            if (a != i || !p.leq(k, j))
                continue;
            MatFp other = x.map_of(k, j) * x.cover_map(c);
            if (!(other == reference))
                return PathViolation{i, j, reference, std::move(other)};
        }
    }
    return std::nullopt;
}

void require_valid(const Rep& x)
{
    if (auto v = validate(x))
        throw ValidationError("path independence fails for (" + x.poset().label(v->from) + ", " +
                              x.poset().label(v->to) + "): " + v->first.to_string() + " vs " +
                              v->second.to_string());
}

// ---------------------------------------------------------------------------
// Morphisms

Morphism identity_morphism(const Rep& x)
{
    Morphism f;
    for (auto d : x.dims())
        f.components.push_back(MatFp::identity(x.field(), d));
    return f;
}

Morphism zero_morphism(const Rep& source, const Rep& target)
{
    Morphism f;
    for (std::size_t i = 0; i < source.dims().size(); ++i)
        f.components.emplace_back(source.field(), target.dim(i), source.dim(i));
    return f;
}

Morphism compose(const Morphism& g, const Morphism& f)
{
    Morphism h;
    for (std::size_t i = 0; i < f.components.size(); ++i)
        h.components.push_back(g.components[i] * f.components[i]);
    return h;
}

Morphism operator+(const Morphism& a, const Morphism& b)
{
    Morphism h;
    for (std::size_t i = 0; i < a.components.size(); ++i)
        h.components.push_back(a.components[i] + b.components[i]);
    return h;
}

Morphism operator-(const Morphism& a, const Morphism& b)
{
    Morphism h;
    for (std::size_t i = 0; i < a.components.size(); ++i)
        h.components.push_back(a.components[i] - b.components[i]);
    return h;
}

Morphism scaled(const Morphism& f, Residue s)
{
    Morphism h;
    for (const auto& c : f.components)
        h.components.push_back(c.scaled(s));
    return h;
}

bool is_zero(const Morphism& f)
{
    return std::all_of(f.components.begin(), f.components.end(), [](const MatFp& m) { return m.is_zero(); });
}

bool is_mono(const Morphism& f)
{
    return std::all_of(f.components.begin(), f.components.end(),
                       [](const MatFp& m) { return rank(m) == m.cols(); });
}

bool is_epi(const Morphism& f)
{
    return std::all_of(f.components.begin(), f.components.end(),
                       [](const MatFp& m) { return rank(m) == m.rows(); });
}

bool is_iso(const Morphism& f)
{
    return std::all_of(f.components.begin(), f.components.end(), [](const MatFp& m) {
        return m.rows() == m.cols() && rank(m) == m.rows();
    });
}

bool is_nilpotent(const Morphism& f)
{
    for (const auto& c : f.components) {
        if (c.rows() != c.cols())
            return false;
        MatFp power = c;
        for (std::size_t k = 1; k < c.rows(); ++k)
            power = power * c;
        if (!power.is_zero())
            return false;
    }
    return true;
}

bool is_homomorphism(const Morphism& f, const Rep& source, const Rep& target)
{
    const auto& covers = source.poset().covers();
    for (std::size_t c = 0; c < covers.size(); ++c) {
        auto [i, j] = covers[c];
        if (!(f.components[j] * source.cover_map(c) == target.cover_map(c) * f.components[i]))
            return false;
    }
    return true;
}

Morphism HomSpace::element(std::span<const Residue> coeffs) const
{
    Morphism f = zero_morphism(source, target);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (coeffs[k] != 0)
            f = f + scaled(basis[k], coeffs[k]);
    return f;
}

HomSpace hom_basis(const Rep& x, const Rep& y)
{
    require_compatible(x, y, "hom_basis");
    const Field f = x.field();
    const std::size_t n = x.dims().size();
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        offset[i + 1] = offset[i] + y.dim(i) * x.dim(i);
    const std::size_t unknowns = offset[n];

    // Unknown (i, r, s) is entry (r, s) of f_i, at offset[i] + r * dim x_i + s.
    const auto& covers = x.poset().covers();
    std::size_t equations = 0;
    for (auto [i, j] : covers)
        equations += y.dim(j) * x.dim(i);
    MatFp sys(f, equations, unknowns);
    std::size_t row = 0;
    for (std::size_t c = 0; c < covers.size(); ++c) {
        auto [i, j] = covers[c];
        const MatFp& phi = x.cover_map(c);
        const MatFp& psi = y.cover_map(c);
        // (f_j phi - psi f_i)(r, s) = 0
        for (std::size_t r = 0; r < y.dim(j); ++r)
            for (std::size_t s = 0; s < x.dim(i); ++s, ++row) {
                for (std::size_t t = 0; t < x.dim(j); ++t)
                    if (phi(t, s))
                        sys(row, offset[j] + r * x.dim(j) + t) =
                            f.add(sys(row, offset[j] + r * x.dim(j) + t), phi(t, s));
                for (std::size_t t = 0; t < y.dim(i); ++t)
                    if (psi(r, t))
                        sys(row, offset[i] + t * x.dim(i) + s) =
                            f.sub(sys(row, offset[i] + t * x.dim(i) + s), psi(r, t));
            }
    }
    HomSpace h{x, y, {}};
    for (const auto& v : kernel_basis(sys)) {
        Morphism m;
        for (std::size_t i = 0; i < n; ++i) {
            MatFp c(f, y.dim(i), x.dim(i));
            for (std::size_t r = 0; r < y.dim(i); ++r)
                for (std::size_t s = 0; s < x.dim(i); ++s)
                    c(r, s) = v[offset[i] + r * x.dim(i) + s];
            m.components.push_back(std::move(c));
        }
        h.basis.push_back(std::move(m));
    }
    return h;
}

std::size_t hom_dim(const Rep& x, const Rep& y) { return hom_basis(x, y).dim(); }

// ---------------------------------------------------------------------------
// Constructions

Rep direct_sum(const Rep& x, const Rep& y)
{
    require_compatible(x, y, "direct_sum");
    const Field f = x.field();
    const auto& covers = x.poset().covers();
    std::vector<MatFp> maps;
    for (std::size_t c = 0; c < covers.size(); ++c) {
        auto [i, j] = covers[c];
        MatFp m(f, x.dim(j) + y.dim(j), x.dim(i) + y.dim(i));
        const auto& a = x.cover_map(c);
        const auto& b = y.cover_map(c);
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t s = 0; s < a.cols(); ++s)
                m(r, s) = a(r, s);
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t s = 0; s < b.cols(); ++s)
                m(a.rows() + r, a.cols() + s) = b(r, s);
        maps.push_back(std::move(m));
    }
    return Rep(x.poset_ptr(), f, add_dims(x.dims(), y.dims()), std::move(maps));
}

Rep direct_sum(std::span<const Rep> parts, const PosetPtr& poset, Field field)
{
    Rep acc = Rep::zero(poset, field);
    for (const auto& r : parts)
        acc = direct_sum(acc, r);
    return acc;
}

Rep projective(const PosetPtr& poset, Field field, std::size_t i)
{
    if (i >= poset->size())
        throw ValidationError("projective: unknown element index " + std::to_string(i));
    DimVector dims(poset->size(), 0);
    for (std::size_t j = 0; j < poset->size(); ++j)
        dims[j] = poset->leq(i, j) ? 1 : 0;
    std::vector<MatFp> maps;
    for (auto [a, b] : poset->covers()) {
        MatFp m(field, dims[b], dims[a]);
        if (dims[a] && dims[b])
            m(0, 0) = 1;
        maps.push_back(std::move(m));
    }
    return Rep(poset, field, std::move(dims), std::move(maps));
}

Rep simple(const PosetPtr& poset, Field field, std::size_t i)
{
    if (i >= poset->size())
        throw ValidationError("simple: unknown element index " + std::to_string(i));
    DimVector dims(poset->size(), 0);
    dims[i] = 1;
    std::vector<MatFp> maps;
    for (auto [a, b] : poset->covers())
        maps.emplace_back(field, dims[b], dims[a]);
    return Rep(poset, field, std::move(dims), std::move(maps));
}

Rep projective_sum(const PosetPtr& poset, Field field, const std::vector<std::size_t>& mult)
{
    Rep acc = Rep::zero(poset, field);
    for (std::size_t i = 0; i < mult.size(); ++i)
        for (std::size_t k = 0; k < mult[i]; ++k)
            acc = direct_sum(acc, projective(poset, field, i));
    return acc;
}

// ---------------------------------------------------------------------------
// Counting by enumeration

namespace {

std::uint64_t checked_size(Field f, std::size_t dim, std::uint64_t budget)
{
    std::uint64_t size = 1;
    for (std::size_t k = 0; k < dim; ++k) {
        if (size > budget / f.p())
            throw BudgetExceeded("hom space of size " + std::to_string(f.p()) + "^" + std::to_string(dim) +
                                 " exceeds the enumeration budget " + std::to_string(budget));
        size *= f.p();
    }
    return size;
}

} // namespace

void for_each_hom(const HomSpace& h, std::uint64_t budget, const std::function<bool(const Morphism&)>& visit)
{
    const Field f = h.source.field();
    checked_size(f, h.dim(), budget);
    Morphism cur = zero_morphism(h.source, h.target);
    std::vector<Residue> digits(h.dim(), 0);
    while (true) {
        if (!visit(cur))
            return;
        // Adding basis[pos] once more after p - 1 steps returns that digit to zero.
        bool wrapped = true;
        for (std::size_t pos = h.dim(); pos-- > 0;) {
            cur = cur + h.basis[pos];
            if (++digits[pos] < f.p()) {
                wrapped = false;
                break;
            }
            digits[pos] = 0;
        }
        if (wrapped)
            return;
    }
}

std::uint64_t count_hom(const Rep& x, const Rep& y, std::uint64_t budget)
{
    return checked_size(x.field(), hom_dim(x, y), budget);
}

std::uint64_t count_inj(const Rep& x, const Rep& y, std::uint64_t budget)
{
    std::uint64_t n = 0;
    for_each_hom(hom_basis(x, y), budget, [&](const Morphism& f) {
        n += is_mono(f);
        return true;
    });
    return n;
}

std::uint64_t count_epi(const Rep& x, const Rep& y, std::uint64_t budget)
{
    std::uint64_t n = 0;
    for_each_hom(hom_basis(x, y), budget, [&](const Morphism& f) {
        n += is_epi(f);
        return true;
    });
    return n;
}

std::uint64_t count_aut(const Rep& x, std::uint64_t budget)
{
    std::uint64_t n = 0;
    for_each_hom(hom_basis(x, x), budget, [&](const Morphism& f) {
        n += is_iso(f);
        return true;
    });
    return n;
}

bool is_isomorphic(const Rep& x, const Rep& y, std::uint64_t budget)
{
    require_compatible(x, y, "is_isomorphic");
    if (x.dims() != y.dims())
        return false;
    if (x.is_zero())
        return true;
    bool found = false;
    for_each_hom(hom_basis(x, y), budget, [&](const Morphism& f) {
        found = is_iso(f);
        return !found;
    });
    return found;
}

// ---------------------------------------------------------------------------
// Submodules and quotients

void require_closed(const Rep& y, std::span<const MatFp> subspaces)
{
    const auto& p = y.poset();
    if (subspaces.size() != p.size())
        throw ValidationError("expected one subspace per poset element");
    std::vector<Echelon> ech;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (subspaces[i].cols() != y.dim(i))
            throw ValidationError("subspace at " + p.label(i) + " has the wrong ambient dimension");
        ech.push_back(rref(subspaces[i]));
    }
    for (std::size_t c = 0; c < p.covers().size(); ++c) {
        auto [i, j] = p.covers()[c];
        for (std::size_t r = 0; r < subspaces[i].rows(); ++r)
            if (!rref_contains(ech[j], y.cover_map(c).apply(subspaces[i].row(r))))
                throw ValidationError("subspaces not closed under the map " + p.label(i) + "->" + p.label(j));
    }
}

SubRep submodule(const Rep& y, std::span<const MatFp> subspaces)
{
    require_closed(y, subspaces);
    const Field f = y.field();
    const auto& p = y.poset();
    std::vector<Echelon> ech;
    DimVector dims;
    Morphism incl;
    for (std::size_t i = 0; i < p.size(); ++i) {
        ech.push_back(rref(subspaces[i]));
        dims.push_back(ech.back().rank);
        MatFp basis(f, ech.back().rank, y.dim(i));
        for (std::size_t r = 0; r < basis.rows(); ++r)
            for (std::size_t c = 0; c < basis.cols(); ++c)
                basis(r, c) = ech.back().reduced(r, c);
        incl.components.push_back(basis.transpose());
    }
    std::vector<MatFp> maps;
    for (std::size_t c = 0; c < p.covers().size(); ++c) {
        auto [i, j] = p.covers()[c];
        MatFp m(f, dims[j], dims[i]);
        for (std::size_t s = 0; s < dims[i]; ++s) {
            const auto image = y.cover_map(c).apply(ech[i].reduced.row(s));
            const auto coords = rref_coordinates(ech[j], image);
            for (std::size_t r = 0; r < dims[j]; ++r)
                m(r, s) = coords[r];
        }
        maps.push_back(std::move(m));
    }
    return {Rep(y.poset_ptr(), f, std::move(dims), std::move(maps)), std::move(incl)};
}

SubRep quotient(const Rep& y, std::span<const MatFp> subspaces)
{
    require_closed(y, subspaces);
    const Field f = y.field();
    const auto& p = y.poset();
    std::vector<Echelon> ech;
    std::vector<std::vector<std::size_t>> comp(p.size());
    DimVector dims;
    Morphism proj;
    for (std::size_t i = 0; i < p.size(); ++i) {
        ech.push_back(rref(subspaces[i]));
        std::vector<bool> is_pivot(y.dim(i), false);
        for (auto c : ech.back().pivots)
            is_pivot[c] = true;
        for (std::size_t c = 0; c < y.dim(i); ++c)
            if (!is_pivot[c])
                comp[i].push_back(c);
        dims.push_back(comp[i].size());
        MatFp m(f, comp[i].size(), y.dim(i));
        for (std::size_t s = 0; s < y.dim(i); ++s) {
            Vec e(y.dim(i), 0);
            e[s] = 1;
            const auto red = rref_reduce(ech[i], e);
            for (std::size_t r = 0; r < comp[i].size(); ++r)
                m(r, s) = red[comp[i][r]];
        }
        proj.components.push_back(std::move(m));
    }
    std::vector<MatFp> maps;
    for (std::size_t c = 0; c < p.covers().size(); ++c) {
        auto [i, j] = p.covers()[c];
        MatFp m(f, dims[j], dims[i]);
        for (std::size_t s = 0; s < dims[i]; ++s) {
            const auto red = rref_reduce(ech[j], y.cover_map(c).column(comp[i][s]));
            for (std::size_t r = 0; r < dims[j]; ++r)
                m(r, s) = red[comp[j][r]];
        }
        maps.push_back(std::move(m));
    }
    return {Rep(y.poset_ptr(), f, std::move(dims), std::move(maps)), std::move(proj)};
}

std::vector<MatFp> radical_subspaces(const Rep& x)
{
    const auto& p = x.poset();
    std::vector<MatFp> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        MatFp rows(x.field(), 0, x.dim(i));
        for (std::size_t c = 0; c < p.covers().size(); ++c)
            if (p.covers()[c].second == i)
                rows = rows.stacked(image_rows(x.cover_map(c)));
        out.push_back(row_space(rows));
    }
    return out;
}

std::vector<MatFp> socle_subspaces(const Rep& x)
{
    const auto& p = x.poset();
    std::vector<MatFp> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        MatFp stacked(x.field(), 0, x.dim(i));
        for (std::size_t c = 0; c < p.covers().size(); ++c)
            if (p.covers()[c].first == i)
                stacked = stacked.stacked(x.cover_map(c));
        const auto ker = kernel_basis(stacked);
        MatFp rows(x.field(), ker.size(), x.dim(i));
        for (std::size_t r = 0; r < ker.size(); ++r)
            for (std::size_t c = 0; c < x.dim(i); ++c)
                rows(r, c) = ker[r][c];
        out.push_back(row_space(rows));
    }
    return out;
}

SubRep radical(const Rep& x) { return submodule(x, radical_subspaces(x)); }
SubRep top(const Rep& x) { return quotient(x, radical_subspaces(x)); }
SubRep socle(const Rep& x) { return submodule(x, socle_subspaces(x)); }

// ---------------------------------------------------------------------------
// Restriction and structure predicates

Rep restrict(const Rep& x, const std::vector<std::size_t>& unsorted)
{
    auto elements = unsorted;
    std::sort(elements.begin(), elements.end());
    auto sub = std::make_shared<const Poset>(x.poset().restrict_to(elements));
    DimVector dims;
    for (auto e : elements)
        dims.push_back(x.dim(e));
    std::vector<MatFp> maps;
    for (auto [a, b] : sub->covers())
        maps.push_back(x.map_of(elements[a], elements[b]));
    return Rep(sub, x.field(), std::move(dims), std::move(maps));
}

Rep restrict_to_lower(const Rep& x) { return restrict(x, x.poset().lower_elements()); }

TripleView triple_view(const Rep& x)
{
    const auto& p = x.poset();
    TripleView t{restrict_to_lower(x), {}, {}};
    for (auto j : p.max_elements())
        t.upper_dims.push_back(x.dim(j));
    for (auto i : p.lower_elements())
        for (auto j : p.max_elements())
            if (p.leq(i, j))
                t.cross.push_back({i, j, x.map_of(i, j)});
    return t;
}

std::size_t proj_hom_dim(const Poset& poset, const std::vector<std::size_t>& n,
                         const std::vector<std::size_t>& m)
{
    std::size_t d = 0;
    for (std::size_t i = 0; i < poset.size(); ++i)
        for (std::size_t j = 0; j < poset.size(); ++j)
            if (poset.leq(j, i))
                d += n[i] * m[j];
    return d;
}

std::optional<std::vector<std::size_t>> projective_multiplicities(const Poset& poset, const DimVector& dims)
{
    std::vector<std::size_t> t(poset.size(), 0);
    for (std::size_t v = 0; v < poset.size(); ++v) {
        std::size_t below = 0;
        for (std::size_t i = 0; i < v; ++i)
            if (poset.less(i, v))
                below += t[i];
        if (below > dims[v])
            return std::nullopt;
        t[v] = dims[v] - below;
    }
    return t;
}

bool is_projective(const Rep& x)
{
    const auto t = top(x).module.dims();
    const auto& p = x.poset();
    for (std::size_t j = 0; j < p.size(); ++j) {
        std::size_t d = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p.leq(i, j))
                d += t[i];
        if (d != x.dim(j))
            return false;
    }
    return true;
}

bool is_prinjective(const Rep& x) { return is_projective(restrict_to_lower(x)); }

bool is_socle_projective(const Rep& x)
{
    const auto soc = socle_subspaces(x);
    for (auto i : x.poset().lower_elements())
        if (soc[i].rows() != 0)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Local summands

namespace {

Vec flatten(const Morphism& f)
{
    Vec v;
    for (const auto& c : f.components)
        v.insert(v.end(), c.entries().begin(), c.entries().end());
    return v;
}

Morphism unflatten(const Vec& v, const Morphism& shape)
{
    Morphism out;
    std::size_t pos = 0;
    for (const auto& c : shape.components) {
        const std::size_t len = c.rows() * c.cols();
        out.components.emplace_back(c.field(), c.rows(), c.cols(),
                                    std::vector<Residue>(v.begin() + pos, v.begin() + pos + len));
        pos += len;
    }
    return out;
}

MatFp rows_of(Field f, const std::vector<Vec>& vs, std::size_t cols)
{
    MatFp m(f, vs.size(), cols);
    for (std::size_t r = 0; r < vs.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = vs[r][c];
    return m;
}

std::size_t first_support(const Rep& w)
{
    for (std::size_t i = 0; i < w.dims().size(); ++i)
        if (w.dim(i) > 0)
            return i;
    return w.dims().size();
}

// The unique c with (m - c) singular, assuming m - c is nilpotent for it.
std::optional<Residue> single_eigenvalue(const MatFp& m)
{
    const Field f = m.field();
    const std::size_t n = m.rows();
    if (n % f.p() != 0) {
        Residue tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            tr = f.add(tr, m(i, i));
        return f.mul(tr, f.inv(f.reduce(static_cast<std::int64_t>(n))));
    }
    for (Residue c = 0; c < f.p(); ++c)
        if (rank(m - MatFp::identity(f, n).scaled(c)) < n)
            return c;
    return std::nullopt;
}

} // namespace

std::optional<LocalSummand> LocalSummand::probe(const Rep& w)
{
    if (w.is_zero())
        return std::nullopt;
    const Field f = w.field();
    const auto end = hom_basis(w, w);
    const auto v0 = first_support(w);
    const auto id = identity_morphism(w);
    const std::size_t width = flatten(id).size();

    std::vector<Residue> lambda;
    std::vector<Vec> radical;
    for (const auto& b : end.basis) {
        auto c = single_eigenvalue(b.components[v0]);
        if (!c)
            return std::nullopt;
        lambda.push_back(*c);
        radical.push_back(flatten(b - scaled(id, *c)));
    }
    // The candidate radical must be a nilpotent ideal: closed under products,
    // with N^s = 0 for some s.
    const auto rad_echelon = rref(rows_of(f, radical, width));
    std::vector<Morphism> rad_basis;
    for (std::size_t r = 0; r < rad_echelon.rank; ++r)
        rad_basis.push_back(unflatten(Vec(rad_echelon.reduced.row(r).begin(), rad_echelon.reduced.row(r).end()), id));
    if (rad_basis.size() + 1 != end.dim())
        return std::nullopt;
    std::vector<Morphism> power = rad_basis;
    while (!power.empty()) {
        std::vector<Vec> next;
        for (const auto& a : power)
            for (const auto& b : rad_basis) {
                auto prod = flatten(compose(a, b));
                if (!rref_contains(rad_echelon, prod))
                    return std::nullopt;
                next.push_back(std::move(prod));
            }
        const auto e = rref(rows_of(f, next, width));
        if (e.rank >= power.size())
            return std::nullopt;
        power.clear();
        for (std::size_t r = 0; r < e.rank; ++r)
            power.push_back(unflatten(Vec(e.reduced.row(r).begin(), e.reduced.row(r).end()), id));
    }

    LocalSummand s(w);
    s.end_dim_ = end.dim();
    MatFp aug(f, end.dim(), width + 1);
    for (std::size_t k = 0; k < end.dim(); ++k) {
        const auto v = flatten(end.basis[k]);
        for (std::size_t c = 0; c < width; ++c)
            aug(k, c) = v[c];
        aug(k, width) = lambda[k];
    }
    s.end_echelon_ = rref(aug);
    for (std::size_t r = 0; r < s.end_echelon_.rank; ++r)
        s.pivot_residues_.push_back(s.end_echelon_.reduced(r, width));
    return s;
}

Residue LocalSummand::residue(const Morphism& endo) const
{
    const Field f = w_.field();
    const auto v = flatten(endo);
    Residue out = 0;
    for (std::size_t r = 0; r < pivot_residues_.size(); ++r)
        out = f.add(out, f.mul(v[end_echelon_.pivots[r]], pivot_residues_[r]));
    return out;
}

std::size_t LocalSummand::multiplicity_in(const Rep& a) const
{
    if (!dominated(w_.dims(), a.dims()))
        return 0;
    const auto into = hom_basis(w_, a);
    if (into.dim() == 0)
        return 0;
    const auto from = hom_basis(a, w_);
    if (from.dim() == 0)
        return 0;
    MatFp pairing(w_.field(), from.dim(), into.dim());
    for (std::size_t t = 0; t < from.dim(); ++t)
        for (std::size_t s = 0; s < into.dim(); ++s)
            pairing(t, s) = residue(compose(from.basis[t], into.basis[s]));
    return rank(pairing);
}

bool LocalSummand::isomorphic_to(const Rep& a) const
{
    return a.dims() == w_.dims() && multiplicity_in(a) == 1;
}

// ---------------------------------------------------------------------------
// Decomposition

namespace {

Morphism power_of(const Morphism& h, std::size_t e)
{
    Morphism out = h;
    for (std::size_t k = 1; k < e; ++k)
        out = compose(out, h);
    return out;
}

// Fitting: for h in End(x), x = ker h^N (+) im h^N with N = max vertex dim.
std::optional<std::pair<Rep, Rep>> fitting_split(const Rep& x, const Morphism& h)
{
    const std::size_t big = *std::max_element(x.dims().begin(), x.dims().end());
    const Morphism hn = power_of(h, std::max<std::size_t>(big, 1));
    std::size_t image_total = 0;
    for (const auto& c : hn.components)
        image_total += rank(c);
    if (image_total == 0 || image_total == x.total_dim())
        return std::nullopt;
    std::vector<MatFp> ker, im;
    for (std::size_t i = 0; i < x.dims().size(); ++i) {
        const auto kb = kernel_basis(hn.components[i]);
        MatFp k(x.field(), kb.size(), x.dim(i));
        for (std::size_t r = 0; r < kb.size(); ++r)
            for (std::size_t c = 0; c < x.dim(i); ++c)
                k(r, c) = kb[r][c];
        ker.push_back(k);
        im.push_back(image_rows(hn.components[i]));
    }
    return std::make_pair(submodule(x, ker).module, submodule(x, im).module);
}

std::optional<std::pair<Rep, Rep>> split_by_endomorphism(const Rep& x, const Morphism& g)
{
    const Field f = x.field();
    const auto id = identity_morphism(x);
    for (Residue c = 0; c < f.p(); ++c) {
        auto s = fitting_split(x, c == 0 ? g : g - scaled(id, c));
        if (s)
            return s;
    }
    return std::nullopt;
}

std::optional<std::pair<Rep, Rep>> find_split(const Rep& x, const HomSpace& end, std::uint64_t budget)
{
    for (const auto& b : end.basis)
        if (auto s = split_by_endomorphism(x, b))
            return s;
    for (std::size_t a = 0; a < end.dim(); ++a)
        for (std::size_t b = 0; b < end.dim(); ++b) {
            if (b > a)
                if (auto s = split_by_endomorphism(x, end.basis[a] + end.basis[b]))
                    return s;
            if (auto s = split_by_endomorphism(x, compose(end.basis[a], end.basis[b])))
                return s;
        }
    // Exhaustive idempotent search.
    std::optional<std::pair<Rep, Rep>> found;
    for_each_hom(end, budget, [&](const Morphism& e) {
        if (!(compose(e, e) == e))
            return true;
        found = fitting_split(x, e);
        return !found;
    });
    return found;
}

void decompose_into(const Rep& x, std::uint64_t budget, std::vector<Rep>& out)
{
    if (x.is_zero())
        return;
    const auto end = hom_basis(x, x);
    if (end.dim() == 1 || LocalSummand::probe(x)) {
        out.push_back(x);
        return;
    }
    auto s = find_split(x, end, budget);
    if (!s) {
        out.push_back(x);
        return;
    }
    decompose_into(s->first, budget, out);
    decompose_into(s->second, budget, out);
}

} // namespace

std::vector<Rep> indecompose(const Rep& x, std::uint64_t budget)
{
    std::vector<Rep> out;
    decompose_into(x, budget, out);
    return out;
}

bool is_indecomposable(const Rep& x, std::uint64_t budget)
{
    return !x.is_zero() && indecompose(x, budget).size() == 1;
}

std::size_t ext1_dim(const Rep& x, const Rep& y)
{
    require_compatible(x, y, "ext1_dim");
    if (x.is_zero())
        return 0;
    // Projective cover: one P(i) per complement vector of rad(x) at i.
    const auto& p = x.poset();
    const auto rad = radical_subspaces(x);
    struct Generator {
        std::size_t vertex;
        Vec vector;
    };
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto e = rref(rad[i]);
        std::vector<bool> is_pivot(x.dim(i), false);
        for (auto c : e.pivots)
            is_pivot[c] = true;
        for (std::size_t c = 0; c < x.dim(i); ++c)
            if (!is_pivot[c]) {
                Vec v(x.dim(i), 0);
                v[c] = 1;
                gens.push_back({i, std::move(v)});
            }
    }
    std::vector<Rep> parts;
    for (const auto& g : gens)
        parts.push_back(projective(x.poset_ptr(), x.field(), g.vertex));
    const Rep p0 = direct_sum(parts, x.poset_ptr(), x.field());
    std::vector<MatFp> kernels;
    for (std::size_t j = 0; j < p.size(); ++j) {
        MatFp pi(x.field(), x.dim(j), p0.dim(j));
        std::size_t col = 0;
        for (const auto& g : gens) {
            if (!p.leq(g.vertex, j))
                continue;
            const auto v = x.map_of(g.vertex, j).apply(g.vector);
            for (std::size_t r = 0; r < x.dim(j); ++r)
                pi(r, col) = v[r];
            ++col;
        }
        const auto kb = kernel_basis(pi);
        MatFp k(x.field(), kb.size(), p0.dim(j));
        for (std::size_t r = 0; r < kb.size(); ++r)
            for (std::size_t c = 0; c < p0.dim(j); ++c)
                k(r, c) = kb[r][c];
        kernels.push_back(std::move(k));
    }
    const Rep omega = submodule(p0, kernels).module;
    std::size_t hom_p0 = 0;
    for (const auto& g : gens)
        hom_p0 += y.dim(g.vertex);
    return hom_dim(omega, y) + hom_dim(x, y) - hom_p0;
}

} // namespace prinhall
