#include "prinhall/modspec.hpp"

#include "prinhall/errors.hpp"

#include <algorithm>
#include <sstream>

namespace prinhall {

ModuleSpec ModuleSpec::lift(const Rep& x)
{
    ModuleSpec s{x.poset_ptr(), x.dims(), {}};
    for (const auto& m : x.maps()) {
        IntMatrix rows(m.rows(), std::vector<std::int64_t>(m.cols()));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                rows[r][c] = m(r, c);
        s.maps.push_back(std::move(rows));
    }
    return s;
}

std::string ModuleSpec::key() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < dims.size(); ++i)
        os << (i ? "," : "") << dims[i];
    os << ")";
    for (const auto& m : maps) {
        os << "[";
        for (std::size_t r = 0; r < m.size(); ++r) {
            os << (r ? ";" : "");
            for (std::size_t c = 0; c < m[r].size(); ++c)
                os << (c ? " " : "") << m[r][c];
        }
        os << "]";
    }
    return os.str();
}

Rep specialize(const ModuleSpec& s, std::uint32_t p)
{
    const Field f(p);
    const auto& covers = s.poset->covers();
    if (s.dims.size() != s.poset->size())
        throw ValidationError("module spec: " + std::to_string(s.dims.size()) + " dimensions for a poset with " +
                              std::to_string(s.poset->size()) + " elements");
    if (s.maps.size() != covers.size())
        throw ValidationError("module spec: " + std::to_string(s.maps.size()) + " maps for " +
                              std::to_string(covers.size()) + " covers");
    std::vector<MatFp> maps;
    for (std::size_t c = 0; c < covers.size(); ++c) {
        auto [i, j] = covers[c];
        const auto& m = s.maps[c];
        if (m.size() != s.dims[j] || std::any_of(m.begin(), m.end(), [&](const auto& r) { return r.size() != s.dims[i]; }))
            throw ValidationError("module spec: map " + s.poset->label(i) + "->" + s.poset->label(j) +
                                  " must be " + std::to_string(s.dims[j]) + "x" + std::to_string(s.dims[i]));
        maps.push_back(MatFp::from_rows(f, m, s.dims[i]));
    }
    Rep x(s.poset, f, s.dims, std::move(maps));
    require_valid(x);
    return x;
}

ModuleSpec direct_sum(const ModuleSpec& a, const ModuleSpec& b)
{
    ModuleSpec s{a.poset, add_dims(a.dims, b.dims), {}};
    const auto& covers = a.poset->covers();
    for (std::size_t c = 0; c < covers.size(); ++c) {
        auto [i, j] = covers[c];
        IntMatrix m(s.dims[j], std::vector<std::int64_t>(s.dims[i], 0));
        for (std::size_t r = 0; r < a.dims[j]; ++r)
            for (std::size_t k = 0; k < a.dims[i]; ++k)
                m[r][k] = a.maps[c][r][k];
        for (std::size_t r = 0; r < b.dims[j]; ++r)
            for (std::size_t k = 0; k < b.dims[i]; ++k)
                m[a.dims[j] + r][a.dims[i] + k] = b.maps[c][r][k];
        s.maps.push_back(std::move(m));
    }
    return s;
}

namespace {

struct Invariants {
    std::size_t end_dim = 0;
    std::vector<std::size_t> hom_to, hom_from;
    std::vector<DimVector> summands;

    bool operator==(const Invariants&) const = default;
};

std::string dims_text(const DimVector& d)
{
    return DimBound{d, {}}.to_string();
}

Invariants invariants(const Rep& x, std::uint64_t budget)
{
    Invariants inv;
    inv.end_dim = hom_dim(x, x);
    for (std::size_t i = 0; i < x.poset().size(); ++i) {
        auto pi = projective(x.poset_ptr(), x.field(), i);
        inv.hom_to.push_back(hom_dim(x, pi));
        inv.hom_from.push_back(hom_dim(pi, x));
    }
    for (const auto& w : indecompose(x, budget))
        inv.summands.push_back(w.dims());
    std::sort(inv.summands.begin(), inv.summands.end());
    return inv;
}

} // namespace

FieldReport check_field_independence(const ModuleSpec& s, const std::vector<std::uint32_t>& primes,
                                     std::uint64_t budget)
{
    FieldReport report;
    std::optional<std::pair<std::uint32_t, Invariants>> first;
    for (auto p : primes) {
        Rep x = specialize(s, p);
        auto inv = invariants(x, budget);
        if (!first) {
            first.emplace(p, std::move(inv));
            continue;
        }
        const auto& [p0, inv0] = *first;
        std::ostringstream os;
        if (inv.end_dim != inv0.end_dim)
            os << "dim End is " << inv0.end_dim << " over F_" << p0 << " but " << inv.end_dim << " over F_" << p;
        else if (inv.hom_to != inv0.hom_to)
            os << "dim Hom(-, P(i)) is " << dims_text(inv0.hom_to) << " over F_" << p0 << " but "
               << dims_text(inv.hom_to) << " over F_" << p;
        else if (inv.hom_from != inv0.hom_from)
            os << "dim Hom(P(i), -) differs between F_" << p0 << " and F_" << p;
        else if (inv.summands != inv0.summands)
            os << inv0.summands.size() << " indecomposable summands over F_" << p0 << " but "
               << inv.summands.size() << " over F_" << p;
        if (!os.str().empty()) {
            report.ok = false;
            report.detail = os.str();
            return report;
        }
    }
    return report;
}

SpecCatalog SpecCatalog::build(PosetPtr poset, DimBound bound, ClassFilter filter, std::uint32_t base_prime,
                               std::uint64_t budget)
{
    SpecCatalog sc;
    sc.poset_ = poset;
    sc.bound_ = bound;
    sc.filter_ = filter;
    sc.base_prime_ = base_prime;
    sc.budget_ = budget;
    auto base = std::make_unique<Catalog>(Catalog::build(poset, Field(base_prime), bound, filter, budget));
    for (const auto& w : base->indecomposables())
        sc.indecomposables_.push_back(ModuleSpec::lift(w));
    for (const auto& e : base->entries())
        sc.entries_.push_back({ModuleSpec::lift(e.module), e.multiplicities});
    sc.at_.emplace(base_prime, std::move(base));
    return sc;
}

const Catalog& SpecCatalog::at(std::uint32_t p) const
{
    std::lock_guard<std::mutex> guard(*lock_);
    if (auto it = at_.find(p); it != at_.end())
        return *it->second;
    const Catalog& base = *at_.at(base_prime_);
    std::vector<Rep> ws;
    for (std::size_t k = 0; k < indecomposables_.size(); ++k) {
        Rep w = specialize(indecomposables_[k], p);
        if (fingerprint(w) != fingerprint(base.indecomposables()[k]) || !passes(filter_, w) || !LocalSummand::probe(w))
            throw ValidationError("catalog indecomposable " + indecomposables_[k].key() + " over F_" +
                                  std::to_string(base_prime_) + " is field dependent: it changes over F_" +
                                  std::to_string(p));
        ws.push_back(std::move(w));
    }
    auto cat = std::make_unique<Catalog>(Catalog::from_indecomposables(poset_, Field(p), bound_, filter_, std::move(ws)));
    if (cat->size() != entries_.size())
        throw ValidationError("catalog over F_" + std::to_string(p) + " has " + std::to_string(cat->size()) +
                              " classes, over F_" + std::to_string(base_prime_) + " " + std::to_string(entries_.size()));
    for (std::size_t i = 0; i < cat->size(); ++i)
        if ((*cat)[i].multiplicities != entries_[i].multiplicities)
            throw ValidationError("catalog over F_" + std::to_string(p) + " is ordered differently at index " +
                                  std::to_string(i));
    return *at_.emplace(p, std::move(cat)).first->second;
}

std::optional<std::size_t> SpecCatalog::index_of(const std::vector<std::size_t>& multiplicities) const
{
    return base().index_of(multiplicities);
}

std::optional<std::size_t> SpecCatalog::classify(const Rep& base_rep) const
{
    return base().classify(base_rep);
}

} // namespace prinhall
