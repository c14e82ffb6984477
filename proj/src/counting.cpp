#include "prinhall/counting.hpp"

#include "prinhall/errors.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <thread>

namespace prinhall {

// ---------------------------------------------------------------------------
// Submodules

void for_each_submodule(const Rep& y, const std::function<bool(const std::vector<MatFp>&)>& visit,
                        const std::optional<DimVector>& dims)
{
    const auto& p = y.poset();
    const Field f = y.field();
    const std::size_t n = p.size();
    if (dims && !dominated(*dims, y.dims()))
        return;
    std::vector<MatFp> transposed;
    for (const auto& m : y.maps())
        transposed.push_back(m.transpose());
    std::vector<std::vector<std::size_t>> incoming(n);
    for (std::size_t c = 0; c < p.covers().size(); ++c)
        incoming[p.covers()[c].second].push_back(c);

    std::vector<MatFp> current(n, MatFp(f, 0, 0));
    std::function<bool(std::size_t)> rec = [&](std::size_t v) -> bool {
        if (v == n)
            return visit(current);
        MatFp fixed(f, 0, y.dim(v));
        for (auto c : incoming[v])
            fixed = fixed.stacked(current[p.covers()[c].first] * transposed[c]);
        fixed = row_space(fixed);
        std::size_t lo = fixed.rows(), hi = y.dim(v);
        if (dims) {
            if ((*dims)[v] < lo)
                return true;
            lo = hi = (*dims)[v];
        }
        for (std::size_t k = lo; k <= hi; ++k) {
            bool go_on = true;
            for_each_subspace_containing(fixed, k, [&](const MatFp& m) {
                current[v] = m;
                go_on = rec(v + 1);
                return go_on;
            });
            if (!go_on)
                return false;
        }
        return true;
    };
    rec(0);
}

std::vector<std::vector<MatFp>> submodules(const Rep& y)
{
    std::vector<std::vector<MatFp>> out;
    for_each_submodule(y, [&](const std::vector<MatFp>& u) {
        out.push_back(u);
        return true;
    });
    return out;
}

std::uint64_t count_submodules(const Rep& y)
{
    std::uint64_t n = 0;
    for_each_submodule(y, [&](const std::vector<MatFp>&) {
        ++n;
        return true;
    });
    return n;
}

// ---------------------------------------------------------------------------
// Isomorphism classes

IsoMatcher::IsoMatcher(const Rep& target, std::uint64_t budget) : target_(target), budget_(budget)
{
    for (const auto& w : indecompose(target, budget)) {
        bool known = false;
        for (const auto& [s, m] : summands_)
            if (s.isomorphic_to(w)) {
                known = true;
                break;
            }
        if (known)
            continue;
        auto s = LocalSummand::probe(w);
        if (!s) {
            local_ = false;
            summands_.clear();
            return;
        }
        const auto m = s->multiplicity_in(target);
        summands_.emplace_back(std::move(*s), m);
    }
}

bool IsoMatcher::matches(const Rep& a) const
{
    if (a.dims() != target_.dims())
        return false;
    if (!local_)
        return is_isomorphic(a, target_, budget_);
    for (const auto& [s, m] : summands_)
        if (s.multiplicity_in(a) != m)
            return false;
    return true;
}

std::uint64_t hall_number(const Rep& y, const Rep& q, const Rep& s, std::uint64_t budget)
{
    if (!y.compatible(q) || !y.compatible(s))
        throw ValidationError("hall_number: modules over different posets or fields");
    if (add_dims(q.dims(), s.dims()) != y.dims())
        return 0;
    const IsoMatcher sub(s, budget), quo(q, budget);
    std::uint64_t n = 0;
    for_each_submodule(
        y,
        [&](const std::vector<MatFp>& u) {
            if (sub.matches(submodule(y, u).module) && quo.matches(quotient(y, u).module))
                ++n;
            return true;
        },
        s.dims());
    return n;
}

mpz_class gl_order(std::uint64_t p, std::size_t m)
{
    mpz_class q = static_cast<unsigned long>(p);
    mpz_class order = 1;
    mpz_class qm;
    mpz_pow_ui(qm.get_mpz_t(), q.get_mpz_t(), m);
    mpz_class qi = 1;
    for (std::size_t i = 0; i < m; ++i) {
        order *= qm - qi;
        qi *= q;
    }
    return order;
}

mpz_class count_aut_exact(const Rep& x, std::uint64_t budget)
{
    if (x.is_zero())
        return 1;
    std::vector<LocalSummand> distinct;
    for (const auto& w : indecompose(x, budget)) {
        if (std::any_of(distinct.begin(), distinct.end(), [&](const LocalSummand& s) { return s.isomorphic_to(w); }))
            continue;
        auto s = LocalSummand::probe(w);
        if (!s)
            return mpz_class(std::to_string(count_aut(x, budget)));
        distinct.push_back(std::move(*s));
    }
    const std::size_t end_dim = hom_dim(x, x);
    std::size_t semisimple = 0;
    mpz_class units = 1;
    for (const auto& s : distinct) {
        const auto m = s.multiplicity_in(x);
        semisimple += m * m;
        units *= gl_order(x.field().p(), m);
    }
    mpz_class radical;
    mpz_ui_pow_ui(radical.get_mpz_t(), x.field().p(), end_dim - semisimple);
    return radical * units;
}

// ---------------------------------------------------------------------------
// Bounds and filters

bool DimBound::admits(const DimVector& d) const
{
    if (componentwise && !dominated(d, *componentwise))
        return false;
    if (total && prinhall::total(d) > *total)
        return false;
    return true;
}

DimVector DimBound::box(std::size_t elements) const
{
    if (!componentwise && !total)
        throw ValidationError("dimension bound needs a componentwise or a total limit");
    DimVector b(elements, total ? *total : 0);
    if (componentwise) {
        if (componentwise->size() != elements)
            throw ValidationError("dimension bound has the wrong number of entries");
        for (std::size_t i = 0; i < elements; ++i)
            b[i] = total ? std::min(b[i], (*componentwise)[i]) : (*componentwise)[i];
    }
    return b;
}

std::string DimBound::to_string() const
{
    std::ostringstream os;
    if (componentwise) {
        os << "(";
        for (std::size_t i = 0; i < componentwise->size(); ++i)
            os << (i ? "," : "") << (*componentwise)[i];
        os << ")";
    }
    if (total)
        os << (componentwise ? " " : "") << "total<=" << *total;
    return os.str();
}

std::string to_string(ClassFilter f)
{
    switch (f) {
    case ClassFilter::all:
        return "all";
    case ClassFilter::prinjective:
        return "prinjective";
    case ClassFilter::socle_projective:
        return "socle-projective";
    }
    return "?";
}

ClassFilter parse_filter(const std::string& s)
{
    if (s == "all")
        return ClassFilter::all;
    if (s == "prinjective" || s == "prin")
        return ClassFilter::prinjective;
    if (s == "socle-projective" || s == "sp")
        return ClassFilter::socle_projective;
    throw ValidationError("unknown class filter '" + s + "'");
}

bool passes(ClassFilter f, const Rep& x)
{
    switch (f) {
    case ClassFilter::all:
        return true;
    case ClassFilter::prinjective:
        return is_prinjective(x);
    case ClassFilter::socle_projective:
        return is_socle_projective(x);
    }
    return false;
}

Fingerprint fingerprint(const Rep& x)
{
    Fingerprint fp{x.dims(), hom_dim(x, x), {}};
    for (std::size_t i = 0; i < x.poset().size(); ++i)
        fp.hom_to_projectives.push_back(hom_dim(x, projective(x.poset_ptr(), x.field(), i)));
    return fp;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

bool entry_less(const CatalogEntry& a, const CatalogEntry& b)
{
    const auto ta = total(a.fingerprint.dims), tb = total(b.fingerprint.dims);
    if (ta != tb)
        return ta < tb;
    if (a.fingerprint != b.fingerprint)
        return a.fingerprint < b.fingerprint;
    return a.multiplicities < b.multiplicities;
}

bool is_indecomposable_fast(const Rep& x, std::uint64_t budget)
{
    if (x.is_zero())
        return false;
    if (hom_dim(x, x) == 1)
        return true;
    return indecompose(x, budget).size() == 1;
}

} // namespace

Catalog::Catalog(PosetPtr poset, Field field, DimBound bound, ClassFilter filter, std::vector<Rep> indecomposables)
    : poset_(std::move(poset)), field_(field), bound_(std::move(bound)), filter_(filter)
{
    // Deterministic order of the indecomposables.
    std::vector<std::pair<Fingerprint, Rep>> keyed;
    for (auto& w : indecomposables)
        keyed.emplace_back(fingerprint(w), std::move(w));
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        const auto ta = total(a.first.dims), tb = total(b.first.dims);
        return ta != tb ? ta < tb : a.first < b.first;
    });
    for (auto& [fp, w] : keyed) {
        auto s = LocalSummand::probe(w);
        if (!s)
            throw Error("catalog indecomposable " + w.to_string() +
                        " has no local endomorphism ring with residue field F_p");
        local_.push_back(std::move(*s));
        indecomposables_.push_back(std::move(w));
    }

    const std::size_t k = indecomposables_.size();
    std::vector<std::vector<std::size_t>> hom(k, std::vector<std::size_t>(k));
    std::vector<Fingerprint> fps;
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b)
            hom[a][b] = hom_dim(indecomposables_[a], indecomposables_[b]);
        fps.push_back(fingerprint(indecomposables_[a]));
    }

    std::vector<std::size_t> mult(k, 0);
    DimVector dims(poset_->size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t a) {
        if (a == k) {
            Fingerprint fp{dims, 0, std::vector<std::size_t>(poset_->size(), 0)};
            Rep module = Rep::zero(poset_, field_);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j)
                    fp.end_dim += mult[i] * mult[j] * hom[i][j];
                for (std::size_t v = 0; v < poset_->size(); ++v)
                    fp.hom_to_projectives[v] += mult[i] * fps[i].hom_to_projectives[v];
                for (std::size_t r = 0; r < mult[i]; ++r)
                    module = direct_sum(module, indecomposables_[i]);
            }
            entries_.push_back({std::move(module), mult, std::move(fp)});
            return;
        }
        rec(a + 1);
        const auto saved = dims;
        while (true) {
            dims = add_dims(dims, indecomposables_[a].dims());
            if (!bound_.admits(dims))
                break;
            ++mult[a];
            rec(a + 1);
        }
        dims = saved;
        mult[a] = 0;
    };
    rec(0);
    std::sort(entries_.begin(), entries_.end(), entry_less);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        by_multiplicities_[entries_[i].multiplicities] = i;
}

Catalog Catalog::from_indecomposables(PosetPtr poset, Field field, DimBound bound, ClassFilter filter,
                                      std::vector<Rep> indecomposables)
{
    std::vector<Rep> kept;
    for (auto& w : indecomposables)
        if (bound.admits(w.dims()))
            kept.push_back(std::move(w));
    return Catalog(std::move(poset), field, std::move(bound), filter, std::move(kept));
}

Catalog Catalog::build(PosetPtr poset, Field field, DimBound bound, ClassFilter filter, std::uint64_t budget)
{
    const auto& p = *poset;
    const std::size_t n = p.size();
    const DimVector box = bound.box(n);
    const auto& covers = p.covers();

    std::vector<Rep> found;
    std::vector<Fingerprint> found_fp;
    std::vector<LocalSummand> found_local;

    DimVector d(n, 0);
    std::function<void(std::size_t)> each_dims = [&](std::size_t v) {
        if (v < n) {
            for (std::size_t k = 0; k <= box[v]; ++k) {
                d[v] = k;
                each_dims(v + 1);
            }
            d[v] = 0;
            return;
        }
        if (total(d) == 0 || !bound.admits(d))
            return;
        std::size_t entries = 0;
        for (auto [i, j] : covers)
            entries += d[i] * d[j];
        std::uint64_t tuples = 1;
        for (std::size_t e = 0; e < entries; ++e) {
            if (tuples > budget / field.p())
                throw BudgetExceeded("catalog: dims " + DimBound{d, {}}.to_string() + " need " +
                                     std::to_string(field.p()) + "^" + std::to_string(entries) +
                                     " map tuples, over the budget " + std::to_string(budget));
            tuples *= field.p();
        }
        std::vector<Residue> digits(entries, 0);
        while (true) {
            std::vector<MatFp> maps;
            std::size_t pos = 0;
            for (auto [i, j] : covers) {
                std::vector<Residue> e(digits.begin() + pos, digits.begin() + pos + d[i] * d[j]);
                pos += d[i] * d[j];
                maps.emplace_back(field, d[j], d[i], std::move(e));
            }
            Rep x(poset, field, d, std::move(maps));
            if (!validate(x) && passes(filter, x) && is_indecomposable_fast(x, budget)) {
                auto fp = fingerprint(x);
                bool dup = false;
                for (std::size_t k = 0; k < found.size() && !dup; ++k)
                    dup = found_fp[k] == fp && found_local[k].isomorphic_to(x);
                if (!dup) {
                    auto s = LocalSummand::probe(x);
                    if (!s)
                        throw Error("catalog: indecomposable " + x.to_string() +
                                    " has no local endomorphism ring with residue field F_p");
                    found.push_back(x);
                    found_fp.push_back(std::move(fp));
                    found_local.push_back(std::move(*s));
                }
            }
            std::size_t k = 0;
            while (k < entries && ++digits[k] == field.p())
                digits[k++] = 0;
            if (k == entries)
                break;
        }
    };
    each_dims(0);
    return Catalog(std::move(poset), field, std::move(bound), filter, std::move(found));
}

std::optional<std::size_t> Catalog::index_of(const std::vector<std::size_t>& multiplicities) const
{
    auto it = by_multiplicities_.find(multiplicities);
    if (it == by_multiplicities_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::vector<std::size_t>> Catalog::multiplicities(const Rep& a) const
{
    std::vector<std::size_t> mult(local_.size(), 0);
    DimVector covered(a.dims().size(), 0);
    for (std::size_t k = 0; k < local_.size() && covered != a.dims(); ++k) {
        if (!dominated(indecomposables_[k].dims(), a.dims()))
            continue;
        mult[k] = local_[k].multiplicity_in(a);
        for (std::size_t r = 0; r < mult[k]; ++r)
            covered = add_dims(covered, indecomposables_[k].dims());
    }
    if (covered != a.dims())
        return std::nullopt;
    return mult;
}

std::optional<std::size_t> Catalog::classify(const Rep& a) const
{
    auto m = multiplicities(a);
    if (!m)
        return std::nullopt;
    return index_of(*m);
}

std::vector<std::size_t> Catalog::smaller(const DimVector& dims) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].module.dims() != dims && dominated(entries_[i].module.dims(), dims))
            out.push_back(i);
    return out;
}

std::vector<std::size_t> Catalog::with_dims(const DimVector& dims) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].module.dims() == dims)
            out.push_back(i);
    return out;
}

std::optional<std::size_t> Catalog::zero_index() const
{
    return index_of(std::vector<std::size_t>(indecomposables_.size(), 0));
}

std::vector<Rep> smaller_specs(const Catalog& c, const Rep& m)
{
    std::vector<Rep> out;
    for (auto i : c.smaller(m.dims()))
        out.push_back(c[i].module);
    return out;
}

// ---------------------------------------------------------------------------
// Hall rows

std::uint64_t HallRow::number(std::size_t q, std::size_t s) const
{
    auto it = counts.find({q, s});
    return it == counts.end() ? 0 : it->second;
}

HallRow hall_row(const Catalog& c, std::size_t y)
{
    const Rep& ym = c[y].module;
    HallRow row;
    for_each_submodule(ym, [&](const std::vector<MatFp>& u) {
        ++row.submodules;
        auto s = c.classify(submodule(ym, u).module);
        auto q = c.classify(quotient(ym, u).module);
        if (s)
            ++row.by_sub[*s];
        if (q)
            ++row.by_quotient[*q];
        if (s && q)
            ++row.counts[{*q, *s}];
        else
            ++row.outside;
        return true;
    });
    return row;
}

const HallRow& HallTable::row(std::size_t y)
{
    auto it = rows_.find(y);
    if (it == rows_.end())
        it = rows_.emplace(y, hall_row(*catalog_, y)).first;
    return it->second;
}

void HallTable::precompute(const std::vector<std::size_t>& ys, unsigned threads)
{
    std::vector<std::size_t> todo;
    for (auto y : ys)
        if (!rows_.count(y))
            todo.push_back(y);
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(todo.size()));
    if (threads <= 1) {
        for (auto y : todo)
            row(y);
        return;
    }
    std::mutex lock;
    std::size_t next = 0;
    std::exception_ptr failure;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            while (true) {
                std::size_t y;
                {
                    std::lock_guard g(lock);
                    if (next >= todo.size() || failure)
                        return;
                    y = todo[next++];
                }
                try {
                    auto r = hall_row(*catalog_, y);
                    std::lock_guard g(lock);
                    rows_.emplace(y, std::move(r));
                } catch (...) {
                    std::lock_guard g(lock);
                    failure = std::current_exception();
                }
            }
        });
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace prinhall
