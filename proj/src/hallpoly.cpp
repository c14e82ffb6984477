#include "prinhall/hallpoly.hpp"

#include "prinhall/errors.hpp"

#include <algorithm>

namespace prinhall {

std::string to_string(Variant v)
{
    return v == Variant::prinjective ? "prinjective" : "socle-projective";
}

namespace {

constexpr std::uint32_t kBase = 2;

std::string poly_at(const IntPoly& f, std::uint32_t p)
{
    return f.to_string() + " evaluates to " + f(mpz_class(p)).get_str() + " at " + std::to_string(p);
}

DimVector sub_dims(const DimVector& a, const DimVector& b)
{
    DimVector d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        d[i] = a[i] - b[i];
    return d;
}

} // namespace

HallEngine::HallEngine(PosetPtr poset, DimBound bound, EngineOptions options)
    : poset_(poset), lower_(std::make_shared<const Poset>(poset->minus())), bound_(bound),
      options_(std::move(options)),
      prin_(SpecCatalog::build(poset, bound, ClassFilter::prinjective, kBase, options_.budget)),
      sp_(SpecCatalog::build(poset, bound, ClassFilter::socle_projective, kBase, options_.budget))
{
    for (std::size_t i = 0; i < prin_.size(); ++i) {
        const Rep& x = prin_.base()[i].module;
        auto t = sp_.classify(theta(x).image);
        if (!t)
            throw ValidationError("Theta of " + x.to_string() + " is outside the socle-projective catalog");
        theta_index_.push_back(*t);
        auto split = split_ker_theta(x, options_.budget);
        auto r = prin_.classify(split.reduced);
        if (!r)
            throw ValidationError("reduced part of " + x.to_string() + " is outside the catalog");
        reduced_index_.push_back(*r);
        kernel_part_.push_back(std::move(split.kernel_part));
    }
}

FitPlan HallEngine::plan_for(std::size_t degree_bound) const
{
    FitPlan plan;
    plan.samples = options_.samples;
    plan.verify = options_.verify;
    plan.degree_bound = degree_bound;
    std::uint32_t top = 0;
    for (auto p : plan.samples)
        top = std::max(top, p);
    for (auto p : plan.verify)
        top = std::max(top, p);
    if (plan.samples.size() < degree_bound + 1) {
        auto more = primes_above(top, degree_bound + 1 - plan.samples.size());
        plan.samples.insert(plan.samples.end(), more.begin(), more.end());
    }
    return plan;
}

const IntPoly& HallEngine::alpha(const ModuleSpec& a)
{
    std::string key;
    for (const auto& l : a.poset->labels())
        key += l + ",";
    key += a.key();
    if (auto it = alpha_.find(key); it != alpha_.end())
        return it->second;
    const Rep base = specialize(a, kBase);
    const auto plan = plan_for(hom_dim(base, base));
    auto r = fit([&](std::uint32_t p) { return count_aut_exact(specialize(a, p), options_.budget); }, plan);
    if (!r.poly.is_monic())
        throw Falsification("automorphism polynomial " + r.poly.to_string() + " of " + base.to_string() +
                            " is not monic");
    return alpha_.emplace(key, std::move(r.poly)).first->second;
}

std::size_t HallEngine::h_dim(const ModuleSpec& a, const ModuleSpec& b) const
{
    return hom_dim(specialize(a, kBase), specialize(b, kBase));
}

IntPoly HallEngine::omega(const ModuleSpec& a, const ModuleSpec& b) const
{
    const Rep ra = specialize(a, kBase), rb = specialize(b, kBase);
    const auto h = hom_dim(ra, rb);
    const auto hbar = hom_dim(theta(ra).image, theta(rb).image);
    return IntPoly::T(h - hbar);
}

IntPoly HallEngine::divide_exactly(const IntPoly& a, const IntPoly& b, const std::string& what)
{
    auto q = exact_divide(a, b, what);
    ++divisions_;
    return q;
}

const Rep& HallEngine::base_rep(Variant v, std::size_t i) const
{
    return catalog(v).base()[i].module;
}

HallTable& HallEngine::table(Variant v, std::uint32_t p)
{
    auto& slot = tables_[{v, p}];
    if (!slot)
        slot = std::make_unique<HallTable>(catalog(v).at(p));
    return *slot;
}

const SpPolys& HallEngine::sp_polys(std::size_t x, std::size_t y)
{
    if (auto it = sp_memo_.find({x, y}); it != sp_memo_.end())
        return it->second;
    const auto& dx = sp_.dims(x);
    const auto& dy = sp_.dims(y);
    SpPolys r;
    if (!dominated(dx, dy)) {
        // all zero
    } else if (total(dy) == 0) {
        r = {1, 1, 1, 1};
    } else {
        const Rep& X = base_rep(Variant::socle_projective, x);
        const Rep& Y = base_rep(Variant::socle_projective, y);
        r.mu = IntPoly::T(hom_dim(X, Y));
        r.epsilon = IntPoly::T(hom_dim(Y, X));
        for (auto u : sp_.smaller(dx)) {
            const IntPoly a = alpha(Variant::socle_projective, u);
            const SpPolys xu = sp_polys(u, x);
            const SpPolys yu = sp_polys(u, y);
            r.mu -= xu.eta * a * yu.sigma;
            r.epsilon -= yu.eta * a * xu.sigma;
        }
        const IntPoly ax = alpha(Variant::socle_projective, x);
        const std::string where = " for X = " + X.to_string() + ", Y = " + Y.to_string();
        r.sigma = divide_exactly(r.mu, ax, "mono count divided by |Aut X|" + where);
        r.eta = divide_exactly(r.epsilon, ax, "epi count divided by |Aut X|" + where);
    }
    if (options_.certify)
        for (auto p : options_.verify) {
            const auto& row = table(Variant::socle_projective, p).row(y);
            const auto subs = row.by_sub.count(x) ? row.by_sub.at(x) : 0;
            const auto quots = row.by_quotient.count(x) ? row.by_quotient.at(x) : 0;
            if (r.sigma(mpz_class(p)) != subs || r.eta(mpz_class(p)) != quots)
                throw Falsification("socle-projective submodule polynomials disagree with counts at " +
                                    std::to_string(p) + " for X = " + sp_[x].spec.key() + ", Y = " +
                                    sp_[y].spec.key() + ": sigma " + poly_at(r.sigma, p) + " vs " +
                                    std::to_string(subs) + ", eta " + poly_at(r.eta, p) + " vs " +
                                    std::to_string(quots));
        }
    return sp_memo_.emplace(std::pair{x, y}, std::move(r)).first->second;
}

ProjPolys HallEngine::proj_polys(const PosetPtr& poset, const std::vector<std::size_t>& x,
                                 const std::vector<std::size_t>& y)
{
    if (poset->size() == 0)
        return {1, 1};
    const Field f(kBase);
    const Rep X = projective_sum(poset, f, x);
    const Rep Y = projective_sum(poset, f, y);
    if (!dominated(X.dims(), Y.dims()))
        return {};
    auto z = projective_multiplicities(*poset, sub_dims(Y.dims(), X.dims()));
    if (!z)
        return {};
    const Rep Z = projective_sum(poset, f, *z);
    const IntPoly ax = alpha(ModuleSpec::lift(X));
    const IntPoly denominator = alpha(ModuleSpec::lift(Z)) * ax * IntPoly::T(proj_hom_dim(*poset, x, *z));
    ProjPolys r;
    r.eta = divide_exactly(alpha(ModuleSpec::lift(Y)), denominator,
                           "projective quotient count for X = " + X.to_string() + ", Y = " + Y.to_string());
    r.epsilon = r.eta * ax;
    return r;
}

const IntPoly& HallEngine::epsilon_prin(std::size_t x, std::size_t y)
{
    if (auto it = eps_memo_.find({x, y}); it != eps_memo_.end())
        return it->second;
    IntPoly r;
    if (dominated(prin_.dims(x), prin_.dims(y))) {
        const std::size_t xbar = reduced_index_.at(x);
        const Rep& Y = base_rep(Variant::prinjective, y);
        const Rep& Xbar = base_rep(Variant::prinjective, xbar);
        const Rep& Z = kernel_part_.at(x);
        const std::size_t tx = theta_index_.at(x), ty = theta_index_.at(y);
        const IntPoly& eps_theta = sp_polys(tx, ty).epsilon;
        if (!eps_theta.is_zero()) {
            const std::size_t e1 = hom_dim(Y, Xbar) - hom_dim(base_rep(Variant::socle_projective, ty),
                                                              base_rep(Variant::socle_projective, tx));
            std::size_t e2 = 0;
            IntPoly lower_factor = 1;
            if (lower_->size() > 0) {
                const auto lower = poset_->lower_elements();
                const Rep Y1 = restrict(Y, lower), X1 = restrict(Xbar, lower), Z1 = restrict(Z, lower);
                e2 = hom_dim(X1, Z1);
                auto zm = projective_multiplicities(*lower_, Z1.dims());
                std::optional<std::vector<std::size_t>> um;
                if (dominated(X1.dims(), Y1.dims()))
                    um = projective_multiplicities(*lower_, sub_dims(Y1.dims(), X1.dims()));
                if (!zm || !um)
                    throw Falsification("epi count: Y = " + Y.to_string() + " maps onto " + Xbar.to_string() +
                                        " but the kernel restricted to the non-maximal elements is not projective");
                lower_factor = proj_polys(lower_, *zm, *um).epsilon;
            }
            r = eps_theta * IntPoly::T(e1 + e2) * lower_factor;
        }
    }
    return eps_memo_.emplace(std::pair{x, y}, std::move(r)).first->second;
}

const IntPoly& HallEngine::eta_prin(std::size_t x, std::size_t y)
{
    if (auto it = eta_memo_.find({x, y}); it != eta_memo_.end())
        return it->second;
    IntPoly r = divide_exactly(epsilon_prin(x, y), alpha(Variant::prinjective, x),
                               "prinjective epi count divided by |Aut X| for X = " + prin_[x].spec.key() +
                                   ", Y = " + prin_[y].spec.key());
    if (options_.certify)
        for (auto p : options_.verify) {
            const auto& row = table(Variant::prinjective, p).row(y);
            const auto n = row.by_quotient.count(x) ? row.by_quotient.at(x) : 0;
            if (r(mpz_class(p)) != n)
                throw Falsification("prinjective quotient polynomial disagrees with the count at " +
                                    std::to_string(p) + " for X = " + prin_[x].spec.key() + ", Y = " +
                                    prin_[y].spec.key() + ": " + poly_at(r, p) + ", count " + std::to_string(n));
        }
    return eta_memo_.emplace(std::pair{x, y}, std::move(r)).first->second;
}

const IntPoly& HallEngine::hall_poly(Variant v, std::size_t y, std::size_t x, std::size_t z)
{
    const auto key = std::tuple{v, y, x, z};
    if (auto it = hall_memo_.find(key); it != hall_memo_.end())
        return it->second;
    if (!in_progress_.insert(key).second)
        throw Falsification("Hall polynomial recursion revisits (y, x, z) = (" + std::to_string(y) + ", " +
                            std::to_string(x) + ", " + std::to_string(z) + ")");
    IntPoly r;
    try {
        r = hall_poly_uncertified(v, y, x, z);
    } catch (...) {
        in_progress_.erase(key);
        throw;
    }
    in_progress_.erase(key);
    if (options_.certify)
        for (auto p : options_.verify) {
            const auto n = table(v, p).number(y, x, z);
            if (r(mpz_class(p)) != n) {
                const auto& c = catalog(v);
                throw Falsification(to_string(v) + " Hall polynomial disagrees with the Hall number at " +
                                    std::to_string(p) + " for Y = " + c[y].spec.key() + ", X = " + c[x].spec.key() +
                                    ", Z = " + c[z].spec.key() + ": " + poly_at(r, p) + ", count " +
                                    std::to_string(n));
            }
        }
    return hall_memo_.emplace(key, std::move(r)).first->second;
}

IntPoly HallEngine::hall_poly_uncertified(Variant v, std::size_t y, std::size_t x, std::size_t z)
{
    const auto& c = catalog(v);
    const auto& dy = c.dims(y);
    const auto& dx = c.dims(x);
    const auto& dz = c.dims(z);
    if (add_dims(dx, dz) != dy)
        return {};
    if (total(dz) == 0)
        return x == y ? 1 : 0;
    if (total(dx) == 0)
        return z == y ? 1 : 0;

    const auto& mult = c[z].multiplicities;
    std::vector<std::size_t> present;
    for (std::size_t k = 0; k < mult.size(); ++k)
        if (mult[k] > 0)
            present.push_back(k);

    if (present.size() == 1) {
        IntPoly r = v == Variant::prinjective ? eta_prin(x, y) : sp_polys(x, y).eta;
        for (auto d : c.with_dims(dz))
            if (d != z)
                r -= hall_poly(v, y, x, d);
        return r;
    }

    const auto& inds = c.base().indecomposables();
    std::optional<std::size_t> w;
    for (auto k : present) {
        bool ok = true;
        for (auto a : present)
            if (a != k && (hom_dim(inds[a], inds[k]) != 0 || ext1_dim(inds[k], inds[a]) != 0)) {
                ok = false;
                break;
            }
        if (ok) {
            w = k;
            break;
        }
    }
    if (!w)
        throw Falsification("no summand of Z = " + c[z].spec.key() +
                            " splits off with Hom(A, W) = 0 and Ext(W, A) = 0 for the other summands A");
    std::vector<std::size_t> m1(mult.size(), 0), m2 = mult;
    m1[*w] = mult[*w];
    m2[*w] = 0;
    const auto u1 = c.index_of(m1), u2 = c.index_of(m2);
    if (!u1 || !u2)
        throw ValidationError("catalog is missing a summand of Z = " + c[z].spec.key());
    IntPoly r;
    for (auto d : c.with_dims(add_dims(dx, c.dims(*u1)))) {
        const IntPoly& first = hall_poly(v, d, x, *u1);
        if (first.is_zero())
            continue;
        r += first * hall_poly(v, y, d, *u2);
    }
    return r;
}

FitResult HallEngine::fit_hall(Variant v, std::size_t y, std::size_t x, std::size_t z)
{
    return fit([&](std::uint32_t p) { return mpz_class(std::to_string(table(v, p).number(y, x, z))); },
               hall_plan(catalog(v).dims(y)));
}

} // namespace prinhall
