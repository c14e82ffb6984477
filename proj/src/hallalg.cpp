#include "prinhall/hallalg.hpp"

#include "prinhall/errors.hpp"

#include <sstream>

namespace prinhall {

AlgebraElement AlgebraElement::basis(std::size_t x, IntPoly c)
{
    AlgebraElement e;
    return e.add(x, c);
}

AlgebraElement& AlgebraElement::add(std::size_t x, const IntPoly& c)
{
    auto& slot = terms[x];
    slot += c;
    if (slot.is_zero())
        terms.erase(x);
    return *this;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b)
{
    AlgebraElement r = a;
    for (const auto& [x, c] : b.terms)
        r.add(x, c);
    return r;
}

AlgebraElement operator*(const IntPoly& c, const AlgebraElement& a)
{
    AlgebraElement r;
    for (const auto& [x, d] : a.terms)
        r.add(x, c * d);
    return r;
}

std::string AlgebraElement::to_string() const
{
    if (terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [x, c] : terms) {
        os << (first ? "" : " + ") << "(" << c.to_string() << ")*u" << x;
        first = false;
    }
    return os.str();
}

const std::vector<StructureConstant>& HallAlgebraTable::product(std::size_t x1, std::size_t x2) const
{
    auto it = products_.find({x1, x2});
    if (it == products_.end())
        throw OutOfBound("product u" + std::to_string(x1) + " u" + std::to_string(x2) + " has dims " +
                         DimBound{add_dims(basis().dims(x1), basis().dims(x2)), {}}.to_string() +
                         " outside the bound " + basis().bound().to_string());
    return it->second;
}

HallAlgebraTable build_table(PosetPtr poset, DimBound bound, EngineOptions options)
{
    HallAlgebraTable t;
    t.engine_ = std::make_shared<HallEngine>(poset, bound, options);
    HallEngine& e = *t.engine_;
    const auto& c = e.prin();
    const auto zero = c.base().zero_index();
    if (!zero)
        throw ValidationError("catalog has no zero module");
    t.identity_ = *zero;

    if (options.certify) {
        std::vector<std::size_t> all(c.size());
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = i;
        for (auto p : options.verify)
            e.table(Variant::prinjective, p).precompute(all, options.threads);
    }

    for (std::size_t x1 = 0; x1 < c.size(); ++x1)
        for (std::size_t x2 = 0; x2 < c.size(); ++x2) {
            const auto d = add_dims(c.dims(x1), c.dims(x2));
            if (!bound.admits(d)) {
                ++t.out_of_bound_;
                continue;
            }
            std::vector<StructureConstant> row;
            for (auto x : c.with_dims(d)) {
                const IntPoly& phi = e.hall_poly(Variant::prinjective, x, x1, x2);
                if (!phi.is_zero())
                    row.push_back({x, phi});
            }
            t.products_.emplace(std::pair{x1, x2}, std::move(row));
        }
    return t;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b, const HallAlgebraTable& t)
{
    AlgebraElement r;
    for (const auto& [x1, c1] : a.terms)
        for (const auto& [x2, c2] : b.terms) {
            const IntPoly c = c1 * c2;
            for (const auto& k : t.product(x1, x2))
                r.add(k.x, c * k.poly);
        }
    return r;
}

AssociativityReport check_associativity(const HallAlgebraTable& t)
{
    AssociativityReport report;
    const auto& c = t.basis();
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = 0; b < t.size(); ++b)
            for (std::size_t d = 0; d < t.size(); ++d) {
                if (!c.bound().admits(add_dims(add_dims(c.dims(a), c.dims(b)), c.dims(d))))
                    continue;
                ++report.triples;
                const auto ua = AlgebraElement::basis(a), ub = AlgebraElement::basis(b),
                           ud = AlgebraElement::basis(d);
                if (multiply(multiply(ua, ub, t), ud, t) != multiply(ua, multiply(ub, ud, t), t))
                    report.violations.emplace_back(a, b, d);
            }
    return report;
}

std::vector<std::size_t> identity_failures(const HallAlgebraTable& t)
{
    std::vector<std::size_t> out;
    const auto u0 = AlgebraElement::basis(t.identity());
    for (std::size_t x = 0; x < t.size(); ++x) {
        const auto ux = AlgebraElement::basis(x);
        if (multiply(u0, ux, t) != ux || multiply(ux, u0, t) != ux)
            out.push_back(x);
    }
    return out;
}

std::size_t grading_violations(const HallAlgebraTable& t)
{
    std::size_t n = 0;
    const auto& c = t.basis();
    for (const auto& [pair, row] : t.products())
        for (const auto& k : row)
            n += c.dims(k.x) != add_dims(c.dims(pair.first), c.dims(pair.second));
    return n;
}

std::map<std::tuple<std::size_t, std::size_t, std::size_t>, mpz_class> evaluate_at(const HallAlgebraTable& t,
                                                                                    std::uint32_t q)
{
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, mpz_class> out;
    auto& table = t.engine().table(Variant::prinjective, q);
    const auto& c = t.basis();
    for (const auto& [pair, row] : t.products()) {
        const auto [x1, x2] = pair;
        for (auto x : c.with_dims(add_dims(c.dims(x1), c.dims(x2)))) {
            mpz_class v = 0;
            for (const auto& k : row)
                if (k.x == x)
                    v = k.poly(mpz_class(q));
            const auto n = table.number(x, x1, x2);
            if (v != n)
                throw Falsification("structure constant of u" + std::to_string(x1) + " u" + std::to_string(x2) +
                                    " at u" + std::to_string(x) + " is " + v.get_str() + " at " +
                                    std::to_string(q) + ", Hall number " + std::to_string(n));
            if (v != 0)
                out.emplace(std::tuple{x1, x2, x}, v);
        }
    }
    return out;
}

nlohmann::json to_json(const HallAlgebraTable& t)
{
    using nlohmann::json;
    const auto& c = t.basis();
    json basis = json::array();
    for (std::size_t i = 0; i < c.size(); ++i)
        basis.push_back({{"index", i}, {"dims", c.dims(i)}, {"spec", c[i].spec.key()}});
    json rows = json::array();
    for (const auto& [pair, row] : t.products())
        for (const auto& k : row) {
            json poly = json::array();
            for (const auto& a : k.poly.coeffs())
                poly.push_back(a.fits_slong_p() ? json(a.get_si()) : json(a.get_str()));
            rows.push_back({{"x1", pair.first}, {"x2", pair.second}, {"x", k.x}, {"poly", poly}});
        }
    return {{"poset", c.poset().labels()},
            {"bound", c.bound().to_string()},
            {"identity", t.identity()},
            {"basis", basis},
            {"products", rows},
            {"out_of_bound_pairs", t.out_of_bound_pairs()}};
}

} // namespace prinhall
