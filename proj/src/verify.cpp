#include "prinhall/verify.hpp"

#include "prinhall/errors.hpp"
#include "prinhall/hallalg.hpp"
#include "prinhall/io.hpp"

#include <functional>

namespace prinhall {

using nlohmann::json;

json SuiteReport::to_json() const
{
    return {{"suite", suite},        {"passed", passed()}, {"checked", checked},
            {"skipped", skipped},    {"failed", failed},   {"failures", failures}};
}

namespace {

struct SuiteInfo {
    std::string name;
    std::string alias;
};

const std::vector<SuiteInfo>& suites()
{
    static const std::vector<SuiteInfo> s{
        {"theta-exactness", "lemma2.3"}, {"theta-epi-count", "cor2.4"},  {"epi-product", "lemma2.5"},
        {"projective-hom", "lemma2.6"},  {"theta-kernel", "lemma3.2"},   {"sp-recursion", "lemma3.4"},
        {"projective-quotients", "lemma3.5"}, {"prin-epi", "cor3.6"},     {"prin-quotients", "cor3.7"},
        {"hall-polynomials", "thm3.8"},  {"algebra", "algebra"},
    };
    return s;
}

mpz_class power(std::uint32_t p, std::size_t k)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, k);
    return r;
}

mpz_class big(std::uint64_t v)
{
    return mpz_class(std::to_string(v));
}

class Runner {
public:
    Runner(SuiteReport& r, const SuiteConfig& c) : report(r), config(c) {}

    void check(bool ok, const std::function<json()>& detail)
    {
        ++report.checked;
        if (ok)
            return;
        ++report.failed;
        if (report.failures.size() < config.max_failures)
            report.failures.push_back(detail());
    }

    /// Runs f, counting it as skipped when the brute-force side is over budget.
    void guarded(const std::function<void()>& f)
    {
        try {
            f();
        } catch (const BudgetExceeded&) {
            ++report.skipped;
        }
    }

    SuiteReport& report;
    const SuiteConfig& config;
};

std::uint64_t from_map(const std::map<std::size_t, std::uint64_t>& m, std::size_t k)
{
    auto it = m.find(k);
    return it == m.end() ? 0 : it->second;
}

void theta_exactness(const PosetPtr& poset, Runner& run)
{
    for (auto p : run.config.primes) {
        auto cat = Catalog::build(poset, Field(p), run.config.bound, ClassFilter::prinjective, run.config.budget);
        std::vector<ThetaImage> th;
        std::vector<bool> clean;
        for (const auto& e : cat.entries()) {
            th.push_back(theta(e.module));
            clean.push_back(split_ker_theta(e.module, run.config.budget).kernel_part.is_zero());
        }
        for (std::size_t a = 0; a < cat.size(); ++a)
            for (std::size_t b = 0; b < cat.size(); ++b)
                run.guarded([&] {
                    for_each_hom(hom_basis(cat[a].module, cat[b].module), run.config.budget, [&](const Morphism& f) {
                        const auto tf = theta_hom(th[a], th[b], f);
                        const bool mono = is_mono(f), epi = is_epi(f);
                        const bool ok = (!mono || is_mono(tf)) && (!epi || is_epi(tf)) &&
                                        (!clean[b] || !is_epi(tf) || epi);
                        run.check(ok, [&] {
                            json comps = json::array();
                            for (const auto& m : f.components)
                                comps.push_back(m.to_string());
                            return json{{"p", p},
                                        {"X", rep_to_json(cat[a].module)},
                                        {"Y", rep_to_json(cat[b].module)},
                                        {"f", comps},
                                        {"mono", mono},
                                        {"epi", epi}};
                        });
                        return true;
                    });
                });
    }
}

void theta_epi_count(const PosetPtr& poset, Runner& run)
{
    for (auto p : run.config.primes) {
        auto cat = Catalog::build(poset, Field(p), run.config.bound, ClassFilter::prinjective, run.config.budget);
        for (std::size_t b = 0; b < cat.size(); ++b) {
            const Rep& y = cat[b].module;
            if (!split_ker_theta(y, run.config.budget).kernel_part.is_zero())
                continue;
            const Rep ty = theta(y).image;
            for (std::size_t a = 0; a < cat.size(); ++a)
                run.guarded([&] {
                    const Rep& x = cat[a].module;
                    const mpz_class lhs = big(count_epi(x, y, run.config.budget));
                    const mpz_class rhs =
                        big(count_epi(theta(x).image, ty, run.config.budget)) * power(p, ker_theta_dim(x, y));
                    run.check(lhs == rhs, [&] {
                        return json{{"p", p}, {"X", rep_to_json(x)}, {"Y", rep_to_json(y)},
                                    {"epi", lhs.get_str()}, {"formula", rhs.get_str()}};
                    });
                });
        }
    }
}

void epi_product(const PosetPtr& poset, Runner& run)
{
    const auto lower = poset->lower_elements();
    const auto lower_poset = std::make_shared<const Poset>(poset->minus());
    for (auto p : run.config.primes) {
        const Field f(p);
        auto cat = Catalog::build(poset, f, run.config.bound, ClassFilter::prinjective, run.config.budget);
        std::vector<std::size_t> ys, zs;
        for (std::size_t i = 0; i < cat.size(); ++i) {
            const Rep& m = cat[i].module;
            if (split_ker_theta(m, run.config.budget).kernel_part.is_zero())
                ys.push_back(i);
            bool upper_zero = !m.is_zero();
            for (auto u : poset->max_elements())
                upper_zero = upper_zero && m.dim(u) == 0;
            if (upper_zero)
                zs.push_back(i);
        }
        for (std::size_t a = 0; a < cat.size(); ++a)
            for (auto b : ys)
                for (auto c : zs)
                    run.guarded([&] {
                        const Rep& x = cat[a].module;
                        const Rep& y = cat[b].module;
                        const Rep& z = cat[c].module;
                        if (!dominated(add_dims(y.dims(), z.dims()), x.dims()))
                            return;
                        const auto lhs = big(count_epi(x, direct_sum(y, z), run.config.budget));
                        mpz_class rhs = big(count_epi(x, y, run.config.budget));
                        if (rhs != 0) {
                            const Rep x1 = restrict(x, lower), y1 = restrict(y, lower), z1 = restrict(z, lower);
                            DimVector d(lower.size());
                            for (std::size_t i = 0; i < d.size(); ++i)
                                d[i] = x1.dim(i) - y1.dim(i);
                            auto um = projective_multiplicities(*lower_poset, d);
                            if (!um) {
                                run.check(false, [&] {
                                    return json{{"p", p}, {"X", rep_to_json(x)}, {"Y", rep_to_json(y)},
                                                {"error", "kernel dimension vector is not projective"}};
                                });
                                return;
                            }
                            const Rep u1 = projective_sum(lower_poset, f, *um);
                            rhs *= big(count_epi(u1, z1, run.config.budget)) * power(p, hom_dim(y1, z1));
                        }
                        run.check(lhs == rhs, [&] {
                            return json{{"p", p}, {"X", rep_to_json(x)}, {"Y", rep_to_json(y)},
                                        {"Z", rep_to_json(z)}, {"epi", lhs.get_str()}, {"formula", rhs.get_str()}};
                        });
                    });
    }
}

void projective_hom(const PosetPtr& poset, Runner& run)
{
    const std::size_t n = poset->size();
    std::vector<std::vector<std::size_t>> mults;
    std::vector<std::size_t> m(n, 0);
    const Field f2(2);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            mults.push_back(m);
            return;
        }
        while (true) {
            rec(i + 1);
            ++m[i];
            if (!run.config.bound.admits(projective_sum(poset, f2, m).dims()))
                break;
        }
        m[i] = 0;
    };
    rec(0);
    for (auto p : run.config.primes) {
        const Field f(p);
        for (const auto& a : mults)
            for (const auto& b : mults) {
                const auto formula = proj_hom_dim(*poset, a, b);
                const auto actual = hom_dim(projective_sum(poset, f, a), projective_sum(poset, f, b));
                run.check(formula == actual, [&] {
                    return json{{"p", p}, {"n", a}, {"m", b}, {"formula", formula}, {"hom_dim", actual}};
                });
            }
    }
}

void theta_kernel(HallEngine& e, Runner& run)
{
    const auto& c = e.prin();
    for (auto p : run.config.primes) {
        const auto& cat = c.at(p);
        std::vector<ThetaImage> th;
        for (const auto& entry : cat.entries())
            th.push_back(theta(entry.module));
        for (std::size_t a = 0; a < c.size(); ++a)
            for (std::size_t b = 0; b < c.size(); ++b)
                run.guarded([&] {
                    std::uint64_t killed = 0;
                    for_each_hom(hom_basis(cat[a].module, cat[b].module), run.config.budget,
                                 [&](const Morphism& g) {
                                     killed += is_zero(theta_hom(th[a], th[b], g));
                                     return true;
                                 });
                    const auto w = e.omega(c[a].spec, c[b].spec);
                    run.check(w(mpz_class(p)) == big(killed), [&] {
                        return json{{"p", p}, {"X", rep_to_json(cat[a].module)}, {"Y", rep_to_json(cat[b].module)},
                                    {"omega", w.to_string()}, {"kernel", killed}};
                    });
                });
    }
}

void sp_recursion(HallEngine& e, Runner& run)
{
    const auto& c = e.sp();
    for (auto p : run.config.primes) {
        const auto& cat = c.at(p);
        auto& table = e.table(Variant::socle_projective, p);
        for (std::size_t x = 0; x < c.size(); ++x)
            for (std::size_t y = 0; y < c.size(); ++y) {
                const auto& r = e.sp_polys(x, y);
                const auto& row = table.row(y);
                const mpz_class q = p;
                run.check(r.sigma(q) == big(from_map(row.by_sub, x)) && r.eta(q) == big(from_map(row.by_quotient, x)),
                          [&] {
                              return json{{"p", p}, {"X", rep_to_json(cat[x].module)}, {"Y", rep_to_json(cat[y].module)},
                                          {"sigma", r.sigma.to_string()}, {"eta", r.eta.to_string()}};
                          });
                run.guarded([&] {
                    const auto epi = big(count_epi(cat[y].module, cat[x].module, run.config.budget));
                    const auto mono = big(count_inj(cat[x].module, cat[y].module, run.config.budget));
                    run.check(r.epsilon(q) == epi && r.mu(q) == mono, [&] {
                        return json{{"p", p}, {"X", rep_to_json(cat[x].module)}, {"Y", rep_to_json(cat[y].module)},
                                    {"mu", r.mu.to_string()}, {"epsilon", r.epsilon.to_string()},
                                    {"monos", mono.get_str()}, {"epis", epi.get_str()}};
                    });
                });
            }
    }
}

void projective_quotients(HallEngine& e, Runner& run)
{
    const auto& c = e.prin();
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> projectives;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (is_projective(c.base()[i].module))
            projectives.emplace_back(i, *projective_multiplicities(e.poset(), c.dims(i)));
    for (auto p : run.config.primes) {
        const auto& cat = c.at(p);
        auto& table = e.table(Variant::prinjective, p);
        for (const auto& [x, mx] : projectives)
            for (const auto& [y, my] : projectives) {
                const auto r = e.proj_polys(e.poset_ptr(), mx, my);
                const mpz_class q = p;
                const auto quotients = big(from_map(table.row(y).by_quotient, x));
                run.check(r.eta(q) == quotients, [&] {
                    return json{{"p", p}, {"X", rep_to_json(cat[x].module)}, {"Y", rep_to_json(cat[y].module)},
                                {"eta", r.eta.to_string()}, {"quotients", quotients.get_str()}};
                });
                run.guarded([&] {
                    const auto epi = big(count_epi(cat[y].module, cat[x].module, run.config.budget));
                    run.check(r.epsilon(q) == epi, [&] {
                        return json{{"p", p}, {"X", rep_to_json(cat[x].module)}, {"Y", rep_to_json(cat[y].module)},
                                    {"epsilon", r.epsilon.to_string()}, {"epis", epi.get_str()}};
                    });
                });
            }
    }
}

void prin_epi(HallEngine& e, Runner& run)
{
    const auto& c = e.prin();
    for (auto p : run.config.primes) {
        const auto& cat = c.at(p);
        for (std::size_t x = 0; x < c.size(); ++x)
            for (std::size_t y = 0; y < c.size(); ++y)
                run.guarded([&] {
                    const auto& eps = e.epsilon_prin(x, y);
                    const auto epi = big(count_epi(cat[y].module, cat[x].module, run.config.budget));
                    run.check(eps(mpz_class(p)) == epi, [&] {
                        return json{{"p", p}, {"X", rep_to_json(cat[x].module)}, {"Y", rep_to_json(cat[y].module)},
                                    {"epsilon", eps.to_string()}, {"epis", epi.get_str()}};
                    });
                });
    }
}

void prin_quotients(HallEngine& e, Runner& run)
{
    const auto& c = e.prin();
    for (auto p : run.config.primes) {
        const auto& cat = c.at(p);
        auto& table = e.table(Variant::prinjective, p);
        for (std::size_t x = 0; x < c.size(); ++x)
            for (std::size_t y = 0; y < c.size(); ++y) {
                const auto& eta = e.eta_prin(x, y);
                const auto quotients = big(from_map(table.row(y).by_quotient, x));
                run.check(eta(mpz_class(p)) == quotients, [&] {
                    return json{{"p", p}, {"X", rep_to_json(cat[x].module)}, {"Y", rep_to_json(cat[y].module)},
                                {"eta", eta.to_string()}, {"quotients", quotients.get_str()}};
                });
            }
    }
}

void hall_polynomials(HallEngine& e, Runner& run)
{
    for (auto v : {Variant::prinjective, Variant::socle_projective}) {
        const auto& c = e.catalog(v);
        for (auto p : run.config.primes) {
            const auto& cat = c.at(p);
            auto& table = e.table(v, p);
            for (std::size_t y = 0; y < c.size(); ++y)
                for (std::size_t x = 0; x < c.size(); ++x)
                    for (std::size_t z = 0; z < c.size(); ++z) {
                        if (add_dims(c.dims(x), c.dims(z)) != c.dims(y))
                            continue;
                        const auto& phi = e.hall_poly(v, y, x, z);
                        const auto n = big(table.number(y, x, z));
                        run.check(phi(mpz_class(p)) == n, [&] {
                            return json{{"p", p},
                                        {"variant", to_string(v)},
                                        {"Y", rep_to_json(cat[y].module)},
                                        {"X", rep_to_json(cat[x].module)},
                                        {"Z", rep_to_json(cat[z].module)},
                                        {"phi", phi.to_string()},
                                        {"hall_number", n.get_str()}};
                        });
                    }
        }
    }
}

void algebra(const PosetPtr& poset, Runner& run)
{
    auto t = build_table(poset, run.config.bound, run.config.engine);
    const auto assoc = check_associativity(t);
    for (const auto& [a, b, c] : assoc.violations)
        run.check(false, [&] { return json{{"associativity", {a, b, c}}}; });
    run.report.checked += assoc.triples - assoc.violations.size();
    for (auto x : identity_failures(t))
        run.check(false, [&] { return json{{"identity", x}}; });
    run.check(grading_violations(t) == 0, [&] { return json{{"grading_violations", grading_violations(t)}}; });
    for (auto p : run.config.primes) {
        const auto values = evaluate_at(t, p);
        run.report.checked += values.size();
    }
}

} // namespace

std::vector<std::string> suite_names()
{
    std::vector<std::string> out;
    for (const auto& s : suites())
        out.push_back(s.name);
    return out;
}

std::string canonical_suite(const std::string& name)
{
    for (const auto& s : suites())
        if (name == s.name || name == s.alias)
            return s.name;
    std::string known;
    for (const auto& s : suites())
        known += (known.empty() ? "" : ", ") + s.name + " (" + s.alias + ")";
    throw ValidationError("unknown suite '" + name + "'; known: " + known);
}

SuiteReport run_suite(const std::string& name, const PosetPtr& poset, const SuiteConfig& config)
{
    SuiteReport report;
    report.suite = canonical_suite(name);
    Runner run(report, config);
    const auto& s = report.suite;
    try {
        if (s == "theta-exactness")
            theta_exactness(poset, run);
        else if (s == "theta-epi-count")
            theta_epi_count(poset, run);
        else if (s == "epi-product")
            epi_product(poset, run);
        else if (s == "projective-hom")
            projective_hom(poset, run);
        else if (s == "algebra")
            algebra(poset, run);
        else {
            HallEngine e(poset, config.bound, config.engine);
            if (s == "theta-kernel")
                theta_kernel(e, run);
            else if (s == "sp-recursion")
                sp_recursion(e, run);
            else if (s == "projective-quotients")
                projective_quotients(e, run);
            else if (s == "prin-epi")
                prin_epi(e, run);
            else if (s == "prin-quotients")
                prin_quotients(e, run);
            else
                hall_polynomials(e, run);
        }
    } catch (const Falsification& f) {
        ++report.failed;
        report.failures.push_back({{"falsification", f.what()}});
    }
    return report;
}

} // namespace prinhall
