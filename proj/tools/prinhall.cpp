#include "prinhall/errors.hpp"
#include "prinhall/hallalg.hpp"
#include "prinhall/io.hpp"
#include "prinhall/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace prinhall;
using nlohmann::json;

namespace {

enum Exit { ok = 0, usage = 1, invalid = 2, budget = 3, falsified = 4 };

struct Options {
    std::string poset;
    std::vector<std::string> specs;
    std::string primes;
    std::string verify_primes = "13,17";
    std::string max_dim;
    std::size_t max_total = 0;
    std::uint64_t budget = kDefaultBudget;
    std::string out;
    std::string filter = "all";
    std::string counter;
    std::string suite;
    long degree = -1;
    unsigned threads = 0;
};

void add_common(CLI::App* cmd, Options& o)
{
    cmd->add_option("--poset", o.poset, "Poset JSON file")->required();
    cmd->add_option("--budget", o.budget, "Enumeration budget (elements per exhaustive search)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", o.out, "Write the JSON report to this file");
}

void add_bound(CLI::App* cmd, Options& o)
{
    cmd->add_option("--max-dim", o.max_dim, "Componentwise dimension bound d1,d2,...");
    cmd->add_option("--max-total", o.max_total, "Total dimension bound (default 4 without --max-dim)");
}

DimBound bound_of(const Options& o, const Poset& p)
{
    DimBound b;
    if (!o.max_dim.empty()) {
        b.componentwise = parse_dims(o.max_dim);
        if (b.componentwise->size() != p.size())
            throw ValidationError("--max-dim has " + std::to_string(b.componentwise->size()) +
                                  " entries for a poset with " + std::to_string(p.size()) + " elements");
    }
    if (o.max_total > 0)
        b.total = o.max_total;
    if (!b.componentwise && !b.total)
        b.total = 4;
    return b;
}

std::vector<std::uint32_t> primes_or(const Options& o, const std::string& fallback)
{
    return parse_primes(o.primes.empty() ? fallback : o.primes);
}

std::vector<ModuleSpec> load_specs(const Options& o, const PosetPtr& poset, std::size_t expected,
                                   const std::string& what)
{
    if (o.specs.size() != expected)
        throw ValidationError(what + " needs " + std::to_string(expected) + " --spec files, got " +
                              std::to_string(o.specs.size()));
    std::vector<ModuleSpec> out;
    for (const auto& f : o.specs)
        out.push_back(parse_spec(read_json(f), poset));
    return out;
}

void require_field_independent(const ModuleSpec& s, const std::string& file, std::uint64_t budget)
{
    auto r = check_field_independence(s, {2, 3, 5}, budget);
    if (!r.ok)
        throw ValidationError(file + " is field dependent: " + r.detail);
}

json dims_json(const Poset& p, const DimVector& d)
{
    json j = json::object();
    for (std::size_t i = 0; i < p.size(); ++i)
        j[p.label(i)] = d[i];
    return j;
}

int emit(const Options& o, const json& report, const std::string& summary, int code = Exit::ok)
{
    if (o.out.empty())
        std::cout << report.dump(2) << "\n";
    else
        write_text(o.out, report.dump(2) + "\n");
    std::cerr << summary << "\n";
    return code;
}

int cmd_validate(const Options& o)
{
    auto poset = parse_poset(read_json(o.poset));
    const auto& p = *poset;
    json report{{"ok", true}, {"elements", p.labels()}, {"linear_extension", p.labels()}};
    json covers = json::array();
    for (const auto& [a, b] : cover_labels(p))
        covers.push_back({a, b});
    report["covers"] = covers;
    json lower = json::array(), upper = json::array(), notes = json::array();
    for (auto i : p.lower_elements())
        lower.push_back(p.label(i));
    for (auto i : p.max_elements())
        upper.push_back(p.label(i));
    report["lower"] = lower;
    report["maximal"] = upper;
    if (lower.empty())
        notes.push_back("the set of non-maximal elements is empty: every module is prinjective");
    report["notes"] = notes;

    const auto primes = primes_or(o, "2,3,5");
    json specs = json::array();
    for (const auto& file : o.specs) {
        auto s = parse_spec(read_json(file), poset);
        auto r = check_field_independence(s, primes, o.budget);
        const Rep x = specialize(s, primes.front());
        specs.push_back({{"file", file},
                         {"dims", dims_json(p, s.dims)},
                         {"field_independent", r.ok},
                         {"detail", r.detail},
                         {"prinjective", is_prinjective(x)},
                         {"socle_projective", is_socle_projective(x)},
                         {"indecomposable", is_indecomposable(x, o.budget)}});
        if (!r.ok) {
            report["ok"] = false;
            report["specs"] = specs;
            return emit(o, report, file + ": field dependent: " + r.detail, Exit::invalid);
        }
    }
    report["specs"] = specs;
    return emit(o, report,
                "poset ok: " + std::to_string(p.size()) + " elements, " + std::to_string(p.covers().size()) +
                    " covers, " + std::to_string(lower.size()) + " non-maximal");
}

int cmd_catalog(const Options& o)
{
    auto poset = parse_poset(read_json(o.poset));
    const auto p = primes_or(o, "2").front();
    const auto bound = bound_of(o, *poset);
    const auto filter = parse_filter(o.filter);
    auto cat = Catalog::build(poset, Field(p), bound, filter, o.budget);
    json classes = json::array();
    for (std::size_t i = 0; i < cat.size(); ++i) {
        const auto& e = cat[i];
        std::size_t parts = 0;
        for (auto m : e.multiplicities)
            parts += m;
        classes.push_back({{"index", i},
                           {"dims", dims_json(*poset, e.module.dims())},
                           {"end_dim", e.fingerprint.end_dim},
                           {"summands", parts},
                           {"prinjective", is_prinjective(e.module)},
                           {"socle_projective", is_socle_projective(e.module)},
                           {"spec", spec_to_json(ModuleSpec::lift(e.module))}});
    }
    json report{{"p", p},
                {"bound", bound.to_string()},
                {"filter", to_string(filter)},
                {"indecomposables", cat.indecomposables().size()},
                {"classes", classes}};
    return emit(o, report,
                std::to_string(cat.size()) + " classes (" + std::to_string(cat.indecomposables().size()) +
                    " indecomposable) over F_" + std::to_string(p) + " within " + bound.to_string());
}

int cmd_count(const Options& o)
{
    auto poset = parse_poset(read_json(o.poset));
    auto specs = load_specs(o, poset, 3, "count (Y, Q, S)");
    json counts = json::object();
    std::string summary = "F^Y_{Q,S}:";
    for (auto p : primes_or(o, "2")) {
        const auto n = hall_number(specialize(specs[0], p), specialize(specs[1], p), specialize(specs[2], p), o.budget);
        counts[std::to_string(p)] = n;
        summary += " " + std::to_string(n) + " at " + std::to_string(p) + ";";
    }
    return emit(o, {{"counts", counts}}, summary);
}

int cmd_fit(const Options& o)
{
    auto poset = parse_poset(read_json(o.poset));
    Counter counter;
    std::size_t degree = 0;
    std::vector<ModuleSpec> specs;
    const auto c = o.counter;
    if (c == "hall") {
        specs = load_specs(o, poset, 3, "fit hall (Y, Q, S)");
        counter = [&](std::uint32_t p) {
            return mpz_class(std::to_string(
                hall_number(specialize(specs[0], p), specialize(specs[1], p), specialize(specs[2], p), o.budget)));
        };
        degree = degree_bound_for(specs[0].dims);
    } else if (c == "aut") {
        specs = load_specs(o, poset, 1, "fit aut (X)");
        counter = [&](std::uint32_t p) { return count_aut_exact(specialize(specs[0], p), o.budget); };
        const Rep x = specialize(specs[0], 2);
        degree = hom_dim(x, x);
    } else if (c == "hom" || c == "epi" || c == "inj") {
        specs = load_specs(o, poset, 2, "fit " + c + " (X, Y)");
        counter = [&](std::uint32_t p) {
            const Rep x = specialize(specs[0], p), y = specialize(specs[1], p);
            const auto n = c == "hom" ? count_hom(x, y, o.budget)
                           : c == "epi" ? count_epi(x, y, o.budget)
                                        : count_inj(x, y, o.budget);
            return mpz_class(std::to_string(n));
        };
        degree = hom_dim(specialize(specs[0], 2), specialize(specs[1], 2));
    } else {
        throw ValidationError("--counter must be one of hall, aut, hom, epi, inj");
    }
    for (std::size_t i = 0; i < specs.size(); ++i)
        require_field_independent(specs[i], o.specs[i], o.budget);

    FitPlan plan;
    plan.samples = primes_or(o, "2,3,5,7,11");
    plan.verify = parse_primes(o.verify_primes);
    plan.degree_bound = o.degree >= 0 ? static_cast<std::size_t>(o.degree) : degree;
    if (o.degree < 0 && plan.samples.size() < degree + 1) {
        std::uint32_t top = 0;
        for (auto p : plan.samples)
            top = std::max(top, p);
        for (auto p : plan.verify)
            top = std::max(top, p);
        auto more = primes_above(top, degree + 1 - plan.samples.size());
        plan.samples.insert(plan.samples.end(), more.begin(), more.end());
    }
    auto r = fit(counter, plan);
    json samples = json::array(), verified = json::array();
    for (const auto& s : r.samples)
        samples.push_back({{"p", s.prime}, {"value", s.value.get_str()}});
    for (const auto& s : r.verified)
        verified.push_back({{"p", s.prime}, {"value", s.value.get_str()}});
    json report{{"counter", c},
                {"polynomial", r.poly.to_string()},
                {"coefficients", poly_to_json(r.poly)},
                {"plan", plan.to_string()},
                {"samples", samples},
                {"verified", verified}};
    return emit(o, report, r.poly.to_string());
}

int cmd_verify(const Options& o)
{
    auto poset = parse_poset(read_json(o.poset));
    SuiteConfig cfg;
    cfg.bound = bound_of(o, *poset);
    cfg.primes = primes_or(o, "2");
    cfg.budget = o.budget;
    cfg.engine.verify = parse_primes(o.verify_primes);
    cfg.engine.budget = o.budget;
    cfg.engine.threads = o.threads;
    auto report = run_suite(o.suite, poset, cfg);
    return emit(o, report.to_json(),
                report.suite + ": " + (report.passed() ? "pass" : "FAIL") + " (" + std::to_string(report.checked) +
                    " checked, " + std::to_string(report.failed) + " failed, " + std::to_string(report.skipped) +
                    " skipped)",
                report.passed() ? Exit::ok : Exit::falsified);
}

int cmd_algebra(const Options& o)
{
    auto poset = parse_poset(read_json(o.poset));
    EngineOptions eo;
    if (!o.primes.empty())
        eo.samples = parse_primes(o.primes);
    eo.verify = parse_primes(o.verify_primes);
    eo.budget = o.budget;
    eo.threads = o.threads;
    const auto bound = bound_of(o, *poset);
    auto t = build_table(poset, bound, eo);
    const auto assoc = check_associativity(t);
    const auto ids = identity_failures(t);
    const auto grading = grading_violations(t);
    json report = to_json(t);
    json violations = json::array();
    for (const auto& [a, b, c] : assoc.violations)
        violations.push_back({a, b, c});
    report["associativity"] = {{"triples", assoc.triples}, {"violations", violations}};
    report["identity_failures"] = ids;
    report["grading_violations"] = grading;
    const bool good = assoc.violations.empty() && ids.empty() && grading == 0;
    return emit(o, report,
                std::to_string(t.size()) + " basis elements, " + std::to_string(t.products().size()) +
                    " products in bound; associativity " + (assoc.violations.empty() ? "holds" : "FAILS") +
                    " on " + std::to_string(assoc.triples) + " triples",
                good ? Exit::ok : Exit::falsified);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hall numbers and Hall polynomials of prinjective poset representations"};
    app.require_subcommand(1);
    Options o;

    auto* validate = app.add_subcommand("validate", "Check a poset (and module specs) and show its bipartition");
    add_common(validate, o);
    validate->add_option("--spec", o.specs, "Module spec JSON files");
    validate->add_option("--primes", o.primes, "Primes for the field-independence check (default 2,3,5)");

    auto* catalog = app.add_subcommand("catalog", "List isomorphism classes within a dimension bound");
    add_common(catalog, o);
    add_bound(catalog, o);
    catalog->add_option("--primes", o.primes, "Prime field (first entry used, default 2)");
    catalog->add_option("--filter", o.filter, "all | prinjective | socle-projective");

    auto* count = app.add_subcommand("count", "Hall number F^Y_{Q,S} for specs Y, Q, S");
    add_common(count, o);
    count->add_option("--spec", o.specs, "Module spec files Y Q S")->required();
    count->add_option("--primes", o.primes, "Primes (default 2)");

    auto* fitc = app.add_subcommand("fit", "Interpolate a count as a polynomial and verify it");
    add_common(fitc, o);
    fitc->add_option("--spec", o.specs, "Module spec files")->required();
    fitc->add_option("--counter", o.counter, "hall | aut | hom | epi | inj")->required();
    fitc->add_option("--primes", o.primes, "Sample primes (default 2,3,5,7,11)");
    fitc->add_option("--verify-primes", o.verify_primes, "Verification primes (default 13,17)");
    fitc->add_option("--degree", o.degree, "Degree bound (default from the dimension vectors)");

    auto* verify = app.add_subcommand("verify", "Compare formulas with brute-force counts");
    add_common(verify, o);
    add_bound(verify, o);
    std::string suites;
    for (const auto& s : suite_names())
        suites += (suites.empty() ? "" : " | ") + s;
    verify->add_option("--suite", o.suite, suites + " (or short aliases)")->required();
    verify->add_option("--primes", o.primes, "Primes for the brute-force side (default 2)");
    verify->add_option("--verify-primes", o.verify_primes, "Certification primes (default 13,17)");
    verify->add_option("--threads", o.threads, "Worker threads for Hall tables");

    auto* algebra = app.add_subcommand("algebra", "Build the Hall algebra table and check associativity");
    add_common(algebra, o);
    add_bound(algebra, o);
    algebra->add_option("--primes", o.primes, "Sample primes (default 2,3,5,7,11)");
    algebra->add_option("--verify-primes", o.verify_primes, "Certification primes (default 13,17)");
    algebra->add_option("--threads", o.threads, "Worker threads for Hall tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::usage;
    }

    try {
        if (*validate)
            return cmd_validate(o);
        if (*catalog)
            return cmd_catalog(o);
        if (*count)
            return cmd_count(o);
        if (*fitc)
            return cmd_fit(o);
        if (*verify)
            return cmd_verify(o);
        return cmd_algebra(o);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::usage;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return Exit::invalid;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return Exit::budget;
    } catch (const Falsification& e) {
        std::cerr << "falsification: " << e.what() << "\n";
        return Exit::falsified;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::usage;
    }
}
