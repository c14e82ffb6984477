#pragma once

#include "prinhall/hallpoly.hpp"

#include <json.hpp>

namespace prinhall {

struct SuiteConfig {
    DimBound bound{{}, 4};
    /// Primes at which formulas are compared with brute-force counts.
    std::vector<std::uint32_t> primes{2};
    EngineOptions engine;
    std::uint64_t budget = kDefaultBudget;
    /// Counterexamples kept in the report.
    std::size_t max_failures = 5;
};

struct SuiteReport {
    std::string suite;
    std::size_t checked = 0;
    /// Instances whose brute-force side exceeded the budget.
    std::size_t skipped = 0;
    std::size_t failed = 0;
    std::vector<nlohmann::json> failures;

    bool passed() const { return failed == 0; }
    nlohmann::json to_json() const;
};

/// Canonical suite names, in a fixed order.
std::vector<std::string> suite_names();
/// Resolves a suite name or its short alias; throws ValidationError.
std::string canonical_suite(const std::string& name);

SuiteReport run_suite(const std::string& name, const PosetPtr& poset, const SuiteConfig& config);

} // namespace prinhall
