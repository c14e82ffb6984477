#pragma once

#include "prinhall/counting.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace prinhall {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// A field-independent module presentation: integer matrices on the covers,
/// reduced mod p on specialization.
struct ModuleSpec {
    PosetPtr poset;
    DimVector dims;
    /// One dims[j] x dims[i] matrix per cover (i, j), in cover order.
    std::vector<IntMatrix> maps;

    /// Entries of a representation as integers in [0, p).
    static ModuleSpec lift(const Rep& x);
    /// Stable textual key (dims and entries).
    std::string key() const;
};

/// Entries reduced mod p; throws ValidationError when the result is not
/// path independent.
Rep specialize(const ModuleSpec& s, std::uint32_t p);

ModuleSpec direct_sum(const ModuleSpec& a, const ModuleSpec& b);

struct FieldReport {
    bool ok = true;
    std::string detail;
};

/// Compares dim End, dim Hom to and from every P(i), and the dimension vectors
/// of the indecomposable summands across the primes.
FieldReport check_field_independence(const ModuleSpec& s, const std::vector<std::uint32_t>& primes,
                                     std::uint64_t budget = kDefaultBudget);

/// A catalog built once at a base prime and lifted to specs; specializations
/// at other primes keep the same indices.
class SpecCatalog {
public:
    struct Entry {
        ModuleSpec spec;
        std::vector<std::size_t> multiplicities;
    };

    static SpecCatalog build(PosetPtr poset, DimBound bound, ClassFilter filter, std::uint32_t base_prime = 2,
                             std::uint64_t budget = kDefaultBudget);

    const Poset& poset() const { return *poset_; }
    const PosetPtr& poset_ptr() const { return poset_; }
    ClassFilter filter() const { return filter_; }
    const DimBound& bound() const { return bound_; }
    std::uint32_t base_prime() const { return base_prime_; }

    std::size_t size() const { return entries_.size(); }
    const Entry& operator[](std::size_t i) const { return entries_.at(i); }
    const std::vector<Entry>& entries() const { return entries_; }
    const std::vector<ModuleSpec>& indecomposables() const { return indecomposables_; }
    const DimVector& dims(std::size_t i) const { return entries_.at(i).spec.dims; }

    /// The catalog at p with the same index order. Checks that every
    /// indecomposable stays indecomposable with the same fingerprint; throws
    /// ValidationError on field dependence.
    const Catalog& at(std::uint32_t p) const;
    const Catalog& base() const { return at(base_prime_); }

    std::optional<std::size_t> index_of(const std::vector<std::size_t>& multiplicities) const;
    /// Classifies a representation over the base prime.
    std::optional<std::size_t> classify(const Rep& base_rep) const;
    std::vector<std::size_t> smaller(const DimVector& dims) const { return base().smaller(dims); }
    std::vector<std::size_t> with_dims(const DimVector& dims) const { return base().with_dims(dims); }

private:
    PosetPtr poset_;
    DimBound bound_;
    ClassFilter filter_;
    std::uint32_t base_prime_ = 2;
    std::uint64_t budget_ = kDefaultBudget;
    std::vector<ModuleSpec> indecomposables_;
    std::vector<Entry> entries_;
    mutable std::map<std::uint32_t, std::unique_ptr<Catalog>> at_;
    mutable std::unique_ptr<std::mutex> lock_ = std::make_unique<std::mutex>();
};

} // namespace prinhall
