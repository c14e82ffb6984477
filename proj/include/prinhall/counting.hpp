#pragma once

#include "prinhall/rep.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace prinhall {

/// Visits every submodule of y exactly once, as one RREF subspace per element.
/// Elements are processed in linear-extension order; at each element only
/// subspaces containing the images from below are tried. With `dims`, only
/// submodules of that dimension vector are visited.
void for_each_submodule(const Rep& y, const std::function<bool(const std::vector<MatFp>&)>& visit,
                        const std::optional<DimVector>& dims = std::nullopt);
std::vector<std::vector<MatFp>> submodules(const Rep& y);
std::uint64_t count_submodules(const Rep& y);

/// Decides membership in the isomorphism class of a fixed module. Uses summand
/// multiplicities when every indecomposable summand has a local endomorphism
/// ring with residue field F_p, otherwise exhaustive hom enumeration.
class IsoMatcher {
public:
    explicit IsoMatcher(const Rep& target, std::uint64_t budget = kDefaultBudget);
    bool matches(const Rep& a) const;

private:
    Rep target_;
    std::uint64_t budget_;
    std::vector<std::pair<LocalSummand, std::size_t>> summands_;
    bool local_ = true;
};

/// F^Y_{Q,S}: submodules U of y with U = s and y/U = q (up to isomorphism).
std::uint64_t hall_number(const Rep& y, const Rep& q, const Rep& s, std::uint64_t budget = kDefaultBudget);

/// |Aut x| from a Krull-Schmidt decomposition with local summands:
/// p^(dim End - sum m_j^2) * prod |GL_{m_j}(F_p)|.
mpz_class count_aut_exact(const Rep& x, std::uint64_t budget = kDefaultBudget);
/// |GL_m(F_p)|.
mpz_class gl_order(std::uint64_t p, std::size_t m);

struct DimBound {
    std::optional<DimVector> componentwise;
    std::optional<std::size_t> total;

    bool admits(const DimVector& d) const;
    /// The componentwise box to enumerate within (total bound applied per element).
    DimVector box(std::size_t elements) const;
    std::string to_string() const;
};

enum class ClassFilter { all, prinjective, socle_projective };

std::string to_string(ClassFilter f);
ClassFilter parse_filter(const std::string& s);
bool passes(ClassFilter f, const Rep& x);

struct Fingerprint {
    DimVector dims;
    std::size_t end_dim = 0;
    /// dim Hom(x, P(i)) per element; dim Hom(P(i), x) is dims itself.
    std::vector<std::size_t> hom_to_projectives;

    friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Rep& x);

struct CatalogEntry {
    Rep module;
    /// Multiplicity of each catalog indecomposable.
    std::vector<std::size_t> multiplicities;
    Fingerprint fingerprint;
};

/// Isomorphism classes of a module class within a dimension bound, built
/// from the indecomposables as all direct sums that stay within the bound.
class Catalog {
public:
    /// Exhaustive: every map tuple over F_p on the covers, for every admitted
    /// dimension vector, is validated, filtered, tested for indecomposability
    /// and deduplicated. Throws BudgetExceeded when a dimension vector has more
    /// than `budget` map tuples.
    static Catalog build(PosetPtr poset, Field field, DimBound bound, ClassFilter filter,
                         std::uint64_t budget = kDefaultBudget);

    /// From a known list of pairwise non-isomorphic indecomposables.
    static Catalog from_indecomposables(PosetPtr poset, Field field, DimBound bound, ClassFilter filter,
                                        std::vector<Rep> indecomposables);

    const Poset& poset() const { return *poset_; }
    const PosetPtr& poset_ptr() const { return poset_; }
    Field field() const { return field_; }
    const DimBound& bound() const { return bound_; }
    ClassFilter filter() const { return filter_; }

    const std::vector<Rep>& indecomposables() const { return indecomposables_; }
    const std::vector<CatalogEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    const CatalogEntry& operator[](std::size_t i) const { return entries_.at(i); }

    std::optional<std::size_t> index_of(const std::vector<std::size_t>& multiplicities) const;
    /// Index of the class of `a`, or nullopt when a is outside the catalog
    /// (outside the class or the bound).
    std::optional<std::size_t> classify(const Rep& a) const;
    /// Multiplicity vector of a over the catalog indecomposables, or nullopt
    /// when a has a summand outside the list.
    std::optional<std::vector<std::size_t>> multiplicities(const Rep& a) const;

    /// Entries whose dims are strictly dominated by `dims`.
    std::vector<std::size_t> smaller(const DimVector& dims) const;
    std::vector<std::size_t> with_dims(const DimVector& dims) const;
    std::optional<std::size_t> zero_index() const;

private:
    Catalog(PosetPtr poset, Field field, DimBound bound, ClassFilter filter, std::vector<Rep> indecomposables);

    PosetPtr poset_;
    Field field_;
    DimBound bound_;
    ClassFilter filter_;
    std::vector<Rep> indecomposables_;
    std::vector<LocalSummand> local_;
    std::vector<CatalogEntry> entries_;
    std::map<std::vector<std::size_t>, std::size_t> by_multiplicities_;
};

/// The representatives with dims strictly dominated by those of m.
std::vector<Rep> smaller_specs(const Catalog& c, const Rep& m);

/// All Hall numbers F^Y_{Q,S} with Q, S catalog classes, for one catalog module Y.
struct HallRow {
    /// (quotient index, submodule index) -> count
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> counts;
    /// Submodules by class of the submodule (any quotient), and by class of the quotient.
    std::map<std::size_t, std::uint64_t> by_sub, by_quotient;
    std::uint64_t submodules = 0;
    /// Submodules whose sub or quotient lies outside the catalog.
    std::uint64_t outside = 0;

    std::uint64_t number(std::size_t q, std::size_t s) const;
};

HallRow hall_row(const Catalog& c, std::size_t y);

/// Lazily computed Hall rows of a catalog.
class HallTable {
public:
    explicit HallTable(const Catalog& c) : catalog_(&c) {}

    const Catalog& catalog() const { return *catalog_; }
    const HallRow& row(std::size_t y);
    std::uint64_t number(std::size_t y, std::size_t q, std::size_t s) { return row(y).number(q, s); }
    /// Computes the given rows on up to `threads` worker threads.
    void precompute(const std::vector<std::size_t>& ys, unsigned threads = 0);

private:
    const Catalog* catalog_;
    std::map<std::size_t, HallRow> rows_;
};

} // namespace prinhall
