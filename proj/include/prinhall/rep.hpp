#pragma once

#include "prinhall/gflin.hpp"
#include "prinhall/poset.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace prinhall {

using DimVector = std::vector<std::size_t>;

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

std::size_t total(const DimVector& d);
/// Componentwise a <= b.
bool dominated(const DimVector& a, const DimVector& b);
DimVector add_dims(const DimVector& a, const DimVector& b);

/// A representation of a poset over F_p: a space per element and a matrix
/// (dims[j] x dims[i]) per cover pair (i, j). Composites are derived.
class Rep {
public:
    /// Checks matrix shapes only; see validate() for path independence.
    Rep(PosetPtr poset, Field field, DimVector dims, std::vector<MatFp> maps);

    static Rep zero(PosetPtr poset, Field field);

    const Poset& poset() const { return *poset_; }
    const PosetPtr& poset_ptr() const { return poset_; }
    Field field() const { return field_; }
    const DimVector& dims() const { return dims_; }
    std::size_t dim(std::size_t i) const { return dims_[i]; }
    std::size_t total_dim() const { return total(dims_); }
    bool is_zero() const { return total_dim() == 0; }

    const std::vector<MatFp>& maps() const { return maps_; }
    const MatFp& cover_map(std::size_t cover) const { return maps_[cover]; }

    /// Composite along the fixed chain from i to j; identity when i == j.
    MatFp map_of(std::size_t i, std::size_t j) const;

    /// Same poset (by value) and same field.
    bool compatible(const Rep& other) const;

    std::string to_string() const;

private:
    PosetPtr poset_;
    Field field_;
    DimVector dims_;
    std::vector<MatFp> maps_;
};

struct PathViolation {
    std::size_t from;
    std::size_t to;
    MatFp first;
    MatFp second;
};

/// First comparable pair with two unequal chain composites, if any.
std::optional<PathViolation> validate(const Rep& x);
/// Throws ValidationError naming the pair.
void require_valid(const Rep& x);

/// One matrix per poset element, dims(target)[i] x dims(source)[i].
struct Morphism {
    std::vector<MatFp> components;

    friend bool operator==(const Morphism&, const Morphism&) = default;
};

Morphism identity_morphism(const Rep& x);
Morphism zero_morphism(const Rep& source, const Rep& target);
Morphism compose(const Morphism& g, const Morphism& f);
Morphism operator+(const Morphism& a, const Morphism& b);
Morphism operator-(const Morphism& a, const Morphism& b);
Morphism scaled(const Morphism& f, Residue s);
bool is_zero(const Morphism& f);
bool is_mono(const Morphism& f);
bool is_epi(const Morphism& f);
bool is_iso(const Morphism& f);
bool is_nilpotent(const Morphism& f);
/// f_j phi_ij = psi_ij f_i on every cover.
bool is_homomorphism(const Morphism& f, const Rep& source, const Rep& target);

struct HomSpace {
    Rep source;
    Rep target;
    std::vector<Morphism> basis;

    std::size_t dim() const { return basis.size(); }
    Morphism element(std::span<const Residue> coeffs) const;
};

HomSpace hom_basis(const Rep& x, const Rep& y);
std::size_t hom_dim(const Rep& x, const Rep& y);

Rep direct_sum(const Rep& x, const Rep& y);
Rep direct_sum(std::span<const Rep> parts, const PosetPtr& poset, Field field);

Rep projective(const PosetPtr& poset, Field field, std::size_t i);
Rep simple(const PosetPtr& poset, Field field, std::size_t i);
/// The projective with multiplicity mult[i] of P(i).
Rep projective_sum(const PosetPtr& poset, Field field, const std::vector<std::size_t>& mult);

/// p^dim Hom; throws BudgetExceeded above the budget.
std::uint64_t count_hom(const Rep& x, const Rep& y, std::uint64_t budget = kDefaultBudget);
/// Exhaustive enumeration of Hom(x, y); BudgetExceeded above the budget.
std::uint64_t count_inj(const Rep& x, const Rep& y, std::uint64_t budget = kDefaultBudget);
std::uint64_t count_epi(const Rep& x, const Rep& y, std::uint64_t budget = kDefaultBudget);
std::uint64_t count_aut(const Rep& x, std::uint64_t budget = kDefaultBudget);

/// Visits every element of a hom space (p^dim of them).
void for_each_hom(const HomSpace& h, std::uint64_t budget,
                  const std::function<bool(const Morphism&)>& visit);

bool is_isomorphic(const Rep& x, const Rep& y, std::uint64_t budget = kDefaultBudget);

/// A subquotient together with its structure map: the inclusion into the
/// parent (radical, socle, submodule) or the projection from it (top, quotient).
struct SubRep {
    Rep module;
    Morphism map;
};

/// Subspaces are given as row-basis matrices (k_i x dims[i]); any basis works.
SubRep submodule(const Rep& y, std::span<const MatFp> subspaces);
/// Quotient on the standard complement of each RREF basis, taken greedily in
/// index order.
SubRep quotient(const Rep& y, std::span<const MatFp> subspaces);
/// Throws ValidationError naming the first cover (i, j) with phi_ij(U_i) not in U_j.
void require_closed(const Rep& y, std::span<const MatFp> subspaces);

std::vector<MatFp> radical_subspaces(const Rep& x);
std::vector<MatFp> socle_subspaces(const Rep& x);
SubRep radical(const Rep& x);
SubRep top(const Rep& x);
SubRep socle(const Rep& x);

/// Restriction to the induced subposet on `elements`.
Rep restrict(const Rep& x, const std::vector<std::size_t>& elements);
Rep restrict_to_lower(const Rep& x);

/// The triple (X', X'', phi): X' over the non-maximal elements, the spaces at
/// the maximal ones, and map_of(i, j) for each i non-maximal below j maximal.
struct TripleView {
    Rep lower;
    DimVector upper_dims;
    struct Cross {
        std::size_t from;
        std::size_t to;
        MatFp map;
    };
    std::vector<Cross> cross;
};
TripleView triple_view(const Rep& x);

bool is_projective(const Rep& x);
bool is_prinjective(const Rep& x);
bool is_socle_projective(const Rep& x);

/// sum_i sum_{j <= i} n_i m_j.
std::size_t proj_hom_dim(const Poset& poset, const std::vector<std::size_t>& n,
                         const std::vector<std::size_t>& m);
/// The multiplicities t with dims = dims(sum P(i)^t_i), when they exist.
std::optional<std::vector<std::size_t>> projective_multiplicities(const Poset& poset,
                                                                  const DimVector& dims);

/// An indecomposable whose endomorphism ring is local with residue field F_p.
/// Provides the residue map End(W) -> F_p and summand multiplicities.
class LocalSummand {
public:
    /// nullopt when End(w) is not local with residue field F_p (or w = 0).
    static std::optional<LocalSummand> probe(const Rep& w);

    const Rep& module() const { return w_; }
    std::size_t end_dim() const { return end_dim_; }
    bool is_brick() const { return end_dim_ == 1; }
    Residue residue(const Morphism& endo) const;

    /// Multiplicity of W as a direct summand of a: rank of the pairing
    /// Hom(W, a) x Hom(a, W) -> F_p, (f, g) -> residue(g f).
    std::size_t multiplicity_in(const Rep& a) const;
    bool isomorphic_to(const Rep& a) const;

private:
    explicit LocalSummand(Rep w) : w_(std::move(w)) {}

    Rep w_;
    std::size_t end_dim_ = 0;
    Echelon end_echelon_{MatFp(Field(2), 0, 0), 0, {}};
    std::vector<Residue> pivot_residues_;
};

/// Splits x into indecomposable summands (with multiplicity). Uses Fitting
/// decompositions of endomorphisms, falling back to enumerating End(x) for
/// idempotents within the budget.
std::vector<Rep> indecompose(const Rep& x, std::uint64_t budget = kDefaultBudget);
bool is_indecomposable(const Rep& x, std::uint64_t budget = kDefaultBudget);

/// dim Ext^1(x, y), from a projective presentation of x.
std::size_t ext1_dim(const Rep& x, const Rep& y);

} // namespace prinhall
