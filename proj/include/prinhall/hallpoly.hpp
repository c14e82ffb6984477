#pragma once

#include "prinhall/intpoly.hpp"
#include "prinhall/modspec.hpp"
#include "prinhall/theta.hpp"

#include <map>
#include <set>
#include <tuple>

namespace prinhall {

/// Which module class a Hall polynomial computation lives in.
enum class Variant { prinjective, socle_projective };

std::string to_string(Variant v);

struct EngineOptions {
    std::vector<std::uint32_t> samples{2, 3, 5, 7, 11};
    std::vector<std::uint32_t> verify{13, 17};
    /// Check recursive results against brute-force counts at the verification primes.
    bool certify = true;
    unsigned threads = 0;
    std::uint64_t budget = kDefaultBudget;
};

/// sigma: submodules of Y isomorphic to X; eta: submodules U with Y/U = X;
/// mu = |Mono(X, Y)|; epsilon = |Epi(Y, X)|.
struct SpPolys {
    IntPoly sigma, eta, mu, epsilon;
};

struct ProjPolys {
    IntPoly eta, epsilon;
};

/// Polynomial counting for prinjective and socle-projective modules of a
/// poset within a dimension bound. Module arguments are catalog indices of
/// the respective catalog; structure is computed over the base prime 2.
class HallEngine {
public:
    HallEngine(PosetPtr poset, DimBound bound, EngineOptions options = {});

    const Poset& poset() const { return *poset_; }
    const PosetPtr& poset_ptr() const { return poset_; }
    const EngineOptions& options() const { return options_; }
    const SpecCatalog& catalog(Variant v) const { return v == Variant::prinjective ? prin_ : sp_; }
    const SpecCatalog& prin() const { return prin_; }
    const SpecCatalog& sp() const { return sp_; }
    /// The subposet of non-maximal elements (possibly empty).
    const PosetPtr& lower_poset() const { return lower_; }

    /// Index of Theta(x) in the socle-projective catalog, x a prinjective index.
    std::size_t theta_index(std::size_t x) const { return theta_index_.at(x); }

    /// Samples extended by primes above every plan prime until degree + 1 points.
    FitPlan plan_for(std::size_t degree_bound) const;
    FitPlan hall_plan(const DimVector& dims_y) const { return plan_for(degree_bound_for(dims_y)); }

    /// Fitted |Aut|, degree bound dim End; throws Falsification unless monic.
    const IntPoly& alpha(const ModuleSpec& a);
    const IntPoly& alpha(Variant v, std::size_t i) { return alpha(catalog(v)[i].spec); }

    std::size_t h_dim(const ModuleSpec& a, const ModuleSpec& b) const;
    IntPoly gamma(const ModuleSpec& a, const ModuleSpec& b) const { return IntPoly::T(h_dim(a, b)); }
    /// T^(h(a, b) - h(Theta a, Theta b)) for prinjective a, b.
    IntPoly omega(const ModuleSpec& a, const ModuleSpec& b) const;

    /// Socle-projective catalog indices.
    const SpPolys& sp_polys(std::size_t x, std::size_t y);
    /// Projectives over `poset` given by multiplicities of the P(i).
    ProjPolys proj_polys(const PosetPtr& poset, const std::vector<std::size_t>& x,
                         const std::vector<std::size_t>& y);
    /// Prinjective catalog indices: |Epi(Y, X)| and the number of U with Y/U = X.
    const IntPoly& epsilon_prin(std::size_t x, std::size_t y);
    const IntPoly& eta_prin(std::size_t x, std::size_t y);

    /// phi^y_{xz}: x the quotient, z the submodule.
    const IntPoly& hall_poly(Variant v, std::size_t y, std::size_t x, std::size_t z);

    /// Brute-force Hall numbers over F_p in catalog index order.
    HallTable& table(Variant v, std::uint32_t p);
    /// Direct interpolation of F^Y_{X,Z} over hall_plan(dims y).
    FitResult fit_hall(Variant v, std::size_t y, std::size_t x, std::size_t z);

    /// Number of divisions by alpha performed so far (each one exact).
    std::size_t exact_divisions() const { return divisions_; }

private:
    IntPoly divide_exactly(const IntPoly& a, const IntPoly& b, const std::string& what);
    const Rep& base_rep(Variant v, std::size_t i) const;
    IntPoly hall_poly_uncertified(Variant v, std::size_t y, std::size_t x, std::size_t z);

    PosetPtr poset_;
    PosetPtr lower_;
    DimBound bound_;
    EngineOptions options_;
    SpecCatalog prin_;
    SpecCatalog sp_;
    std::vector<std::size_t> theta_index_;
    /// Per prinjective index: the part without (P, 0, 0) summands and the rest.
    std::vector<std::size_t> reduced_index_;
    std::vector<Rep> kernel_part_;

    std::map<std::string, IntPoly> alpha_;
    std::map<std::pair<std::size_t, std::size_t>, SpPolys> sp_memo_;
    std::map<std::pair<std::size_t, std::size_t>, IntPoly> eps_memo_, eta_memo_;
    std::map<std::tuple<Variant, std::size_t, std::size_t, std::size_t>, IntPoly> hall_memo_;
    std::set<std::tuple<Variant, std::size_t, std::size_t, std::size_t>> in_progress_;
    std::map<std::pair<Variant, std::uint32_t>, std::unique_ptr<HallTable>> tables_;
    std::size_t divisions_ = 0;
};

} // namespace prinhall
