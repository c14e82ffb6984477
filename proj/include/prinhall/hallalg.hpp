#pragma once

#include "prinhall/hallpoly.hpp"

#include <json.hpp>

#include <memory>

namespace prinhall {

/// A finitely supported combination of basis elements u_x with Z[T] coefficients.
struct AlgebraElement {
    std::map<std::size_t, IntPoly> terms;

    static AlgebraElement basis(std::size_t x, IntPoly c = 1);

    AlgebraElement& add(std::size_t x, const IntPoly& c);
    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const IntPoly& c, const AlgebraElement& a);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms == b.terms; }

    std::string to_string() const;
};

struct StructureConstant {
    std::size_t x;
    IntPoly poly;
};

/// The prinjective Hall algebra up to a dimension bound: basis the prinjective
/// catalog, u_{x1} u_{x2} = sum_x phi^x_{x1 x2} u_x.
class HallAlgebraTable {
public:
    std::size_t size() const { return engine_->prin().size(); }
    const SpecCatalog& basis() const { return engine_->prin(); }
    HallEngine& engine() const { return *engine_; }
    std::size_t identity() const { return identity_; }

    bool in_bound(std::size_t x1, std::size_t x2) const { return products_.count({x1, x2}) > 0; }
    /// Nonzero constants of u_{x1} u_{x2}; throws OutOfBound outside the bound.
    const std::vector<StructureConstant>& product(std::size_t x1, std::size_t x2) const;
    const std::map<std::pair<std::size_t, std::size_t>, std::vector<StructureConstant>>& products() const
    {
        return products_;
    }
    std::size_t out_of_bound_pairs() const { return out_of_bound_; }

private:
    friend HallAlgebraTable build_table(PosetPtr poset, DimBound bound, EngineOptions options);

    std::shared_ptr<HallEngine> engine_;
    std::size_t identity_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<StructureConstant>> products_;
    std::size_t out_of_bound_ = 0;
};

HallAlgebraTable build_table(PosetPtr poset, DimBound bound, EngineOptions options = {});

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b, const HallAlgebraTable& t);

struct AssociativityReport {
    std::size_t triples = 0;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> violations;
};

/// (u_a u_b) u_c = u_a (u_b u_c) for every triple whose total dims stay in the bound.
AssociativityReport check_associativity(const HallAlgebraTable& t);

/// Basis elements x with u_0 u_x != u_x or u_x u_0 != u_x.
std::vector<std::size_t> identity_failures(const HallAlgebraTable& t);

/// Constants phi^x_{x1 x2} != 0 with dims x != dims x1 + dims x2.
std::size_t grading_violations(const HallAlgebraTable& t);

/// Constants evaluated at q, keyed (x1, x2, x); each is compared with the Hall
/// number over F_q and a mismatch throws Falsification.
std::map<std::tuple<std::size_t, std::size_t, std::size_t>, mpz_class> evaluate_at(const HallAlgebraTable& t,
                                                                                    std::uint32_t q);

/// {"basis": [...], "products": [{"x1", "x2", "x", "poly"}], ...} in index order.
nlohmann::json to_json(const HallAlgebraTable& t);

} // namespace prinhall
