#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace prinhall {

/// A finite poset whose element order is a fixed linear extension:
/// i <= j implies index(i) <= index(j).
class Poset {
public:
    using Relation = std::pair<std::string, std::string>;

    /// Closure of the given pairs (covers or not). Elements are reordered by a
    /// stable topological sort. Throws ValidationError on duplicate labels,
    /// unknown labels or a cycle (the message names the cycle).
    static Poset from_relations(std::vector<std::string> labels,
                                const std::vector<Relation>& relations);

    static Poset chain(std::size_t n);
    static Poset antichain(std::size_t n);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::optional<std::size_t> index_of(const std::string& label) const;
    std::size_t require_index(const std::string& label) const;

    bool leq(std::size_t i, std::size_t j) const { return leq_[i * size() + j]; }
    bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }

    /// Cover pairs (i, j), sorted lexicographically by index.
    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
    std::optional<std::size_t> cover_index(std::size_t i, std::size_t j) const;
    /// Cover indices along one fixed maximal chain from i to j (empty when i == j).
    std::vector<std::size_t> chain_between(std::size_t i, std::size_t j) const;

    std::vector<std::size_t> max_elements() const;
    /// Non-maximal elements, in order.
    std::vector<std::size_t> lower_elements() const;
    bool is_maximal(std::size_t i) const;

    /// Induced subposet on `elements` (kept in this poset's order).
    Poset restrict_to(const std::vector<std::size_t>& elements) const;
    /// The subposet of non-maximal elements.
    Poset minus() const { return restrict_to(lower_elements()); }

    friend bool operator==(const Poset& a, const Poset& b)
    {
        return a.labels_ == b.labels_ && a.leq_ == b.leq_;
    }

private:
    Poset(std::vector<std::string> labels, std::vector<bool> leq);

    std::vector<std::string> labels_;
    std::vector<bool> leq_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

using PosetPtr = std::shared_ptr<const Poset>;

struct Bipartition {
    std::vector<std::size_t> lower;
    std::vector<std::size_t> upper;
};

Bipartition bipartition(const Poset& p);

/// All cover pairs, labels resolved.
std::vector<Poset::Relation> cover_labels(const Poset& p);

} // namespace prinhall
