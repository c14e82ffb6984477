#include "prinhall/poset.hpp"

#include "prinhall/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace prinhall {

namespace {

std::string describe_cycle(const std::vector<std::string>& labels,
                           const std::vector<std::vector<std::size_t>>& succ)
{
    const std::size_t n = labels.size();
    std::vector<int> state(n, 0);
    std::vector<std::size_t> stack;
    std::vector<std::size_t> cycle;
    std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
        state[v] = 1;
        stack.push_back(v);
        for (auto w : succ[v]) {
            if (state[w] == 1) {
                auto it = std::find(stack.begin(), stack.end(), w);
                cycle.assign(it, stack.end());
                cycle.push_back(w);
                return true;
            }
            if (state[w] == 0 && dfs(w))
                return true;
        }
        stack.pop_back();
        state[v] = 2;
        return false;
    };
    for (std::size_t v = 0; v < n && cycle.empty(); ++v)
        if (state[v] == 0)
            dfs(v);
    std::string out;
    for (std::size_t k = 0; k < cycle.size(); ++k)
        out += (k ? " -> " : "") + labels[cycle[k]];
    return out;
}

} // namespace

Poset::Poset(std::vector<std::string> labels, std::vector<bool> leq)
    : labels_(std::move(labels)), leq_(std::move(leq))
{
    const std::size_t n = labels_.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!less(i, j))
                continue;
            bool is_cover = true;
            for (std::size_t k = 0; k < n && is_cover; ++k)
                if (less(i, k) && less(k, j))
                    is_cover = false;
            if (is_cover)
                covers_.emplace_back(i, j);
        }
}

Poset Poset::from_relations(std::vector<std::string> labels, const std::vector<Relation>& relations)
{
    const std::size_t n = labels.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
        if (!index.emplace(labels[i], i).second)
            throw ValidationError("duplicate element label '" + labels[i] + "'");

    std::vector<std::vector<std::size_t>> succ(n);
    std::vector<bool> rel(n * n, false);
    for (std::size_t i = 0; i < n; ++i)
        rel[i * n + i] = true;
    for (const auto& [a, b] : relations) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end() || ib == index.end())
            throw ValidationError("relation (" + a + ", " + b + ") names an unknown element");
        if (ia->second == ib->second)
            continue;
        succ[ia->second].push_back(ib->second);
        rel[ia->second * n + ib->second] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (rel[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (rel[k * n + j])
                        rel[i * n + j] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rel[i * n + j] && rel[j * n + i])
                throw ValidationError("relations contain a cycle: " + describe_cycle(labels, succ));

    // Stable topological sort: repeatedly take the earliest element with no
    // unplaced strict predecessor.
    std::vector<std::size_t> order;
    std::vector<bool> placed(n, false);
    while (order.size() < n) {
        for (std::size_t v = 0; v < n; ++v) {
            if (placed[v])
                continue;
            bool ready = true;
            for (std::size_t u = 0; u < n && ready; ++u)
                if (u != v && !placed[u] && rel[u * n + v])
                    ready = false;
            if (ready) {
                placed[v] = true;
                order.push_back(v);
                break;
            }
        }
    }
    std::vector<std::string> sorted_labels(n);
    std::vector<bool> leq(n * n, false);
    for (std::size_t a = 0; a < n; ++a) {
        sorted_labels[a] = labels[order[a]];
        for (std::size_t b = 0; b < n; ++b)
            leq[a * n + b] = rel[order[a] * n + order[b]];
    }
    return Poset(std::move(sorted_labels), std::move(leq));
}

Poset Poset::chain(std::size_t n)
{
    std::vector<std::string> labels;
    std::vector<Relation> rel;
    for (std::size_t i = 1; i <= n; ++i) {
        labels.push_back(std::to_string(i));
        if (i > 1)
            rel.emplace_back(std::to_string(i - 1), std::to_string(i));
    }
    return from_relations(labels, rel);
}

Poset Poset::antichain(std::size_t n)
{
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i)
        labels.push_back(std::to_string(i));
    return from_relations(labels, {});
}

std::optional<std::size_t> Poset::index_of(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Poset::require_index(const std::string& label) const
{
    auto i = index_of(label);
    if (!i)
        throw ValidationError("unknown poset element '" + label + "'");
    return *i;
}

std::optional<std::size_t> Poset::cover_index(std::size_t i, std::size_t j) const
{
    auto it = std::lower_bound(covers_.begin(), covers_.end(), std::make_pair(i, j));
    if (it == covers_.end() || *it != std::make_pair(i, j))
        return std::nullopt;
    return static_cast<std::size_t>(it - covers_.begin());
}

std::vector<std::size_t> Poset::chain_between(std::size_t i, std::size_t j) const
{
    if (!leq(i, j))
        throw ValidationError(label(i) + " is not below " + label(j));
    std::vector<std::size_t> path;
    std::size_t cur = i;
    while (cur != j) {
        std::size_t next = size();
        std::size_t cidx = 0;
        for (std::size_t c = 0; c < covers_.size(); ++c)
            if (covers_[c].first == cur && leq(covers_[c].second, j)) {
                next = covers_[c].second;
                cidx = c;
                break;
            }
        path.push_back(cidx);
        cur = next;
    }
    return path;
}

bool Poset::is_maximal(std::size_t i) const
{
    for (std::size_t j = 0; j < size(); ++j)
        if (less(i, j))
            return false;
    return true;
}

std::vector<std::size_t> Poset::max_elements() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (is_maximal(i))
            out.push_back(i);
    return out;
}

std::vector<std::size_t> Poset::lower_elements() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (!is_maximal(i))
            out.push_back(i);
    return out;
}

Poset Poset::restrict_to(const std::vector<std::size_t>& unsorted) const
{
    auto elements = unsorted;
    std::sort(elements.begin(), elements.end());
    const std::size_t m = elements.size();
    std::vector<std::string> labels;
    std::vector<bool> leq(m * m, false);
    for (std::size_t a = 0; a < m; ++a) {
        labels.push_back(label(elements[a]));
        for (std::size_t b = 0; b < m; ++b)
            leq[a * m + b] = this->leq(elements[a], elements[b]);
    }
    return Poset(std::move(labels), std::move(leq));
}

Bipartition bipartition(const Poset& p) { return {p.lower_elements(), p.max_elements()}; }

std::vector<Poset::Relation> cover_labels(const Poset& p)
{
    std::vector<Poset::Relation> out;
    for (auto [i, j] : p.covers())
        out.emplace_back(p.label(i), p.label(j));
    return out;
}

} // namespace prinhall
