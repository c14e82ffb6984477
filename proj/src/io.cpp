#include "prinhall/io.hpp"

#include "prinhall/errors.hpp"

#include <fstream>
#include <sstream>

namespace prinhall {

using nlohmann::json;

json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw IoError(path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out || !(out << text))
        throw IoError("cannot write " + path);
}

PosetPtr parse_poset(const json& j)
{
    try {
        std::vector<std::string> labels = j.at("elements").get<std::vector<std::string>>();
        std::vector<Poset::Relation> rel;
        if (j.contains("relations"))
            for (const auto& r : j.at("relations")) {
                if (!r.is_array() || r.size() != 2)
                    throw ValidationError("poset relation must be a pair, got " + r.dump());
                rel.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
            }
        return std::make_shared<const Poset>(Poset::from_relations(std::move(labels), rel));
    } catch (const json::exception& e) {
        throw ValidationError(std::string("poset: ") + e.what());
    }
}

json poset_to_json(const Poset& p)
{
    json rel = json::array();
    for (const auto& [a, b] : cover_labels(p))
        rel.push_back({a, b});
    return {{"elements", p.labels()}, {"relations", rel}};
}

ModuleSpec parse_spec(const json& j, const PosetPtr& poset)
{
    ModuleSpec s{poset, DimVector(poset->size(), 0), {}};
    try {
        if (j.contains("dims"))
            for (const auto& [label, n] : j.at("dims").items()) {
                const auto v = n.get<long long>();
                if (v < 0)
                    throw ValidationError("spec: negative dimension at " + label);
                s.dims[poset->require_index(label)] = static_cast<std::size_t>(v);
            }
        const auto& covers = poset->covers();
        for (auto [i, jj] : covers)
            s.maps.emplace_back(s.dims[jj], std::vector<std::int64_t>(s.dims[i], 0));
        if (j.contains("maps"))
            for (const auto& [key, m] : j.at("maps").items()) {
                const auto arrow = key.find("->");
                if (arrow == std::string::npos)
                    throw ValidationError("spec: map key '" + key + "' is not of the form i->j");
                const auto a = poset->require_index(key.substr(0, arrow));
                const auto b = poset->require_index(key.substr(arrow + 2));
                auto c = poset->cover_index(a, b);
                if (!c)
                    throw ValidationError("spec: " + key + " is not a cover pair");
                auto rows = m.get<IntMatrix>();
                // A map between zero spaces may be written as [].
                if (rows.empty() && s.dims[b] == 0)
                    continue;
                if (rows.size() != s.dims[b])
                    throw ValidationError("spec: map " + key + " has " + std::to_string(rows.size()) +
                                          " rows, expected " + std::to_string(s.dims[b]));
                for (const auto& r : rows)
                    if (r.size() != s.dims[a])
                        throw ValidationError("spec: map " + key + " has a row of length " +
                                              std::to_string(r.size()) + ", expected " + std::to_string(s.dims[a]));
                s.maps[*c] = std::move(rows);
            }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("spec: ") + e.what());
    }
    return s;
}

json spec_to_json(const ModuleSpec& s)
{
    const auto& p = *s.poset;
    json dims = json::object(), maps = json::object();
    for (std::size_t i = 0; i < p.size(); ++i)
        dims[p.label(i)] = s.dims[i];
    for (std::size_t c = 0; c < p.covers().size(); ++c) {
        auto [i, j] = p.covers()[c];
        if (s.dims[i] && s.dims[j])
            maps[p.label(i) + "->" + p.label(j)] = s.maps[c];
    }
    return {{"dims", dims}, {"maps", maps}};
}

json rep_to_json(const Rep& x)
{
    json j = spec_to_json(ModuleSpec::lift(x));
    j["p"] = x.field().p();
    return j;
}

json poly_to_json(const IntPoly& f)
{
    json a = json::array();
    for (const auto& c : f.coeffs())
        a.push_back(c.fits_slong_p() ? json(c.get_si()) : json(c.get_str()));
    return a;
}

namespace {

std::vector<unsigned long long> parse_list(const std::string& s, const std::string& what)
{
    std::vector<unsigned long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw ValidationError(what + ": '" + item + "' is not a non-negative integer");
        out.push_back(v);
    }
    if (out.empty())
        throw ValidationError(what + ": empty list");
    return out;
}

} // namespace

std::vector<std::uint32_t> parse_primes(const std::string& s)
{
    std::vector<std::uint32_t> out;
    for (auto v : parse_list(s, "primes")) {
        if (v > 1000000 || !is_prime(v))
            throw ValidationError("primes: " + std::to_string(v) + " is not a supported prime");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

DimVector parse_dims(const std::string& s)
{
    DimVector d;
    for (auto v : parse_list(s, "dimension vector"))
        d.push_back(static_cast<std::size_t>(v));
    return d;
}

} // namespace prinhall
