#pragma once

#include "prinhall/errors.hpp"
#include "prinhall/intpoly.hpp"
#include "prinhall/modspec.hpp"

#include <json.hpp>

namespace prinhall {

/// A file could not be read, written or parsed as JSON.
class IoError : public Error {
public:
    using Error::Error;
};

nlohmann::json read_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);

/// {"elements": [...], "relations": [["a", "b"], ...]}
PosetPtr parse_poset(const nlohmann::json& j);
nlohmann::json poset_to_json(const Poset& p);

/// {"dims": {"elt": n}, "maps": {"i->j": [[...]]}}: maps on cover pairs
/// only, dims[j] rows of dims[i] entries. Missing dims are 0, missing maps zero.
ModuleSpec parse_spec(const nlohmann::json& j, const PosetPtr& poset);
nlohmann::json spec_to_json(const ModuleSpec& s);
nlohmann::json rep_to_json(const Rep& x);

nlohmann::json poly_to_json(const IntPoly& f);

/// "2,3,5" -> {2, 3, 5}.
std::vector<std::uint32_t> parse_primes(const std::string& s);
/// "2,1" -> DimVector, one entry per poset element.
DimVector parse_dims(const std::string& s);

} // namespace prinhall
