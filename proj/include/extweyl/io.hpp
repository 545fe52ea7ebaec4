#pragma once

#include "extweyl/ext_root.hpp"
#include "extweyl/weyl.hpp"

#include <json.hpp>

namespace extweyl {

using nlohmann::json;

// Parsers throw std::invalid_argument with a readable message on malformed input.

json to_json(const FiniteRootSystem& rs);
json to_json(const SSet& s);
json to_json(const ExtRootSystem& ers);
json to_json(const ReflectionLabel& t);
json to_json(const Word& w);
json to_json(const OrbitClass& c);
json to_json(const WElement& e);
json to_json(const Decision& d);
json to_json(const Report& r);

IVec ivec_from_json(const json& j);
IMat imat_from_json(const json& j);
SSet sset_from_json(const json& j, int n);
ExtRootSystem ext_root_from_json(const json& j);
Word word_from_json(const json& j);

}  // namespace extweyl
