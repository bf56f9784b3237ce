#pragma once

#include "json.hpp"

#include "inducibility/bounds.hpp"
#include "inducibility/constructions.hpp"
#include "inducibility/exact_search.hpp"
#include "inducibility/frac_independence.hpp"

namespace inducibility {

// Keys serialize in sorted order, which keeps reports byte-stable.
using Json = nlohmann::json;

// Floats carry 12 significant digits; rationals are "p/q" strings.
Json float_json(double value);

Json to_json(const SearchResult& r);
SearchResult search_result_from_json(const Json& j);

Json to_json(const BoundValue& b);
Json to_json(const BlowupSpec& spec);
Json to_json(const Construction& c);
Json to_json(const OptimalWeighting& w, int n);
Json to_json(const SandwichReport& r);

}  // namespace inducibility
