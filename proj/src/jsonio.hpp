#pragma once

#include <json.hpp>

#include "bump.hpp"
#include "macdonald.hpp"
#include "perm.hpp"
#include "pipedream.hpp"
#include "poly.hpp"
#include "report.hpp"
#include "transition.hpp"

namespace rw {

using nlohmann::json;

// Wire formats: permutations and words are plain arrays, pipe dreams are
// {"r": [...], "j": [...]}, polynomials sorted arrays of {coeff, exponents}.

json to_json(const Perm& pi);
Perm perm_from_json(const json& j);

json to_json(const Word& w);
Word word_from_json(const json& j);

json to_json(const PipeDream& d);
PipeDream pipedream_from_json(const json& j);

json to_json(const Polynomial& f);
json to_json(const QPoly& f);

json to_json(const BumpResult& r);
json to_json(const TransitionChain& chain);
TransitionChain chain_from_json(const json& j);

json to_json(const Report& rep);

}  // namespace rw
