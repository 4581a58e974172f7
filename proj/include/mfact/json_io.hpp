#pragma once

#include <json.hpp>

#include "mfact/chain.hpp"
#include "mfact/parking.hpp"
#include "mfact/surjection.hpp"

namespace mfact {

// {"n": 8, "steps": [[3,8],[5,7],[1,8],[3,7]]}
nlohmann::json to_json(const Chain& c);
Chain chain_from_json(const nlohmann::json& j);

// {"n": 8, "a": [1,3,7,1], "b": [1,3,5,6,7]}
nlohmann::json to_json(const PairAB& p);
PairAB pair_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ParkingOutcome& o);
nlohmann::json to_json(const ParkingTrace& t);
nlohmann::json to_json(const ValidityReport& r);
nlohmann::json to_json(const VerifyReport& r);

/// Big integers become JSON numbers when they fit in 64 bits, strings otherwise.
nlohmann::json to_json(const BigInt& v);

}  // namespace mfact
