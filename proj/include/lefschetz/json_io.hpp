#pragma once

#include <json.hpp>

#include "lefschetz/engine.hpp"
#include "lefschetz/ideal.hpp"
#include "lefschetz/search.hpp"
#include "lefschetz/sequences.hpp"

namespace lefschetz {

/// Key-order-preserving JSON so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

/// {"n": 4, "gens": [[2,0,0,0], ...]} with exponent rows in generator order.
Json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& document);

/// Integer array; entries that overflow 64 bits become decimal strings.
Json to_json(const IntSequence& s);

Json to_json(const ShapeReport& report);
Json to_json(const MapCheck& map);
Json to_json(const RankWitness& witness);
Json to_json(const LefschetzReport& report);
Json to_json(const SearchCertificate& certificate);
Json to_json(const FixtureReport& report);

}  // namespace lefschetz
