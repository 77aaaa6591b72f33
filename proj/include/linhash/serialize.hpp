#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "linhash/adversarial.hpp"
#include "linhash/effective_modulus.hpp"
#include "linhash/families.hpp"
#include "linhash/maxload.hpp"
#include "linhash/twobin.hpp"

namespace linhash {

using Json = nlohmann::ordered_json;

/// Big integers render as JSON numbers when they fit in int64, else as
/// decimal strings.
Json json_big(const BigInt& v);

Json to_json(const FamilyConfig& cfg);
FamilyConfig family_config_from_json(const Json& j);

Json to_json(const SetRecipe& recipe);
SetRecipe set_recipe_from_json(const Json& j);

Json to_json(const MaxloadDistribution& dist);
void write_csv(const MaxloadDistribution& dist, std::ostream& out);

Json to_json(const FDistribution& dist);
void write_csv(const FDistribution& dist, std::ostream& out);

Json to_json(const OverlapReport& report);
void write_csv(const OverlapReport& report, std::ostream& out);

}  // namespace linhash
