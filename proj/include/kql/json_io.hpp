#pragma once

// JSON schemas (all versioned "kql/1"). Rationals serialize as "p/q"
// strings, complex numbers as [re, im] pairs. Objects serialize with keys in
// sorted order, so outputs are byte-stable.

#include <variant>

#include <json.hpp>

#include "kql/descent.hpp"
#include "kql/ideal.hpp"
#include "kql/monad.hpp"
#include "kql/support.hpp"

namespace kql {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "kql/1";

using AnyModule = std::variant<QuiverModule<Rat>, QuiverModule<Cx>>;
using AnyADHM = std::variant<ADHMDatum<Rat>, ADHMDatum<Cx>>;

Json toJson(const GroupSpec& g);
GroupSpec groupFromJson(const Json& j);

Json toJson(const CharacterTable& ct);
Json toJson(const McKayQuiver& q);
Json toJson(const FramedQuiver& q);

Json toJson(const QuiverModule<Rat>& m);
Json toJson(const QuiverModule<Cx>& m);
AnyModule moduleFromJson(const Json& j);

Json toJson(const ADHMDatum<Rat>& d);
Json toJson(const ADHMDatum<Cx>& d);
AnyADHM adhmFromJson(const Json& j);

Json toJson(const StabilityParameter& t);
StabilityParameter thetaFromJson(const Json& j);

Json toJson(const MonadData<Rat>& md);
Json toJson(const MonadData<Cx>& md);

Json toJson(const EquivariantIdeal& I);
EquivariantIdeal idealFromJson(const Json& j);

Json toJson(const InvariantIdeal& J);

Json toJson(const SupportCycle& c);

// ADHM data from either encoding of a module file.
AnyADHM adhmFromModuleOrAdhmJson(const Json& j);

}  // namespace kql
