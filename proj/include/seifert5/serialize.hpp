#pragma once

// JSON encoding of surfaces, branch divisors, bundles and reports.
// Integers are JSON numbers when they fit in 64 bits and decimal strings otherwise;
// rationals are {"num": ..., "den": ...}.

#include "seifert5/classify.hpp"
#include "seifert5/ke.hpp"
#include "seifert5/rhs.hpp"
#include "seifert5/seifert.hpp"
#include "seifert5/topology.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace seifert5 {

using json = nlohmann::json;

json to_json(const Integer& z);
json to_json(const Rational& q);
json to_json(const Attestation& a);
json to_json(const SingularPoint& p);
json to_json(const BranchCurve& c);
json to_json(const OrbSurface& s);
json to_json(const AbGroup& g);
json to_json(const CohomologyTable& t);
json to_json(const SeifertData& sd);
json to_json(const RhsConstruction& c);
json to_json(const KECertificate& c);
json to_json(const DeformationType& t);
json to_json(const TorsionVerdict& v);
json to_json(const OrbH1Report& r);

// Decoders report every schema problem with its field path (ValidationError).
Integer integer_from_json(const json& j, const std::string& path);
Rational rational_from_json(const json& j, const std::string& path);
OrbSurface surface_from_json(const json& j, const std::string& path = "surface");
BranchCurve curve_from_json(const json& j, const std::string& path);
BranchDivisor branch_from_json(const json& j, const std::string& path = "branch");
AbGroup group_from_json(const json& j, const std::string& path = "group");
CohomologyTable cohomology_from_json(const json& j, const std::string& path = "cohomology");
SeifertData seifert_from_json(const json& j, const std::string& path = "bundle");

/// A job file: {"surface": <object or catalog name>, "branch": [...], "B": [...], "b": {id: n},
/// "pi1_orb": {"holds": bool, "provenance": str}}. Branch entries are full curve objects or
/// {"catalog": <curve id>, "multiplicity": m} when the surface is a catalog name.
struct Job {
    OrbSurface surface;
    BranchDivisor branch;
    std::optional<IntVector> B;
    std::optional<IntVector> b;
    std::optional<Attestation> pi1_orb;
};

Job job_from_json(const json& j);

/// Expands "id:m=5" shorthands against a catalog surface.
BranchDivisor branch_from_shorthand(const CatalogEntry& e, const std::vector<std::string>& specs);

}  // namespace seifert5
