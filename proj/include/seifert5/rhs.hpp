#pragma once

// Rational homology 5-spheres as Seifert bundles over Picard-rank-one surfaces:
// admissibility, explicit construction of the classifying data, and S^5 recognition.

#include "seifert5/seifert.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seifert5 {

struct RhsConditions {
    bool rank_one = false;      // Weil(S) = Z, H1 of the smooth locus trivial
    bool curves_ok = false;     // orbismooth and pairwise transversal (attested)
    bool coprimality = false;   // m_i pairwise coprime, gcd(m_i, deg D_i) = 1
    std::vector<std::string> failures;

    bool all() const noexcept { return rank_one && curves_ok && coprimality; }
};

RhsConditions check_rhs_conditions(const OrbSurface& s, const BranchDivisor& delta);

struct Check {
    std::string name;
    std::string value;
    bool passed = false;

    bool operator==(const Check&) const = default;
};

enum class SphereVerdict { yes, no, yes_modulo_pi1 };
std::string to_string(SphereVerdict v);

struct RhsConstruction {
    SeifertData data;
    int orientation = +1;  // +1: c1 = l/M
    Integer M;
    AbGroup torsion_profile;
    CohomologyTable table;
    SphereVerdict sphere = SphereVerdict::no;
    bool is_S5 = false;
    std::vector<Check> certificates;
};

/// Abelian-level triviality of the orbifold fundamental group is computed; the
/// non-abelian statement is only available for a few bases and is attested here.
std::optional<Attestation> pi1_orb_attestation(const OrbSurface& s, const BranchDivisor& delta);

/// Throws PreconditionError when a condition fails; ConsistencyError when a
/// post-condition of the construction does not hold.
RhsConstruction construct(const OrbSurface& s, const BranchDivisor& delta,
                          const std::optional<Attestation>& pi1 = std::nullopt);

SphereVerdict is_sphere(const OrbSurface& s, const BranchDivisor& delta, const RhsConstruction& c,
                        const std::optional<Attestation>& pi1);

/// Sum of (Z/m_i)^(2 g_i).
AbGroup torsion_profile(const OrbSurface& s, const BranchDivisor& delta);

struct StructureCount {
    int count = 0;
    std::vector<std::string> bases;
    bool below_range = false;  // m < 12: computed, but outside the range where the list is complete
};

StructureCount count_structures_for_m(const Integer& m);

}  // namespace seifert5
