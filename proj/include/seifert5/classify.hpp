#pragma once

#include "seifert5/abgroup.hpp"
#include "seifert5/catalog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seifert5 {

enum class DelPezzoBase { P123, Q, P2, P1xP1, S5 };

std::string to_string(DelPezzoBase b);
int k_squared(DelPezzoBase b);
int base_picard_number(DelPezzoBase b);
std::vector<std::string> base_singularities(DelPezzoBase b);

/// Del Pezzo surface B_{m1...mk} S with cyclic Du Val singularities: k blow-ups of
/// types m_i at points of a smooth anticanonical curve.
struct DeformationType {
    DelPezzoBase base;
    std::vector<int> blowups;  // non-increasing
    int k_squared_remaining = 0;
    std::vector<std::string> singularity_profile;  // A_n labels, sorted
    int picard_number = 0;
    bool exceptional = false;  // one of the four entries outside the main families

    std::string name() const;
    int singularity_minus_picard() const { return static_cast<int>(singularity_profile.size()) - picard_number; }
    bool operator==(const DeformationType&) const = default;
};

DeformationType make_deformation_type(DelPezzoBase base, std::vector<int> blowups, bool exceptional = false);

/// The 93 types, ordered by family (P123, Q, P2, P1xP1, exceptional) then blow-up list.
std::vector<DeformationType> enumerate_del_pezzo();

struct TorsionVerdict {
    bool allowed = false;
    int clause = 0;  // 1: (Z/m)^2, 2: (Z/5)^4 or (Z/4)^4, 3: (Z/3)^{4,6,8}, 4: (Z/2)^{2n}
    std::string rule;
};

/// Throws PreconditionError for groups with a free part.
TorsionVerdict torsion_allowed(const AbGroup& t);

/// Largest genus a curve with coefficient a0 can have; nullopt: no bound from this rule.
/// Throws PreconditionError outside [1/2, 1).
std::optional<int> genus_bound(const Rational& a0);

/// Invariant factors of the form A + A.
bool is_double(const AbGroup& t);

/// Connected-sum description via Smale's classification; M_a has H_2 = Z/a + Z/a.
std::string identify_manifold(const AbGroup& h2, bool w2_zero, bool simply_connected);

struct BoundaryExample {
    std::string label;
    std::string surface;
    std::vector<std::pair<std::string, Integer>> branch;  // (curve id, multiplicity)
    std::string m_range;
    std::vector<Integer> genera;
    std::optional<AbGroup> torsion;     // H_2 torsion of the H1-trivial bundle, when one exists
    bool log_del_pezzo = false;         // as claimed
    std::optional<Integer> obstruction_prime;  // claimed obstruction to orbifold simple connectivity
    bool derivable = true;  // false: recorded only, the surface is outside the lattice catalog
};

std::vector<BoundaryExample> nonrational_boundary_catalog();

BranchDivisor branch_of(const BoundaryExample& ex, const CatalogEntry& e);

struct BoundaryCheck {
    bool log_del_pezzo_ok = false;
    std::optional<bool> torsion_ok;
    std::optional<bool> obstruction_ok;
    std::string detail;

    bool ok() const { return log_del_pezzo_ok && torsion_ok.value_or(true) && obstruction_ok.value_or(true); }
};

/// Re-derives the claims of an example from the lattice data.
BoundaryCheck verify_boundary_example(const BoundaryExample& ex);

}  // namespace seifert5
