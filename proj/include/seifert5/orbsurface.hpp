#pragma once

// Base orbifold surfaces (S, Delta): Weil lattice with rational intersection
// pairing, cyclic quotient singular points, and branch curves.

#include "seifert5/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seifert5 {

/// Cyclic quotient singularity. `restriction[k]` is the image of the k-th Weil
/// basis element in the local class group Z/local_order.
struct SingularPoint {
    std::string id;
    Integer local_order;
    IntVector restriction;

    bool operator==(const SingularPoint&) const = default;
};

/// One component D_i of the branch divisor, carrying coefficient 1 - 1/multiplicity.
struct BranchCurve {
    std::string id;
    IntVector degree;  // class [D_i] in Weil coordinates
    Integer genus = 0;
    Integer multiplicity = 2;
    std::vector<std::string> through_points;  // singular point ids on the curve
    // attested, not derivable from lattice data
    bool orbismooth = false;
    bool transversal = false;

    bool passes_through(const std::string& point_id) const;
    bool operator==(const BranchCurve&) const = default;
};

using BranchDivisor = std::vector<BranchCurve>;

/// A claim that cannot be derived from the lattice model, with where it comes from.
struct Attestation {
    bool holds = false;
    std::string provenance;

    bool operator==(const Attestation&) const = default;
};

struct OrbSurface {
    std::string name;
    RatMatrix pairing;     // s x s intersection form on Weil (x) Q
    IntVector canonical;   // K_S
    std::vector<IntVector> pic_basis;
    std::vector<SingularPoint> singular_points;
    std::vector<RatVector> ample_cone_tests;
    std::optional<Attestation> h1_zero;  // H_1(S, Z) = 0

    std::size_t weil_rank() const noexcept { return pairing.size(); }
    bool h1_zero_attested() const noexcept { return h1_zero && h1_zero->holds; }
    const SingularPoint* find_point(const std::string& id) const;

    bool operator==(const OrbSurface&) const = default;
};

/// Residue of a Weil class under the restriction map of `p`, in [0, local_order).
Integer restrict_to(const SingularPoint& p, std::span<const Integer> weil_class);

/// Every broken invariant of the surface model; empty iff valid.
std::vector<std::string> validate(const OrbSurface& s);

/// Consistency of branch curves with the surface (shapes, multiplicities,
/// Cartier-ness away from the points a curve passes through).
std::vector<std::string> validate_branch(const OrbSurface& s, const BranchDivisor& delta);

/// Throws ValidationError listing all violations of validate + validate_branch.
void require_valid(const OrbSurface& s, const BranchDivisor& delta = {});

/// A point of S: a singular point (by id) or a smooth point lying on the listed curves.
struct PointRef {
    std::optional<std::string> singular_id;
    std::vector<std::string> incident_curves;  // only consulted at smooth points

    static PointRef singular(std::string id) { return {std::move(id), {}}; }
    static PointRef smooth(std::vector<std::string> curves) { return {std::nullopt, std::move(curves)}; }
};

struct LocalMultiplicities {
    Integer m_delta;    // lcm of incident branch multiplicities
    Integer m_x;        // local class group order, 1 at smooth points
    Integer m_x_delta;  // order of the local uniformizing group
};

/// Throws PreconditionError("not locally cyclic") on non-coprime incident multiplicities
/// or more than two incident curves.
LocalMultiplicities local_multiplicities(const OrbSurface& s, const BranchDivisor& delta, const PointRef& x);

struct GlobalMultiplicities {
    Integer m_delta;
    Integer m_x;
    Integer m_x_delta;
};

GlobalMultiplicities global_multiplicities(const OrbSurface& s, const BranchDivisor& delta);

/// Pairs of distinct branch curves that meet somewhere off the singular points
/// (positive intersection number, no common singular point).
std::vector<std::pair<std::size_t, std::size_t>> smooth_crossings(const OrbSurface& s, const BranchDivisor& delta);

/// K_S + sum (1 - 1/m_i) D_i
RatVector log_canonical_class(const OrbSurface& s, const BranchDivisor& delta);

struct LogDelPezzoWitness {
    bool is_log_del_pezzo = false;
    RatVector anti_log_canonical;  // -(K + Delta)
    std::vector<Rational> pairings; // against each ample_cone_tests entry
};

/// Throws PreconditionError when the surface carries no ample-cone test classes.
LogDelPezzoWitness is_log_del_pezzo(const OrbSurface& s, const BranchDivisor& delta);

/// 1 + (C^2 + C.K)/2; the arithmetic genus of a curve on the smooth locus.
Rational adjunction_genus(const OrbSurface& s, std::span<const Integer> curve);

}  // namespace seifert5
