#pragma once

// First homology of the smooth locus and of the orbifold (S, Delta).

#include "seifert5/abgroup.hpp"
#include "seifert5/orbsurface.hpp"

#include <optional>

namespace seifert5 {

struct SmoothLocusCertificate {
    bool trivial = false;
    Rational pic_determinant;  // |det| of the pairing on pic_basis
    Integer local_order_product;
};

/// Requires the surface to carry an H1(S) = 0 attestation (PreconditionError otherwise).
SmoothLocusCertificate h1_smooth_locus_trivial(const OrbSurface& s);

struct OrbH1Report {
    AbGroup group;
    IntMatrix presentation;  // columns: one generator per branch curve
    bool prerequisites_met = false;
};

OrbH1Report h1_orb(const OrbSurface& s, const BranchDivisor& delta);

/// Arithmetic test on Picard-rank-one surfaces: pairwise coprime multiplicities,
/// each coprime to the degree of its curve.
bool rho1_h1orb_zero(const OrbSurface& s, const BranchDivisor& delta);

/// Degree of a curve on a rank-one surface, measured in the Weil generator.
Integer weil_degree(const OrbSurface& s, const BranchCurve& c);

/// True when some combination sum a_i D_i over curves with p | m_i, not all a_i
/// divisible by p, lies in p * Weil(S).
bool p_cover_obstruction(const OrbSurface& s, const BranchDivisor& delta, const Integer& p);

struct CyVerdict {
    bool consistent = false;
    std::optional<Integer> obstructing_prime;
};

/// Input must satisfy K + Delta == 0 numerically.
CyVerdict cy_branch_check(const OrbSurface& s, const BranchDivisor& delta);

}  // namespace seifert5
