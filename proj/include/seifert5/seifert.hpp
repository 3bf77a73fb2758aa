#pragma once

// Seifert circle bundles over (S, Delta) given by classifying data (B, b_i),
// their Chern class, smoothness, H_1 and integral cohomology.

#include "seifert5/abgroup.hpp"
#include "seifert5/orbsurface.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace seifert5 {

struct SeifertData {
    OrbSurface base;
    BranchDivisor delta;
    IntVector B;  // Weil coordinates
    IntVector b;  // b[i] belongs to delta[i]; 0 <= b_i < m_i, gcd(b_i, m_i) = 1

    bool operator==(const SeifertData&) const = default;
};

/// Throws ValidationError on shape mismatches or b_i outside the unit range.
void validate_seifert(const SeifertData& sd);

struct PointResidue {
    std::string point;  // singular point id
    Integer local_order;
    Integer m_x_delta;  // M(x, Delta)
    Integer residue;    // restriction of M(x, Delta) * c1, in [0, local_order)
};

struct ChernData {
    RatVector c1;
    Integer m_delta;
    Integer m_x_delta;        // global M(X, Delta)
    IntVector m_delta_c1;     // M(Delta) * c1 in Weil
    std::vector<PointResidue> residues;
    IntVector m_x_delta_c1_pic;  // M(X, Delta) * c1 in pic_basis coordinates
};

/// Throws ConsistencyError when M(X, Delta) * c1 misses the Pic lattice.
ChernData chern_class(const SeifertData& sd);

struct SmoothnessCheck {
    std::string point;  // singular point id, or "D_i x D_j" for a crossing of branch curves
    Integer local_order;
    Integer residue;
    bool smooth = false;
};

struct SmoothnessReport {
    bool smooth = true;
    std::vector<SmoothnessCheck> checks;
};

SmoothnessReport is_smooth(const SeifertData& sd);

/// Presentation of H_1 of the total space: generators (k, g_1..g_n).
IntMatrix h1_presentation(const SeifertData& sd);
AbGroup h1_total_space(const SeifertData& sd);

/// d(Y): content of M(Delta) * c1. Throws PreconditionError when c1 = 0.
Integer fiber_order_bound(const SeifertData& sd);

struct CohomologyTable {
    std::array<AbGroup, 6> H;
    Integer d;
    std::size_t s = 0;

    bool operator==(const CohomologyTable&) const = default;
};

struct CohomologyResult {
    CohomologyTable table;
    Integer d_w;
    Integer d_p;
};

CohomologyResult cohomology(const SeifertData& sd);

struct W2Report {
    bool proportional = false;  // K + Delta is a rational multiple of c1
    bool w2_zero = false;
};

W2Report w2_report(const SeifertData& sd);

/// The same bundle with the opposite orientation: c1 -> -c1.
SeifertData flip_orientation(const SeifertData& sd);

/// Searches classifying data with B in [-radius, radius]^s and unit b_i for a smooth bundle
/// with trivial H_1. Prefers c1 a positive multiple of -(K + Delta).
std::optional<SeifertData> find_h1_trivial_bundle(const OrbSurface& s, const BranchDivisor& delta, long radius = 8);

}  // namespace seifert5
