#pragma once

#include "seifert5/orbsurface.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace seifert5 {

struct CatalogEntry {
    OrbSurface surface;
    // distinguished curves; multiplicity is a placeholder until a branch is chosen
    std::vector<BranchCurve> curves;

    const BranchCurve& curve(std::string_view id) const;
    /// Copy of a distinguished curve carrying multiplicity m.
    BranchCurve branch(std::string_view id, const Integer& m) const;
};

/// Names: P2, Q, P123, S5, P125, P1xP1, F1..F8 (cones P(1,1,n)), Hirz0..Hirz5 (ruled).
CatalogEntry catalog(std::string_view name);
std::vector<std::string> catalog_names();

/// The elliptic curve used by the main series over each of P2, Q, P123, S5.
std::string main_series_curve(std::string_view base);

}  // namespace seifert5
