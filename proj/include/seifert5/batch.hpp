#pragma once

// Batch kernels over independent inputs. Each has a serial reference and an
// OpenMP version that must produce identical output.

#include "seifert5/abgroup.hpp"
#include "seifert5/seifert.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seifert5 {

struct Presentation {
    std::size_t generators = 0;
    IntMatrix relations;
};

struct GroupResult {
    std::optional<AbGroup> group;
    std::string error;

    bool operator==(const GroupResult&) const = default;
};

std::vector<GroupResult> groups_from_presentations_serial(const std::vector<Presentation>& in);
std::vector<GroupResult> groups_from_presentations_parallel(const std::vector<Presentation>& in);

struct MainSeriesRow {
    long m = 0;
    std::string base;
    bool admitted = false;     // the rational homology sphere conditions hold
    bool constructed = false;  // construction succeeded and all its checks passed
    std::optional<CohomologyTable> table;
    std::string error;

    bool operator==(const MainSeriesRow&) const = default;
};

/// Every m in [m_lo, m_hi] over P2, Q, P123, S5, in that order.
std::vector<MainSeriesRow> main_series_sweep_serial(long m_lo, long m_hi);
std::vector<MainSeriesRow> main_series_sweep_parallel(long m_lo, long m_hi);

}  // namespace seifert5
