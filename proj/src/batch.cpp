#include "seifert5/batch.hpp"
#include "seifert5/catalog.hpp"
#include "seifert5/rhs.hpp"

#include <array>

namespace seifert5 {

namespace {

GroupResult one_group(const Presentation& p) {
    GroupResult r;
    try {
        r.group = group_from_presentation(p.generators, p.relations);
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

constexpr std::array<const char*, 4> kBases{"P2", "Q", "P123", "S5"};

MainSeriesRow one_row(long m, const char* base) {
    MainSeriesRow row;
    row.m = m;
    row.base = base;
    try {
        const CatalogEntry e = catalog(base);
        const BranchDivisor delta{e.branch(main_series_curve(base), Integer(m))};
        row.admitted = check_rhs_conditions(e.surface, delta).all();
        if (row.admitted) {
            row.table = construct(e.surface, delta).table;
            row.constructed = true;
        }
    } catch (const std::exception& ex) {
        row.error = ex.what();
    }
    return row;
}

}  // namespace

std::vector<GroupResult> groups_from_presentations_serial(const std::vector<Presentation>& in) {
    std::vector<GroupResult> out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = one_group(in[i]);
    return out;
}

std::vector<GroupResult> groups_from_presentations_parallel(const std::vector<Presentation>& in) {
    std::vector<GroupResult> out(in.size());
    const long n = static_cast<long>(in.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) out[i] = one_group(in[i]);
    return out;
}

std::vector<MainSeriesRow> main_series_sweep_serial(long m_lo, long m_hi) {
    std::vector<MainSeriesRow> out;
    for (long m = m_lo; m <= m_hi; ++m)
        for (const char* b : kBases) out.push_back(one_row(m, b));
    return out;
}

std::vector<MainSeriesRow> main_series_sweep_parallel(long m_lo, long m_hi) {
    if (m_hi < m_lo) return {};
    const long count = (m_hi - m_lo + 1) * static_cast<long>(kBases.size());
    std::vector<MainSeriesRow> out(count);
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < count; ++i) out[i] = one_row(m_lo + i / 4, kBases[i % 4]);
    return out;
}

}  // namespace seifert5
