// One line per acceptance criterion; exit status 0 iff all pass.

#include "oracles.hpp"
#include "seifert5/classify.hpp"
#include "seifert5/ke.hpp"
#include "seifert5/rhs.hpp"
#include "seifert5/topology.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

using namespace seifert5;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        if (ok) note << what;
        ok = false;
    }
};

struct Criterion {
    int id;
    const char* title;
    double budget_s;  // 0: no runtime bound
    std::function<void(Outcome&)> run;
};

// ---- 1 ----
void enumeration(Outcome& out) {
    const auto types = enumerate_del_pezzo();
    std::map<std::string, long> per;
    for (const auto& t : types) per[t.exceptional ? "exceptional" : to_string(t.base)]++;
    out.expect(types.size() == 93, "total " + std::to_string(types.size()));
    const std::pair<const char*, long> expected[] = {
        {"P123", oracle::count_partitions_below(6, 2)}, {"Q", oracle::count_partitions_below(8, 2)},
        {"P2", oracle::count_partitions_below(9, 2)},   {"P1xP1", oracle::count_partitions_below(8, 1)},
        {"exceptional", 4}};
    for (auto [name, n] : expected) out.expect(per[name] == n, std::string(name) + " count " + std::to_string(per[name]));
    out.note << per["P123"] << "/" << per["Q"] << "/" << per["P2"] << "/" << per["P1xP1"] << "/" << per["exceptional"]
             << " = " << types.size();
}

// ---- 2 ----
void main_series_counts(Outcome& out) {
    for (long m = 12; m <= 60; ++m) {
        const int formula = (m % 3 != 0) + (m % 2 != 0) + (std::gcd(m, 6L) == 1) + (m % 5 != 0);
        const auto c = count_structures_for_m(Integer(m));
        out.expect(c.count == formula, "m=" + std::to_string(m) + " count");
        out.expect((c.count == 0) == (m % 30 == 0), "m=" + std::to_string(m) + " zero rule");
        if (std::gcd(m, 30L) == 1) out.expect(c.count == 4, "m=" + std::to_string(m) + " coprime to 30");
        // the admissibility check must pick the same bases
        int admitted = 0;
        for (const char* base : {"P2", "Q", "P123", "S5"}) {
            const CatalogEntry e = catalog(base);
            admitted += check_rhs_conditions(e.surface, {e.branch(main_series_curve(base), Integer(m))}).all();
        }
        out.expect(admitted == c.count, "m=" + std::to_string(m) + " admitted bases");
    }
    if (out.ok) out.note << "m in [12, 60]";
}

std::vector<RhsConstruction> g_constructed;

// ---- 3 ----
void pipeline(Outcome& out) {
    int built = 0;
    for (const char* base : {"P2", "Q", "P123", "S5"}) {
        const CatalogEntry e = catalog(base);
        for (long m = 12; m <= 40; ++m) {
            const BranchDivisor d{e.branch(main_series_curve(base), Integer(m))};
            if (!check_rhs_conditions(e.surface, d).all()) continue;
            const std::string tag = std::string(base) + " m=" + std::to_string(m);
            try {
                const auto c = construct(e.surface, d);
                out.expect(is_smooth(c.data).smooth, tag + " smooth");
                out.expect(h1_total_space(c.data).is_trivial(), tag + " H1");
                out.expect(c.table.H[2].is_trivial(), tag + " H2");
                out.expect(c.table.H[4].is_trivial(), tag + " H4");
                out.expect(c.table.H[3] == AbGroup::cyclic(Integer(m)).power(2), tag + " H3");
                g_constructed.push_back(c);
                ++built;
            } catch (const std::exception& ex) {
                out.expect(false, tag + ": " + ex.what());
            }
        }
    }
    if (out.ok) out.note << built << " bundles";
}

// ---- 4 ----
void higher_torsion(Outcome& out) {
    struct Row { const char* surface; long m; const char* torsion; };
    for (const Row r : {Row{"F3", 5, "(Z/5)^4"}, Row{"F4", 3, "(Z/3)^6"}, Row{"F5", 3, "(Z/3)^8"}}) {
        const CatalogEntry e = catalog(r.surface);
        const BranchDivisor d{e.branch("quadric", Integer(r.m))};
        const std::string tag = std::string(r.surface) + " m=" + std::to_string(r.m);
        try {
            const auto c = construct(e.surface, d);
            out.expect(c.table.H[3] == parse_group(r.torsion), tag + " gives " + c.table.H[3].to_string());
            out.expect(torsion_profile(e.surface, d) == parse_group(r.torsion), tag + " profile");
            g_constructed.push_back(c);
        } catch (const std::exception& ex) {
            out.expect(false, tag + ": " + ex.what());
        }
    }
    const CatalogEntry f3 = catalog("F3");
    const BranchDivisor d{f3.branch("quadric", Integer(4))};
    out.expect(p_cover_obstruction(f3.surface, d, Integer(2)), "F3 m=4 lacks the 2-cover obstruction");
    out.expect(!h1_orb(f3.surface, d).group.is_trivial(), "F3 m=4 orbifold H1 trivial");
    if (out.ok) out.note << "(Z/5)^4, (Z/3)^6, (Z/3)^8; F3 m=4 obstructed at p=2";
}

// ---- 5 ----
// A + A detection done directly on invariant-factor lists: every factor occurs an even number of times.
std::optional<std::vector<long>> half_of(const std::vector<long>& factors) {
    std::map<long, int> mult;
    for (long f : factors) mult[f]++;
    std::vector<long> half;
    for (auto [f, k] : mult) {
        if (k % 2) return std::nullopt;
        half.insert(half.end(), k / 2, f);
    }
    return half;
}

void torsion_scan(Outcome& out) {
    long groups = 0, accepted = 0;
    for (long n = 1; n <= 1024; ++n)
        for (const auto& factors : oracle::abelian_groups_of_order(n)) {
            std::vector<Integer> orders;
            for (long f : factors) orders.emplace_back(f);
            const AbGroup g = AbGroup::from_cyclic_orders(orders);
            const auto half = half_of(factors);
            const bool expected = half && oracle::admissible_half(*half);
            const bool got = torsion_allowed(g).allowed;
            ++groups;
            accepted += got;
            out.expect(got == expected, g.to_string() + (got ? " wrongly accepted" : " wrongly rejected"));
            out.expect(is_double(g) == half.has_value(), g.to_string() + " A+A test");
        }
    for (long p : {2L, 3L, 5L, 7L, 11L}) {
        const AbGroup g = AbGroup::cyclic(Integer(p)).power(2) + AbGroup::cyclic(Integer(p * p)).power(2);
        out.expect(!torsion_allowed(g).allowed, g.to_string() + " accepted");
    }
    if (out.ok) out.note << groups << " groups, " << accepted << " accepted";
}

// ---- 6 ----
void ke_thresholds(Outcome& out) {
    struct Row { const char* surface; const char* curve; long threshold; };
    const Attestation a{true, "acceptance"};
    const KEAttestations att{a, a, a, a};
    for (const Row r : {Row{"P2", "cubic", 6}, Row{"Q", "quartic", 5}, Row{"P123", "sextic", 4}, Row{"S5", "hyperplane", 3}}) {
        const auto dd = degree_data(catalog(r.surface), r.curve);
        for (long m = 2; m <= 100; ++m) {
            const bool raw = degree_criterion_certify(dd.d, dd.a, dd.b, Integer(m), att).verdict == KEVerdict::positive;
            const bool cat = certify_catalog(r.surface, r.curve, Integer(m)).verdict == KEVerdict::positive;
            const std::string tag = std::string(r.surface) + " m=" + std::to_string(m);
            out.expect(raw == (m > r.threshold), tag + " raw");
            out.expect(cat == (m > r.threshold), tag + " catalog");
        }
    }
    if (out.ok) out.note << "m>6, m>5, m>4, m>3 over m in [2, 100]";
}

// ---- 7 ----
void snf_oracle(Outcome& out) {
    std::mt19937_64 rng(1000);
    int done = 0;
    long draws = 0;
    while (done < 1000) {
        ++draws;
        const auto p = oracle::random_presentation(rng);
        const oracle::LatticeQuotient q(p.relations, p.generators);
        if (!q.finite() || q.order() > 10000) continue;
        const AbGroup g = group_from_presentation(p.generators, oracle::to_matrix(p.relations, p.generators));
        const std::string tag = "draw " + std::to_string(draws);
        out.expect(g.is_finite(), tag + " infinite");
        out.expect(g.torsion_order() == q.order(), tag + " order");
        if (out.ok)
            for (auto k : oracle::prime_power_divisors(q.order().get_si()))
                out.expect(g.count_killed_by(Integer(k)) == q.count_killed_by(k), tag + " k=" + std::to_string(k));
        ++done;
    }
    if (out.ok) out.note << done << " presentations";
}

// ---- 8 ----
void consistency(Outcome& out) {
    out.expect(!g_constructed.empty(), "no bundles from criteria 3-4");
    for (const auto& c : g_constructed) {
        const std::string tag = c.data.base.name + " m=" + c.M.get_str();
        const auto r = cohomology(c.data);
        out.expect(r.d_w == r.d_p, tag + " d_w != d_p");
        IntMatrix p = h1_presentation(c.data);
        IntVector row(p.cols());
        row[0] = fiber_order_bound(c.data);
        p.append_row(row);
        out.expect(group_from_presentation(p.cols(), p) == h1_total_space(c.data), tag + " fiber annihilation");
        out.expect(cohomology(flip_orientation(c.data)).table == r.table, tag + " orientation");
    }
    if (out.ok) out.note << g_constructed.size() << " bundles";
}

}  // namespace

int main() {
    const std::vector<Criterion> all{
        {1, "enumeration of deformation types", 1, enumeration},
        {2, "main series structure counts", 1, main_series_counts},
        {3, "pipeline over the main series", 5, pipeline},
        {4, "higher torsion catalog", 0, higher_torsion},
        {5, "torsion classifier scan", 10, torsion_scan},
        {6, "KE thresholds", 0, ke_thresholds},
        {7, "SNF against lattice oracle", 30, snf_oracle},
        {8, "internal consistency", 0, consistency},
    };
    int failed = 0;
    for (const auto& c : all) {
        Outcome out;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(out);
        } catch (const std::exception& ex) {
            out.expect(false, std::string("exception: ") + ex.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_s > 0 && secs >= c.budget_s) out.expect(false, "over time budget");
        failed += !out.ok;
        std::printf("criterion %d %-36s %s  %.3fs  %s\n", c.id, c.title, out.ok ? "PASS" : "FAIL", secs, out.note.str().c_str());
    }
    return failed == 0 ? 0 : 1;
}
