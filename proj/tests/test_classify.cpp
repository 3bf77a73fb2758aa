#include "oracles.hpp"
#include "seifert5/classify.hpp"
#include "seifert5/errors.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace seifert5;

TEST_CASE("enumeration counts against the partition oracle") {
    const auto types = enumerate_del_pezzo();
    CHECK(types.size() == 93);
    std::map<std::string, long> per;
    for (const auto& t : types) per[t.exceptional ? "exceptional" : to_string(t.base)]++;
    CHECK(per["P123"] == oracle::count_partitions_below(6, 2));
    CHECK(per["Q"] == oracle::count_partitions_below(8, 2));
    CHECK(per["P2"] == oracle::count_partitions_below(9, 2));
    CHECK(per["P1xP1"] == oracle::count_partitions_below(8, 1));
    CHECK(per["P123"] == 7);
    CHECK(per["Q"] == 15);
    CHECK(per["P2"] == 22);
    CHECK(per["P1xP1"] == 45);
    CHECK(per["exceptional"] == 4);
}

TEST_CASE("enumeration invariants") {
    const auto types = enumerate_del_pezzo();
    std::set<std::pair<DelPezzoBase, std::vector<int>>> seen;
    for (const auto& t : types) {
        CAPTURE(t.name());
        CHECK(seen.insert({t.base, t.blowups}).second);
        int sum = 0;
        for (int m : t.blowups) sum += m;
        CHECK(sum < k_squared(t.base));
        CHECK(t.k_squared_remaining == k_squared(t.base) - sum);
        CHECK(std::is_sorted(t.blowups.rbegin(), t.blowups.rend()));
        if (t.base != DelPezzoBase::P1xP1 && !t.exceptional)
            for (int m : t.blowups) CHECK(m >= 2);
        if (t.exceptional) continue;
        const int stat = t.singularity_minus_picard();
        switch (t.base) {
            case DelPezzoBase::P123: CHECK(stat == 1); break;
            case DelPezzoBase::Q: CHECK(stat == 0); break;
            case DelPezzoBase::P2: CHECK(stat == -1); break;
            case DelPezzoBase::P1xP1: CHECK(stat <= -2); break;
            default: break;
        }
    }
}

TEST_CASE("torsion rule") {
    CHECK(torsion_allowed(parse_group("(Z/7)^2")).clause == 1);
    CHECK(torsion_allowed(parse_group("(Z/5)^4")).clause == 2);
    CHECK(torsion_allowed(parse_group("(Z/4)^4")).allowed);
    CHECK(torsion_allowed(parse_group("(Z/3)^8")).clause == 3);
    CHECK(torsion_allowed(parse_group("(Z/2)^10")).clause == 4);
    CHECK_FALSE(torsion_allowed(parse_group("(Z/5)^6")).allowed);
    CHECK_FALSE(torsion_allowed(parse_group("(Z/3)^10")).allowed);
    for (long p : {2L, 3L, 5L, 7L}) CHECK_FALSE(torsion_allowed(AbGroup::cyclic(Integer(p)).power(2) + AbGroup::cyclic(Integer(p * p)).power(2)).allowed);
    CHECK_THROWS_AS(torsion_allowed(AbGroup::free(1)), PreconditionError);
}

TEST_CASE("property: torsion rule agrees with the oracle on doubled groups of order up to 256") {
    for (long n = 1; n * n <= 256; ++n)
        for (const auto& a : oracle::abelian_groups_of_order(n)) {
            std::vector<Integer> orders;
            for (long f : a) orders.emplace_back(f), orders.emplace_back(f);
            const AbGroup g = AbGroup::from_cyclic_orders(orders);
            CAPTURE(g.to_string());
            CHECK(is_double(g));
            CHECK(torsion_allowed(g).allowed == oracle::admissible_half(a));
        }
}

TEST_CASE("genus bounds") {
    CHECK(genus_bound(make_rat(11, 12)) == 1);
    CHECK(genus_bound(make_rat(5, 6)) == 1);
    CHECK(genus_bound(make_rat(4, 5)) == 2);
    CHECK(genus_bound(make_rat(2, 3)) == 4);
    CHECK_FALSE(genus_bound(make_rat(3, 5)).has_value());
    CHECK_THROWS_AS(genus_bound(make_rat(1, 3)), PreconditionError);
    CHECK_THROWS_AS(genus_bound(make_rat(1)), PreconditionError);
    // monotone non-increasing, with "no bound" above every finite bound
    int prev = 1 << 30;
    for (long num = 50; num < 100; ++num) {
        const auto g = genus_bound(make_rat(num, 100));
        const int cur = g ? *g : (1 << 30);
        CHECK(cur <= prev);
        prev = cur;
    }
}

TEST_CASE("manifold identification") {
    CHECK(identify_manifold(AbGroup::free(21), true, true) == "#21(S^2 x S^3)");
    CHECK(identify_manifold(AbGroup::trivial(), true, true) == "S^5");
    CHECK(identify_manifold(AbGroup::free(1), true, true) == "S^2 x S^3");
    CHECK(identify_manifold(parse_group("(Z/5)^2"), true, true) == "M_5");
    CHECK_THROWS_AS(identify_manifold(parse_group("Z/2 + Z/4"), true, true), PreconditionError);
    CHECK_THROWS_AS(identify_manifold(AbGroup::trivial(), false, true), PreconditionError);
}

TEST_CASE("boundary catalog re-derivation") {
    const auto cat = nonrational_boundary_catalog();
    CHECK(cat.size() >= 10);
    int derived = 0;
    for (const auto& ex : cat) {
        CAPTURE(ex.label);
        if (!ex.derivable) continue;
        const auto chk = verify_boundary_example(ex);
        CAPTURE(chk.detail);
        CHECK(chk.ok());
        ++derived;
        if (ex.torsion) CHECK(torsion_allowed(*ex.torsion).allowed);
    }
    CHECK(derived >= 10);
}
