#include "seifert5/catalog.hpp"
#include "seifert5/errors.hpp"
#include "seifert5/seifert.hpp"

#include <doctest.h>

using namespace seifert5;

namespace {

IntVector v(std::initializer_list<long> xs) {
    IntVector out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

SeifertData bundle(const char* base, const char* curve, long m, IntVector B, long b) {
    const CatalogEntry e = catalog(base);
    return {e.surface, {e.branch(curve, Integer(m))}, std::move(B), v({b})};
}

SeifertData p2_cubic_5() { return bundle("P2", "cubic", 5, v({-1}), 2); }

// H1 with the extra relation d * k = 0 appended.
AbGroup with_fiber_killed(const SeifertData& sd, const Integer& d) {
    IntMatrix p = h1_presentation(sd);
    IntVector row(p.cols());
    row[0] = d;
    p.append_row(row);
    return group_from_presentation(p.cols(), p);
}

}  // namespace

TEST_CASE("Chern class examples") {
    CHECK(chern_class(p2_cubic_5()).c1 == RatVector{make_rat(1, 5)});
    CHECK(chern_class(bundle("P123", "sextic", 7, v({-5}), 6)).c1 == RatVector{make_rat(1, 7)});

    SeifertData plain{catalog("P2").surface, {}, v({1}), {}};
    const auto c = chern_class(plain);
    CHECK(c.c1 == RatVector{make_rat(1)});
    CHECK(c.m_delta == 1);

    const auto p123 = chern_class(bundle("P123", "sextic", 7, v({-5}), 6));
    CHECK(p123.m_x_delta == 42);
    CHECK(p123.m_delta_c1 == v({1}));
    CHECK(p123.m_x_delta_c1_pic == v({1}));
}

TEST_CASE("validation of classifying data") {
    SeifertData sd = p2_cubic_5();
    sd.b = v({5});
    CHECK_THROWS_AS(validate_seifert(sd), ValidationError);
    sd.b = v({0});
    CHECK_THROWS_AS(validate_seifert(sd), ValidationError);
    sd.b = v({1, 2});
    CHECK_THROWS_AS(validate_seifert(sd), ValidationError);
    CHECK_NOTHROW(validate_seifert(p2_cubic_5()));
}

TEST_CASE("smoothness at singular points") {
    const auto r = is_smooth(bundle("P123", "sextic", 7, v({-5}), 6));
    CHECK(r.smooth);
    for (const auto& c : r.checks) {
        if (c.point == "A2") CHECK(c.residue == 1);
        if (c.point == "A1") CHECK(c.residue == 1);
    }
    // B = 2l on Q gives residue 0 at the vertex
    SeifertData q{catalog("Q").surface, {}, v({2}), {}};
    const auto rq = is_smooth(q);
    CHECK_FALSE(rq.smooth);
    REQUIRE(rq.checks.size() == 1);
    CHECK(rq.checks[0].residue == 0);
}

TEST_CASE("H1 of the total space") {
    CHECK(h1_total_space(p2_cubic_5()).is_trivial());
    CHECK(h1_presentation(p2_cubic_5()) == IntMatrix::from_rows({{2, 5}, {-1, -3}}));
    CHECK(h1_total_space(bundle("P2", "cubic", 3, v({0}), 1)) == AbGroup::cyclic(Integer(3)));
    CHECK(h1_total_space(SeifertData{catalog("P2").surface, {}, v({1}), {}}).is_trivial());
}

TEST_CASE("fiber order bound") {
    CHECK(fiber_order_bound(p2_cubic_5()) == 1);
    CHECK(fiber_order_bound(SeifertData{catalog("P2").surface, {}, v({6}), {}}) == 6);
    CHECK_THROWS_AS(fiber_order_bound(SeifertData{catalog("P2").surface, {}, v({0}), {}}), PreconditionError);
}

TEST_CASE("cohomology tables") {
    SUBCASE("P2 cubic m=5") {
        const auto r = cohomology(p2_cubic_5());
        CHECK(r.table.s == 1);
        CHECK(r.table.d == 1);
        CHECK(r.table.H[0] == AbGroup::free(1));
        CHECK(r.table.H[1].is_trivial());
        CHECK(r.table.H[2].is_trivial());
        CHECK(r.table.H[3] == parse_group("(Z/5)^2"));
        CHECK(r.table.H[4].is_trivial());
        CHECK(r.table.H[5] == AbGroup::free(1));
    }
    SUBCASE("F3 genus-2 curve m=5") {
        const auto r = cohomology(bundle("F3", "quadric", 5, v({-1}), 1));
        CHECK(r.table.H[3] == parse_group("(Z/5)^4"));
        CHECK(r.d_w == r.d_p);
    }
    SUBCASE("no branch divisor, rank two") {
        SeifertData sd{catalog("P1xP1").surface, {}, v({1, 1}), {}};
        const auto r = cohomology(sd);
        CHECK(r.table.H[2] == AbGroup::free(1));
        CHECK(r.table.H[3] == AbGroup::free(1));
        CHECK(r.table.H[4].is_trivial());
    }
    SUBCASE("Hopf bundle over P2 with d = 3") {
        const auto r = cohomology(SeifertData{catalog("P2").surface, {}, v({3}), {}});
        CHECK(r.table.d == 3);
        CHECK(r.table.H[2] == AbGroup::cyclic(Integer(3)));
        CHECK(r.table.H[4] == AbGroup::cyclic(Integer(3)));
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(cohomology(bundle("P2", "cubic", 3, v({0}), 1)), PreconditionError);
        CHECK_THROWS_AS(cohomology(SeifertData{catalog("Q").surface, {}, v({2}), {}}), PreconditionError);
    }
}

TEST_CASE("property: table duality, annihilation and orientation across small searches") {
    int tables = 0;
    for (const char* name : {"P2", "Q", "P123", "S5", "F3", "F4", "P1xP1", "Hirz1", "Hirz2"}) {
        const CatalogEntry e = catalog(name);
        for (const auto& c : e.curves)
            for (long m : {5L, 7L, 11L}) {
                const BranchDivisor d{e.branch(c.id, Integer(m))};
                const auto sd = find_h1_trivial_bundle(e.surface, d, 6);
                if (!sd) continue;
                CAPTURE(name);
                CAPTURE(c.id);
                CAPTURE(m);
                const auto r = cohomology(*sd);
                ++tables;
                CHECK(r.d_w == r.d_p);
                CHECK(r.table.H[2].torsion() == r.table.H[4]);
                CHECK(r.table.H[2].free_rank() == r.table.H[3].free_rank());
                CHECK(r.table.H[2].free_rank() == r.table.s - 1);
                const Integer dy = fiber_order_bound(*sd);
                CHECK(with_fiber_killed(*sd, dy) == h1_total_space(*sd));
                const SeifertData f = flip_orientation(*sd);
                CHECK(chern_class(f).c1 == scale(Rational(-1), chern_class(*sd).c1));
                CHECK(cohomology(f).table == r.table);
                CHECK(flip_orientation(f) == *sd);
            }
    }
    CHECK(tables > 20);
}

TEST_CASE("w2 report") {
    CHECK(w2_report(p2_cubic_5()).w2_zero);
    SeifertData plain{catalog("P2").surface, {}, v({3}), {}};
    CHECK(w2_report(plain).proportional);
    SeifertData skew{catalog("P1xP1").surface, {}, v({1, -1}), {}};
    CHECK_FALSE(w2_report(skew).proportional);
}

TEST_CASE("bundle search on rank-two bases") {
    const CatalogEntry h1 = catalog("Hirz1");
    const BranchDivisor d{h1.branch("D", Integer(3)), h1.branch("E", Integer(2))};
    const auto sd = find_h1_trivial_bundle(h1.surface, d);
    REQUIRE(sd);
    CHECK(h1_total_space(*sd).is_trivial());
    CHECK(cohomology(*sd).table.H[3] == parse_group("Z + (Z/3)^4"));
}
