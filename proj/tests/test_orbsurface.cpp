#include "seifert5/catalog.hpp"
#include "seifert5/errors.hpp"
#include "seifert5/orbsurface.hpp"

#include <doctest.h>

using namespace seifert5;

namespace {

IntVector v(std::initializer_list<long> xs) {
    IntVector out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

bool mentions(const std::vector<std::string>& msgs, const std::string& needle) {
    for (const auto& m : msgs)
        if (m.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("every catalog surface validates with its curves") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const CatalogEntry e = catalog(name);
        CHECK(validate(e.surface).empty());
        BranchDivisor all;
        for (const auto& c : e.curves) all.push_back(c);
        for (const auto& c : all) CHECK(validate_branch(e.surface, {c}).empty());
    }
    CHECK_THROWS_AS(catalog("P7"), StructuralError);
}

TEST_CASE("P123 with a wrong Pic basis is rejected") {
    OrbSurface s = catalog("P123").surface;
    CHECK(validate(s).empty());
    s.pic_basis = {v({3})};
    const auto errs = validate(s);
    CHECK_FALSE(errs.empty());
    CHECK(mentions(errs, "kernel"));
    CHECK_THROWS_AS(require_valid(s), ValidationError);
}

TEST_CASE("catalog lattice data") {
    SUBCASE("S5") {
        const OrbSurface s = catalog("S5").surface;
        CHECK(s.weil_rank() == 1);
        CHECK(s.pic_basis == std::vector<IntVector>{v({5})});
        REQUIRE(s.singular_points.size() == 1);
        CHECK(s.singular_points[0].local_order == 5);
        CHECK(pair(s.pairing, s.canonical, v({1})) == make_rat(-1));
    }
    SUBCASE("F4") {
        const OrbSurface s = catalog("F4").surface;
        CHECK(s.pairing[0][0] == make_rat(1, 4));
        CHECK(s.canonical == v({-6}));
    }
    SUBCASE("P1xP1") {
        const OrbSurface s = catalog("P1xP1").surface;
        CHECK(s.weil_rank() == 2);
        CHECK(s.pairing == RatMatrix{{make_rat(0), make_rat(1)}, {make_rat(1), make_rat(0)}});
        CHECK(s.canonical == v({-2, -2}));
        CHECK(s.singular_points.empty());
    }
}

TEST_CASE("property: rank-one generators square to the reciprocal product of local orders") {
    for (const auto& name : catalog_names()) {
        const OrbSurface s = catalog(name).surface;
        if (s.weil_rank() != 1 || !s.h1_zero_attested()) continue;
        CAPTURE(name);
        Integer prod = 1;
        for (const auto& p : s.singular_points) prod *= p.local_order;
        CHECK(s.pairing[0][0] == Rational(Integer(1), prod));
    }
}

TEST_CASE("property: K pairs integrally with Pic") {
    for (const auto& name : catalog_names()) {
        const OrbSurface s = catalog(name).surface;
        for (const auto& eta : s.pic_basis) CHECK(pair(s.pairing, s.canonical, eta).get_den() == 1);
    }
}

TEST_CASE("local multiplicities") {
    const CatalogEntry p2 = catalog("P2");
    SUBCASE("smooth point on one curve") {
        const BranchDivisor d{p2.branch("cubic", Integer(5))};
        const auto l = local_multiplicities(p2.surface, d, PointRef::smooth({"cubic"}));
        CHECK(l.m_delta == 5);
        CHECK(l.m_x == 1);
        CHECK(l.m_x_delta == 5);
    }
    SUBCASE("A2 point off the branch") {
        const CatalogEntry e = catalog("P123");
        const BranchDivisor d{e.branch("sextic", Integer(7))};
        const auto l = local_multiplicities(e.surface, d, PointRef::singular("A2"));
        CHECK(l.m_delta == 1);
        CHECK(l.m_x == 3);
        CHECK(l.m_x_delta == 3);
    }
    SUBCASE("two coprime curves crossing") {
        const BranchDivisor d{p2.branch("line", Integer(2)), p2.branch("conic", Integer(3))};
        const auto l = local_multiplicities(p2.surface, d, PointRef::smooth({"line", "conic"}));
        CHECK(l.m_delta == 6);
        CHECK(l.m_x_delta == 6);
    }
    SUBCASE("non-coprime crossing is not locally cyclic") {
        const BranchDivisor d{p2.branch("line", Integer(2)), p2.branch("conic", Integer(4))};
        CHECK_THROWS_AS(local_multiplicities(p2.surface, d, PointRef::smooth({"line", "conic"})), PreconditionError);
    }
}

TEST_CASE("global multiplicities") {
    {
        const CatalogEntry e = catalog("P123");
        const auto g = global_multiplicities(e.surface, {e.branch("sextic", Integer(7))});
        CHECK(g.m_delta == 7);
        CHECK(g.m_x == 6);
        CHECK(g.m_x_delta == 42);
    }
    {
        const auto g = global_multiplicities(catalog("P2").surface, {});
        CHECK(g.m_delta == 1);
        CHECK(g.m_x == 1);
        CHECK(g.m_x_delta == 1);
    }
    {
        const CatalogEntry e = catalog("Q");
        const auto g = global_multiplicities(e.surface, {e.branch("quintic", Integer(5))});
        CHECK(g.m_delta == 5);
        CHECK(g.m_x == 2);
        CHECK(g.m_x_delta == 10);
    }
}

TEST_CASE("property: global M(X, Delta) divides M(Delta) * M(X)") {
    for (const auto& name : catalog_names()) {
        const CatalogEntry e = catalog(name);
        for (const auto& c : e.curves)
            for (long m : {2L, 3L, 5L, 7L}) {
                const auto g = global_multiplicities(e.surface, {e.branch(c.id, Integer(m))});
                CHECK(mod(g.m_delta * g.m_x, g.m_x_delta) == 0);
            }
    }
}

TEST_CASE("log del Pezzo") {
    const CatalogEntry p2 = catalog("P2");
    for (long m = 2; m < 40; ++m) {
        const auto w = is_log_del_pezzo(p2.surface, {p2.branch("cubic", Integer(m))});
        CHECK(w.is_log_del_pezzo);
        CHECK(w.anti_log_canonical == RatVector{make_rat(3, m)});
    }
    const CatalogEntry f3 = catalog("F3");
    for (long m = 2; m < 12; ++m)
        CHECK(is_log_del_pezzo(f3.surface, {f3.branch("quadric", Integer(m))}).is_log_del_pezzo == (m <= 5));

    const CatalogEntry h3 = catalog("Hirz3");
    const auto w = is_log_del_pezzo(h3.surface, {h3.branch("G", Integer(5))});
    CHECK_FALSE(w.is_log_del_pezzo);
    CHECK(w.pairings[0] < 0);

    OrbSurface bare = p2.surface;
    bare.ample_cone_tests.clear();
    CHECK_THROWS_AS(is_log_del_pezzo(bare, {}), PreconditionError);
}

TEST_CASE("adjunction genus matches catalog genera") {
    for (const auto& name : catalog_names()) {
        const CatalogEntry e = catalog(name);
        if (!e.surface.singular_points.empty()) continue;
        for (const auto& c : e.curves) {
            CAPTURE(name);
            CAPTURE(c.id);
            CHECK(adjunction_genus(e.surface, c.degree) == Rational(c.genus));
        }
    }
}

TEST_CASE("smooth crossings") {
    const CatalogEntry p2 = catalog("P2");
    CHECK(smooth_crossings(p2.surface, {p2.branch("line", Integer(2)), p2.branch("conic", Integer(3))}).size() == 1);
    const CatalogEntry p123 = catalog("P123");
    CHECK(smooth_crossings(p123.surface, {p123.branch("sextic", Integer(7))}).empty());
}
