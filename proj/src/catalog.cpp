#include "seifert5/catalog.hpp"
#include "seifert5/errors.hpp"

#include <charconv>

namespace seifert5 {

const BranchCurve& CatalogEntry::curve(std::string_view id) const {
    for (const auto& c : curves)
        if (c.id == id) return c;
    throw StructuralError(surface.name + " has no distinguished curve '" + std::string(id) + "'");
}

BranchCurve CatalogEntry::branch(std::string_view id, const Integer& m) const {
    BranchCurve c = curve(id);
    c.multiplicity = m;
    return c;
}

namespace {

const Attestation kRational{true, "rational surface with quotient singularities"};

BranchCurve make_curve(std::string id, IntVector degree, long genus, std::vector<std::string> through = {}) {
    BranchCurve c;
    c.id = std::move(id);
    c.degree = std::move(degree);
    c.genus = genus;
    c.multiplicity = 2;
    c.through_points = std::move(through);
    c.orbismooth = true;
    c.transversal = true;
    return c;
}

IntVector iv(std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

// Weil(S) = Z.l with l.l = 1/denominator
OrbSurface rank_one(std::string name, long self_den, long k, long pic, std::vector<SingularPoint> points) {
    OrbSurface s;
    s.name = std::move(name);
    s.pairing = {{make_rat(1, self_den)}};
    s.canonical = iv({k});
    s.pic_basis = {iv({pic})};
    s.singular_points = std::move(points);
    s.ample_cone_tests = {{Rational(1)}};
    s.h1_zero = kRational;
    return s;
}

SingularPoint point(std::string id, long order, long residue = 1) {
    return {std::move(id), Integer(order), iv({residue})};
}

CatalogEntry weighted_cone(long n) {
    // P(1,1,n): L.L = 1/n, K = -(n+2)L, hyperplane nL; the vertex is singular for n >= 2
    std::vector<SingularPoint> pts;
    if (n >= 2) pts.push_back(point("vertex", n));
    CatalogEntry e{rank_one("F" + std::to_string(n), n, -(n + 2), n, std::move(pts)), {}};
    std::vector<std::string> via;
    if (n >= 2) via.push_back("vertex");
    e.curves.push_back(make_curve("line", iv({1}), 0, via));
    e.curves.push_back(make_curve("hyperplane", iv({n}), 0));
    e.curves.push_back(make_curve("quadric", iv({2 * n}), n - 1));
    return e;
}

CatalogEntry ruled(long n) {
    // basis (E, F): E.E = -n, E.F = 1, F.F = 0
    OrbSurface s;
    s.name = "Hirz" + std::to_string(n);
    s.pairing = {{Rational(-n), Rational(1)}, {Rational(1), Rational(0)}};
    s.canonical = iv({-2, -(n + 2)});
    s.pic_basis = {iv({1, 0}), iv({0, 1})};
    s.ample_cone_tests = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    s.h1_zero = kRational;
    CatalogEntry e{std::move(s), {}};
    auto add = [&](std::string id, IntVector d) {
        const Rational g = adjunction_genus(e.surface, d);
        e.curves.push_back(make_curve(std::move(id), std::move(d), g.get_num().get_si()));
    };
    add("E", iv({1, 0}));
    add("F", iv({0, 1}));
    add("anticanonical", iv({2, n + 2}));
    add("C", iv({2, 2 * n + 3}));
    if (n == 1) add("D", iv({2, 4}));
    if (n == 3) add("G", iv({2, 6}));
    return e;
}

CatalogEntry p1xp1() {
    OrbSurface s;
    s.name = "P1xP1";
    s.pairing = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    s.canonical = iv({-2, -2});
    s.pic_basis = {iv({1, 0}), iv({0, 1})};
    s.ample_cone_tests = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    s.h1_zero = kRational;
    CatalogEntry e{std::move(s), {}};
    e.curves.push_back(make_curve("ruling1", iv({1, 0}), 0));
    e.curves.push_back(make_curve("ruling2", iv({0, 1}), 0));
    e.curves.push_back(make_curve("diagonal", iv({1, 1}), 0));
    e.curves.push_back(make_curve("quadric", iv({2, 2}), 1));
    return e;
}

std::optional<long> suffix_number(std::string_view name, std::string_view prefix) {
    if (name.substr(0, prefix.size()) != prefix || name.size() == prefix.size()) return std::nullopt;
    long n = 0;
    const char* first = name.data() + prefix.size();
    const char* last = name.data() + name.size();
    auto [p, ec] = std::from_chars(first, last, n);
    if (ec != std::errc{} || p != last) return std::nullopt;
    return n;
}

}  // namespace

CatalogEntry catalog(std::string_view name) {
    if (name == "P2") {
        CatalogEntry e{rank_one("P2", 1, -3, 1, {}), {}};
        e.curves.push_back(make_curve("line", iv({1}), 0));
        e.curves.push_back(make_curve("conic", iv({2}), 0));
        e.curves.push_back(make_curve("cubic", iv({3}), 1));
        return e;
    }
    if (name == "Q") {
        // quadric cone P(1,1,2); l is a ruling through the vertex
        CatalogEntry e{rank_one("Q", 2, -4, 2, {point("vertex", 2)}), {}};
        e.curves.push_back(make_curve("line", iv({1}), 0, {"vertex"}));
        e.curves.push_back(make_curve("hyperplane", iv({2}), 0));
        e.curves.push_back(make_curve("quartic", iv({4}), 1));
        // odd degree forces the curve through the vertex
        e.curves.push_back(make_curve("quintic", iv({5}), 2, {"vertex"}));
        return e;
    }
    if (name == "P123") {
        CatalogEntry e{rank_one("P123", 6, -6, 6, {point("A1", 2), point("A2", 3)}), {}};
        e.curves.push_back(make_curve("line", iv({1}), 0, {"A1", "A2"}));
        e.curves.push_back(make_curve("sextic", iv({6}), 1));
        return e;
    }
    if (name == "S5") {
        CatalogEntry e{rank_one("S5", 5, -5, 5, {point("A4", 5)}), {}};
        e.curves.push_back(make_curve("line", iv({1}), 0, {"A4"}));
        e.curves.push_back(make_curve("hyperplane", iv({5}), 1));
        return e;
    }
    if (name == "P125") {
        CatalogEntry e{rank_one("P125", 10, -8, 10, {point("A1", 2), point("P5", 5)}), {}};
        e.curves.push_back(make_curve("line", iv({1}), 0, {"A1", "P5"}));
        e.curves.push_back(make_curve("C10", iv({10}), 2));
        return e;
    }
    if (name == "P1xP1") return p1xp1();
    if (auto n = suffix_number(name, "F"); n && *n >= 1 && *n <= 8) return weighted_cone(*n);
    if (auto n = suffix_number(name, "Hirz"); n && *n >= 0 && *n <= 5) return ruled(*n);
    throw StructuralError("unknown catalog surface '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names{"P2", "Q", "P123", "S5", "P125", "P1xP1"};
    for (int n = 1; n <= 8; ++n) names.push_back("F" + std::to_string(n));
    for (int n = 0; n <= 5; ++n) names.push_back("Hirz" + std::to_string(n));
    return names;
}

std::string main_series_curve(std::string_view base) {
    if (base == "P2") return "cubic";
    if (base == "Q") return "quartic";
    if (base == "P123") return "sextic";
    if (base == "S5") return "hyperplane";
    throw StructuralError("'" + std::string(base) + "' is not a main-series base");
}

}  // namespace seifert5
