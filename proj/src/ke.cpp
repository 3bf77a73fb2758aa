#include "seifert5/ke.hpp"
#include "seifert5/errors.hpp"

#include <algorithm>

namespace seifert5 {

std::string to_string(KEVerdict v) { return v == KEVerdict::positive ? "positive" : "indeterminate"; }

std::string to_string(KltVerdict v) {
    switch (v) {
        case KltVerdict::klt: return "klt";
        case KltVerdict::not_klt: return "not klt";
        case KltVerdict::indeterminate: return "indeterminate";
    }
    return "?";
}

bool KEAttestations::complete() const {
    for (const auto* a : {&anticanonical_multiple, &branch_multiple, &local_orders, &special_line})
        if (!*a || !(*a)->holds) return false;
    return true;
}

KECertificate degree_criterion_certify(const Integer& d, const Rational& a, const Rational& b, const Integer& m,
                              const KEAttestations& att) {
    if (m < 2) throw PreconditionError("multiplicity must be at least 2");
    if (d < 1) throw PreconditionError("degree must be positive");
    KECertificate c;
    c.m = m;
    c.rule = "degree-d criterion";
    c.d = Rational(d);
    c.a = a;
    c.b = b;
    c.attestations = att;
    const Rational three_halves(3, 2);
    const Rational v = c.d * (a - (1 - Rational(1) / Rational(m)) * b);
    c.inequalities.push_back({"d(a - (1 - 1/m)b)", v, three_halves, v < three_halves});
    c.inequalities.push_back({"b d(a - (1 - 1/m)b)", b * v, three_halves, b * v < three_halves});
    // -(K + Delta) must be ample for the criterion to mean anything
    c.inequalities.push_back({"-d(a - (1 - 1/m)b)", -v, Rational(0), -v < 0});
    const bool ineq = std::all_of(c.inequalities.begin(), c.inequalities.end(), [](const auto& i) { return i.holds; });
    c.verdict = ineq && att.complete() ? KEVerdict::positive : KEVerdict::indeterminate;
    return c;
}

KECertificate elliptic_criterion_certify(const Integer& m, const std::optional<Attestation>& elliptic_anticanonical) {
    KECertificate c;
    c.m = m;
    c.rule = "elliptic log canonical criterion";
    c.inequalities.push_back({"9 - m", Rational(9 - m), Rational(1), m >= 9});
    c.attestations.branch_multiple = elliptic_anticanonical;
    const bool att = elliptic_anticanonical && elliptic_anticanonical->holds;
    c.verdict = m >= 9 && att ? KEVerdict::positive : KEVerdict::indeterminate;
    return c;
}

DegreeData degree_data(const CatalogEntry& e, const std::string& curve) {
    const OrbSurface& s = e.surface;
    if (s.weil_rank() != 1) throw PreconditionError(s.name + ": (d, a, b) needs Weil rank 1");
    const IntVector& H = s.pic_basis.at(0);
    DegreeData dd;
    const Rational h2 = pair(s.pairing, H, H);
    if (h2.get_den() != 1) throw ConsistencyError("H^2 is not an integer");
    dd.d = h2.get_num();
    dd.a = -Rational(s.canonical[0]) / Rational(H[0]);
    dd.b = Rational(e.curve(curve).degree[0]) / Rational(H[0]);
    dd.max_local_order = 1;
    for (const auto& p : s.singular_points) dd.max_local_order = std::max(dd.max_local_order, p.local_order);
    return dd;
}

KECertificate certify_catalog(const std::string& surface, const std::string& curve, const Integer& m) {
    const CatalogEntry e = catalog(surface);
    const DegreeData dd = degree_data(e, curve);
    const BranchCurve& c = e.curve(curve);
    KEAttestations att;
    att.anticanonical_multiple = Attestation{true, "Weil rank one: -K is a multiple of H"};
    const bool away = c.through_points.empty() && c.orbismooth;
    att.branch_multiple = Attestation{away, away ? "general member is smooth and misses the singular points"
                                                 : "curve meets a singular point"};
    const bool orders = dd.max_local_order <= dd.d;
    att.local_orders = Attestation{orders, "largest local order " + dd.max_local_order.get_str() + ", d = " + dd.d.get_str()};
    // a curve of class l = H/d through every singular point
    const IntVector& H = e.surface.pic_basis.at(0);
    for (const auto& l : e.curves) {
        if (l.degree[0] != 1 || H[0] != dd.d) continue;
        bool all = true;
        for (const auto& p : e.surface.singular_points) all = all && l.passes_through(p.id);
        if (all) att.special_line = Attestation{true, "curve '" + l.id + "' has class H/d and meets every singular point"};
    }
    KECertificate cert = degree_criterion_certify(dd.d, dd.a, dd.b, m, att);
    cert.surface_name = surface;
    cert.curve = curve;
    return cert;
}

KltReport klt_point_predicates(const KltInput& in) {
    KltReport r;
    for (const auto& c : in.component_coefficients)
        if (c >= 1) {
            r.verdict = KltVerdict::not_klt;
            r.reason = "a component has coefficient " + c.get_str() + " >= 1";
            return r;
        }
    bool all_klt = true;
    for (const auto& p : in.points) {
        std::optional<Rational> mult = p.multiplicity;
        if (!mult && p.singular && p.cover_degree && p.line_intersection)
            mult = Rational(*p.cover_degree) * *p.line_intersection;  // bound on the pullback multiplicity
        KltVerdict v = KltVerdict::indeterminate;
        if (mult && *mult <= 1) v = KltVerdict::klt;
        else if (p.curve_coefficient && p.local_intersection && *p.curve_coefficient < 1 && *p.local_intersection < 1)
            v = KltVerdict::klt;
        r.per_point.emplace_back(p.label, v);
        all_klt = all_klt && v == KltVerdict::klt;
    }
    r.verdict = all_klt ? KltVerdict::klt : KltVerdict::indeterminate;
    r.reason = all_klt ? "every point passes a multiplicity test" : "some point has insufficient data";
    return r;
}

std::vector<KEThreshold> ke_threshold_catalog() {
    auto entry = [](std::string s, std::string c, std::optional<long> t, std::vector<Integer> listed) {
        const DegreeData dd = degree_data(catalog(s), c);
        KEThreshold k{std::move(s), std::move(c), dd.d, dd.a, dd.b, std::nullopt, std::move(listed)};
        if (t) k.threshold = Integer(*t);
        return k;
    };
    return {
        entry("P2", "cubic", 6, {}),
        entry("Q", "quartic", 5, {}),
        entry("P123", "sextic", 4, {}),
        entry("S5", "hyperplane", 3, {}),
        entry("F3", "quadric", std::nullopt, {Integer(5), Integer(4)}),
        entry("F4", "quadric", std::nullopt, {Integer(3)}),
        entry("F5", "quadric", std::nullopt, {Integer(3)}),
    };
}

std::optional<Integer> derived_threshold(const Integer& d, const Rational& a, const Rational& b, long m_max) {
    KEAttestations all;
    all.anticanonical_multiple = all.branch_multiple = all.local_orders = all.special_line = Attestation{true, "assumed"};
    std::optional<Integer> t;
    for (long m = m_max; m >= 2; --m) {
        if (degree_criterion_certify(d, a, b, Integer(m), all).verdict != KEVerdict::positive) {
            t = Integer(m);
            break;
        }
    }
    if (!t) return Integer(1);
    if (*t == m_max) return std::nullopt;
    return t;
}

}  // namespace seifert5
