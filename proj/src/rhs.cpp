#include "seifert5/rhs.hpp"
#include "seifert5/catalog.hpp"
#include "seifert5/errors.hpp"
#include "seifert5/topology.hpp"

namespace seifert5 {

RhsConditions check_rhs_conditions(const OrbSurface& s, const BranchDivisor& delta) {
    RhsConditions r;
    if (s.weil_rank() != 1) {
        r.failures.push_back("Weil rank is " + std::to_string(s.weil_rank()) + ", not 1");
    } else if (!s.h1_zero_attested()) {
        r.failures.push_back("H1(S) = 0 is not attested");
    } else if (!h1_smooth_locus_trivial(s).trivial) {
        r.failures.push_back("H1 of the smooth locus is not trivial");
    } else {
        r.rank_one = true;
    }

    r.curves_ok = true;
    for (const auto& c : delta) {
        if (!c.orbismooth) {
            r.curves_ok = false;
            r.failures.push_back("curve " + c.id + " is not attested orbismooth");
        }
        if (delta.size() > 1 && !c.transversal) {
            r.curves_ok = false;
            r.failures.push_back("curve " + c.id + " is not attested transversal to the others");
        }
    }

    if (r.rank_one) {
        r.coprimality = true;
        for (std::size_t i = 0; i < delta.size(); ++i) {
            const Integer g = gcd(delta[i].multiplicity, weil_degree(s, delta[i]));
            if (g != 1) {
                r.coprimality = false;
                r.failures.push_back("m = " + delta[i].multiplicity.get_str() + " of " + delta[i].id +
                                     " shares the factor " + g.get_str() + " with its degree");
            }
            for (std::size_t j = i + 1; j < delta.size(); ++j)
                if (gcd(delta[i].multiplicity, delta[j].multiplicity) != 1) {
                    r.coprimality = false;
                    r.failures.push_back("multiplicities of " + delta[i].id + " and " + delta[j].id +
                                         " are not coprime");
                }
        }
    }
    return r;
}

std::string to_string(SphereVerdict v) {
    switch (v) {
        case SphereVerdict::yes: return "S^5";
        case SphereVerdict::no: return "not S^5";
        case SphereVerdict::yes_modulo_pi1: return "S^5 modulo orbifold pi_1 attestation";
    }
    return "?";
}

namespace {

// order of the orbifold fundamental group of the complement of the elliptic curve
std::optional<long> main_series_complement_order(const std::string& base) {
    if (base == "P2") return 3;
    if (base == "Q") return 4;
    if (base == "P123") return 6;
    if (base == "S5") return 5;
    return std::nullopt;
}

}  // namespace

std::optional<Attestation> pi1_orb_attestation(const OrbSurface& s, const BranchDivisor& delta) {
    if (delta.empty()) {
        if (s.name == "P2" || s.name == "Q" || s.name == "P123")
            return Attestation{true, "smooth locus of a weighted projective plane is simply connected"};
        return std::nullopt;
    }
    if (delta.size() == 1) {
        const auto k = main_series_complement_order(s.name);
        if (k) {
            const auto& c = delta[0];
            if (c.id == main_series_curve(s.name)) {
                const bool coprime = gcd(c.multiplicity, Integer(*k)) == 1;
                return Attestation{coprime, "complement of the elliptic curve has orbifold pi_1 = Z/" +
                                                std::to_string(*k)};
            }
        }
    }
    if (s.name == "P2") {
        // lines and conics in general position
        for (std::size_t i = 0; i < delta.size(); ++i) {
            const auto& c = delta[i];
            const Integer d = c.degree.at(0);
            if (d != 1 && d != 2) return std::nullopt;
            if (d == 2 && mod(c.multiplicity, Integer(2)) == 0) return std::nullopt;
            if (!c.transversal) return std::nullopt;
            for (std::size_t j = i + 1; j < delta.size(); ++j)
                if (gcd(c.multiplicity, delta[j].multiplicity) != 1) return std::nullopt;
        }
        return Attestation{true, "transversal lines and conics in P2 with coprime weights, odd on conics"};
    }
    return std::nullopt;
}

AbGroup torsion_profile(const OrbSurface& s, const BranchDivisor& delta) {
    const RhsConditions cond = check_rhs_conditions(s, delta);
    if (!cond.all()) throw PreconditionError("rational homology sphere conditions fail: " + cond.failures.front());
    AbGroup t;
    for (const auto& c : delta) t = t + AbGroup::cyclic(c.multiplicity).power(2 * c.genus.get_ui());
    return t;
}

SphereVerdict is_sphere(const OrbSurface& s, const BranchDivisor& delta, const RhsConstruction& c,
                        const std::optional<Attestation>& pi1) {
    if (!c.table.H[2].is_trivial() || !c.table.H[3].is_trivial()) return SphereVerdict::no;
    for (const auto& d : delta)
        if (d.genus != 0) return SphereVerdict::no;
    if (!h1_orb(s, delta).group.is_trivial()) return SphereVerdict::no;
    if (pi1) return pi1->holds ? SphereVerdict::yes : SphereVerdict::no;
    return SphereVerdict::yes_modulo_pi1;
}

RhsConstruction construct(const OrbSurface& s, const BranchDivisor& delta, const std::optional<Attestation>& pi1) {
    require_valid(s, delta);
    const RhsConditions cond = check_rhs_conditions(s, delta);
    if (!cond.all()) {
        std::string msg = "rational homology sphere conditions fail:";
        for (const auto& f : cond.failures) msg += " " + f + ";";
        throw PreconditionError(msg);
    }

    RhsConstruction out;
    Integer M = 1;
    for (const auto& c : delta) M *= c.multiplicity;
    out.M = M;

    // M b_B + sum (M d_j / m_j) b_j = 1
    IntVector coeffs{M};
    for (const auto& c : delta) coeffs.push_back(M / c.multiplicity * c.degree[0]);
    IntVector x;
    if (ext_gcd_many(coeffs, x) != 1) throw ConsistencyError("coefficients of the Chern class equation are not coprime");
    Integer bB = x[0];
    IntVector b(delta.size());
    for (std::size_t j = 0; j < delta.size(); ++j) {
        const Integer& m = delta[j].multiplicity;
        b[j] = mod(x[j + 1], m);
        bB += delta[j].degree[0] * ((x[j + 1] - b[j]) / m);
    }
    out.data = SeifertData{s, delta, IntVector{bB}, b};

    auto certify = [&](std::string name, std::string value, bool ok) {
        out.certificates.push_back({std::move(name), std::move(value), ok});
        if (!ok) throw ConsistencyError("construction check failed: " + out.certificates.back().name + " = " +
                                        out.certificates.back().value);
    };

    const ChernData ch = chern_class(out.data);
    certify("c1", to_string(ch.c1), ch.c1 == RatVector{Rational(1) / Rational(M)});
    certify("smooth", "all points", is_smooth(out.data).smooth);
    const AbGroup h1 = h1_total_space(out.data);
    certify("H1(L)", h1.to_string(), h1.is_trivial());
    const CohomologyResult coh = cohomology(out.data);
    certify("d_w = d_p", coh.d_w.get_str() + " = " + coh.d_p.get_str(), coh.d_w == coh.d_p);
    out.table = coh.table;
    certify("H2 = H4 = 0", out.table.H[2].to_string() + ", " + out.table.H[4].to_string(),
            out.table.H[2].is_trivial() && out.table.H[4].is_trivial());
    out.torsion_profile = torsion_profile(s, delta);
    certify("torsion H3", out.table.H[3].to_string(), out.table.H[3] == out.torsion_profile);

    const auto att = pi1 ? pi1 : pi1_orb_attestation(s, delta);
    out.sphere = is_sphere(s, delta, out, att);
    out.is_S5 = out.sphere == SphereVerdict::yes;
    return out;
}

StructureCount count_structures_for_m(const Integer& m) {
    StructureCount sc;
    sc.below_range = m < 12;
    for (const char* name : {"P2", "Q", "P123", "S5"}) {
        const CatalogEntry e = catalog(name);
        const BranchDivisor delta{e.branch(main_series_curve(name), m)};
        if (check_rhs_conditions(e.surface, delta).all()) {
            ++sc.count;
            sc.bases.emplace_back(name);
        }
    }
    return sc;
}

}  // namespace seifert5
