#include "seifert5/seifert.hpp"
#include "seifert5/errors.hpp"
#include "seifert5/topology.hpp"

namespace seifert5 {

void validate_seifert(const SeifertData& sd) {
    std::vector<std::string> v;
    if (sd.B.size() != sd.base.weil_rank()) v.push_back("B has wrong rank");
    if (sd.b.size() != sd.delta.size()) v.push_back("b must have one entry per branch curve");
    for (std::size_t i = 0; i < std::min(sd.b.size(), sd.delta.size()); ++i) {
        const auto& m = sd.delta[i].multiplicity;
        const auto& bi = sd.b[i];
        if (bi < 0 || bi >= m) v.push_back("b[" + sd.delta[i].id + "] outside [0, " + m.get_str() + ")");
        else if (gcd(bi, m) != 1) v.push_back("b[" + sd.delta[i].id + "] is not coprime to " + m.get_str());
    }
    if (!v.empty()) throw ValidationError(std::move(v));
}

namespace {

RatVector compute_c1(const SeifertData& sd) {
    RatVector c = to_rational(sd.B);
    for (std::size_t i = 0; i < sd.delta.size(); ++i) {
        const Rational f = Rational(sd.b[i]) / Rational(sd.delta[i].multiplicity);
        for (std::size_t k = 0; k < c.size(); ++k) c[k] += f * sd.delta[i].degree[k];
    }
    return c;
}

IntVector integral_multiple(const Integer& M, const RatVector& c, const char* what) {
    IntVector out;
    if (!to_integer(scale(Rational(M), c), out)) throw ConsistencyError(std::string(what) + " is not integral");
    return out;
}

// M(x, Delta) * c1 as a Weil divisor, dropping the curves that miss x.
Integer local_residue(const SeifertData& sd, const SingularPoint& p, const Integer& m_x_delta) {
    IntVector w = scale(m_x_delta, sd.B);
    for (std::size_t i = 0; i < sd.delta.size(); ++i) {
        const auto& c = sd.delta[i];
        if (!c.passes_through(p.id)) continue;
        const Integer f = m_x_delta / c.multiplicity * sd.b[i];
        for (std::size_t k = 0; k < w.size(); ++k) w[k] += f * c.degree[k];
    }
    return restrict_to(p, w);
}

}  // namespace

ChernData chern_class(const SeifertData& sd) {
    validate_seifert(sd);
    ChernData ch;
    ch.c1 = compute_c1(sd);
    const GlobalMultiplicities g = global_multiplicities(sd.base, sd.delta);
    ch.m_delta = g.m_delta;
    ch.m_x_delta = g.m_x_delta;
    ch.m_delta_c1 = integral_multiple(g.m_delta, ch.c1, "M(Delta) * c1");
    for (const auto& p : sd.base.singular_points) {
        const auto lm = local_multiplicities(sd.base, sd.delta, PointRef::singular(p.id));
        ch.residues.push_back({p.id, p.local_order, lm.m_delta, local_residue(sd, p, lm.m_delta)});
    }
    const IntVector w = integral_multiple(g.m_x_delta, ch.c1, "M(X, Delta) * c1");
    RatMatrix basis;
    for (const auto& eta : sd.base.pic_basis) basis.push_back(to_rational(eta));
    RatVector coords;
    if (!solve_left(basis, to_rational(w), coords) || !to_integer(coords, ch.m_x_delta_c1_pic))
        throw ConsistencyError("M(X, Delta) * c1 = " + to_string(w) + " does not lie in the Pic lattice");
    return ch;
}

SmoothnessReport is_smooth(const SeifertData& sd) {
    const ChernData ch = chern_class(sd);
    SmoothnessReport r;
    for (const auto& pr : ch.residues) {
        SmoothnessCheck c{pr.point, pr.local_order, pr.residue, gcd(pr.residue, pr.local_order) == 1};
        r.smooth = r.smooth && c.smooth;
        r.checks.push_back(std::move(c));
    }
    // crossings of branch curves at smooth points have trivial local class group
    for (const auto& [i, j] : smooth_crossings(sd.base, sd.delta)) {
        local_multiplicities(sd.base, sd.delta, PointRef::smooth({sd.delta[i].id, sd.delta[j].id}));
        r.checks.push_back({sd.delta[i].id + " x " + sd.delta[j].id, Integer(1), Integer(0), true});
    }
    return r;
}

IntMatrix h1_presentation(const SeifertData& sd) {
    validate_seifert(sd);
    const std::size_t n = sd.delta.size();
    IntMatrix rel(0, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        IntVector row(n + 1, Integer(0));
        row[0] = sd.b[i];
        row[i + 1] = sd.delta[i].multiplicity;
        rel.append_row(row);
    }
    for (const auto& eta : sd.base.pic_basis) {
        IntVector row(n + 1);
        const Rational kb = pair(sd.base.pairing, sd.B, eta);
        if (kb.get_den() != 1) throw ValidationError({"B has non-integral intersection with a Pic basis element"});
        row[0] = kb.get_num();
        for (std::size_t i = 0; i < n; ++i) {
            const Rational di = pair(sd.base.pairing, sd.delta[i].degree, eta);
            if (di.get_den() != 1)
                throw ValidationError({"curve " + sd.delta[i].id + " has non-integral intersection with a Pic basis element"});
            row[i + 1] = -di.get_num();
        }
        rel.append_row(row);
    }
    return rel;
}

AbGroup h1_total_space(const SeifertData& sd) {
    if (!h1_smooth_locus_trivial(sd.base).trivial)
        throw PreconditionError(sd.base.name + ": H1 of the smooth locus is not trivial");
    return group_from_presentation(sd.delta.size() + 1, h1_presentation(sd));
}

Integer fiber_order_bound(const SeifertData& sd) {
    const ChernData ch = chern_class(sd);
    if (is_zero(ch.m_delta_c1)) throw PreconditionError("c1 = 0, d undefined");
    return content(ch.m_delta_c1);
}

CohomologyResult cohomology(const SeifertData& sd) {
    if (!h1_orb(sd.base, sd.delta).group.is_trivial()) throw PreconditionError("orbifold H1 is not trivial");
    const ChernData ch = chern_class(sd);
    if (is_zero(ch.m_delta_c1)) throw PreconditionError("c1 = 0: the total space is not rationally 1-connected");
    const SmoothnessReport sm = is_smooth(sd);
    if (!sm.smooth) throw PreconditionError("the Seifert bundle is not smooth");

    CohomologyResult r;
    r.d_w = content(ch.m_delta_c1);
    r.d_p = content(ch.m_x_delta_c1_pic);
    if (r.d_w != r.d_p)
        throw ConsistencyError("divisibility in Weil (" + r.d_w.get_str() + ") and in Pic (" + r.d_p.get_str() +
                               ") disagree");
    const std::size_t s = sd.base.weil_rank();
    AbGroup h3_torsion;
    for (const auto& c : sd.delta) {
        if (c.genus == 0) continue;
        h3_torsion = h3_torsion + AbGroup::cyclic(c.multiplicity).power(2 * c.genus.get_ui());
    }
    auto& t = r.table;
    t.s = s;
    t.d = r.d_w;
    t.H[0] = AbGroup::free(1);
    t.H[1] = AbGroup::trivial();
    t.H[2] = AbGroup::free(s - 1) + AbGroup::cyclic(r.d_w);
    t.H[3] = AbGroup::free(s - 1) + h3_torsion;
    t.H[4] = AbGroup::cyclic(r.d_w);
    t.H[5] = AbGroup::free(1);
    return r;
}

W2Report w2_report(const SeifertData& sd) {
    W2Report r;
    r.proportional = proportional(log_canonical_class(sd.base, sd.delta), compute_c1(sd));
    r.w2_zero = r.proportional;
    return r;
}

SeifertData flip_orientation(const SeifertData& sd) {
    validate_seifert(sd);
    SeifertData f = sd;
    for (auto& x : f.B) x = -x;
    for (std::size_t i = 0; i < f.delta.size(); ++i) {
        for (std::size_t k = 0; k < f.B.size(); ++k) f.B[k] -= f.delta[i].degree[k];
        f.b[i] = f.delta[i].multiplicity - f.b[i];
    }
    return f;
}

std::optional<SeifertData> find_h1_trivial_bundle(const OrbSurface& s, const BranchDivisor& delta, long radius) {
    if (!h1_smooth_locus_trivial(s).trivial) throw PreconditionError(s.name + ": H1 of the smooth locus is not trivial");
    const std::size_t rank = s.weil_rank(), n = delta.size();
    const RatVector target = scale(Rational(-1), log_canonical_class(s, delta));

    std::vector<IntVector> unit_choices(n);
    for (std::size_t i = 0; i < n; ++i)
        for (Integer u = 1; u < delta[i].multiplicity; ++u)
            if (gcd(u, delta[i].multiplicity) == 1) unit_choices[i].push_back(u);
    for (const auto& u : unit_choices)
        if (u.empty()) return std::nullopt;

    SeifertData sd{s, delta, IntVector(rank, Integer(-radius)), IntVector(n)};
    std::vector<std::size_t> ui(n, 0);
    std::optional<SeifertData> fallback;
    while (true) {
        for (std::size_t i = 0; i < n; ++i) sd.b[i] = unit_choices[i][ui[i]];
        const RatVector c1 = compute_c1(sd);
        if (!is_zero(c1) && h1_total_space(sd).is_trivial() && is_smooth(sd).smooth) {
            bool positive = proportional(c1, target);
            if (positive)
                for (std::size_t k = 0; k < rank; ++k)
                    if (c1[k] != 0 || target[k] != 0) {
                        positive = sgn(c1[k]) == sgn(target[k]);
                        break;
                    }
            if (positive) return sd;
            if (!fallback) fallback = sd;
        }
        // odometer over units, then over B
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++ui[i] < unit_choices[i].size()) break;
            ui[i] = 0;
        }
        if (i < n) continue;
        std::size_t k = 0;
        for (; k < rank; ++k) {
            if (++sd.B[k] <= radius) break;
            sd.B[k] = -radius;
        }
        if (k == rank) break;
    }
    return fallback;
}

}  // namespace seifert5
