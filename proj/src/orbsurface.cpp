#include "seifert5/orbsurface.hpp"
#include "seifert5/abgroup.hpp"
#include "seifert5/errors.hpp"

#include <algorithm>

namespace seifert5 {

bool BranchCurve::passes_through(const std::string& point_id) const {
    return std::find(through_points.begin(), through_points.end(), point_id) != through_points.end();
}

const SingularPoint* OrbSurface::find_point(const std::string& id) const {
    for (const auto& p : singular_points)
        if (p.id == id) return &p;
    return nullptr;
}

Integer restrict_to(const SingularPoint& p, std::span<const Integer> weil_class) {
    if (weil_class.size() != p.restriction.size())
        throw StructuralError("restriction at " + p.id + ": class has wrong rank");
    Integer acc = 0;
    for (std::size_t k = 0; k < weil_class.size(); ++k) acc += p.restriction[k] * weil_class[k];
    return mod(acc, p.local_order);
}

namespace {

RatMatrix gram(const OrbSurface& s, const std::vector<IntVector>& basis) {
    RatMatrix g(basis.size(), RatVector(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) g[i][j] = pair(s.pairing, basis[i], basis[j]);
    return g;
}

// Order of the image of Weil(S) in the product of all local class groups.
Integer restriction_image_order(const OrbSurface& s) {
    const std::size_t np = s.singular_points.size();
    if (np == 0) return Integer(1);
    // cokernel of Z^s (+) (+)_x n_x Z -> (+)_x Z, then |image| = prod n / |coker|
    IntMatrix rel(0, np);
    Integer prod = 1;
    for (std::size_t x = 0; x < np; ++x) {
        IntVector row(np, Integer(0));
        row[x] = s.singular_points[x].local_order;
        rel.append_row(row);
        prod *= s.singular_points[x].local_order;
    }
    for (std::size_t k = 0; k < s.weil_rank(); ++k) {
        IntVector row(np);
        for (std::size_t x = 0; x < np; ++x) row[x] = s.singular_points[x].restriction[k];
        rel.append_row(row);
    }
    const AbGroup coker = group_from_presentation(np, rel);
    return prod / coker.torsion_order();
}

}  // namespace

std::vector<std::string> validate(const OrbSurface& s) {
    std::vector<std::string> v;
    const std::size_t n = s.weil_rank();
    if (n == 0) v.push_back("weil_rank must be positive");

    bool shapes_ok = true;
    for (std::size_t i = 0; i < n; ++i)
        if (s.pairing[i].size() != n) {
            v.push_back("pairing row " + std::to_string(i) + " has wrong length");
            shapes_ok = false;
        }
    if (s.canonical.size() != n) {
        v.push_back("canonical class has wrong rank");
        shapes_ok = false;
    }
    for (std::size_t i = 0; i < s.pic_basis.size(); ++i)
        if (s.pic_basis[i].size() != n) {
            v.push_back("pic_basis[" + std::to_string(i) + "] has wrong rank");
            shapes_ok = false;
        }
    for (std::size_t i = 0; i < s.ample_cone_tests.size(); ++i)
        if (s.ample_cone_tests[i].size() != n) {
            v.push_back("ample_cone_tests[" + std::to_string(i) + "] has wrong rank");
            shapes_ok = false;
        }
    for (const auto& p : s.singular_points) {
        if (p.restriction.size() != n) {
            v.push_back("restriction at " + p.id + " has wrong rank");
            shapes_ok = false;
        }
        if (p.local_order < 2) v.push_back("local_order at " + p.id + " must be >= 2");
    }
    if (!shapes_ok || n == 0) return v;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (s.pairing[i][j] != s.pairing[j][i]) v.push_back("pairing is not symmetric");

    for (std::size_t a = 0; a < s.singular_points.size(); ++a)
        for (std::size_t b = a + 1; b < s.singular_points.size(); ++b)
            if (s.singular_points[a].id == s.singular_points[b].id)
                v.push_back("duplicate singular point id " + s.singular_points[a].id);

    for (const auto& p : s.singular_points) {
        if (p.local_order < 2) continue;
        for (const auto& r : p.restriction)
            if (r < 0 || r >= p.local_order) {
                v.push_back("restriction residue at " + p.id + " outside [0, " + p.local_order.get_str() + ")");
                break;
            }
        if (s.h1_zero_attested()) {
            Integer g = p.local_order;
            for (const auto& r : p.restriction) g = gcd(g, r);
            if (g != 1) v.push_back("restriction at " + p.id + " is not surjective onto Z/" + p.local_order.get_str());
        }
    }

    if (s.pic_basis.size() != n) {
        v.push_back("pic_basis must have exactly weil_rank elements");
        return v;
    }

    for (std::size_t i = 0; i < n; ++i) {
        const auto& eta = s.pic_basis[i];
        for (const auto& p : s.singular_points) {
            if (p.local_order < 2) continue;
            if (restrict_to(p, eta) != 0)
                v.push_back("pic_basis[" + std::to_string(i) + "] is not in the kernel of the order-" +
                            p.local_order.get_str() + " restriction at " + p.id);
        }
        for (std::size_t k = 0; k < n; ++k) {
            IntVector e(n, Integer(0));
            e[k] = 1;
            if (pair(s.pairing, eta, e).get_den() != 1)
                v.push_back("pic_basis[" + std::to_string(i) + "] has a non-integral pairing with Weil basis element " +
                            std::to_string(k));
        }
        if (pair(s.pairing, s.canonical, eta).get_den() != 1)
            v.push_back("K . pic_basis[" + std::to_string(i) + "] is not an integer");
    }
    if (!v.empty()) return v;

    // pic_basis must span the whole joint kernel of the restrictions
    IntMatrix pb = IntMatrix::from_rows(s.pic_basis, n);
    const Integer index = abs(determinant(pb));
    if (index == 0) {
        v.push_back("pic_basis is linearly dependent");
        return v;
    }
    const Integer image = restriction_image_order(s);
    if (index != image)
        v.push_back("pic_basis has index " + index.get_str() + " in Weil but the joint kernel of restrictions has index " +
                    image.get_str());

    if (s.h1_zero_attested()) {
        Integer prod = 1;
        for (const auto& p : s.singular_points) prod *= p.local_order;
        const Rational det = abs(determinant(gram(s, s.pic_basis)));
        if (det != Rational(prod))
            v.push_back("|det| of the intersection matrix on Pic is " + det.get_str() +
                        " but the product of local class group orders is " + prod.get_str());
    }
    return v;
}

std::vector<std::string> validate_branch(const OrbSurface& s, const BranchDivisor& delta) {
    std::vector<std::string> v;
    const std::size_t n = s.weil_rank();
    for (std::size_t i = 0; i < delta.size(); ++i) {
        const auto& c = delta[i];
        const std::string tag = "branch curve " + c.id;
        for (std::size_t j = 0; j < i; ++j)
            if (delta[j].id == c.id) v.push_back("duplicate branch curve id " + c.id);
        if (c.multiplicity < 2) v.push_back(tag + ": multiplicity must be >= 2");
        if (c.genus < 0) v.push_back(tag + ": genus must be >= 0");
        if (c.degree.size() != n) {
            v.push_back(tag + ": degree has wrong rank");
            continue;
        }
        if (is_zero(c.degree)) v.push_back(tag + ": zero class");
        for (const auto& pid : c.through_points)
            if (!s.find_point(pid)) v.push_back(tag + ": unknown singular point " + pid);
        for (const auto& p : s.singular_points) {
            if (p.restriction.size() != n || p.local_order < 2) continue;
            if (!c.passes_through(p.id) && restrict_to(p, c.degree) != 0)
                v.push_back(tag + ": not Cartier at " + p.id + " although it avoids that point");
        }
        for (const auto& eta : s.pic_basis) {
            if (eta.size() != n) continue;
            if (pair(s.pairing, c.degree, eta).get_den() != 1)
                v.push_back(tag + ": non-integral intersection with a Pic basis element");
        }
    }
    return v;
}

void require_valid(const OrbSurface& s, const BranchDivisor& delta) {
    auto v = validate(s);
    auto b = validate_branch(s, delta);
    v.insert(v.end(), b.begin(), b.end());
    if (!v.empty()) throw ValidationError(std::move(v));
}

namespace {

const BranchCurve& find_curve(const BranchDivisor& delta, const std::string& id) {
    for (const auto& c : delta)
        if (c.id == id) return c;
    throw StructuralError("unknown branch curve " + id);
}

LocalMultiplicities combine(const std::vector<const BranchCurve*>& incident, const Integer& order,
                            const std::string& where) {
    if (incident.size() > 2)
        throw PreconditionError("not locally cyclic at " + where + ": more than two branch curves meet there");
    Integer m = 1;
    for (std::size_t a = 0; a < incident.size(); ++a) {
        for (std::size_t b = a + 1; b < incident.size(); ++b)
            if (gcd(incident[a]->multiplicity, incident[b]->multiplicity) != 1)
                throw PreconditionError("not locally cyclic at " + where + ": multiplicities of " + incident[a]->id +
                                        " and " + incident[b]->id + " are not coprime");
        m = lcm(m, incident[a]->multiplicity);
    }
    return {m, order, m * order};
}

}  // namespace

LocalMultiplicities local_multiplicities(const OrbSurface& s, const BranchDivisor& delta, const PointRef& x) {
    std::vector<const BranchCurve*> incident;
    if (x.singular_id) {
        const SingularPoint* p = s.find_point(*x.singular_id);
        if (!p) throw StructuralError("unknown singular point " + *x.singular_id);
        for (const auto& c : delta)
            if (c.passes_through(p->id)) incident.push_back(&c);
        return combine(incident, p->local_order, p->id);
    }
    for (const auto& id : x.incident_curves) incident.push_back(&find_curve(delta, id));
    return combine(incident, Integer(1), "smooth point");
}

std::vector<std::pair<std::size_t, std::size_t>> smooth_crossings(const OrbSurface& s, const BranchDivisor& delta) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < delta.size(); ++i)
        for (std::size_t j = i + 1; j < delta.size(); ++j) {
            bool share = false;
            for (const auto& pid : delta[i].through_points)
                if (delta[j].passes_through(pid)) share = true;
            if (!share && pair(s.pairing, delta[i].degree, delta[j].degree) > 0) out.emplace_back(i, j);
        }
    return out;
}

GlobalMultiplicities global_multiplicities(const OrbSurface& s, const BranchDivisor& delta) {
    GlobalMultiplicities g{Integer(1), Integer(1), Integer(1)};
    for (const auto& c : delta) {
        g.m_delta = lcm(g.m_delta, c.multiplicity);
        // generic point of the curve
        g.m_x_delta = lcm(g.m_x_delta, c.multiplicity);
    }
    for (const auto& p : s.singular_points) {
        g.m_x = lcm(g.m_x, p.local_order);
        g.m_x_delta = lcm(g.m_x_delta, local_multiplicities(s, delta, PointRef::singular(p.id)).m_x_delta);
    }
    for (const auto& [i, j] : smooth_crossings(s, delta))
        g.m_x_delta = lcm(g.m_x_delta,
                          local_multiplicities(s, delta, PointRef::smooth({delta[i].id, delta[j].id})).m_x_delta);
    if (mod(g.m_delta * g.m_x, g.m_x_delta) != 0)
        throw ConsistencyError("M(X,Delta) does not divide M(Delta) * M(X)");
    return g;
}

RatVector log_canonical_class(const OrbSurface& s, const BranchDivisor& delta) {
    RatVector k = to_rational(s.canonical);
    for (const auto& c : delta) {
        if (c.degree.size() != k.size()) throw StructuralError("branch curve " + c.id + " has wrong rank");
        const Rational coeff = 1 - Rational(1) / Rational(c.multiplicity);
        for (std::size_t i = 0; i < k.size(); ++i) k[i] += coeff * c.degree[i];
    }
    return k;
}

LogDelPezzoWitness is_log_del_pezzo(const OrbSurface& s, const BranchDivisor& delta) {
    if (s.ample_cone_tests.empty()) throw PreconditionError("ampleness undecidable: no ample-cone test classes");
    LogDelPezzoWitness w;
    w.anti_log_canonical = scale(Rational(-1), log_canonical_class(s, delta));
    w.is_log_del_pezzo = true;
    for (const auto& t : s.ample_cone_tests) {
        const Rational p = pair(s.pairing, t, w.anti_log_canonical);
        w.pairings.push_back(p);
        if (p <= 0) w.is_log_del_pezzo = false;
    }
    return w;
}

Rational adjunction_genus(const OrbSurface& s, std::span<const Integer> curve) {
    const Rational c2 = pair(s.pairing, curve, curve);
    const Rational ck = pair(s.pairing, curve, s.canonical);
    return 1 + (c2 + ck) / 2;
}

}  // namespace seifert5
