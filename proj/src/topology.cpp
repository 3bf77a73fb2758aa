#include "seifert5/topology.hpp"
#include "seifert5/errors.hpp"

#include <set>

namespace seifert5 {

SmoothLocusCertificate h1_smooth_locus_trivial(const OrbSurface& s) {
    if (!s.h1_zero_attested()) throw PreconditionError(s.name + ": H1(S) = 0 is not attested");
    if (s.pic_basis.empty()) throw PreconditionError(s.name + ": missing pic_basis");
    RatMatrix g(s.pic_basis.size(), RatVector(s.pic_basis.size()));
    for (std::size_t i = 0; i < s.pic_basis.size(); ++i)
        for (std::size_t j = 0; j < s.pic_basis.size(); ++j) g[i][j] = pair(s.pairing, s.pic_basis[i], s.pic_basis[j]);
    SmoothLocusCertificate c;
    c.pic_determinant = abs(determinant(std::move(g)));
    c.local_order_product = 1;
    for (const auto& p : s.singular_points) c.local_order_product *= p.local_order;
    c.trivial = c.pic_determinant == Rational(c.local_order_product);
    return c;
}

namespace {

Integer integral_pairing(const OrbSurface& s, const IntVector& a, const IntVector& b, const std::string& what) {
    const Rational v = pair(s.pairing, a, b);
    if (v.get_den() != 1) throw ValidationError({what + " has non-integral intersection " + v.get_str()});
    return v.get_num();
}

}  // namespace

OrbH1Report h1_orb(const OrbSurface& s, const BranchDivisor& delta) {
    if (!h1_smooth_locus_trivial(s).trivial)
        throw PreconditionError(s.name + ": H1 of the smooth locus is not trivial; the orbifold presentation does not apply");
    const std::size_t n = delta.size();
    OrbH1Report r;
    r.prerequisites_met = true;
    r.presentation = IntMatrix(0, n);
    for (std::size_t j = 0; j < n; ++j) {
        IntVector row(n, Integer(0));
        row[j] = delta[j].multiplicity;
        r.presentation.append_row(row);
    }
    for (const auto& eta : s.pic_basis) {
        IntVector row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = integral_pairing(s, delta[j].degree, eta, "curve " + delta[j].id);
        r.presentation.append_row(row);
    }
    r.group = group_from_presentation(n, r.presentation);
    return r;
}

Integer weil_degree(const OrbSurface& s, const BranchCurve& c) {
    if (s.weil_rank() != 1) throw PreconditionError("degree is only defined on Picard-rank-one surfaces");
    if (c.degree.size() != 1) throw StructuralError("curve " + c.id + " has wrong rank");
    return abs(c.degree[0]);
}

bool rho1_h1orb_zero(const OrbSurface& s, const BranchDivisor& delta) {
    if (s.weil_rank() != 1) throw PreconditionError("rank-one test applied to a surface of Weil rank " +
                                                    std::to_string(s.weil_rank()));
    for (std::size_t i = 0; i < delta.size(); ++i) {
        if (gcd(delta[i].multiplicity, weil_degree(s, delta[i])) != 1) return false;
        for (std::size_t j = i + 1; j < delta.size(); ++j)
            if (gcd(delta[i].multiplicity, delta[j].multiplicity) != 1) return false;
    }
    return true;
}

bool p_cover_obstruction(const OrbSurface& s, const BranchDivisor& delta, const Integer& p) {
    if (p < 2) throw StructuralError("p must be a prime");
    IntMatrix deg(0, s.weil_rank());
    for (const auto& c : delta)
        if (mod(c.multiplicity, p) == 0) deg.append_row(c.degree);
    if (deg.rows() == 0) return false;
    // a nonzero left kernel mod p exists iff the rank mod p is below the row count
    const SmithForm f = smith_normal_form(deg);
    std::size_t rank_mod_p = 0;
    for (const auto& d : f.diagonal)
        if (mod(d, p) != 0) ++rank_mod_p;
    return rank_mod_p < deg.rows();
}

CyVerdict cy_branch_check(const OrbSurface& s, const BranchDivisor& delta) {
    const RatVector k = log_canonical_class(s, delta);
    for (const auto& eta : s.pic_basis)
        if (pair(s.pairing, to_rational(eta), k) != 0) throw PreconditionError("not Calabi-Yau input: K + Delta is not numerically trivial");
    CyVerdict v;
    if (delta.empty()) {
        v.consistent = true;
        return v;
    }
    std::set<Integer> primes;
    for (const auto& c : delta) {
        Integer m = c.multiplicity;
        for (Integer q = 2; q * q <= m; ++q)
            while (mod(m, q) == 0) {
                primes.insert(q);
                m /= q;
            }
        if (m > 1) primes.insert(m);
    }
    for (const auto& p : primes)
        if (p_cover_obstruction(s, delta, p)) {
            v.obstructing_prime = p;
            break;
        }
    return v;
}

}  // namespace seifert5
