#include "seifert5/classify.hpp"
#include "seifert5/errors.hpp"
#include "seifert5/rhs.hpp"
#include "seifert5/topology.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace seifert5 {

std::string to_string(DelPezzoBase b) {
    switch (b) {
        case DelPezzoBase::P123: return "P123";
        case DelPezzoBase::Q: return "Q";
        case DelPezzoBase::P2: return "P2";
        case DelPezzoBase::P1xP1: return "P1xP1";
        case DelPezzoBase::S5: return "S5";
    }
    return "?";
}

int k_squared(DelPezzoBase b) {
    switch (b) {
        case DelPezzoBase::P123: return 6;
        case DelPezzoBase::Q: return 8;
        case DelPezzoBase::P2: return 9;
        case DelPezzoBase::P1xP1: return 8;
        case DelPezzoBase::S5: return 5;
    }
    return 0;
}

int base_picard_number(DelPezzoBase b) { return b == DelPezzoBase::P1xP1 ? 2 : 1; }

std::vector<std::string> base_singularities(DelPezzoBase b) {
    switch (b) {
        case DelPezzoBase::P123: return {"A1", "A2"};
        case DelPezzoBase::Q: return {"A1"};
        case DelPezzoBase::S5: return {"A4"};
        default: return {};
    }
}

std::string DeformationType::name() const {
    if (blowups.empty()) return to_string(base);
    std::string s = "B{";
    for (std::size_t i = 0; i < blowups.size(); ++i) s += (i ? "," : "") + std::to_string(blowups[i]);
    return s + "}" + to_string(base);
}

DeformationType make_deformation_type(DelPezzoBase base, std::vector<int> blowups, bool exceptional) {
    std::sort(blowups.begin(), blowups.end(), std::greater<>());
    DeformationType t{base, std::move(blowups), 0, base_singularities(base), 0, exceptional};
    int sum = 0;
    for (int m : t.blowups) {
        sum += m;
        // a blow-up of type m leaves an A_{m-1} point
        if (m >= 2) t.singularity_profile.push_back("A" + std::to_string(m - 1));
    }
    std::sort(t.singularity_profile.begin(), t.singularity_profile.end());
    t.k_squared_remaining = k_squared(base) - sum;
    t.picard_number = base_picard_number(base) + static_cast<int>(t.blowups.size());
    return t;
}

namespace {

void partitions(int budget, int max_part, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    for (int p = std::min(budget, max_part); p >= min_part; --p) {
        cur.push_back(p);
        partitions(budget - p, p, min_part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<DeformationType> enumerate_del_pezzo() {
    std::vector<DeformationType> out;
    for (DelPezzoBase b : {DelPezzoBase::P123, DelPezzoBase::Q, DelPezzoBase::P2, DelPezzoBase::P1xP1}) {
        // blow-ups of type 1 are only kept over P1xP1; elsewhere they reproduce another family
        const int min_part = b == DelPezzoBase::P1xP1 ? 1 : 2;
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions(k_squared(b) - 1, k_squared(b) - 1, min_part, cur, parts);
        for (auto& p : parts) out.push_back(make_deformation_type(b, std::move(p)));
    }
    out.push_back(make_deformation_type(DelPezzoBase::S5, {}, true));
    out.push_back(make_deformation_type(DelPezzoBase::S5, {3}, true));
    out.push_back(make_deformation_type(DelPezzoBase::S5, {4}, true));
    out.push_back(make_deformation_type(DelPezzoBase::P2, {1}, true));
    return out;
}

TorsionVerdict torsion_allowed(const AbGroup& t) {
    if (!t.is_finite()) throw PreconditionError("torsion classification needs a finite group, got " + t.to_string());
    const IntVector& f = t.invariant_factors();
    auto all_equal = [&](long v) {
        return std::all_of(f.begin(), f.end(), [&](const Integer& x) { return x == v; });
    };
    if (f.empty()) return {true, 1, "(Z/m)^2 with m = 1"};
    if (f.size() == 2 && f[0] == f[1]) return {true, 1, "(Z/m)^2"};
    if (f.size() == 4 && (all_equal(5) || all_equal(4))) return {true, 2, "(Z/5)^4 or (Z/4)^4"};
    if ((f.size() == 4 || f.size() == 6 || f.size() == 8) && all_equal(3)) return {true, 3, "(Z/3)^4, (Z/3)^6 or (Z/3)^8"};
    if (f.size() % 2 == 0 && all_equal(2)) return {true, 4, "(Z/2)^(2n)"};
    return {false, 0, "matches none of the admissible shapes"};
}

std::optional<int> genus_bound(const Rational& a0) {
    if (a0 < Rational(1, 2) || a0 >= 1) throw PreconditionError("coefficient " + a0.get_str() + " outside [1/2, 1)");
    if (a0 >= Rational(5, 6)) return 1;
    if (a0 >= Rational(3, 4)) return 2;
    if (a0 >= Rational(2, 3)) return 4;
    return std::nullopt;
}

bool is_double(const AbGroup& t) {
    const IntVector& f = t.invariant_factors();
    std::map<Integer, int> count;
    for (const auto& x : f) ++count[x];
    return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second % 2 == 0; });
}

std::string identify_manifold(const AbGroup& h2, bool w2_zero, bool simply_connected) {
    if (!simply_connected) throw PreconditionError("manifold identification needs a simply connected total space");
    if (!w2_zero) throw PreconditionError("manifold identification needs w2 = 0");
    if (!is_double(h2)) throw PreconditionError("not realizable by Smale's theorem: torsion " + h2.torsion().to_string() +
                                                " is not of the form A + A");
    std::vector<std::string> pieces;
    const std::size_t k = h2.free_rank();
    if (k == 1) pieces.push_back("S^2 x S^3");
    if (k > 1) pieces.push_back("#" + std::to_string(k) + "(S^2 x S^3)");
    const IntVector& f = h2.invariant_factors();
    for (std::size_t i = 0; i < f.size(); i += 2) pieces.push_back("M_" + f[i].get_str());
    if (pieces.empty()) return "S^5";
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) out += (i ? " # " : "") + pieces[i];
    return out;
}

namespace {

AbGroup cyc_pow(long m, std::size_t k) { return AbGroup::cyclic(Integer(m)).power(k); }

BoundaryExample example(std::string label, std::string surface, std::vector<std::pair<std::string, Integer>> branch,
                        std::string range, std::vector<Integer> genera, bool ldp) {
    BoundaryExample e;
    e.label = std::move(label);
    e.surface = std::move(surface);
    e.branch = std::move(branch);
    e.m_range = std::move(range);
    e.genera = std::move(genera);
    e.log_del_pezzo = ldp;
    return e;
}

}  // namespace

std::vector<BoundaryExample> nonrational_boundary_catalog() {
    std::vector<BoundaryExample> out;
    {
        auto e = example("(F3, 4/5 C)", "F3", {{"quadric", 5}}, "m <= 5", {2}, true);
        e.torsion = cyc_pow(5, 4);
        out.push_back(e);
    }
    {
        auto e = example("(F3, 3/4 C)", "F3", {{"quadric", 4}}, "m <= 5", {2}, true);
        e.obstruction_prime = Integer(2);
        out.push_back(e);
    }
    {
        auto e = example("(F4, 2/3 C)", "F4", {{"quadric", 3}}, "m <= 3", {3}, true);
        e.torsion = cyc_pow(3, 6);
        out.push_back(e);
    }
    {
        auto e = example("(F5, 2/3 C)", "F5", {{"quadric", 3}}, "m <= 3", {4}, true);
        e.torsion = cyc_pow(3, 8);
        out.push_back(e);
    }
    for (long n = 3; n <= 8; ++n) {
        auto e = example("(F" + std::to_string(n) + ", 1/2 C)", "F" + std::to_string(n), {{"quadric", 2}}, "m = 2",
                         {Integer(n - 1)}, true);
        e.obstruction_prime = Integer(2);
        out.push_back(e);
    }
    {
        // quintic through the vertex of the quadric cone
        auto e = example("(Q, 3/4 C5)", "Q", {{"quintic", 4}}, "m = 4", {2}, true);
        e.torsion = cyc_pow(4, 4);
        out.push_back(e);
    }
    {
        auto e = example("(Hirz1, 2/3 D + 1/2 E)", "Hirz1", {{"D", 3}, {"E", 2}}, "m = 3", {2, 0}, true);
        e.torsion = cyc_pow(3, 4);
        out.push_back(e);
    }
    for (long n = 2; n <= 5; ++n) {
        const long m = 2 * n + 1;
        auto e = example("(Hirz" + std::to_string(n) + ", 1/2 C + " + std::to_string(m - 1) + "/" + std::to_string(m) + " E)",
                         "Hirz" + std::to_string(n), {{"C", 2}, {"E", m}}, "m > " + std::to_string(2 * n) + ", m odd",
                         {Integer(n + 2), Integer(0)}, true);
        e.torsion = cyc_pow(2, 2 * static_cast<std::size_t>(n + 2));
        out.push_back(e);
    }
    {
        auto e = example("(Hirz3, 4/5 G)", "Hirz3", {{"G", 5}}, "m = 5", {2}, false);
        out.push_back(e);
    }
    {
        auto e = example("(P123, 1/2 line + 10/11 sextic)", "P123", {{"line", 2}, {"sextic", 11}}, "m <= 11", {0, 1},
                         true);
        e.torsion = cyc_pow(11, 2);
        out.push_back(e);
    }
    {
        auto e = example("(P125, 3/4 C10)", "P125", {{"C10", 4}}, "m = 4", {2}, true);
        e.obstruction_prime = Integer(2);
        out.push_back(e);
    }
    {
        // contraction of an E8-type fibre on a degree one del Pezzo; no lattice model here
        auto e = example("(S*, 9/10 D0)", "S*", {{"D0", 10}}, "m = 10", {1}, true);
        e.derivable = false;
        out.push_back(e);
    }
    return out;
}

BranchDivisor branch_of(const BoundaryExample& ex, const CatalogEntry& e) {
    BranchDivisor d;
    for (const auto& [id, m] : ex.branch) d.push_back(e.branch(id, m));
    return d;
}

BoundaryCheck verify_boundary_example(const BoundaryExample& ex) {
    BoundaryCheck r;
    if (!ex.derivable) {
        r.log_del_pezzo_ok = true;
        r.detail = "recorded without a lattice model";
        return r;
    }
    const CatalogEntry e = catalog(ex.surface);
    const BranchDivisor delta = branch_of(ex, e);
    require_valid(e.surface, delta);
    for (std::size_t i = 0; i < delta.size() && i < ex.genera.size(); ++i)
        if (delta[i].genus != ex.genera[i]) r.detail += "genus of " + delta[i].id + " differs; ";

    const bool ldp = is_log_del_pezzo(e.surface, delta).is_log_del_pezzo;
    r.log_del_pezzo_ok = ldp == ex.log_del_pezzo && r.detail.empty();

    if (ex.torsion) {
        AbGroup h3;
        if (e.surface.weil_rank() == 1) {
            h3 = construct(e.surface, delta).table.H[3];
        } else {
            const auto sd = find_h1_trivial_bundle(e.surface, delta);
            if (!sd) {
                r.torsion_ok = false;
                r.detail += "no bundle with trivial H1 found; ";
                return r;
            }
            h3 = cohomology(*sd).table.H[3];
        }
        r.torsion_ok = h3.torsion() == *ex.torsion;
        r.detail += "H3 torsion " + h3.torsion().to_string();
    }
    if (ex.obstruction_prime) {
        const bool obstructed = p_cover_obstruction(e.surface, delta, *ex.obstruction_prime);
        const AbGroup h1 = h1_orb(e.surface, delta).group;
        r.obstruction_ok = obstructed && h1.count_killed_by(*ex.obstruction_prime) > 1;
        r.detail += "orbifold H1 " + h1.to_string();
    }
    return r;
}

}  // namespace seifert5
