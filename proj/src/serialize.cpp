#include "seifert5/serialize.hpp"
#include "seifert5/errors.hpp"

namespace seifert5 {

json to_json(const Integer& z) {
    if (fits_int64(z)) return to_int64(z);
    return z.get_str();
}

json to_json(const Rational& q) { return {{"num", to_json(q.get_num())}, {"den", to_json(q.get_den())}}; }

namespace {

json ints(const IntVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

json rats(const RatVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

}  // namespace

json to_json(const Attestation& a) { return {{"holds", a.holds}, {"provenance", a.provenance}}; }

json to_json(const SingularPoint& p) {
    return {{"id", p.id}, {"local_order", to_json(p.local_order)}, {"restriction", ints(p.restriction)}};
}

json to_json(const BranchCurve& c) {
    return {{"id", c.id},
            {"degree", ints(c.degree)},
            {"genus", to_json(c.genus)},
            {"multiplicity", to_json(c.multiplicity)},
            {"through_points", c.through_points},
            {"orbismooth", c.orbismooth},
            {"transversal", c.transversal}};
}

json to_json(const OrbSurface& s) {
    json j;
    j["name"] = s.name;
    j["weil_rank"] = s.weil_rank();
    json pairing = json::array();
    for (const auto& row : s.pairing) pairing.push_back(rats(row));
    j["pairing"] = pairing;
    j["canonical"] = ints(s.canonical);
    json pic = json::array();
    for (const auto& v : s.pic_basis) pic.push_back(ints(v));
    j["pic_basis"] = pic;
    json pts = json::array();
    for (const auto& p : s.singular_points) pts.push_back(to_json(p));
    j["singular_points"] = pts;
    json tests = json::array();
    for (const auto& t : s.ample_cone_tests) tests.push_back(rats(t));
    j["ample_cone_tests"] = tests;
    if (s.h1_zero) j["h1_zero"] = to_json(*s.h1_zero);
    return j;
}

json to_json(const AbGroup& g) {
    return {{"free_rank", g.free_rank()}, {"invariant_factors", ints(g.invariant_factors())}, {"text", g.to_string()}};
}

json to_json(const CohomologyTable& t) {
    json j;
    for (std::size_t i = 0; i < 6; ++i) j["H" + std::to_string(i)] = to_json(t.H[i]);
    j["d"] = to_json(t.d);
    j["s"] = t.s;
    return j;
}

json to_json(const SeifertData& sd) {
    json b = json::object();
    for (std::size_t i = 0; i < sd.delta.size() && i < sd.b.size(); ++i) b[sd.delta[i].id] = to_json(sd.b[i]);
    json branch = json::array();
    for (const auto& c : sd.delta) branch.push_back(to_json(c));
    return {{"surface", to_json(sd.base)}, {"branch", branch}, {"B", ints(sd.B)}, {"b", b}};
}

json to_json(const RhsConstruction& c) {
    json certs = json::array();
    for (const auto& k : c.certificates) certs.push_back({{"name", k.name}, {"value", k.value}, {"passed", k.passed}});
    return {{"bundle", to_json(c.data)},
            {"orientation", c.orientation},
            {"M", to_json(c.M)},
            {"torsion_profile", to_json(c.torsion_profile)},
            {"cohomology", to_json(c.table)},
            {"sphere", to_string(c.sphere)},
            {"is_S5", c.is_S5},
            {"certificates", certs}};
}

json to_json(const KECertificate& c) {
    json ineq = json::array();
    for (const auto& i : c.inequalities)
        ineq.push_back({{"expression", i.expression}, {"value", to_json(i.value)}, {"bound", to_json(i.bound)}, {"holds", i.holds}});
    json att = json::object();
    auto put = [&](const char* k, const std::optional<Attestation>& a) {
        if (a) att[k] = to_json(*a);
    };
    put("anticanonical_multiple", c.attestations.anticanonical_multiple);
    put("branch_multiple", c.attestations.branch_multiple);
    put("local_orders", c.attestations.local_orders);
    put("special_line", c.attestations.special_line);
    return {{"surface", c.surface_name}, {"curve", c.curve},   {"m", to_json(c.m)},
            {"rule", c.rule},            {"d", to_json(c.d)},  {"a", to_json(c.a)},
            {"b", to_json(c.b)},         {"inequalities", ineq}, {"attestations", att},
            {"verdict", to_string(c.verdict)}};
}

json to_json(const DeformationType& t) {
    return {{"name", t.name()},
            {"base", to_string(t.base)},
            {"blowups", t.blowups},
            {"k_squared_remaining", t.k_squared_remaining},
            {"singularities", t.singularity_profile},
            {"picard_number", t.picard_number},
            {"exceptional", t.exceptional}};
}

json to_json(const TorsionVerdict& v) { return {{"allowed", v.allowed}, {"clause", v.clause}, {"rule", v.rule}}; }

json to_json(const OrbH1Report& r) {
    json rows = json::array();
    for (std::size_t i = 0; i < r.presentation.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < r.presentation.cols(); ++k) row.push_back(to_json(r.presentation(i, k)));
        rows.push_back(row);
    }
    return {{"group", to_json(r.group)}, {"presentation", rows}, {"prerequisites_met", r.prerequisites_met}};
}

namespace {

// Collects schema violations; decoding continues with defaults so all problems are reported at once.
class Reader {
public:
    std::vector<std::string> errors;

    void fail(const std::string& path, const std::string& what) { errors.push_back(path + ": " + what); }

    void finish() {
        if (!errors.empty()) throw ValidationError(std::move(errors));
    }

    const json* field(const json& j, const std::string& path, const char* key, bool required = true) {
        if (!j.is_object()) {
            fail(path, "expected an object");
            return nullptr;
        }
        auto it = j.find(key);
        if (it == j.end()) {
            if (required) fail(path + "." + key, "missing");
            return nullptr;
        }
        return &*it;
    }

    Integer integer(const json& j, const std::string& path) {
        if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                                                 : make_int(j.get<std::int64_t>());
        if (j.is_string()) {
            Integer z;
            if (z.set_str(j.get<std::string>(), 10) == 0) return z;
        }
        fail(path, "expected an integer");
        return Integer(0);
    }

    Rational rational(const json& j, const std::string& path) {
        if (j.is_number_integer() || j.is_string()) return Rational(integer(j, path));
        if (!j.is_object()) {
            fail(path, "expected {\"num\": ..., \"den\": ...}");
            return Rational(0);
        }
        const json* n = field(j, path, "num");
        const json* d = field(j, path, "den");
        if (!n || !d) return Rational(0);
        const Integer num = integer(*n, path + ".num"), den = integer(*d, path + ".den");
        if (den == 0) {
            fail(path + ".den", "zero denominator");
            return Rational(0);
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    std::string string(const json& j, const std::string& path) {
        if (j.is_string()) return j.get<std::string>();
        fail(path, "expected a string");
        return {};
    }

    bool boolean(const json& j, const std::string& path) {
        if (j.is_boolean()) return j.get<bool>();
        fail(path, "expected a boolean");
        return false;
    }

    template <class F>
    void array(const json& j, const std::string& path, F&& each) {
        if (!j.is_array()) {
            fail(path, "expected an array");
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i) each(j[i], path + "[" + std::to_string(i) + "]");
    }

    IntVector ints(const json& j, const std::string& path) {
        IntVector v;
        array(j, path, [&](const json& x, const std::string& p) { v.push_back(integer(x, p)); });
        return v;
    }

    RatVector rats(const json& j, const std::string& path) {
        RatVector v;
        array(j, path, [&](const json& x, const std::string& p) { v.push_back(rational(x, p)); });
        return v;
    }

    Attestation attestation(const json& j, const std::string& path) {
        Attestation a;
        if (const json* h = field(j, path, "holds")) a.holds = boolean(*h, path + ".holds");
        if (const json* p = field(j, path, "provenance", false)) a.provenance = string(*p, path + ".provenance");
        return a;
    }

    OrbSurface surface(const json& j, const std::string& path) {
        OrbSurface s;
        if (const json* f = field(j, path, "name", false)) s.name = string(*f, path + ".name");
        if (const json* f = field(j, path, "pairing"))
            array(*f, path + ".pairing", [&](const json& row, const std::string& p) { s.pairing.push_back(rats(row, p)); });
        if (const json* f = field(j, path, "weil_rank", false)) {
            const Integer r = integer(*f, path + ".weil_rank");
            if (r != static_cast<long>(s.pairing.size())) fail(path + ".weil_rank", "disagrees with the pairing size");
        }
        if (const json* f = field(j, path, "canonical")) s.canonical = ints(*f, path + ".canonical");
        if (const json* f = field(j, path, "pic_basis"))
            array(*f, path + ".pic_basis", [&](const json& v, const std::string& p) { s.pic_basis.push_back(ints(v, p)); });
        if (const json* f = field(j, path, "singular_points", false))
            array(*f, path + ".singular_points", [&](const json& x, const std::string& p) {
                SingularPoint sp;
                if (const json* g = field(x, p, "id")) sp.id = string(*g, p + ".id");
                if (const json* g = field(x, p, "local_order")) sp.local_order = integer(*g, p + ".local_order");
                if (const json* g = field(x, p, "restriction")) sp.restriction = ints(*g, p + ".restriction");
                s.singular_points.push_back(std::move(sp));
            });
        if (const json* f = field(j, path, "ample_cone_tests", false))
            array(*f, path + ".ample_cone_tests",
                  [&](const json& v, const std::string& p) { s.ample_cone_tests.push_back(rats(v, p)); });
        if (const json* f = field(j, path, "h1_zero", false)) s.h1_zero = attestation(*f, path + ".h1_zero");
        return s;
    }

    BranchCurve curve(const json& j, const std::string& path) {
        BranchCurve c;
        if (const json* f = field(j, path, "id")) c.id = string(*f, path + ".id");
        if (const json* f = field(j, path, "degree")) c.degree = ints(*f, path + ".degree");
        if (const json* f = field(j, path, "genus", false)) c.genus = integer(*f, path + ".genus");
        if (const json* f = field(j, path, "multiplicity")) c.multiplicity = integer(*f, path + ".multiplicity");
        if (const json* f = field(j, path, "through_points", false))
            array(*f, path + ".through_points",
                  [&](const json& x, const std::string& p) { c.through_points.push_back(string(x, p)); });
        if (const json* f = field(j, path, "orbismooth", false)) c.orbismooth = boolean(*f, path + ".orbismooth");
        if (const json* f = field(j, path, "transversal", false)) c.transversal = boolean(*f, path + ".transversal");
        return c;
    }

    AbGroup group(const json& j, const std::string& path) {
        if (j.is_string()) {
            try {
                return parse_group(j.get<std::string>());
            } catch (const std::exception& e) {
                fail(path, e.what());
                return {};
            }
        }
        std::size_t rank = 0;
        IntVector factors;
        if (const json* f = field(j, path, "free_rank")) {
            const Integer r = integer(*f, path + ".free_rank");
            if (r < 0) fail(path + ".free_rank", "negative");
            else rank = r.get_ui();
        }
        if (const json* f = field(j, path, "invariant_factors")) factors = ints(*f, path + ".invariant_factors");
        std::vector<Integer> orders(factors.begin(), factors.end());
        orders.insert(orders.end(), rank, Integer(0));
        AbGroup g = AbGroup::from_cyclic_orders(orders);
        if (g.invariant_factors() != factors) fail(path + ".invariant_factors", "not in normal form");
        return g;
    }
};

}  // namespace

Integer integer_from_json(const json& j, const std::string& path) {
    Reader r;
    Integer z = r.integer(j, path);
    r.finish();
    return z;
}

Rational rational_from_json(const json& j, const std::string& path) {
    Reader r;
    Rational q = r.rational(j, path);
    r.finish();
    return q;
}

OrbSurface surface_from_json(const json& j, const std::string& path) {
    Reader r;
    OrbSurface s = r.surface(j, path);
    r.finish();
    return s;
}

BranchCurve curve_from_json(const json& j, const std::string& path) {
    Reader r;
    BranchCurve c = r.curve(j, path);
    r.finish();
    return c;
}

BranchDivisor branch_from_json(const json& j, const std::string& path) {
    Reader r;
    BranchDivisor d;
    r.array(j, path, [&](const json& x, const std::string& p) { d.push_back(r.curve(x, p)); });
    r.finish();
    return d;
}

AbGroup group_from_json(const json& j, const std::string& path) {
    Reader r;
    AbGroup g = r.group(j, path);
    r.finish();
    return g;
}

CohomologyTable cohomology_from_json(const json& j, const std::string& path) {
    Reader r;
    CohomologyTable t;
    for (std::size_t i = 0; i < 6; ++i) {
        const std::string key = "H" + std::to_string(i);
        if (const json* f = r.field(j, path, key.c_str())) t.H[i] = r.group(*f, path + "." + key);
    }
    if (const json* f = r.field(j, path, "d")) t.d = r.integer(*f, path + ".d");
    if (const json* f = r.field(j, path, "s")) t.s = r.integer(*f, path + ".s").get_ui();
    r.finish();
    return t;
}

SeifertData seifert_from_json(const json& j, const std::string& path) {
    Reader r;
    SeifertData sd;
    if (const json* f = r.field(j, path, "surface")) sd.base = r.surface(*f, path + ".surface");
    if (const json* f = r.field(j, path, "branch"))
        r.array(*f, path + ".branch", [&](const json& x, const std::string& p) { sd.delta.push_back(r.curve(x, p)); });
    if (const json* f = r.field(j, path, "B")) sd.B = r.ints(*f, path + ".B");
    if (const json* f = r.field(j, path, "b")) {
        for (const auto& c : sd.delta) {
            if (const json* g = r.field(*f, path + ".b", c.id.c_str())) sd.b.push_back(r.integer(*g, path + ".b." + c.id));
            else sd.b.emplace_back(0);
        }
        if (f->is_object() && f->size() != sd.delta.size()) r.fail(path + ".b", "has entries for unknown curves");
    }
    r.finish();
    return sd;
}

Job job_from_json(const json& j) {
    Reader r;
    Job job;
    std::optional<CatalogEntry> entry;
    if (const json* f = r.field(j, "job", "surface")) {
        if (f->is_string()) {
            try {
                entry = catalog(f->get<std::string>());
                job.surface = entry->surface;
            } catch (const StructuralError& e) {
                r.fail("surface", e.what());
            }
        } else {
            job.surface = r.surface(*f, "surface");
        }
    }
    if (const json* f = r.field(j, "job", "branch", false)) {
        r.array(*f, "branch", [&](const json& x, const std::string& p) {
            if (x.is_object() && x.contains("catalog")) {
                if (!entry) {
                    r.fail(p + ".catalog", "catalog curves need a catalog surface");
                    return;
                }
                const std::string id = r.string(x["catalog"], p + ".catalog");
                Integer m(2);
                if (const json* g = r.field(x, p, "multiplicity")) m = r.integer(*g, p + ".multiplicity");
                try {
                    job.branch.push_back(entry->branch(id, m));
                } catch (const StructuralError& e) {
                    r.fail(p + ".catalog", e.what());
                }
            } else {
                job.branch.push_back(r.curve(x, p));
            }
        });
    }
    if (const json* f = r.field(j, "job", "B", false)) job.B = r.ints(*f, "B");
    if (const json* f = r.field(j, "job", "b", false)) {
        IntVector b;
        for (const auto& c : job.branch) {
            if (const json* g = r.field(*f, "b", c.id.c_str())) b.push_back(r.integer(*g, "b." + c.id));
            else b.emplace_back(0);
        }
        job.b = b;
    }
    if (const json* f = r.field(j, "job", "pi1_orb", false)) job.pi1_orb = r.attestation(*f, "pi1_orb");
    r.finish();
    return job;
}

BranchDivisor branch_from_shorthand(const CatalogEntry& e, const std::vector<std::string>& specs) {
    BranchDivisor d;
    std::vector<std::string> errs;
    for (const auto& s : specs) {
        const auto colon = s.find(':');
        const std::string id = s.substr(0, colon);
        Integer m(2);
        if (colon != std::string::npos) {
            const std::string rest = s.substr(colon + 1);
            if (rest.rfind("m=", 0) != 0 || m.set_str(rest.substr(2), 10) != 0) {
                errs.push_back("branch '" + s + "': expected <curve>:m=<multiplicity>");
                continue;
            }
        }
        try {
            d.push_back(e.branch(id, m));
        } catch (const StructuralError& ex) {
            errs.push_back(std::string("branch '") + s + "': " + ex.what());
        }
    }
    if (!errs.empty()) throw ValidationError(std::move(errs));
    return d;
}

}  // namespace seifert5
