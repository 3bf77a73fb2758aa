#include "cli.hpp"

#include "seifert5/errors.hpp"
#include "seifert5/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace seifert5::cli {

namespace {

struct Options {
    std::string format = "table";
    std::string catalog_name;
    std::vector<std::string> branch;
    std::string input;
    std::string curve;
    std::string group;
    std::string base;
    long m = 0;
    long max_picard = -1;
    std::string d, a, b;
    std::string attest;
    unsigned long seed = 0;
};

Rational parse_rational(const std::string& s, const char* what) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw ValidationError({std::string(what) + ": not a rational number: '" + s + "'"});
    q.canonicalize();
    return q;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError({"input: cannot open '" + path + "'"});
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError({"input: " + std::string(e.what())});
    }
}

// The surface and branch named on the command line or in --input.
Job load_job(const Options& o) {
    if (!o.input.empty() && !o.catalog_name.empty()) throw ValidationError({"use either --input or --catalog, not both"});
    if (!o.input.empty()) return job_from_json(read_json_file(o.input));
    if (o.catalog_name.empty()) throw ValidationError({"one of --input or --catalog is required"});
    Job job;
    CatalogEntry e;
    try {
        e = catalog(o.catalog_name);
    } catch (const StructuralError& ex) {
        throw ValidationError({std::string("catalog: ") + ex.what()});
    }
    job.surface = e.surface;
    job.branch = branch_from_shorthand(e, o.branch);
    return job;
}

std::string branch_text(const BranchDivisor& d) {
    if (d.empty()) return "(empty)";
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ", ";
        s += d[i].id + " m=" + d[i].multiplicity.get_str() + " g=" + d[i].genus.get_str() + " deg=" + to_string(d[i].degree);
    }
    return s;
}

void row(std::ostream& out, const std::string& key, const std::string& value) {
    out << std::left << std::setw(12) << key << value << '\n';
}

void print_table(std::ostream& out, const CohomologyTable& t) {
    for (std::size_t i = 0; i < 6; ++i) row(out, "H^" + std::to_string(i), t.H[i].to_string());
}

// ---- invariants ----

int cmd_invariants(const Options& o, std::ostream& out) {
    const Job job = load_job(o);
    require_valid(job.surface, job.branch);
    const OrbH1Report orb = h1_orb(job.surface, job.branch);

    SeifertData sd;
    std::string origin;
    if (job.B || job.b) {
        if (!job.B || !job.b) throw ValidationError({"B and b must be given together"});
        sd = {job.surface, job.branch, *job.B, *job.b};
        validate_seifert(sd);
        origin = "input";
    } else if (!orb.group.is_trivial()) {
        throw PreconditionError("orbifold H1 is " + orb.group.to_string() + ", so no Seifert bundle over it has trivial H1");
    } else if (job.surface.weil_rank() == 1 && check_rhs_conditions(job.surface, job.branch).all()) {
        sd = construct(job.surface, job.branch, job.pi1_orb).data;
        origin = "constructed";
    } else {
        auto found = find_h1_trivial_bundle(job.surface, job.branch);
        if (!found) throw PreconditionError("no smooth bundle with trivial H1 in the search box");
        sd = *found;
        origin = "searched";
    }

    const ChernData ch = chern_class(sd);
    const SmoothnessReport sm = is_smooth(sd);
    const AbGroup h1 = h1_total_space(sd);
    const CohomologyResult co = cohomology(sd);
    const W2Report w2 = w2_report(sd);
    const auto pi1 = job.pi1_orb ? job.pi1_orb : pi1_orb_attestation(job.surface, job.branch);
    const AbGroup h2 = AbGroup::free(co.table.s - 1) + co.table.H[3].torsion();
    std::optional<std::string> manifold;
    if (pi1 && pi1->holds && w2.w2_zero && is_double(h2)) manifold = identify_manifold(h2, true, true);

    if (o.format == "json") {
        json sm_checks = json::array();
        for (const auto& c : sm.checks)
            sm_checks.push_back({{"point", c.point}, {"local_order", to_json(c.local_order)}, {"residue", to_json(c.residue)}, {"smooth", c.smooth}});
        json c1 = json::array();
        for (const auto& q : ch.c1) c1.push_back(to_json(q));
        json j{{"bundle", to_json(sd)},
               {"bundle_origin", origin},
               {"h1_orb", to_json(orb)},
               {"c1", c1},
               {"smooth", {{"smooth", sm.smooth}, {"checks", sm_checks}}},
               {"h1_total_space", to_json(h1)},
               {"cohomology", to_json(co.table)},
               {"d_w", to_json(co.d_w)},
               {"d_p", to_json(co.d_p)},
               {"w2_zero", w2.w2_zero}};
        if (pi1) j["pi1_orb"] = to_json(*pi1);
        if (manifold) j["manifold"] = *manifold;
        out << j.dump(2) << '\n';
    } else {
        row(out, "surface", job.surface.name);
        row(out, "branch", branch_text(job.branch));
        row(out, "H1_orb", orb.group.to_string());
        row(out, "bundle", "B=" + to_string(sd.B) + " b=" + to_string(sd.b) + " (" + origin + ")");
        row(out, "c1", to_string(ch.c1));
        row(out, "smooth", sm.smooth ? "yes" : "no");
        row(out, "H1(L)", h1.to_string());
        print_table(out, co.table);
        row(out, "d", co.table.d.get_str() + " (d_w=" + co.d_w.get_str() + ", d_p=" + co.d_p.get_str() + ")");
        row(out, "w2", w2.w2_zero ? "0" : "not shown to vanish");
        if (manifold) row(out, "manifold", *manifold);
    }
    return kOk;
}

// ---- construct-rhs ----

int cmd_construct(const Options& o, std::ostream& out) {
    const Job job = load_job(o);
    require_valid(job.surface, job.branch);
    const RhsConditions cond = check_rhs_conditions(job.surface, job.branch);
    if (!cond.all()) {
        std::vector<std::string> v = cond.failures;
        if (v.empty()) v.push_back("rational homology sphere conditions fail");
        throw ValidationError(std::move(v));
    }
    const RhsConstruction c = construct(job.surface, job.branch, job.pi1_orb);
    const StructureCount count = count_structures_for_m(c.M);
    if (o.format == "json") {
        json j = to_json(c);
        if (job.branch.size() == 1 && count.below_range) j["warning"] = "m below 12: outside the range where the base list is complete";
        out << j.dump(2) << '\n';
    } else {
        row(out, "surface", job.surface.name);
        row(out, "branch", branch_text(job.branch));
        row(out, "M", c.M.get_str());
        row(out, "bundle", "B=" + to_string(c.data.B) + " b=" + to_string(c.data.b));
        row(out, "torsion", c.torsion_profile.to_string());
        print_table(out, c.table);
        row(out, "sphere", to_string(c.sphere));
        for (const auto& k : c.certificates) row(out, k.passed ? "  ok" : "  FAILED", k.name + ": " + k.value);
    }
    return kOk;
}

// ---- enumerate ----

std::optional<DelPezzoBase> base_named(const std::string& s) {
    for (auto b : {DelPezzoBase::P123, DelPezzoBase::Q, DelPezzoBase::P2, DelPezzoBase::P1xP1, DelPezzoBase::S5})
        if (to_string(b) == s) return b;
    return std::nullopt;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    std::optional<DelPezzoBase> base;
    if (!o.base.empty()) {
        base = base_named(o.base);
        if (!base) throw ValidationError({"base: unknown base '" + o.base + "' (P123, Q, P2, P1xP1, S5)"});
    }
    json rows = json::array();
    std::vector<DeformationType> kept;
    for (const auto& t : enumerate_del_pezzo()) {
        if (base && t.base != *base) continue;
        if (o.max_picard >= 0 && t.picard_number > o.max_picard) continue;
        kept.push_back(t);
    }
    if (o.format == "json") {
        for (const auto& t : kept) rows.push_back(to_json(t));
        out << json{{"count", kept.size()}, {"types", rows}}.dump(2) << '\n';
    } else {
        out << std::left << std::setw(16) << "type" << std::setw(8) << "rho" << std::setw(6) << "K^2"
            << "singularities\n";
        for (const auto& t : kept) {
            std::string sing;
            for (const auto& s : t.singularity_profile) sing += (sing.empty() ? "" : " ") + s;
            out << std::left << std::setw(16) << t.name() << std::setw(8) << t.picard_number << std::setw(6)
                << t.k_squared_remaining << (sing.empty() ? "-" : sing) << '\n';
        }
        out << kept.size() << " types\n";
    }
    return kOk;
}

// ---- classify-torsion ----

int cmd_classify_torsion(const Options& o, std::ostream& out) {
    AbGroup g;
    try {
        g = parse_group(o.group);
    } catch (const std::exception& e) {
        throw ValidationError({"group: " + std::string(e.what())});
    }
    const TorsionVerdict v = torsion_allowed(g);
    std::optional<std::string> manifold;
    if (is_double(g)) manifold = identify_manifold(g, true, true);
    if (o.format == "json") {
        json j = to_json(v);
        j["group"] = to_json(g);
        j["double"] = is_double(g);
        if (manifold) j["manifold"] = *manifold;
        out << j.dump(2) << '\n';
    } else {
        row(out, "group", g.to_string());
        row(out, "allowed", v.allowed ? "yes (clause " + std::to_string(v.clause) + ")" : "no");
        row(out, "rule", v.rule);
        if (manifold) row(out, "manifold", *manifold);
    }
    return kOk;
}

// ---- check-ke ----

int cmd_check_ke(const Options& o, std::ostream& out) {
    if (o.m < 2) throw ValidationError({"m: a multiplicity >= 2 is required"});
    KECertificate c;
    const bool raw = !o.d.empty() || !o.a.empty() || !o.b.empty();
    if (raw) {
        if (!o.catalog_name.empty()) throw ValidationError({"use either --catalog or --d/--a/--b, not both"});
        if (o.d.empty() || o.a.empty() || o.b.empty()) throw ValidationError({"--d, --a and --b go together"});
        Integer d;
        if (d.set_str(o.d, 10) != 0 || d < 1) throw ValidationError({"d: positive integer expected"});
        KEAttestations att;
        if (!o.attest.empty()) {
            const Attestation a{true, o.attest};
            att = {a, a, a, a};
        }
        c = degree_criterion_certify(d, parse_rational(o.a, "a"), parse_rational(o.b, "b"), Integer(o.m), att);
    } else {
        if (o.catalog_name.empty()) throw ValidationError({"one of --catalog or --d/--a/--b is required"});
        std::string curve = o.curve;
        if (curve.empty()) {
            try {
                curve = main_series_curve(o.catalog_name);
            } catch (const std::exception&) {
                throw ValidationError({"curve: --curve is required for " + o.catalog_name});
            }
        }
        try {
            c = certify_catalog(o.catalog_name, curve, Integer(o.m));
        } catch (const StructuralError& e) {
            throw ValidationError({e.what()});
        }
    }
    if (o.format == "json") {
        out << to_json(c).dump(2) << '\n';
    } else {
        row(out, "surface", c.surface_name.empty() ? "(raw)" : c.surface_name);
        if (!c.curve.empty()) row(out, "curve", c.curve);
        row(out, "m", c.m.get_str());
        row(out, "rule", c.rule);
        row(out, "d, a, b", to_string(c.d) + ", " + to_string(c.a) + ", " + to_string(c.b));
        for (const auto& i : c.inequalities)
            row(out, i.holds ? "  holds" : "  fails", i.expression + " = " + to_string(i.value) + " < " + to_string(i.bound));
        row(out, "verdict", to_string(c.verdict));
    }
    return kOk;
}

// ---- catalog ----

int cmd_catalog(const Options& o, std::ostream& out) {
    if (o.catalog_name.empty()) {
        const auto names = catalog_names();
        if (o.format == "json") out << json(names).dump(2) << '\n';
        else
            for (const auto& n : names) out << n << '\n';
        return kOk;
    }
    CatalogEntry e;
    try {
        e = catalog(o.catalog_name);
    } catch (const StructuralError& ex) {
        throw ValidationError({std::string("catalog: ") + ex.what()});
    }
    if (o.format == "json") {
        json curves = json::array();
        for (const auto& c : e.curves) curves.push_back(to_json(c));
        out << json{{"surface", to_json(e.surface)}, {"curves", curves}}.dump(2) << '\n';
    } else {
        const OrbSurface& s = e.surface;
        row(out, "surface", s.name);
        row(out, "weil rank", std::to_string(s.weil_rank()));
        std::string pairing;
        for (const auto& r : s.pairing) pairing += to_string(r);
        row(out, "pairing", pairing);
        row(out, "K", to_string(s.canonical));
        std::string pic;
        for (const auto& p : s.pic_basis) pic += to_string(p);
        row(out, "Pic", pic);
        for (const auto& p : s.singular_points) row(out, "point", p.id + " order " + p.local_order.get_str() + " restriction " + to_string(p.restriction));
        for (const auto& c : e.curves) {
            std::string through;
            for (const auto& t : c.through_points) through += " " + t;
            row(out, "curve", c.id + " deg=" + to_string(c.degree) + " g=" + c.genus.get_str() + (through.empty() ? "" : " through" + through));
        }
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Seifert bundles over log del Pezzo orbifolds: invariants, constructions, classification lists."};
    app.name("seifert5");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", o.seed, "Accepted for harness compatibility; never changes results");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));

    auto surface_opts = [&](CLI::App* s) {
        s->add_option("--catalog", o.catalog_name, "Catalog surface name");
        s->add_option("--branch", o.branch, "Branch curve as <curve>:m=<multiplicity>; repeatable");
        s->add_option("--input", o.input, "Job file (JSON)");
    };
    CLI::App* inv = app.add_subcommand("invariants", "Cohomology and smoothness of a Seifert bundle");
    surface_opts(inv);
    CLI::App* con = app.add_subcommand("construct-rhs", "Construct the rational homology sphere bundle");
    surface_opts(con);
    CLI::App* en = app.add_subcommand("enumerate", "List del Pezzo deformation types");
    en->add_option("--base", o.base, "Restrict to one base (P123, Q, P2, P1xP1, S5)");
    en->add_option("--max-picard", o.max_picard, "Largest Picard number to list");
    CLI::App* ct = app.add_subcommand("classify-torsion", "Check a torsion group against the allowed shapes");
    ct->add_option("group", o.group, "Group, e.g. \"(Z/5)^4\"")->required();
    CLI::App* ke = app.add_subcommand("check-ke", "Arithmetic Kaehler-Einstein certificate");
    ke->add_option("--catalog", o.catalog_name, "Catalog surface name");
    ke->add_option("--curve", o.curve, "Catalog curve (defaults to the main-series curve)");
    ke->add_option("--m", o.m, "Multiplicity")->required();
    ke->add_option("--d", o.d, "Raw degree d");
    ke->add_option("--a", o.a, "Raw a with -K == a H");
    ke->add_option("--b", o.b, "Raw b with D == b H");
    ke->add_option("--attest", o.attest, "Provenance for the geometric hypotheses of a raw check");
    CLI::App* cat = app.add_subcommand("catalog", "List catalog surfaces or show one");
    cat->add_option("--catalog,name", o.catalog_name, "Surface name");

    // CLI11 parses argv in reverse order from a vector
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    }

    try {
        if (inv->parsed()) return cmd_invariants(o, out);
        if (con->parsed()) return cmd_construct(o, out);
        if (en->parsed()) return cmd_enumerate(o, out);
        if (ct->parsed()) return cmd_classify_torsion(o, out);
        if (ke->parsed()) return cmd_check_ke(o, out);
        if (cat->parsed()) return cmd_catalog(o, out);
    } catch (const ValidationError& e) {
        err << "invalid input:\n";
        for (const auto& v : e.violations()) err << "  " << v << '\n';
        return kInvalid;
    } catch (const StructuralError& e) {
        err << "invalid input: " << e.what() << '\n';
        return kInvalid;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << '\n';
        return kInvalid;
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << '\n';
        return kConsistency;
    }
    return kInvalid;
}

}  // namespace seifert5::cli
