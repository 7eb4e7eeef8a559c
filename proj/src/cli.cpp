#include "hnum/cli.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "hnum/catalog.hpp"
#include "hnum/report.hpp"
#include "hnum/skein.hpp"

namespace hnum {

using nlohmann::json;

namespace {

struct Options {
    std::vector<std::string> files;
    std::vector<std::string> catalog_names;
    unsigned precision = kDefaultPrecision.bits;
    std::vector<std::string> zetas;
    int sweep = 0;
    bool check_all = false;
    bool from_monodromy = false;
    std::string json_out;
    std::string hypothesis;
    std::vector<std::string> xs;
    std::vector<std::string> torus;
    bool names_only = false;
};

Rational parse_turns(const std::string& s, const std::string& flag) {
    auto q = parse_rational(s);
    if (!q) throw InputError(flag + " expects a rational a/b, got \"" + s + "\"");
    return *q;
}

std::vector<Rational> explicit_zetas(const Options& o) {
    std::vector<Rational> z;
    for (const auto& s : o.zetas) {
        Rational t = reduce_turns(parse_turns(s, "--zeta"));
        if (t == 0) throw InputError("--zeta " + s + " is zeta = 1, where every signature vanishes");
        z.push_back(t);
    }
    return z;
}

Precision checked_precision(unsigned bits) {
    if (bits < 64 || bits > kPrecisionCeiling.bits)
        throw InputError("--precision must lie in [64, " + std::to_string(kPrecisionCeiling.bits) + "]");
    return Precision{bits};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write " + path);
    f << text;
    if (!f) throw InputError("cannot write " + path);
}

std::vector<LinkRecord> gather(const Options& o, bool variation_only) {
    std::vector<LinkRecord> recs;
    for (const auto& f : o.files) {
        auto r = read_link_records(f, variation_only);
        recs.insert(recs.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    }
    for (const auto& n : o.catalog_names) recs.push_back(catalog_entry(n));
    if (recs.empty()) throw InputError("no input records");
    return recs;
}

LinkAnalysis analyze_record(const LinkRecord& r, Precision prec, bool from_monodromy) {
    if (from_monodromy) {
        if (!r.variation) throw InputError(r.name + ": --from-monodromy needs a \"variation\" matrix");
        if (r.variation->rows() > 0 && r.variation->det() == 0)
            throw InputError(r.name + ": variation matrix is singular");
        return analyze_variation(*r.variation, r.monodromy, prec, r.name);
    }
    if (!r.seifert) throw InputError(r.name + ": record has no \"seifert\" matrix");
    return analyze_seifert(*r.seifert, prec, r.name);
}

SignatureSample direct_sample(const LinkAnalysis& a, const Rational& t) {
    Precision prec = a.precision;
    for (;;) {
        try {
            return tristram_levine_direct(a.S, t, prec, &a.tower.invariant_factors);
        } catch (const PrecisionError&) {
            if (prec.doubled() > kPrecisionCeiling) throw;
            prec = prec.doubled();
        }
    }
}

int cmd_report(const Options& o, std::ostream& out, std::ostream& err) {
    const Precision prec = checked_precision(o.precision);
    const std::vector<Rational> given = explicit_zetas(o);
    if (o.sweep < 0) throw InputError("--zeta-sweep must be nonnegative");
    const auto recs = gather(o, o.from_monodromy);

    int code = kExitOk;
    json doc = json::array();
    for (const auto& r : recs) {
        InvariantReport rep;
        try {
            const LinkAnalysis a = analyze_record(r, prec, o.from_monodromy);
            std::vector<Rational> z = given;
            for (const auto& t : zeta_sweep(a, o.sweep))
                if (std::find(z.begin(), z.end(), t) == z.end()) z.push_back(t);
            if (z.empty()) z.push_back(Rational(1, 2));
            std::vector<SignatureSample> sigs;
            for (const auto& t : z) sigs.push_back(direct_sample(a, t));
            std::vector<std::string> extra;
            if (o.check_all) extra = cross_check(a, z);
            rep = make_report(a, sigs, extra);
        } catch (const PrecisionError& e) {
            rep = error_report(r.name, "precision", e.what());
        } catch (const InputError& e) {
            rep = error_report(r.name, "error", e.what());
        } catch (const std::domain_error& e) {
            rep = error_report(r.name, "error", e.what());
        }
        if (rep.status == "precision") code = std::max<int>(code, kExitPrecision);
        else if (rep.status == "error") code = std::max<int>(code, kExitInput);
        else if (rep.status != "ok") code = std::max<int>(code, kExitCrossCheck);
        if (rep.status != "ok") err << rep.name << ": " << rep.status << (rep.error.empty() ? "" : ": " + rep.error) << "\n";
        out << format_report(rep);
        doc.push_back(to_json(rep));
    }
    if (!o.json_out.empty()) write_file(o.json_out, doc.dump(2) + "\n");
    return code;
}

Hypothesis parse_hypothesis(const std::string& s) {
    if (s == "a") return Hypothesis::a;
    if (s == "b") return Hypothesis::b;
    if (s == "c") return Hypothesis::c;
    throw InputError("--hypothesis must be a, b or c");
}

json checks_json(const SkeinReport& r) {
    json a = json::array();
    for (const auto& c : r.checks) a.push_back({{"what", c.what}, {"ok", c.ok}, {"detail", c.detail}});
    return a;
}

int skein_triple(const Options& o, const std::vector<LinkRecord>& recs, std::ostream& out, std::ostream& err) {
    for (const auto& r : recs)
        if (!r.seifert) throw InputError(r.name + ": record has no \"seifert\" matrix");
    const TripleValidation v = validate_triple(*recs[0].seifert, *recs[1].seifert, *recs[2].seifert);
    if (!v.ok()) throw InputError("invalid skein triple: " + v.reason);
    const Precision prec = checked_precision(o.precision);
    std::vector<Rational> z = explicit_zetas(o);

    const LinkAnalysis plus = analyze_seifert(v.triple->s_plus, prec, recs[0].name);
    const LinkAnalysis minus = analyze_seifert(v.triple->s_minus, prec, recs[1].name);
    const LinkAnalysis zero = analyze_seifert(v.triple->s_zero, prec, recs[2].name);
    if (z.empty()) {
        std::set<Rational> s;
        for (const auto* a : {&plus, &minus, &zero}) {
            for (const auto& t : zeta_sweep(*a, 6)) s.insert(t);
            for (const auto& jc : a->jordan)
                if (jc.cls.turns && *jc.cls.turns != 0) s.insert(*jc.cls.turns);
        }
        z.assign(s.begin(), s.end());
    }

    const TripleData d = triple_data(*v.triple);
    SkeinReport all;
    auto merge = [&](const SkeinReport& r) { all.checks.insert(all.checks.end(), r.checks.begin(), r.checks.end()); };
    merge(check_signature_skein(*v.triple, z, prec));
    for (const auto& f : triple_eigen_factors(d)) {
        merge(check_dk_inequalities(d, f));
        merge(check_pn_bounds(plus.jordan, minus.jordan, f));
    }
    merge(check_nakanishi_bound(*v.triple, d));
    for (const auto* a : {&plus, &minus, &zero})
        for (const auto& f : a->failures) all.add("pipeline " + a->name, false, f);

    out << "skein triple: L+ = " << recs[0].name << ", L- = " << recs[1].name << ", L0 = " << recs[2].name << "\n";
    for (const auto& c : all.checks)
        out << "  " << (c.ok ? "ok    " : "FAILED") << "  " << c.what << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
    out << "  " << all.checks.size() - static_cast<std::size_t>(all.failures()) << "/" << all.checks.size() << " checks hold\n";
    if (!o.json_out.empty()) {
        json doc{{"kind", "triple"},
                 {"links", {recs[0].name, recs[1].name, recs[2].name}},
                 {"checks", checks_json(all)},
                 {"ok", all.ok()},
                 {"provenance", {{"precision_bits", prec.bits}, {"version", library_version()}}}};
        write_file(o.json_out, doc.dump(2) + "\n");
    }
    if (!all.ok()) err << all.failures() << " skein check(s) failed\n";
    return all.ok() ? kExitOk : kExitCrossCheck;
}

int skein_pair(const Options& o, const std::vector<LinkRecord>& recs, std::ostream& out, std::ostream& err) {
    if (o.hypothesis.empty()) throw InputError("a pair of links needs --hypothesis a|b|c");
    if (o.xs.empty()) throw InputError("a pair of links needs at least one --x a/b");
    const Hypothesis hyp = parse_hypothesis(o.hypothesis);
    const Precision prec = checked_precision(o.precision);
    const LinkAnalysis l1 = analyze_record(recs[0], prec, false);
    const LinkAnalysis l2 = analyze_record(recs[1], prec, false);

    int code = kExitOk;
    json rows = json::array();
    out << "semicontinuity: L1 = " << l1.name << ", L2 = " << l2.name << ", hypothesis (" << o.hypothesis
        << ") taken as asserted\n";
    for (const auto& xs : o.xs) {
        const Rational x = parse_turns(xs, "--x");
        const SemicontReport r = check_semicontinuity(l1.sd, l1.alexander_degree(), l2.sd, l2.alexander_degree(), hyp, x);
        out << "  x = " << to_string(x) << "  " << to_string(r.verdict) << "  #ESp1 in H_x = " << r.count1
            << ", #ESp2 in H_x = " << r.count2 << "  (deg " << r.deg1 << ", " << r.deg2 << ")"
            << (r.detail.empty() ? "" : "  " + r.detail) << "\n";
        rows.push_back({{"x", to_string(x)},
                        {"verdict", std::string(to_string(r.verdict))},
                        {"count1", r.count1},
                        {"count2", r.count2},
                        {"deg1", r.deg1},
                        {"deg2", r.deg2},
                        {"detail", r.detail}});
        if (r.verdict == SemicontVerdict::refused_boundary) {
            err << "x = " << to_string(x) << " refused: " << r.detail << "\n";
            code = std::max<int>(code, kExitInput);
        } else if (r.verdict == SemicontVerdict::violated) {
            code = std::max<int>(code, kExitCrossCheck);
        }
    }
    if (!o.json_out.empty()) {
        json doc{{"kind", "semicontinuity"},
                 {"links", {l1.name, l2.name}},
                 {"hypothesis", o.hypothesis},
                 {"results", rows},
                 {"provenance", {{"precision_bits", prec.bits}, {"version", library_version()}}}};
        write_file(o.json_out, doc.dump(2) + "\n");
    }
    return code;
}

int cmd_skein(const Options& o, std::ostream& out, std::ostream& err) {
    const auto recs = gather(o, false);
    try {
        if (recs.size() == 3) return skein_triple(o, recs, out, err);
        if (recs.size() == 2) return skein_pair(o, recs, out, err);
    } catch (const PrecisionError& e) {
        err << "precision: " << e.what() << "\n";
        return kExitPrecision;
    }
    throw InputError("skein expects 3 records (L+, L-, L0) or 2 records (L1, L2), got " + std::to_string(recs.size()));
}

int cmd_catalog(const Options& o, std::ostream& out) {
    auto recs = builtin_catalog();
    for (const auto& spec : o.torus) {
        int p = 0, q = 0;
        char sep = 0;
        std::istringstream is(spec);
        if (!(is >> p >> sep >> q) || sep != ':' || !is.eof()) throw InputError("--torus expects p:q, got \"" + spec + "\"");
        LinkRecord r;
        r.name = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
        r.seifert = torus_seifert(p, q);
        r.components = std::gcd(p, q);
        r.tags = {"torus"};
        recs.push_back(std::move(r));
    }
    const std::string text = write_link_records(recs);
    if (o.names_only) {
        for (const auto& r : recs) out << r.name << "\n";
    } else {
        out << text;
    }
    if (!o.json_out.empty()) write_file(o.json_out, text);
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hodge-type numerical invariants of links from Seifert matrices", "hnum"};
    app.require_subcommand(1);
    Options o;

    auto* rep = app.add_subcommand("report", "invariant report for every record");
    rep->add_option("files", o.files, "JSON files holding arrays of link records");
    rep->add_option("--catalog", o.catalog_names, "add a built-in record by name (repeatable)");
    rep->add_option("--precision", o.precision, "working precision in bits")->capture_default_str();
    rep->add_option("--zeta", o.zetas, "signature sample zeta = exp(2 pi i a/b) (repeatable)");
    rep->add_option("--zeta-sweep", o.sweep, "N samples in (0,1) away from eigenvalue arguments");
    rep->add_flag("--check-all", o.check_all, "run every cross-route identity and fail on mismatch");
    rep->add_option("--json-out", o.json_out, "write the machine report to PATH");
    rep->add_flag("--from-monodromy", o.from_monodromy, "start from the records' variation (and monodromy) matrices");

    auto* sk = app.add_subcommand("skein", "verify skein inequalities (3 records) or semicontinuity (2 records)");
    sk->add_option("files", o.files, "JSON files; records are taken in order");
    sk->add_option("--catalog", o.catalog_names, "add a built-in record by name (repeatable)");
    sk->add_option("--precision", o.precision, "working precision in bits")->capture_default_str();
    sk->add_option("--zeta", o.zetas, "signature sample for the triple check (repeatable)");
    sk->add_option("--hypothesis", o.hypothesis, "relation between L1 and L2: a, b or c");
    sk->add_option("--x", o.xs, "half-plane parameter in (0,1) (repeatable)");
    sk->add_option("--json-out", o.json_out, "write the machine report to PATH");

    auto* cat = app.add_subcommand("catalog", "print the built-in link records");
    cat->add_option("--torus", o.torus, "append T(p,q), given as p:q (repeatable)");
    cat->add_flag("--names", o.names_only, "print names only");
    cat->add_option("--json-out", o.json_out, "also write the records to PATH");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (rep->parsed()) return cmd_report(o, out, err);
        if (sk->parsed()) return cmd_skein(o, out, err);
        return cmd_catalog(o, out);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace hnum
