#include "hnum/report.hpp"

#include <sstream>

#include <mpfr.h>

namespace hnum {

using nlohmann::json;

std::string library_version() {
    return std::string("hnum 0.1.0 (gmp ") + gmp_version + ", mpfr " + mpfr_get_version() + ")";
}

namespace {

std::vector<std::string> coeff_strings(const RatPoly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

RatPoly poly_from_strings(const std::vector<std::string>& cs) {
    std::vector<Rational> v;
    for (const auto& s : cs) v.push_back(parse_rational(s).value_or(Rational(0)));
    return RatPoly(std::move(v));
}

std::string short_decimal(const std::string& s) {
    // Keep "d.ddddddddddde+XX"-style strings readable in the table.
    auto e = s.find('e');
    std::string mant = e == std::string::npos ? s : s.substr(0, e);
    std::string expo = e == std::string::npos ? "" : s.substr(e);
    const std::size_t keep = 14 + (mant.starts_with('-') ? 1 : 0);
    if (mant.size() > keep) mant = mant.substr(0, keep);
    return mant + expo;
}

}  // namespace

InvariantReport error_report(const std::string& name, const std::string& status, const std::string& error) {
    InvariantReport r;
    r.name = name;
    r.status = status;
    r.error = error;
    r.version = library_version();
    return r;
}

InvariantReport make_report(const LinkAnalysis& a, const std::vector<SignatureSample>& sigs,
                            const std::vector<std::string>& failures) {
    InvariantReport r;
    r.name = a.name;
    r.dim = static_cast<int>(a.S.rows());
    r.s0_dim = static_cast<int>(a.hn.s0_dim);
    std::map<EigenKey, int> pos;
    for (const auto& jc : a.jordan) {
        EigenDescriptor d;
        d.factor = coeff_strings(jc.cls.key.factor);
        d.index = jc.cls.key.index;
        d.re = jc.cls.root.value.re.to_string(64);
        d.im = jc.cls.root.value.im.to_string(64);
        d.status = std::string(to_string(jc.cls.status));
        if (jc.cls.turns) d.turns = to_string(*jc.cls.turns);
        for (int k = 1; k <= jc.part.max_size(); ++k) d.jordan.push_back(jc.part.blocks(k));
        pos[jc.cls.key] = static_cast<int>(r.eigenvalues.size());
        r.eigenvalues.push_back(std::move(d));
    }
    for (const auto& [key, c] : a.hn.p) r.h_numbers.push_back({pos.at(key.key), "p", key.k, key.u, c});
    for (const auto& [key, c] : a.hn.q) r.h_numbers.push_back({pos.at(key.key), "q", key.k, 0, c});
    for (const auto& e : a.sd.sp) r.spectrum.push_back({e.alpha.to_string(), std::nullopt, e.alpha.exact.has_value(), e.mult});
    for (const auto& e : a.sd.isp)
        r.extended.push_back({e.x.to_string(), e.y.to_string(64), e.x.exact.has_value(), e.mult});
    for (const auto& s : sigs) r.signatures.push_back({to_string(s.turns), s.sigma, s.nullity, s.nullity_ndeg});
    r.m0 = a.tower.m0;
    for (const auto& p : a.tower.polys) r.alexander.push_back(coeff_strings(p.poly));
    r.nakanishi = nakanishi_from_tower(a.tower).value;
    if (auto w = nakanishi_from_jordan(a.jordan, a.hn.s0_dim).witness) r.nakanishi_witness = pos.at(*w);
    r.obstructions = algebraicity_obstructions(a.hn);
    r.failures = a.failures;
    r.failures.insert(r.failures.end(), failures.begin(), failures.end());
    if (!r.failures.empty()) r.status = "cross-check-failure";
    r.precision_bits = a.precision.bits;
    r.tolerance = "2^-64";
    r.version = library_version();
    return r;
}

json to_json(const InvariantReport& r) {
    json j;
    j["name"] = r.name;
    j["status"] = r.status;
    if (!r.error.empty()) j["error"] = r.error;
    j["dim"] = r.dim;
    j["s0_dim"] = r.s0_dim;
    j["eigenvalues"] = json::array();
    for (const auto& e : r.eigenvalues) {
        json d{{"factor", e.factor}, {"index", e.index}, {"re", e.re}, {"im", e.im}, {"status", e.status}, {"jordan", e.jordan}};
        d["turns"] = e.turns ? json(*e.turns) : json(nullptr);
        j["eigenvalues"].push_back(std::move(d));
    }
    j["h_numbers"] = json::array();
    for (const auto& h : r.h_numbers)
        j["h_numbers"].push_back({{"eigenvalue", h.eigen}, {"kind", h.kind}, {"k", h.k}, {"u", h.u}, {"count", h.count}});
    auto sp_json = [](const std::vector<SpEntry>& v) {
        json a = json::array();
        for (const auto& e : v) {
            json d{{"x", e.x}, {"exact", e.exact}, {"mult", e.mult}};
            if (e.y) d["y"] = *e.y;
            a.push_back(std::move(d));
        }
        return a;
    };
    j["spectrum"] = sp_json(r.spectrum);
    j["extended_spectrum_imaginary"] = sp_json(r.extended);
    j["signatures"] = json::array();
    for (const auto& s : r.signatures)
        j["signatures"].push_back({{"zeta", s.zeta}, {"sigma", s.sigma}, {"nullity", s.nullity}, {"nullity_ndeg", s.nullity_ndeg}});
    j["alexander"] = {{"m0", r.m0}, {"polys", r.alexander}};
    j["nakanishi"] = {{"value", r.nakanishi}, {"witness", r.nakanishi_witness ? json(*r.nakanishi_witness) : json(nullptr)}};
    j["algebraicity_obstructions"] = r.obstructions;
    j["failures"] = r.failures;
    j["provenance"] = {{"precision_bits", r.precision_bits}, {"tolerance", r.tolerance}, {"version", r.version}};
    return j;
}

InvariantReport report_from_json(const json& j) {
    InvariantReport r;
    r.name = j.at("name").get<std::string>();
    r.status = j.at("status").get<std::string>();
    if (j.contains("error")) r.error = j["error"].get<std::string>();
    r.dim = j.at("dim").get<int>();
    r.s0_dim = j.at("s0_dim").get<int>();
    for (const auto& d : j.at("eigenvalues")) {
        EigenDescriptor e;
        e.factor = d.at("factor").get<std::vector<std::string>>();
        e.index = d.at("index").get<int>();
        e.re = d.at("re").get<std::string>();
        e.im = d.at("im").get<std::string>();
        e.status = d.at("status").get<std::string>();
        if (!d.at("turns").is_null()) e.turns = d["turns"].get<std::string>();
        e.jordan = d.at("jordan").get<std::vector<int>>();
        r.eigenvalues.push_back(std::move(e));
    }
    for (const auto& h : j.at("h_numbers"))
        r.h_numbers.push_back({h.at("eigenvalue").get<int>(), h.at("kind").get<std::string>(), h.at("k").get<int>(),
                               h.at("u").get<int>(), h.at("count").get<int>()});
    auto sp_read = [](const json& a) {
        std::vector<SpEntry> v;
        for (const auto& d : a) {
            SpEntry e{d.at("x").get<std::string>(), std::nullopt, d.at("exact").get<bool>(), d.at("mult").get<int>()};
            if (d.contains("y")) e.y = d["y"].get<std::string>();
            v.push_back(std::move(e));
        }
        return v;
    };
    r.spectrum = sp_read(j.at("spectrum"));
    r.extended = sp_read(j.at("extended_spectrum_imaginary"));
    for (const auto& s : j.at("signatures"))
        r.signatures.push_back({s.at("zeta").get<std::string>(), s.at("sigma").get<int>(), s.at("nullity").get<int>(),
                                s.at("nullity_ndeg").get<int>()});
    r.m0 = j.at("alexander").at("m0").get<int>();
    r.alexander = j.at("alexander").at("polys").get<std::vector<std::vector<std::string>>>();
    r.nakanishi = j.at("nakanishi").at("value").get<int>();
    if (!j.at("nakanishi").at("witness").is_null()) r.nakanishi_witness = j["nakanishi"]["witness"].get<int>();
    r.obstructions = j.at("algebraicity_obstructions").get<std::vector<std::string>>();
    r.failures = j.at("failures").get<std::vector<std::string>>();
    r.precision_bits = j.at("provenance").at("precision_bits").get<unsigned>();
    r.tolerance = j.at("provenance").at("tolerance").get<std::string>();
    r.version = j.at("provenance").at("version").get<std::string>();
    return r;
}

std::string format_report(const InvariantReport& r) {
    std::ostringstream os;
    os << "== " << r.name << " ==\n";
    if (r.status == "precision" || r.status == "error") {
        os << "  status: " << r.status << ": " << r.error << "\n";
        return os.str();
    }
    os << "  size " << r.dim << ", dim S0 " << r.s0_dim << ", precision " << r.precision_bits << " bits\n";
    os << "  eigenvalues:\n";
    if (r.eigenvalues.empty()) os << "    none\n";
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
        const auto& e = r.eigenvalues[i];
        os << "    #" << i << "  root " << e.index << " of " << poly_from_strings(e.factor).to_string() << "  "
           << short_decimal(e.re) << (e.im.starts_with('-') ? " " : " +") << short_decimal(e.im) << "i  " << e.status;
        if (e.turns) os << "  turns " << *e.turns;
        os << "  blocks [";
        for (std::size_t k = 0; k < e.jordan.size(); ++k) os << (k ? "," : "") << e.jordan[k];
        os << "]\n";
    }
    os << "  H-numbers:\n";
    if (r.h_numbers.empty()) os << "    none\n";
    for (const auto& h : r.h_numbers) {
        if (h.kind == "p")
            os << "    p^" << h.k << "(" << (h.u > 0 ? "+1" : "-1") << ") at #" << h.eigen << " = " << h.count << "\n";
        else
            os << "    q^" << h.k << " at #" << h.eigen << " = " << h.count << "\n";
    }
    os << "  Sp:";
    if (r.spectrum.empty()) os << " empty";
    for (const auto& e : r.spectrum) os << " " << (e.exact ? e.x : short_decimal(e.x)) << (e.mult > 1 ? " (x" + std::to_string(e.mult) + ")" : "");
    os << "\n  ISp:";
    if (r.extended.empty()) os << " empty";
    for (const auto& e : r.extended)
        os << " " << (e.exact ? e.x : short_decimal(e.x)) << (e.y && e.y->starts_with('-') ? " - i*" : " + i*")
           << short_decimal(e.y ? (e.y->starts_with('-') ? e.y->substr(1) : *e.y) : "0")
           << (e.mult > 1 ? " (x" + std::to_string(e.mult) + ")" : "");
    os << "\n";
    if (!r.signatures.empty()) {
        os << "  signatures:\n";
        for (const auto& s : r.signatures)
            os << "    zeta = e^{2 pi i " << s.zeta << "}  sigma " << s.sigma << "  nullity " << s.nullity << "\n";
    }
    os << "  Alexander (m0 = " << r.m0 << "):\n";
    for (std::size_t n = 0; n < r.alexander.size(); ++n)
        os << "    Delta_" << n << " = " << poly_from_strings(r.alexander[n]).to_string() << "\n";
    os << "  rational Nakanishi index " << r.nakanishi;
    if (r.nakanishi_witness) os << " (at #" << *r.nakanishi_witness << ")";
    os << "\n  algebraicity obstructions:";
    if (r.obstructions.empty()) os << " none";
    for (const auto& o : r.obstructions) os << "\n    " << o;
    os << "\n  status: " << r.status << "\n";
    for (const auto& f : r.failures) os << "    FAILED " << f << "\n";
    return os.str();
}

}  // namespace hnum
