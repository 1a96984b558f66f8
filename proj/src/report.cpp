#include "mzeta/report.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "mzeta/igusa.hpp"

namespace mzeta {

namespace {

using nlohmann::json;

constexpr const char* kSchemaVersion = "1";
constexpr const char* kFreeModelCaveat =
    "pole certification relative to free-symbol model";

json report_head(const std::string& command, const std::string& digest_payload) {
    json rep;
    rep["schema_version"] = kSchemaVersion;
    rep["command"] = command;
    rep["inputs_digest"] = fnv1a_hex(digest_payload);
    rep["results"] = json::object();
    rep["caveats"] = json::array();
    return rep;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json poles_to_json(const PoleReport& poles) {
    json out = json::array();
    for (const auto& e : poles.entries)
        out.push_back({{"s", rat_to_string(e.s)}, {"order", e.order}});
    return out;
}

json series_to_json(const std::vector<GrothElem>& coeffs) {
    json out = json::array();
    for (const auto& c : coeffs) out.push_back(c.to_string());
    return out;
}

json gmp_to_json(const GmpReport& rep) {
    json out;
    out["pass"] = rep.pass;
    out["poles"] = json::array();
    for (const auto& v : rep.verdicts) {
        json jv;
        jv["s"] = rat_to_string(v.s);
        jv["tau"] = v.tau_value.get_str();
        jv["cyclotomic"] = v.cyclotomic_poly.to_string();
        if (v.matched_index >= 0)
            jv["divides"] = "H^" + std::to_string(v.matched_index);
        else
            jv["divides"] = nullptr;
        out["poles"].push_back(jv);
    }
    return out;
}

std::vector<ZPoly> parse_char_polys(const std::vector<std::string>& texts) {
    std::vector<ZPoly> polys;
    for (const auto& t : texts) polys.push_back(ZPoly::parse(t));
    return polys;
}

void set_pass(json& rep, bool ok) {
    if (rep.contains("pass"))
        rep["pass"] = rep["pass"].get<bool>() && ok;
    else
        rep["pass"] = ok;
}

}  // namespace

json cmd_sncd(const std::string& file, const SncdOptions& opt) {
    std::string text = slurp(file);
    json rep = report_head("sncd", text);
    SncdModel model = SncdModel::parse(text);
    rep["inputs"] = {{"file", file}};
    for (const auto& w : model.warnings) rep["caveats"].push_back(w);
    json& res = rep["results"];
    if (opt.lct) {
        res["lct"] = {{"value", rat_to_string(lct(model))},
                      {"formula", "lct = min_i mu_i/N_i"}};
    }
    if (opt.delta) {
        res["delta"] = {{"value", delta(model)},
                        {"formula", "delta = max {|J| : all mu_j/N_j = lct} - 1"}};
    }
    ZetaRational normalized;
    bool have_normalized = false;
    if (opt.poles || !opt.gmp_with.empty()) {
        normalized = assemble_from_sncd(model).normalize();
        have_normalized = true;
    }
    if (opt.poles) {
        res["poles"] = {{"value", poles_to_json(normalized.poles())},
                        {"formula", "poles of Z(L^-s) read off the reduced factors (1 - L^a T^b)"}};
        if (normalized.has_symbols()) rep["caveats"].push_back(kFreeModelCaveat);
    }
    if (opt.series > 0) {
        res["series"] = {
            {"value", series_to_json(assemble_from_sncd(model).series_expand(opt.series))},
            {"formula", "T-adic expansion of the stratum sum"}};
    }
    if (opt.monodromy_zeta) {
        MonodromyZeta z = monodromy_zeta(model);
        res["monodromy_zeta"] = {{"value", z.to_string()},
                                 {"formula", "prod_i (t^{N_i} - 1)^{-chi(E_i^o)}"}};
    }
    if (!opt.gmp_with.empty()) {
        GmpReport g = gmp_check(normalized, parse_char_polys(opt.gmp_with));
        res["gmp"] = gmp_to_json(g);
        set_pass(rep, g.pass);
        if (have_normalized && normalized.has_symbols())
            rep["caveats"].push_back(kFreeModelCaveat);
    }
    return rep;
}

json cmd_abelian(const std::optional<std::string>& type_tag, long n,
                 const std::optional<std::string>& neron_file, const std::string& data_dir,
                 const AbelianOptions& opt) {
    NeronData nd;
    std::optional<SncdModel> bundled_model;
    std::string digest_payload;
    json inputs;
    if (type_tag) {
        KodairaTag tag = kodaira_tag_from_string(*type_tag);
        nd = kodaira_neron(tag, n);
        bundled_model = kodaira_sncd(tag, n);
        digest_payload = *type_tag + "#" + std::to_string(n);
        inputs["type"] = *type_tag;
        if (kodaira_tag_needs_n(tag)) inputs["n"] = n;
        (void)data_dir;
    } else if (neron_file) {
        std::string text = slurp(*neron_file);
        nd = NeronData::parse(text);
        digest_payload = text;
        inputs["file"] = *neron_file;
    } else {
        throw ValidationError("abelian", "either --type or --neron is required");
    }
    json rep = report_head("abelian", digest_payload);
    rep["inputs"] = inputs;
    json& res = rep["results"];
    res["e"] = nd.e;
    res["c"] = rat_to_string(nd.c);
    res["t_pot"] = nd.t_pot();

    if (opt.verify) {
        UniquePoleReport v = verify_unique_pole(nd);
        json jv;
        jv["pass"] = v.pass;
        jv["poles"] = poles_to_json(v.poles);
        jv["expected"] = {{"s", rat_to_string(v.expected_location)}, {"order", v.expected_order}};
        if (!v.detail.empty()) jv["detail"] = v.detail;
        res["verify"] = jv;
        set_pass(rep, v.pass);
    }
    if (opt.series > 0)
        res["series"] = series_to_json(assemble_zeta(nd).series_expand(opt.series));
    if (opt.gmp) {
        std::vector<ZPoly> polys;
        if (!opt.gmp_with.empty())
            polys = parse_char_polys(opt.gmp_with);
        else if (bundled_model)
            polys = kodaira_char_polys(*bundled_model);
        else
            throw ValidationError("abelian",
                                  "--gmp on a user data file needs --gmp-with <charpolys>");
        ZetaRational z = assemble_zeta(nd).normalize();
        GmpReport g = gmp_check(z, polys);
        res["gmp"] = gmp_to_json(g);
        set_pass(rep, g.pass);
        if (z.has_symbols()) rep["caveats"].push_back(kFreeModelCaveat);
    }
    if (opt.euler_check > 0) {
        Specialization chi;
        chi.L_image = QPoly(Rat(1));
        for (const auto& name : [&] {
                 std::set<std::string> syms;
                 for (const auto& cls : nd.classes)
                     for (const auto& s : cls.B.symbols()) syms.insert(s);
                 return syms;
             }())
            chi.symbol_images[name] = QPoly(Rat(0));
        EulerTraceReport e = euler_trace_check(nd, opt.euler_check, chi);
        json je;
        je["pass"] = e.pass;
        je["entries"] = json::array();
        for (const auto& entry : e.entries)
            je["entries"].push_back({{"d", entry.d},
                                     {"chi", rat_to_string(entry.chi_value)},
                                     {"expected", rat_to_string(entry.expected)},
                                     {"additive", entry.additive},
                                     {"pass", entry.pass}});
        res["euler_check"] = je;
        set_pass(rep, e.pass);
    }
    return rep;
}

json cmd_igusa(const IgusaOptions& opt) {
    using namespace igusa;
    long budget = opt.budget > 0 ? opt.budget : kDefaultBudget;
    std::string digest_payload = opt.poly + "#" + std::to_string(opt.p) + "#" +
                                 std::to_string(opt.M) + "#" + std::to_string(budget);
    json rep = report_head("igusa", digest_payload);
    rep["inputs"] = {{"poly", opt.poly}, {"p", opt.p}, {"M", opt.M}};
    IntPoly f = IntPoly::parse(opt.poly);
    json& res = rep["results"];
    CountSeries series = poincare_truncated(f, opt.p, opt.M, budget);
    json counts = json::array();
    for (const auto& v : series.values) counts.push_back(v.get_str());
    res["counts"] = counts;
    if (opt.fit) {
        auto fit = fit_rational(series);
        res["fit"] = fit ? json(fit->to_string("T")) : json(nullptr);
        res["fit_note"] =
            "consistent-with evidence from finitely many terms, not a certified pole set";
    }
    if (opt.check_poinzeta) {
        auto k = f.monomial_power();
        if (!k)
            throw ValidationError("poly",
                                  "--check-poinzeta needs a one-variable monic monomial x^k");
        PoinzetaReport pz = check_poinzeta(*k, opt.p, opt.M, budget);
        json jp;
        jp["pass"] = pz.pass;
        jp["order_checked"] = opt.M;
        if (!pz.pass) jp["first_mismatch"] = pz.first_mismatch;
        res["poinzeta"] = jp;
        set_pass(rep, pz.pass);
    }
    return rep;
}

json cmd_verify_all(const std::string& data_dir) {
    json rep = report_head("verify-all", data_dir);
    rep["inputs"] = {{"data_dir", data_dir}};
    auto results = run_acceptance(data_dir);
    json list = json::array();
    bool ok = true;
    for (const auto& r : results) {
        list.push_back({{"criterion", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        ok = ok && r.pass;
    }
    rep["results"]["criteria"] = list;
    rep["pass"] = ok;
    return rep;
}

bool report_passed(const json& report) {
    return !report.contains("pass") || report["pass"].get<bool>();
}

namespace {

void render_value(std::ostream& out, const std::string& key, const json& v, int indent) {
    std::string pad(static_cast<size_t>(indent), ' ');
    if (v.is_object() && v.contains("value")) {
        out << pad << key << ": " << (v["value"].is_string() ? v["value"].get<std::string>()
                                                             : v["value"].dump())
            << "\n";
        return;
    }
    if (v.is_object() || v.is_array()) {
        out << pad << key << ": " << v.dump() << "\n";
        return;
    }
    out << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

}  // namespace

std::string render_human(const json& report) {
    std::ostringstream out;
    if (report["command"] == "verify-all") {
        for (const auto& c : report["results"]["criteria"])
            out << (c["pass"].get<bool>() ? "PASS" : "FAIL") << " "
                << c["criterion"].get<std::string>() << ": " << c["detail"].get<std::string>()
                << "\n";
    } else {
        for (auto it = report["results"].begin(); it != report["results"].end(); ++it)
            render_value(out, it.key(), it.value(), 0);
    }
    if (report.contains("pass"))
        out << (report["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    for (const auto& c : report["caveats"])
        out << "caveat: " << c.get<std::string>() << "\n";
    return out.str();
}

}  // namespace mzeta
