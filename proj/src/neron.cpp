#include "mzeta/neron.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mzeta {

namespace {
using nlohmann::json;
}

const ResidueClass& NeronData::residue(long d) const {
    long r = ((d % e) + e) % e;
    for (const auto& cls : classes)
        if (cls.r == r) return cls;
    throw ValidationError("classes", "no residue class for r = " + std::to_string(r));
}

long NeronData::t_pot() const {
    long t = 0;
    for (const auto& cls : classes) t = std::max(t, cls.toric_rank);
    return t;
}

Rat NeronData::ord(long d) const {
    Rat v = c * Rat(d) + residue(d).ord_intercept;
    v.canonicalize();
    return v;
}

Int NeronData::phi(long d) const {
    const ResidueClass& cls = residue(d);
    return cls.phi0 * int_pow(Int(d), static_cast<unsigned long>(cls.phit));
}

void NeronData::validate() const {
    if (g < 1) throw ValidationError("g", "dimension must be >= 1");
    if (e < 1) throw ValidationError("e", "e must be >= 1");
    if (c < 0) throw ValidationError("c", "base change conductor must be >= 0");
    Rat ce = c * Rat(e);
    ce.canonicalize();
    if (ce.get_den() != 1)
        throw ValidationError("c", "c*e must be an integer, got " + rat_to_string(ce));

    std::vector<bool> seen(static_cast<size_t>(e), false);
    for (size_t i = 0; i < classes.size(); ++i) {
        const ResidueClass& cls = classes[i];
        std::string where = "classes[" + std::to_string(i) + "]";
        if (cls.r < 0 || cls.r >= e) throw ValidationError(where, "r out of range 0..e-1");
        if (seen[static_cast<size_t>(cls.r)])
            throw ValidationError(where, "duplicate residue class r = " + std::to_string(cls.r));
        seen[static_cast<size_t>(cls.r)] = true;
        if (cls.toric_rank < 0 || cls.unipotent_rank < 0)
            throw ValidationError(where, "ranks must be nonnegative");
        if (cls.phi0 < 1) throw ValidationError(where, "phi0 must be >= 1");
        if (cls.phit < 0) throw ValidationError(where, "phit must be >= 0");

        // Chevalley decomposition: t + u + dim B = g
        auto dim = cls.B.virtual_dimension(symbol_dims);
        if (!dim) throw ValidationError(where + ".B", "abelian quotient class is zero");
        if (cls.toric_rank + cls.unipotent_rank + *dim != g)
            throw ValidationError(where, "t + u + dim(B) = " +
                                             std::to_string(cls.toric_rank + cls.unipotent_rank + *dim) +
                                             " != g = " + std::to_string(g));

        // the order function takes nonnegative integer values on the class
        long d0 = cls.r == 0 ? e : cls.r;
        Rat v = c * Rat(d0) + cls.ord_intercept;
        v.canonicalize();
        if (v.get_den() != 1 || v < 0)
            throw ValidationError(where, "ord(" + std::to_string(d0) + ") = " + rat_to_string(v) +
                                             " is not a natural number");
    }
    for (long r = 0; r < e; ++r)
        if (!seen[static_cast<size_t>(r)])
            throw ValidationError("classes", "missing residue class r = " + std::to_string(r));

    // distinguished normalization: ord(1) = 0
    Rat o1 = c + residue(1).ord_intercept;
    o1.canonicalize();
    if (o1 != 0)
        throw ValidationError("classes", "ord(1) = " + rat_to_string(o1) +
                                             "; a distinguished gauge form forces ord(1) = 0");

    // c = 0 exactly for semi-abelian reduction (e = 1, u = 0)
    bool semiabelian = (e == 1 && residue(0).unipotent_rank == 0);
    if ((c == 0) != semiabelian)
        throw ValidationError("c", c == 0 ? "c = 0 requires e = 1 and unipotent rank 0"
                                          : "semi-abelian data (e = 1, u = 0) forces c = 0");
}

NeronData NeronData::parse(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("data file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("document", "expected a JSON object");
    NeronData nd;
    if (!doc.contains("g") || !doc.contains("e") || !doc.contains("c") || !doc.contains("classes"))
        throw ValidationError("document", "fields g, e, c, classes are required");
    nd.g = doc["g"].get<long>();
    nd.e = doc["e"].get<long>();
    nd.c = doc["c"].is_string() ? parse_rat(doc["c"].get<std::string>()) : Rat(doc["c"].get<long>());
    if (doc.contains("symbol_dims")) {
        if (!doc["symbol_dims"].is_object())
            throw ValidationError("symbol_dims", "expected an object");
        for (auto it = doc["symbol_dims"].begin(); it != doc["symbol_dims"].end(); ++it)
            nd.symbol_dims[it.key()] = it.value().get<long>();
    }
    if (!doc["classes"].is_array()) throw ValidationError("classes", "expected an array");
    for (size_t i = 0; i < doc["classes"].size(); ++i) {
        const auto& jc = doc["classes"][i];
        std::string where = "classes[" + std::to_string(i) + "]";
        ResidueClass cls;
        for (const char* field : {"r", "t", "u", "B", "phi0", "phit", "ord_intercept"})
            if (!jc.contains(field))
                throw ValidationError(where, std::string("missing field '") + field + "'");
        cls.r = jc["r"].get<long>();
        cls.toric_rank = jc["t"].get<long>();
        cls.unipotent_rank = jc["u"].get<long>();
        try {
            cls.B = jc["B"].is_string() ? GrothElem::parse(jc["B"].get<std::string>())
                                        : GrothElem::constant(jc["B"].get<long>());
        } catch (const ParseError& e) {
            throw ValidationError(where + ".B", e.what());
        }
        cls.phi0 = jc["phi0"].is_string() ? Int(jc["phi0"].get<std::string>())
                                          : Int(jc["phi0"].get<long>());
        cls.phit = jc["phit"].get<long>();
        cls.ord_intercept = jc["ord_intercept"].is_string()
                                ? parse_rat(jc["ord_intercept"].get<std::string>())
                                : Rat(jc["ord_intercept"].get<long>());
        nd.classes.push_back(std::move(cls));
    }
    nd.validate();
    return nd;
}

NeronData NeronData::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open data file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string NeronData::to_json() const {
    json doc;
    doc["g"] = g;
    doc["e"] = e;
    doc["c"] = rat_to_string(c);
    if (!symbol_dims.empty()) {
        json dims;
        for (const auto& [name, d] : symbol_dims) dims[name] = d;
        doc["symbol_dims"] = dims;
    }
    doc["classes"] = json::array();
    for (const auto& cls : classes) {
        json jc;
        jc["r"] = cls.r;
        jc["t"] = cls.toric_rank;
        jc["u"] = cls.unipotent_rank;
        jc["B"] = cls.B.to_string();
        jc["phi0"] = cls.phi0.fits_slong_p() ? json(cls.phi0.get_si()) : json(cls.phi0.get_str());
        jc["phit"] = cls.phit;
        jc["ord_intercept"] = rat_to_string(cls.ord_intercept);
        doc["classes"].push_back(jc);
    }
    return doc.dump(2) + "\n";
}

ZetaRational assemble_zeta(const NeronData& nd) {
    nd.validate();
    Rat ce = nd.c * Rat(nd.e);
    ce.canonicalize();
    long alpha = to_long(ce.get_num(), "c*e");
    GrothElem Lminus1 = GrothElem::L() - GrothElem::one();
    ZetaRational total;
    for (const auto& cls : nd.classes) {
        GrothElem scale = GrothElem::constant(cls.phi0) *
                          Lminus1.pow(static_cast<unsigned long>(cls.toric_rank)) * cls.B;
        Rat beta = cls.ord_intercept + Rat(cls.unipotent_rank);
        beta.canonicalize();
        total = total + closed_sum(cls.r, nd.e, cls.phit, alpha, beta, scale);
    }
    return total;
}

UniquePoleReport verify_unique_pole(const NeronData& nd) {
    UniquePoleReport rep;
    rep.expected_location = nd.c;
    rep.expected_order = nd.t_pot() + 1;
    ZetaRational z = assemble_zeta(nd).normalize();
    rep.poles = z.poles();
    if (rep.poles.entries.size() != 1) {
        rep.pass = false;
        std::ostringstream os;
        os << "expected a unique pole, found " << rep.poles.entries.size();
        rep.detail = os.str();
        return rep;
    }
    const PoleEntry& p = rep.poles.entries[0];
    rep.pass = (p.s == rep.expected_location) && (p.order == rep.expected_order);
    if (!rep.pass)
        rep.detail = "pole (" + rat_to_string(p.s) + ", " + std::to_string(p.order) +
                     ") != expected (" + rat_to_string(rep.expected_location) + ", " +
                     std::to_string(rep.expected_order) + ")";
    return rep;
}

Int tau(const Rat& q) {
    Rat canon = q;
    canon.canonicalize();
    return canon.get_den();
}

ZPoly cyclotomic(long n) {
    if (n < 1) throw ValidationError("cyclotomic", "n must be >= 1");
    ZPoly quotient = ZPoly::t_pow_minus_one(static_cast<int>(n));
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto q = quotient.divide_exact(cyclotomic(d));
        if (!q) throw Error("cyclotomic recursion failed; this is a bug");
        quotient = *q;
    }
    return quotient;
}

GmpReport gmp_check(const ZetaRational& z, const std::vector<ZPoly>& char_polys) {
    GmpReport rep;
    rep.pass = true;
    for (const auto& pole : z.poles().entries) {
        GmpPoleVerdict v;
        v.s = pole.s;
        v.tau_value = tau(pole.s);
        v.cyclotomic_poly = cyclotomic(to_long(v.tau_value, "tau"));
        for (size_t i = 0; i < char_polys.size(); ++i) {
            if (char_polys[i].divisible_by(v.cyclotomic_poly)) {
                v.matched_index = static_cast<int>(i);
                break;
            }
        }
        if (v.matched_index < 0) rep.pass = false;
        rep.verdicts.push_back(std::move(v));
    }
    return rep;
}

EulerTraceReport euler_trace_check(const NeronData& nd, long d_max, const Specialization& chi) {
    if (chi.L_image != QPoly(Rat(1)))
        throw ValidationError("euler_trace_check", "the specialization must send L to 1");
    EulerTraceReport rep;
    rep.pass = true;
    auto coeffs = assemble_zeta(nd).series_expand(d_max);
    for (long d = 1; d <= d_max; ++d) {
        EulerTraceEntry entry;
        entry.d = d;
        QPoly v = coeffs[static_cast<size_t>(d - 1)].specialize(chi);
        if (v.degree() > 0)
            throw ValidationError("euler_trace_check", "specialization image is not a number");
        entry.chi_value = v.coeff(0);
        const ResidueClass& cls = nd.residue(d);
        entry.additive = (cls.toric_rank == 0 && cls.unipotent_rank > 0);
        entry.expected = entry.additive ? Rat(nd.phi(d)) : Rat(0);
        entry.pass = entry.chi_value == entry.expected;
        if (!entry.pass) rep.pass = false;
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

}  // namespace mzeta
