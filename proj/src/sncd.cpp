#include "mzeta/sncd.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace mzeta {

namespace {

using nlohmann::json;

Int json_int(const json& v, const std::string& where) {
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ValidationError(where, "not an integer: '" + v.get<std::string>() + "'");
        }
    }
    if (v.is_number_integer()) return Int(v.get<long>());
    if (v.is_number_unsigned()) {
        std::ostringstream os;
        os << v.get<unsigned long long>();
        return Int(os.str());
    }
    throw ValidationError(where, "expected an integer (number or decimal string)");
}

std::string stratum_key(const std::vector<std::string>& J) {
    std::string key;
    for (const auto& id : J) key += id + "\x1f";
    return key;
}

}  // namespace

const Component& SncdModel::component(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id) return c;
    throw ValidationError("component lookup", "unknown component id '" + id + "'");
}

void SncdModel::validate() {
    warnings.clear();
    if (components.empty())
        throw ValidationError("components", "model needs at least one component");
    std::map<std::string, const Component*> by_id;
    for (size_t i = 0; i < components.size(); ++i) {
        const Component& c = components[i];
        std::string where = "components[" + std::to_string(i) + "]";
        if (c.id.empty()) throw ValidationError(where, "empty id");
        if (c.N < 1) throw ValidationError(where, "multiplicity N must be >= 1");
        if (!by_id.emplace(c.id, &c).second)
            throw ValidationError(where, "duplicate component id '" + c.id + "'");
    }

    std::set<std::string> listed;
    for (size_t i = 0; i < strata.size(); ++i) {
        Stratum& s = strata[i];
        std::string where = "strata[" + std::to_string(i) + "]";
        if (s.J.empty()) throw ValidationError(where, "empty J");
        std::sort(s.J.begin(), s.J.end());
        std::set<std::string> distinct(s.J.begin(), s.J.end());
        if (distinct.size() > components.size())
            throw ValidationError(where, "stratum has more distinct members than components");
        Int g = 0;
        for (const auto& id : s.J) {
            auto it = by_id.find(id);
            if (it == by_id.end())
                throw ValidationError(where, "dangling component id '" + id + "'");
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), it->second->N.get_mpz_t());
        }
        s.N_J = g;  // never trusted from input
        if (!listed.insert(stratum_key(s.J)).second)
            throw ValidationError(where, "duplicate stratum");
    }

    // downward closure over sub-multisets
    for (size_t i = 0; i < strata.size(); ++i) {
        const auto& J = strata[i].J;
        if (J.size() < 2) continue;
        for (size_t drop = 0; drop < J.size(); ++drop) {
            if (drop > 0 && J[drop] == J[drop - 1]) continue;
            std::vector<std::string> sub;
            for (size_t k = 0; k < J.size(); ++k)
                if (k != drop) sub.push_back(J[k]);
            if (!listed.count(stratum_key(sub))) {
                std::string txt;
                for (const auto& id : sub) txt += (txt.empty() ? "" : ",") + id;
                throw ValidationError("strata[" + std::to_string(i) + "]",
                                      "downward closure violated: stratum {" + txt +
                                          "} is missing");
            }
        }
    }

    if (mode == SncdMode::CalabiYau && components.size() > 1) {
        // connectivity of the dual graph (vertices: components, edges: size-2 strata)
        std::map<std::string, std::vector<std::string>> adj;
        for (const auto& s : strata)
            if (s.J.size() == 2 && s.J[0] != s.J[1]) {
                adj[s.J[0]].push_back(s.J[1]);
                adj[s.J[1]].push_back(s.J[0]);
            }
        std::set<std::string> seen;
        std::vector<std::string> stack{components[0].id};
        while (!stack.empty()) {
            std::string v = stack.back();
            stack.pop_back();
            if (!seen.insert(v).second) continue;
            for (const auto& w : adj[v]) stack.push_back(w);
        }
        if (seen.size() != components.size())
            throw ValidationError("strata", "dual graph is disconnected in calabi_yau mode");
    }

    if (mode == SncdMode::CalabiYau) {
        // a distinguished gauge form has order 0 along some multiplicity-1
        // component; this cannot be verified from combinatorics alone
        bool have_n1 = false;
        Int min_mu = 0;
        for (const auto& c : components) {
            if (c.N == 1) {
                if (!have_n1 || c.mu < min_mu) min_mu = c.mu;
                have_n1 = true;
            }
        }
        if (have_n1 && min_mu != 0)
            warnings.push_back(
                "min mu over multiplicity-1 components is " + min_mu.get_str() +
                ", not 0; the gauge form normalization may not be distinguished");
    }
}

SncdModel SncdModel::parse(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("model file is not valid JSON: ") + e.what());
    }
    SncdModel model;
    if (!doc.is_object()) throw ValidationError("document", "expected a JSON object");
    std::string mode = doc.value("mode", "calabi_yau");
    if (mode == "calabi_yau")
        model.mode = SncdMode::CalabiYau;
    else if (mode == "hypersurface")
        model.mode = SncdMode::Hypersurface;
    else
        throw ValidationError("mode", "expected 'calabi_yau' or 'hypersurface', got '" + mode + "'");

    if (!doc.contains("components") || !doc["components"].is_array())
        throw ValidationError("components", "missing or not an array");
    for (size_t i = 0; i < doc["components"].size(); ++i) {
        const auto& jc = doc["components"][i];
        std::string where = "components[" + std::to_string(i) + "]";
        if (!jc.is_object()) throw ValidationError(where, "expected an object");
        Component c;
        if (!jc.contains("id") || !jc["id"].is_string())
            throw ValidationError(where, "missing string field 'id'");
        c.id = jc["id"].get<std::string>();
        for (const char* field : {"N", "mu", "euler_open"})
            if (!jc.contains(field))
                throw ValidationError(where, std::string("missing field '") + field + "'");
        c.N = json_int(jc["N"], where + ".N");
        c.mu = json_int(jc["mu"], where + ".mu");
        c.euler_open = json_int(jc["euler_open"], where + ".euler_open");
        model.components.push_back(std::move(c));
    }

    if (!doc.contains("strata") || !doc["strata"].is_array())
        throw ValidationError("strata", "missing or not an array");
    for (size_t i = 0; i < doc["strata"].size(); ++i) {
        const auto& js = doc["strata"][i];
        std::string where = "strata[" + std::to_string(i) + "]";
        if (!js.is_object()) throw ValidationError(where, "expected an object");
        Stratum s;
        if (!js.contains("J") || !js["J"].is_array())
            throw ValidationError(where, "missing array field 'J'");
        for (const auto& id : js["J"]) {
            if (!id.is_string()) throw ValidationError(where + ".J", "ids must be strings");
            s.J.push_back(id.get<std::string>());
        }
        if (!js.contains("class") || !js["class"].is_string())
            throw ValidationError(where, "missing string field 'class'");
        try {
            s.cover_class = GrothElem::parse(js["class"].get<std::string>());
        } catch (const ParseError& e) {
            throw ValidationError(where + ".class", e.what());
        }
        model.strata.push_back(std::move(s));
    }
    model.validate();
    return model;
}

SncdModel SncdModel::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open model file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string SncdModel::to_json() const {
    json doc;
    doc["mode"] = mode == SncdMode::CalabiYau ? "calabi_yau" : "hypersurface";
    doc["components"] = json::array();
    for (const auto& c : components) {
        json jc;
        jc["id"] = c.id;
        jc["N"] = c.N.fits_slong_p() ? json(c.N.get_si()) : json(c.N.get_str());
        jc["mu"] = c.mu.fits_slong_p() ? json(c.mu.get_si()) : json(c.mu.get_str());
        jc["euler_open"] =
            c.euler_open.fits_slong_p() ? json(c.euler_open.get_si()) : json(c.euler_open.get_str());
        doc["components"].push_back(jc);
    }
    doc["strata"] = json::array();
    for (const auto& s : strata) {
        json js;
        js["J"] = s.J;
        js["class"] = s.cover_class.to_string();
        doc["strata"].push_back(js);
    }
    return doc.dump(2) + "\n";
}

Rat lct(const SncdModel& model) {
    bool first = true;
    Rat best;
    for (const auto& c : model.components) {
        Rat r(c.mu, c.N);
        r.canonicalize();
        if (first || r < best) best = r;
        first = false;
    }
    return best;
}

long delta(const SncdModel& model) {
    Rat l = lct(model);
    long best = 1;  // the minimum is attained on some component, so a singleton works
    for (const auto& s : model.strata) {
        bool all = true;
        for (const auto& id : s.J) {
            const Component& c = model.component(id);
            Rat r(c.mu, c.N);
            r.canonicalize();
            if (r != l) {
                all = false;
                break;
            }
        }
        if (all) best = std::max(best, static_cast<long>(s.J.size()));
    }
    return best - 1;
}

std::vector<Rat> candidate_poles(const SncdModel& model) {
    std::set<Rat> seen;
    for (const auto& c : model.components) {
        Rat r(-c.mu, c.N);
        r.canonicalize();
        seen.insert(r);
    }
    return {seen.rbegin(), seen.rend()};
}

long MonodromyZeta::degree() const {
    long d = 0;
    for (const auto& [n, e] : factors) d += n * e;
    return d;
}

std::string MonodromyZeta::to_string() const {
    if (factors.empty()) return "1";
    std::ostringstream num, den;
    for (const auto& [n, e] : factors) {
        std::ostringstream& side = e > 0 ? num : den;
        side << "(t";
        if (n != 1) side << "^" << n;
        side << " - 1)";
        long a = std::abs(e);
        if (a != 1) side << "^" << a;
    }
    std::string ns = num.str(), ds = den.str();
    if (ns.empty()) ns = "1";
    return ds.empty() ? ns : ns + " / " + ds;
}

MonodromyZeta monodromy_zeta(const SncdModel& model) {
    std::map<long, Int> acc;
    for (const auto& c : model.components)
        acc[to_long(c.N, "multiplicity")] -= c.euler_open;
    MonodromyZeta z;
    for (const auto& [n, e] : acc)
        if (e != 0) z.factors[n] = to_long(e, "zeta exponent");
    return z;
}

ZPoly h1_char_poly(const SncdModel& model) {
    MonodromyZeta z = monodromy_zeta(model);
    ZPoly num(1), den(1);
    for (const auto& [n, e] : z.factors) {
        ZPoly f = ZPoly::t_pow_minus_one(static_cast<int>(n));
        for (long i = 0; i < std::abs(e); ++i) {
            if (e > 0)
                num = num * f;
            else
                den = den * f;
        }
    }
    num = num * ZPoly::t_pow_minus_one(1) * ZPoly::t_pow_minus_one(1);
    auto q = num.divide_exact(den);
    if (!q || q->degree() != 2 || !q->is_monic())
        throw ValidationError("h1_char_poly", "convention violated or bad Euler data");
    return *q;
}

ZetaRational assemble_from_sncd(const SncdModel& model) {
    ZetaRational total;
    GrothElem Lminus1 = GrothElem::L() - GrothElem::one();
    for (const auto& s : model.strata) {
        // one additive term per stratum, with one factor per multiset member
        ZetaRational::Numerator num;
        ZetaRational::DenomMap den;
        long shiftL = 0, shiftT = 0;
        for (const auto& id : s.J) {
            const Component& c = model.component(id);
            long a = to_long(-c.mu, "L-exponent");
            long b = to_long(c.N, "T-exponent");
            shiftL += a;
            shiftT += b;
            den[{a, b}] += 1;
        }
        GrothElem coeff = Lminus1.pow(s.J.size() - 1) * s.cover_class;
        num.emplace(shiftT, coeff.mul_L_power(shiftL));
        total = total + ZetaRational(std::move(num), std::move(den));
    }
    return total;
}

}  // namespace mzeta
