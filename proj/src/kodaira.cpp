#include "mzeta/kodaira.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace mzeta {

KodairaTag kodaira_tag_from_string(const std::string& s) {
    if (s == "I0") return KodairaTag::I0;
    if (s == "In") return KodairaTag::In;
    if (s == "II") return KodairaTag::II;
    if (s == "III") return KodairaTag::III;
    if (s == "IV") return KodairaTag::IV;
    if (s == "I0star") return KodairaTag::I0star;
    if (s == "Instar") return KodairaTag::Instar;
    if (s == "IVstar") return KodairaTag::IVstar;
    if (s == "IIIstar") return KodairaTag::IIIstar;
    if (s == "IIstar") return KodairaTag::IIstar;
    std::string all;
    for (const auto& name : kodaira_tag_names()) all += (all.empty() ? "" : ", ") + name;
    throw ValidationError("type", "unknown tag '" + s + "'; available tags: " + all);
}

std::string kodaira_tag_to_string(KodairaTag tag) {
    switch (tag) {
        case KodairaTag::I0: return "I0";
        case KodairaTag::In: return "In";
        case KodairaTag::II: return "II";
        case KodairaTag::III: return "III";
        case KodairaTag::IV: return "IV";
        case KodairaTag::I0star: return "I0star";
        case KodairaTag::Instar: return "Instar";
        case KodairaTag::IVstar: return "IVstar";
        case KodairaTag::IIIstar: return "IIIstar";
        case KodairaTag::IIstar: return "IIstar";
    }
    return "?";
}

std::vector<std::string> kodaira_tag_names() {
    return {"I0", "In", "II", "III", "IV", "I0star", "Instar", "IVstar", "IIIstar", "IIstar"};
}

bool kodaira_tag_needs_n(KodairaTag tag) {
    return tag == KodairaTag::In || tag == KodairaTag::Instar;
}

namespace {

struct GraphSpec {
    // id, N, mu per component; edges between component indices
    std::vector<std::string> ids;
    std::vector<long> N;
    std::vector<long> mu;
    std::vector<std::pair<int, int>> edges;
};

long lgcd(long a, long b) { return std::gcd(a, b); }

// cover class of the degree-N_i cover of E_i^o, for E_i a rational curve with
// the given puncture multiplicities
GrothElem vertex_cover_class(long Ni, const std::vector<long>& punctures) {
    long g = Ni;
    for (long Nj : punctures) g = lgcd(g, Nj);
    long added = 0;
    for (long Nj : punctures) added += lgcd(Ni, Nj);
    long chi_compact = Ni * (2 - static_cast<long>(punctures.size())) + added;
    long per_component = chi_compact / g;
    if (per_component == 2) {  // rational components
        return GrothElem::constant(g) * (GrothElem::L() + GrothElem::one()) -
               GrothElem::constant(added);
    }
    if (per_component == 0 && g == 1) {  // one genus-one cover
        return GrothElem::symbol("b") - GrothElem::constant(added);
    }
    throw Error("unexpected cover geometry in bundled fiber data");
}

SncdModel model_from_graph(const GraphSpec& spec) {
    SncdModel m;
    m.mode = SncdMode::CalabiYau;
    size_t k = spec.ids.size();
    std::vector<std::vector<long>> punctures(k);
    for (auto [i, j] : spec.edges) {
        punctures[static_cast<size_t>(i)].push_back(spec.N[static_cast<size_t>(j)]);
        punctures[static_cast<size_t>(j)].push_back(spec.N[static_cast<size_t>(i)]);
    }
    for (size_t i = 0; i < k; ++i) {
        Component c;
        c.id = spec.ids[i];
        c.N = spec.N[i];
        c.mu = spec.mu[i];
        c.euler_open = 2 - static_cast<long>(punctures[i].size());
        m.components.push_back(std::move(c));
    }
    for (size_t i = 0; i < k; ++i) {
        Stratum s;
        s.J = {spec.ids[i]};
        s.cover_class = vertex_cover_class(spec.N[i], punctures[i]);
        m.strata.push_back(std::move(s));
    }
    for (auto [i, j] : spec.edges) {
        Stratum s;
        s.J = {spec.ids[static_cast<size_t>(i)], spec.ids[static_cast<size_t>(j)]};
        s.cover_class = GrothElem::constant(lgcd(spec.N[static_cast<size_t>(i)],
                                                 spec.N[static_cast<size_t>(j)]));
        m.strata.push_back(std::move(s));
    }
    m.validate();
    return m;
}

void require_n(KodairaTag tag, long n) {
    if (n < 1)
        throw ValidationError("type", "tag " + kodaira_tag_to_string(tag) +
                                          " needs a parameter n >= 1");
}

}  // namespace

SncdModel kodaira_sncd(KodairaTag tag, long n) {
    switch (tag) {
        case KodairaTag::I0: {
            SncdModel m;
            m.components.push_back({"E", 1, 0, 0});
            m.strata.push_back({{"E"}, GrothElem::symbol("b"), 1});
            m.validate();
            return m;
        }
        case KodairaTag::In: {
            require_n(tag, n);
            if (n == 1) {
                // nodal rational fiber; the node is a self-intersection stratum
                SncdModel m;
                m.components.push_back({"C", 1, 0, 0});
                m.strata.push_back({{"C"}, GrothElem::L() - GrothElem::one(), 1});
                m.strata.push_back({{"C", "C"}, GrothElem::one(), 1});
                m.validate();
                return m;
            }
            SncdModel m;
            for (long i = 0; i < n; ++i)
                m.components.push_back({"C" + std::to_string(i), 1, 0, 0});
            for (long i = 0; i < n; ++i)
                m.strata.push_back(
                    {{"C" + std::to_string(i)}, GrothElem::L() - GrothElem::one(), 1});
            if (n == 2) {
                // two components meeting in two points
                m.strata.push_back({{"C0", "C1"}, GrothElem::constant(2), 1});
            } else {
                for (long i = 0; i < n; ++i)
                    m.strata.push_back({{"C" + std::to_string(i),
                                         "C" + std::to_string((i + 1) % n)},
                                        GrothElem::one(), 1});
            }
            m.validate();
            return m;
        }
        case KodairaTag::II:
            return model_from_graph({{"A", "B", "C", "D"},
                                     {1, 2, 3, 6},
                                     {0, 0, 0, -1},
                                     {{0, 3}, {1, 3}, {2, 3}}});
        case KodairaTag::III:
            return model_from_graph({{"A", "B", "C", "D"},
                                     {1, 1, 2, 4},
                                     {0, 0, 0, -1},
                                     {{0, 3}, {1, 3}, {2, 3}}});
        case KodairaTag::IV:
            return model_from_graph({{"A", "B", "C", "D"},
                                     {1, 1, 1, 3},
                                     {0, 0, 0, -1},
                                     {{0, 3}, {1, 3}, {2, 3}}});
        case KodairaTag::I0star:
            return model_from_graph({{"A", "B", "C", "D", "Z"},
                                     {1, 1, 1, 1, 2},
                                     {0, 0, 0, 0, -1},
                                     {{0, 4}, {1, 4}, {2, 4}, {3, 4}}});
        case KodairaTag::Instar: {
            require_n(tag, n);
            GraphSpec spec;
            spec.ids = {"A", "B", "C", "D"};
            spec.N = {1, 1, 1, 1};
            spec.mu = {0, 0, 0, 0};
            for (long i = 0; i <= n; ++i) {
                spec.ids.push_back("M" + std::to_string(i));
                spec.N.push_back(2);
                spec.mu.push_back(-1);
            }
            int m0 = 4, mn = 4 + static_cast<int>(n);
            spec.edges = {{0, m0}, {1, m0}, {2, mn}, {3, mn}};
            for (int i = m0; i < mn; ++i) spec.edges.push_back({i, i + 1});
            return model_from_graph(spec);
        }
        case KodairaTag::IVstar:
            return model_from_graph({{"A1", "A2", "A3", "B1", "B2", "B3", "H"},
                                     {1, 1, 1, 2, 2, 2, 3},
                                     {0, 0, 0, -1, -1, -1, -2},
                                     {{0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 6}, {5, 6}}});
        case KodairaTag::IIIstar:
            return model_from_graph(
                {{"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8"},
                 {1, 2, 3, 4, 3, 2, 1, 2},
                 {0, -1, -2, -3, -2, -1, 0, -1},
                 {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}}});
        case KodairaTag::IIstar:
            return model_from_graph(
                {{"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9"},
                 {1, 2, 3, 4, 5, 6, 4, 2, 3},
                 {0, -1, -2, -3, -4, -5, -3, -1, -2},
                 {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}}});
    }
    throw Error("unhandled Kodaira tag");
}

namespace {

NeronData neron_base(long e, const Rat& c) {
    NeronData nd;
    nd.g = 1;
    nd.e = e;
    nd.c = c;
    nd.symbol_dims["b"] = 1;
    return nd;
}

ResidueClass good_class(long r, const Rat& intercept) {
    ResidueClass cls;
    cls.r = r;
    cls.toric_rank = 0;
    cls.unipotent_rank = 0;
    cls.B = GrothElem::symbol("b");
    cls.phi0 = 1;
    cls.phit = 0;
    cls.ord_intercept = intercept;
    return cls;
}

ResidueClass additive_class(long r, long phi, const Rat& intercept) {
    ResidueClass cls;
    cls.r = r;
    cls.toric_rank = 0;
    cls.unipotent_rank = 1;
    cls.B = GrothElem::one();
    cls.phi0 = phi;
    cls.phit = 0;
    cls.ord_intercept = intercept;
    return cls;
}

ResidueClass multiplicative_class(long r, long phi0, const Rat& intercept) {
    ResidueClass cls;
    cls.r = r;
    cls.toric_rank = 1;
    cls.unipotent_rank = 0;
    cls.B = GrothElem::one();
    cls.phi0 = phi0;
    cls.phit = 1;
    cls.ord_intercept = intercept;
    return cls;
}

// additive types from y^2 = x^3 + t^k or y^2 = x^3 + t^k x: on the residue
// class of d mod e the scaling x -> u^{2m} x, y -> u^{3m} y gives
// ord(d) = floor(k d / e'), so the intercept is ord(r) - c r.
NeronData potential_good(long e, long k, long eprime, const std::vector<long>& phis) {
    // phis[r-1] is the component count of the fiber type at residue r
    Rat c(k, eprime);
    c.canonicalize();
    NeronData nd = neron_base(e, c);
    for (long r = 1; r < e; ++r) {
        long ordr = (k * r) / eprime;  // floor
        Rat intercept = Rat(ordr) - c * Rat(r);
        intercept.canonicalize();
        nd.classes.push_back(additive_class(r, phis[static_cast<size_t>(r - 1)], intercept));
    }
    nd.classes.push_back(good_class(0, Rat(0)));
    std::sort(nd.classes.begin(), nd.classes.end(),
              [](const ResidueClass& a, const ResidueClass& b) { return a.r < b.r; });
    nd.validate();
    return nd;
}

}  // namespace

NeronData kodaira_neron(KodairaTag tag, long n) {
    switch (tag) {
        case KodairaTag::I0: {
            NeronData nd = neron_base(1, Rat(0));
            nd.classes.push_back(good_class(0, Rat(0)));
            nd.validate();
            return nd;
        }
        case KodairaTag::In: {
            require_n(tag, n);
            NeronData nd = neron_base(1, Rat(0));
            nd.classes.push_back(multiplicative_class(0, n, Rat(0)));
            nd.validate();
            return nd;
        }
        case KodairaTag::II:
            return potential_good(6, 1, 6, {1, 3, 4, 3, 1});
        case KodairaTag::III:
            return potential_good(4, 1, 4, {2, 4, 2});
        case KodairaTag::IV:
            return potential_good(3, 2, 6, {3, 3});
        case KodairaTag::I0star:
            return potential_good(2, 3, 6, {4});
        case KodairaTag::Instar: {
            require_n(tag, n);
            NeronData nd = neron_base(2, Rat(1, 2));
            nd.classes.push_back(additive_class(1, 4, Rat(-1, 2)));
            // even base changes land in multiplicative reduction with phi(d) = n d
            ResidueClass even = multiplicative_class(0, n, Rat(0));
            nd.classes.push_back(even);
            std::sort(nd.classes.begin(), nd.classes.end(),
                      [](const ResidueClass& a, const ResidueClass& b) { return a.r < b.r; });
            nd.validate();
            return nd;
        }
        case KodairaTag::IVstar:
            return potential_good(3, 4, 6, {3, 3});
        case KodairaTag::IIIstar:
            return potential_good(4, 3, 4, {2, 4, 2});
        case KodairaTag::IIstar:
            return potential_good(6, 5, 6, {1, 3, 4, 3, 1});
    }
    throw Error("unhandled Kodaira tag");
}

std::vector<ZPoly> kodaira_char_polys(const SncdModel& model) {
    return {ZPoly::t_pow_minus_one(1), h1_char_poly(model), ZPoly::t_pow_minus_one(1)};
}

std::vector<BundledInstance> bundled_instances() {
    return {
        {KodairaTag::I0, 0, "I0"},
        {KodairaTag::In, 1, "I1"},
        {KodairaTag::In, 2, "I2"},
        {KodairaTag::In, 3, "I3"},
        {KodairaTag::II, 0, "II"},
        {KodairaTag::III, 0, "III"},
        {KodairaTag::IV, 0, "IV"},
        {KodairaTag::I0star, 0, "I0star"},
        {KodairaTag::Instar, 1, "I1star"},
        {KodairaTag::Instar, 2, "I2star"},
        {KodairaTag::IVstar, 0, "IVstar"},
        {KodairaTag::IIIstar, 0, "IIIstar"},
        {KodairaTag::IIstar, 0, "IIstar"},
    };
}

std::string default_data_dir() {
    if (const char* env = std::getenv("MZETA_DATA")) return env;
#ifdef MZETA_SOURCE_DATA_DIR
    return MZETA_SOURCE_DATA_DIR;
#else
    return "data";
#endif
}

SncdModel load_bundled_sncd(const std::string& data_dir, const std::string& name) {
    return SncdModel::from_file(data_dir + "/kodaira/" + name + ".json");
}

NeronData load_bundled_neron(const std::string& data_dir, const std::string& name) {
    return NeronData::from_file(data_dir + "/neron/" + name + ".json");
}

}  // namespace mzeta
