#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mzeta/zeta.hpp"

namespace mzeta {

// Irreducible component of the special fiber: multiplicity N, order mu of the
// gauge form along it, and the Euler characteristic of the open part E_i^o.
// In hypersurface mode the mu slot holds the resolution datum nu_i instead.
struct Component {
    std::string id;
    Int N;
    Int mu;
    Int euler_open;
};

// Nonempty stratum E_J. J is a multiset of component ids: a repeated id
// encodes a self-intersection point of a nodal component (type I1). The
// cover class of the finite cover of E_J^o is input data; N_J is always
// recomputed as gcd of the member multiplicities.
struct Stratum {
    std::vector<std::string> J;  // sorted, possibly with repeats
    GrothElem cover_class;
    Int N_J;  // derived
};

enum class SncdMode { CalabiYau, Hypersurface };

struct SncdModel {
    SncdMode mode = SncdMode::CalabiYau;
    std::vector<Component> components;
    std::vector<Stratum> strata;
    std::vector<std::string> warnings;  // non-fatal validation notes

    const Component& component(const std::string& id) const;

    static SncdModel parse(const std::string& json_text);
    static SncdModel from_file(const std::string& path);
    std::string to_json() const;

    // revalidates invariants; throws ValidationError. parse() calls this.
    void validate();
};

// min_i mu_i / N_i  (nu_i / N_i in hypersurface mode)
Rat lct(const SncdModel& model);

// max multiset size of a listed stratum all of whose members achieve lct, minus 1
long delta(const SncdModel& model);

// { -mu_i / N_i }, deduplicated, descending
std::vector<Rat> candidate_poles(const SncdModel& model);

// Monodromy zeta function prod_n (t^n - 1)^{e_n} with
// e_n = -sum of euler_open over components of multiplicity n.
struct MonodromyZeta {
    std::map<long, long> factors;  // n -> exponent, zeros dropped
    long degree() const;           // sum n * e_n
    std::string to_string() const;
};
MonodromyZeta monodromy_zeta(const SncdModel& model);

// Characteristic polynomial of monodromy on H^1 for a genus-one fiber,
// assuming trivial action on H^0 and H^2: zeta(t) * (t-1)^2, which must come
// out a monic integer polynomial of degree 2.
ZPoly h1_char_poly(const SncdModel& model);

// Z(T) = sum over nonempty strata J of
//   (L-1)^{|J|-1} [cover_J] prod_{j in J} L^{-mu_j}T^{N_j} / (1 - L^{-mu_j}T^{N_j})
ZetaRational assemble_from_sncd(const SncdModel& model);

}  // namespace mzeta
