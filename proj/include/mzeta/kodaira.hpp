#pragma once

#include <string>
#include <vector>

#include "mzeta/neron.hpp"
#include "mzeta/sncd.hpp"

namespace mzeta {

enum class KodairaTag { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };

KodairaTag kodaira_tag_from_string(const std::string& s);
std::string kodaira_tag_to_string(KodairaTag tag);
std::vector<std::string> kodaira_tag_names();
bool kodaira_tag_needs_n(KodairaTag tag);

// Build the normal-crossings fiber of the given type: components with
// multiplicities and gauge-form orders, dual graph, Euler numbers of the open
// strata, and the stratum cover classes. Cover classes are derived from
// the dual graph: a degree-N_J cover of a stratum splits into
// gcd(N_J, neighbor multiplicities) components, and its compact genus follows
// from Riemann-Hurwitz over the puncture exponents. The abelian-quotient
// symbol "b" names the genus-one cover over the maximal-multiplicity
// component; it is the same class that appears in the matching NeronData.
SncdModel kodaira_sncd(KodairaTag tag, long n = 0);

// Residue-class data of the same degeneration: e, the base change conductor,
// and per residue class the ranks, component-count law and order-function
// intercept obtained from minimalizing y^2 = x^3 + t^k (x) after base change
// t -> u^d.
NeronData kodaira_neron(KodairaTag tag, long n = 0);

// [H^0, H^1, H^2] characteristic polynomials; H^1 is derived from the sncd
// Euler data, never tabulated independently.
std::vector<ZPoly> kodaira_char_polys(const SncdModel& model);

struct BundledInstance {
    KodairaTag tag;
    long n;            // 0 when the type is not parametrized
    std::string name;  // file stem, e.g. "I2star"
};
// the instances shipped under data/: all ten types, small n for the families
std::vector<BundledInstance> bundled_instances();

// data-directory resolution: explicit argument > MZETA_DATA env > source tree
std::string default_data_dir();
SncdModel load_bundled_sncd(const std::string& data_dir, const std::string& name);
NeronData load_bundled_neron(const std::string& data_dir, const std::string& name);

}  // namespace mzeta
