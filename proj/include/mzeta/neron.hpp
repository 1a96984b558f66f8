#pragma once

#include <map>
#include <string>
#include <vector>

#include "mzeta/zeta.hpp"

namespace mzeta {

// Data attached to one residue class r mod e: ranks and abelian-quotient
// class of the Chevalley decomposition after degree-d base change (d = r),
// the component-count law phi(d) = phi0 * d^phit, and the affine order
// function ord(d) = c*d + ord_intercept.
struct ResidueClass {
    long r = 0;
    long toric_rank = 0;      // t_r
    long unipotent_rank = 0;  // u_r
    GrothElem B;              // abelian quotient class
    Int phi0 = 1;
    long phit = 0;
    Rat ord_intercept;
};

struct NeronData {
    long g = 1;  // dimension
    long e = 1;  // degree of the minimal semi-abelian extension
    Rat c;       // base change conductor
    std::vector<ResidueClass> classes;       // one per r in 0..e-1
    std::map<std::string, long> symbol_dims;  // dimensions of class symbols in B

    const ResidueClass& residue(long d) const;  // class of d mod e
    long t_pot() const;                          // max_r toric rank
    Rat ord(long d) const;                       // c*d + intercept of d's class
    Int phi(long d) const;                       // phi0 * d^phit of d's class

    void validate() const;
    static NeronData parse(const std::string& json_text);
    static NeronData from_file(const std::string& path);
    std::string to_json() const;
};

// Z_A(T) = sum_{d>=1} phi(d) (L-1)^{t(d)} L^{u(d)+ord(d)} [B(d)] T^d,
// summed in closed form per residue class.
ZetaRational assemble_zeta(const NeronData& nd);

struct UniquePoleReport {
    PoleReport poles;
    Rat expected_location;
    long expected_order = 0;
    bool pass = false;
    std::string detail;
};
// normalized zeta must have exactly one pole, at s = c, of order t_pot + 1
UniquePoleReport verify_unique_pole(const NeronData& nd);

// order of q in Q/Z: the least n >= 1 with n*q integral
Int tau(const Rat& q);

// cyclotomic polynomial via the recursion t^n - 1 = prod_{d|n} Phi_d
ZPoly cyclotomic(long n);

struct GmpPoleVerdict {
    Rat s;
    Int tau_value;
    ZPoly cyclotomic_poly;
    int matched_index = -1;  // index into the supplied char polys, -1 if none
};
struct GmpReport {
    std::vector<GmpPoleVerdict> verdicts;
    bool pass = false;
};
// for every pole location s of z, Phi_{tau(s)} must divide one of char_polys
GmpReport gmp_check(const ZetaRational& z, const std::vector<ZPoly>& char_polys);

struct EulerTraceEntry {
    long d = 0;
    Rat chi_value;
    Rat expected;
    bool additive = false;
    bool pass = false;
};
struct EulerTraceReport {
    std::vector<EulerTraceEntry> entries;
    bool pass = false;
};
// Under a specialization with chi(L) = 1: the Euler characteristic of the
// T^d coefficient equals phi(d) on purely additive classes (t = 0, u > 0)
// and 0 otherwise.
EulerTraceReport euler_trace_check(const NeronData& nd, long d_max, const Specialization& chi);

}  // namespace mzeta
