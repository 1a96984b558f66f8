#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mzeta/grothendieck.hpp"

namespace mzeta {

// One denominator factor (1 - L^a T^b)^mult, b >= 1.
struct DenomFactor {
    long a = 0;
    long b = 1;
    long mult = 1;
};

struct PoleEntry {
    Rat s;       // pole location of Z(L^-s)
    long order;  // >= 1
};

// Locations pairwise distinct, sorted descending.
struct PoleReport {
    std::vector<PoleEntry> entries;
    std::string to_json() const;
};

// Rational generating function: a T-polynomial with GrothElem coefficients
// over a multiset of factors (1 - L^a T^b). The representation is not assumed
// minimal until normalize() has run.
class ZetaRational {
public:
    using Numerator = std::map<long, GrothElem>;  // T-degree -> coefficient
    using DenomMap = std::map<std::pair<long, long>, long>;  // (a,b) -> multiplicity

    ZetaRational() = default;
    explicit ZetaRational(Numerator num, DenomMap den = {});

    static ZetaRational zero() { return {}; }

    const Numerator& numerator() const { return num_; }
    const DenomMap& denominator() const { return den_; }
    std::vector<DenomFactor> denominator_factors() const;
    bool numerator_is_zero() const { return num_.empty(); }
    bool has_symbols() const;

    ZetaRational operator+(const ZetaRational& o) const;
    ZetaRational operator-(const ZetaRational& o) const;
    bool operator==(const ZetaRational& o) const;  // equality as a function

    ZetaRational mul_class(const GrothElem& c) const;

    // Coefficients of T^1 .. T^d_max of the T-adic expansion.
    std::vector<GrothElem> series_expand(long d_max) const;

    // Divide out removable denominator factors. Splits even factors
    // (1 - L^{2a}T^{2b}) into halves when the numerator carries the
    // complementary (1 + L^a T^b); no other factorization is attempted.
    // Series equality is rechecked to check_depth.
    ZetaRational normalize(long check_depth = 25) const;

    // Read poles off the factor family; meant to run on normalized values.
    PoleReport poles() const;

    std::string to_string() const;

private:
    void prune();
    Numerator num_;
    DenomMap den_;
};

// Exact closed form of  scale * sum_{d >= 1, d = r mod e} d^t L^{(alpha/e) d + beta} T^d
// as a ZetaRational with denominator (1 - L^alpha T^e)^{t+1}. The exponent
// (alpha/e) d + beta must be an integer on the whole residue class.
ZetaRational closed_sum(long r, long e, long t, long alpha, const Rat& beta,
                        const GrothElem& scale);

}  // namespace mzeta
