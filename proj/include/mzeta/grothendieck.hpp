#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "mzeta/numeric.hpp"
#include "mzeta/poly.hpp"

namespace mzeta {

// Monomial L^lexp * prod(sym^e). Only L may carry a negative exponent.
struct Monomial {
    long lexp = 0;
    std::map<std::string, long> syms;  // name -> exponent >= 1
    bool operator==(const Monomial& o) const { return lexp == o.lexp && syms == o.syms; }
};

// Canonical term order: L-exponent descending, then the flattened symbol
// multiset lexicographically.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Ring homomorphism out of the class-symbol model: images of L and of every
// symbol in a univariate rational-polynomial codomain.
struct Specialization {
    QPoly L_image{Rat(1)};
    std::map<std::string, QPoly> symbol_images;
};

// Element of Z[L, L^-1][class symbols]: a free polynomial model of the
// localized Grothendieck ring. Values are immutable in spirit: all operations
// return fresh elements.
class GrothElem {
public:
    using TermMap = std::map<Monomial, Int, MonomialLess>;

    GrothElem() = default;

    static GrothElem zero() { return {}; }
    static GrothElem one() { return constant(1); }
    static GrothElem constant(const Int& c);
    static GrothElem L(long exp = 1);
    static GrothElem symbol(const std::string& name, long exp = 1);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    bool has_symbols() const;
    std::set<std::string> symbols() const;

    GrothElem operator+(const GrothElem& o) const;
    GrothElem operator-(const GrothElem& o) const;
    GrothElem operator-() const;
    GrothElem operator*(const GrothElem& o) const;
    GrothElem& operator+=(const GrothElem& o) { return *this = *this + o; }
    bool operator==(const GrothElem& o) const { return terms_ == o.terms_; }

    GrothElem pow(unsigned long e) const;
    GrothElem mul_L_power(long k) const;  // multiply by L^k

    // Eliminate the mapped symbols; the relation map must be acyclic.
    GrothElem substitute_relations(const std::map<std::string, GrothElem>& relations) const;

    // Apply a ring homomorphism. Errors on symbols without an image and on
    // negative L-powers unless L maps to a nonzero constant.
    QPoly specialize(const Specialization& s) const;

    // max over monomials of lexp + sum(e * dims[sym]); nullopt for 0 (= -infinity)
    std::optional<long> virtual_dimension(const std::map<std::string, long>& dims) const;

    std::string to_string() const;
    static GrothElem parse(const std::string& text);

private:
    void add_term(const Monomial& m, const Int& c);
    TermMap terms_;
};

inline GrothElem operator*(const Int& c, const GrothElem& x) {
    return GrothElem::constant(c) * x;
}

}  // namespace mzeta
