#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mzeta {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (polynomials, rationals, model files).
struct ParseError : Error {
    using Error::Error;
};

// Structurally valid input that violates a model invariant.
struct ValidationError : Error {
    ValidationError(const std::string& where, const std::string& what_happened)
        : Error(where + ": " + what_happened), location(where) {}
    std::string location;
};

// Counting request whose search space exceeds the configured budget.
struct BudgetError : Error {
    using Error::Error;
};

// "p/q" or "p"; q > 0 after canonicalization.
Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& q);

Int int_pow(const Int& base, unsigned long e);

// checked narrowing for exponents that end up as container indices
long to_long(const Int& v, const char* what);

// FNV-1a over bytes, rendered as 16 hex digits; used for input digests.
std::string fnv1a_hex(const std::string& data);

}  // namespace mzeta
