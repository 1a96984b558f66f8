#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mzeta/numeric.hpp"
#include "mzeta/poly.hpp"

namespace mzeta {
namespace igusa {

inline constexpr long kDefaultBudget = 100000000;  // bound on p^{n(m+1)}

// Sparse integer polynomial in x, y, z, w; n is the index of the last
// variable that occurs. Must not be constant.
struct IntPoly {
    int nvars = 0;
    std::map<std::array<int, 4>, Int> terms;

    static IntPoly parse(const std::string& text);
    std::string to_string() const;

    // x^k in one variable, or nullopt
    std::optional<long> monomial_power() const;
};

struct CountSeries {
    long p = 0;
    std::vector<Int> values;  // N_0 .. N_M
};

// N_m = #{a in (Z/p^{m+1})^n : f(a) = 0}, by incremental lifting of the
// solution set; residue branches are processed in parallel. Deterministic.
Int count_solutions(const IntPoly& f, long p, long m, long budget = kDefaultBudget);

// Serial reference: enumerate all p^{n(m+1)} tuples. Kept as the test oracle
// and benchmark baseline for the lifting kernel.
Int count_solutions_flat(const IntPoly& f, long p, long m, long budget = kDefaultBudget);

// N_0 .. N_M along one lifting chain.
CountSeries poincare_truncated(const IntPoly& f, long p, long M, long budget = kDefaultBudget);

// Minimal linear recurrence over Q with order <= floor(M/2) - 1, re-verified
// on every supplied term; the fitted P(T) = A/B in lowest terms, or nullopt.
std::optional<QRat> fit_rational(const CountSeries& series);

// Closed form of the p-adic zeta function of x^k in one variable, as a
// rational function in u = p^{-s}: (1 - 1/p) / (1 - u^k / p). Checked
// internally against the truncated measure sum to 50 terms.
QRat zeta_monomial(long k, long p);

struct PoinzetaReport {
    bool pass = false;
    long first_mismatch = -1;  // order of the first differing coefficient
    std::vector<Rat> lhs;      // P(p^{-n} T) coefficients, order 0..M
    std::vector<Rat> rhs;      // p^n (1 - Z) / (1 - T) coefficients
};

// series comparison behind check_poinzeta, exposed so corrupted inputs can be
// fed directly
PoinzetaReport poinzeta_compare(const std::vector<Rat>& lhs, const std::vector<Rat>& rhs);

// Verify P(p^{-n} T) = p^n (1 - Z)(T) / (1 - T) through order M for f = x^k,
// with both sides computed independently (counting vs. the closed form).
PoinzetaReport check_poinzeta(long k, long p, long M, long budget = kDefaultBudget);

}  // namespace igusa
}  // namespace mzeta
