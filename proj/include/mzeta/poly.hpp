#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mzeta/numeric.hpp"

namespace mzeta {

// Univariate polynomial with rational coefficients, dense, trailing zeros trimmed.
class QPoly {
public:
    QPoly() = default;
    QPoly(const Rat& c) { coeffs_.push_back(c); trim(); }  // NOLINT: implicit on purpose
    QPoly(const Int& c) : QPoly(Rat(c)) {}
    QPoly(long c) : QPoly(Rat(c)) {}
    static QPoly monomial(const Rat& c, int deg);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

    QPoly pow(unsigned long e) const;

    // quotient/remainder by a nonzero divisor
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const;

    static QPoly gcd(QPoly a, QPoly b);  // monic gcd

    // descending degree by default; ascending reads better for series in T
    std::string to_string(const std::string& var, bool ascending = false) const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

// Univariate integer polynomial; carries characteristic polynomials and cyclotomics.
class ZPoly {
public:
    ZPoly() = default;
    ZPoly(const Int& c) { coeffs_.push_back(c); trim(); }  // NOLINT
    ZPoly(long c) : ZPoly(Int(c)) {}
    static ZPoly monomial(const Int& c, int deg);
    static ZPoly t_pow_minus_one(int n);  // t^n - 1

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Int coeff(int i) const;
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    bool operator==(const ZPoly& o) const { return coeffs_ == o.coeffs_; }

    // exact division; nullopt if the remainder is nonzero or d == 0
    std::optional<ZPoly> divide_exact(const ZPoly& d) const;
    bool divisible_by(const ZPoly& d) const { return divide_exact(d).has_value(); }

    std::string to_string(const std::string& var = "t") const;
    static ZPoly parse(const std::string& text, const std::string& var = "t");

private:
    void trim();
    std::vector<Int> coeffs_;
};

// Rational function num/den in one variable over Q, den(0) normalized to 1
// when possible; reduced to lowest terms on construction.
struct QRat {
    QPoly num;
    QPoly den{Rat(1)};

    QRat() = default;
    QRat(QPoly n, QPoly d);

    QRat operator+(const QRat& o) const;
    QRat operator-(const QRat& o) const;
    QRat operator*(const QRat& o) const;
    bool operator==(const QRat& o) const;

    // Taylor coefficients at 0 up to order n inclusive; requires den(0) != 0.
    std::vector<Rat> series(int n) const;

    std::string to_string(const std::string& var) const;
};

}  // namespace mzeta
