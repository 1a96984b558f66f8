#include "mzeta/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mzeta {

// ---------------------------------------------------------------- QPoly

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::monomial(const Rat& c, int deg) {
    QPoly p;
    if (c != 0) {
        p.coeffs_.assign(deg + 1, Rat(0));
        p.coeffs_[deg] = c;
    }
    return p;
}

Rat QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[i];
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
    QPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    r.trim();
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    r.trim();
    return r;
}

QPoly QPoly::pow(unsigned long e) const {
    QPoly r(Rat(1)), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
    if (d.is_zero()) throw Error("QPoly division by zero");
    QPoly q, r = *this;
    int dd = d.degree();
    Rat lead = d.coeffs_.back();
    while (!r.is_zero() && r.degree() >= dd) {
        int k = r.degree() - dd;
        Rat c = r.coeffs_.back() / lead;
        q = q + monomial(c, k);
        r = r - d * monomial(c, k);
    }
    return {q, r};
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a.divmod(b).second;
        a = b;
        b = r;
    }
    if (!a.is_zero()) {
        Rat lead = a.coeffs_.back();
        for (auto& c : a.coeffs_) c /= lead;
    }
    return a;
}

std::string QPoly::to_string(const std::string& var, bool ascending) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int step = 0; step <= degree(); ++step) {
        int i = ascending ? step : degree() - step;
        Rat c = coeffs_[i];
        if (c == 0) continue;
        bool neg = c < 0;
        Rat a = abs(c);
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;
        if (i == 0) {
            out << rat_to_string(a);
        } else {
            if (a != 1) out << rat_to_string(a) << "*";
            out << var;
            if (i != 1) out << "^" << i;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------- ZPoly

void ZPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ZPoly ZPoly::monomial(const Int& c, int deg) {
    ZPoly p;
    if (c != 0) {
        p.coeffs_.assign(deg + 1, Int(0));
        p.coeffs_[deg] = c;
    }
    return p;
}

ZPoly ZPoly::t_pow_minus_one(int n) {
    ZPoly p = monomial(1, n);
    return p - ZPoly(1);
}

Int ZPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Int(0);
    return coeffs_[i];
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    ZPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    ZPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    r.trim();
    return r;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    ZPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    r.trim();
    return r;
}

std::optional<ZPoly> ZPoly::divide_exact(const ZPoly& d) const {
    if (d.is_zero()) return std::nullopt;
    ZPoly q, r = *this;
    int dd = d.degree();
    const Int& lead = d.coeffs_.back();
    while (!r.is_zero() && r.degree() >= dd) {
        Int top = r.coeffs_.back();
        if (top % lead != 0) return std::nullopt;
        ZPoly m = monomial(top / lead, r.degree() - dd);
        q = q + m;
        r = r - d * m;
    }
    if (!r.is_zero()) return std::nullopt;
    return q;
}

std::string ZPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Int c = coeffs_[i];
        if (c == 0) continue;
        bool neg = c < 0;
        Int a = abs(c);
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;
        if (i == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << var;
            if (i != 1) out << "^" << i;
        }
    }
    return out.str();
}

namespace {

struct ZTok {
    enum Kind { Num, Var, Caret, Star, Plus, Minus, End } kind;
    Int value;
};

std::vector<ZTok> lex_zpoly(const std::string& s, const std::string& var) {
    std::vector<ZTok> toks;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
            toks.push_back({ZTok::Num, Int(s.substr(i, j - i))});
            i = j;
        } else if (s.compare(i, var.size(), var) == 0) {
            toks.push_back({ZTok::Var, 0});
            i += var.size();
        } else if (c == '^') {
            toks.push_back({ZTok::Caret, 0});
            ++i;
        } else if (c == '*') {
            toks.push_back({ZTok::Star, 0});
            ++i;
        } else if (c == '+') {
            toks.push_back({ZTok::Plus, 0});
            ++i;
        } else if (c == '-') {
            toks.push_back({ZTok::Minus, 0});
            ++i;
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "' in polynomial");
        }
    }
    toks.push_back({ZTok::End, 0});
    return toks;
}

}  // namespace

ZPoly ZPoly::parse(const std::string& text, const std::string& var) {
    auto toks = lex_zpoly(text, var);
    size_t pos = 0;
    ZPoly result;
    bool any = false;
    while (toks[pos].kind != ZTok::End) {
        Int sign = 1;
        while (toks[pos].kind == ZTok::Plus || toks[pos].kind == ZTok::Minus) {
            if (toks[pos].kind == ZTok::Minus) sign = -sign;
            ++pos;
        }
        Int coef = 1;
        int deg = 0;
        bool saw_factor = false;
        while (true) {
            if (toks[pos].kind == ZTok::Num) {
                coef *= toks[pos].value;
                ++pos;
                saw_factor = true;
            } else if (toks[pos].kind == ZTok::Var) {
                ++pos;
                long e = 1;
                if (toks[pos].kind == ZTok::Caret) {
                    ++pos;
                    Int es = 1;
                    if (toks[pos].kind == ZTok::Minus) { es = -1; ++pos; }
                    if (toks[pos].kind != ZTok::Num) throw ParseError("exponent expected after '^'");
                    Int ev = es * toks[pos].value;
                    ++pos;
                    if (ev < 0) throw ParseError("negative exponent in polynomial");
                    e = to_long(ev, "exponent");
                }
                deg += static_cast<int>(e);
                saw_factor = true;
            } else {
                break;
            }
            if (toks[pos].kind == ZTok::Star) ++pos;
        }
        if (!saw_factor) throw ParseError("dangling sign in polynomial");
        result = result + monomial(sign * coef, deg);
        any = true;
    }
    if (!any) throw ParseError("empty polynomial");
    return result;
}

// ---------------------------------------------------------------- QRat

QRat::QRat(QPoly n, QPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw Error("QRat with zero denominator");
    QPoly g = QPoly::gcd(num, den);
    if (!g.is_zero() && g.degree() > 0) {
        num = num.divmod(g).first;
        den = den.divmod(g).first;
    }
    Rat d0 = den.coeff(0);
    Rat scale = (d0 != 0) ? d0 : den.coeffs().back();
    QPoly inv(Rat(1) / scale);
    num = num * inv;
    den = den * inv;
}

QRat QRat::operator+(const QRat& o) const { return QRat(num * o.den + o.num * den, den * o.den); }
QRat QRat::operator-(const QRat& o) const { return QRat(num * o.den - o.num * den, den * o.den); }
QRat QRat::operator*(const QRat& o) const { return QRat(num * o.num, den * o.den); }

bool QRat::operator==(const QRat& o) const {
    return (num * o.den) == (o.num * den);
}

std::vector<Rat> QRat::series(int n) const {
    if (den.coeff(0) == 0) throw Error("QRat series: denominator vanishes at 0");
    std::vector<Rat> s(n + 1, Rat(0));
    Rat d0 = den.coeff(0);
    for (int k = 0; k <= n; ++k) {
        Rat acc = num.coeff(k);
        for (int i = 1; i <= std::min(k, den.degree()); ++i)
            acc -= den.coeff(i) * s[k - i];
        s[k] = acc / d0;
    }
    return s;
}

std::string QRat::to_string(const std::string& var) const {
    std::string ns = num.to_string(var, true);
    if (den == QPoly(Rat(1))) return ns;
    bool compound = num.degree() > 0 && ns.find(' ') != std::string::npos;
    if (compound) ns = "(" + ns + ")";
    return ns + " / (" + den.to_string(var, true) + ")";
}

}  // namespace mzeta
