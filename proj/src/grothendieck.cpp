#include "mzeta/grothendieck.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <vector>

namespace mzeta {

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    if (a.lexp != b.lexp) return a.lexp > b.lexp;
    long da = 0, db = 0;
    for (const auto& [n, e] : a.syms) da += e;
    for (const auto& [n, e] : b.syms) db += e;
    if (da != db) return da > db;
    // lexicographic compare of the flattened multisets, run-length encoded
    auto ia = a.syms.begin(), ib = b.syms.begin();
    long ca = 0, cb = 0;
    while (true) {
        if (ia == a.syms.end() && ib == b.syms.end()) return false;
        if (ia == a.syms.end()) return true;
        if (ib == b.syms.end()) return false;
        if (ia->first != ib->first) return ia->first < ib->first;
        long m = std::min(ia->second - ca, ib->second - cb);
        ca += m;
        cb += m;
        if (ca == ia->second) { ++ia; ca = 0; }
        if (cb == ib->second) { ++ib; cb = 0; }
    }
}

void GrothElem::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GrothElem GrothElem::constant(const Int& c) {
    GrothElem x;
    x.add_term(Monomial{}, c);
    return x;
}

GrothElem GrothElem::L(long exp) {
    GrothElem x;
    x.add_term(Monomial{exp, {}}, 1);
    return x;
}

GrothElem GrothElem::symbol(const std::string& name, long exp) {
    if (name.empty() || name == "L")
        throw ValidationError("symbol", "'" + name + "' is not a valid class symbol");
    if (exp <= 0) throw ValidationError("symbol", "symbol exponent must be positive");
    GrothElem x;
    Monomial m;
    m.syms[name] = exp;
    x.add_term(m, 1);
    return x;
}

bool GrothElem::has_symbols() const {
    for (const auto& [m, c] : terms_)
        if (!m.syms.empty()) return true;
    return false;
}

std::set<std::string> GrothElem::symbols() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [name, e] : m.syms) out.insert(name);
    return out;
}

GrothElem GrothElem::operator+(const GrothElem& o) const {
    GrothElem r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

GrothElem GrothElem::operator-() const {
    GrothElem r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

GrothElem GrothElem::operator-(const GrothElem& o) const { return *this + (-o); }

GrothElem GrothElem::operator*(const GrothElem& o) const {
    GrothElem r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m;
            m.lexp = ma.lexp + mb.lexp;
            m.syms = ma.syms;
            for (const auto& [name, e] : mb.syms) m.syms[name] += e;
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

GrothElem GrothElem::pow(unsigned long e) const {
    GrothElem r = one(), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

GrothElem GrothElem::mul_L_power(long k) const {
    GrothElem r;
    for (const auto& [m, c] : terms_) {
        Monomial m2 = m;
        m2.lexp += k;
        r.terms_.emplace(m2, c);
    }
    return r;
}

GrothElem GrothElem::substitute_relations(const std::map<std::string, GrothElem>& relations) const {
    // topological order on the substituted symbols; cycles are rejected
    std::vector<std::string> order;
    std::map<std::string, int> state;  // 0 unseen, 1 active, 2 done
    std::function<void(const std::string&)> visit = [&](const std::string& s) {
        auto it = relations.find(s);
        if (it == relations.end()) return;
        int& st = state[s];
        if (st == 2) return;
        if (st == 1)
            throw ValidationError("substitute_relations", "cyclic relation through symbol '" + s + "'");
        st = 1;
        for (const auto& dep : it->second.symbols()) visit(dep);
        st = 2;
        order.push_back(s);
    };
    for (const auto& [s, rel] : relations) visit(s);

    // eliminating in dependency order makes one pass per symbol sufficient
    GrothElem x = *this;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const std::string& s = *it;
        const GrothElem& rel = relations.at(s);
        GrothElem next;
        for (const auto& [m, c] : x.terms_) {
            auto se = m.syms.find(s);
            if (se == m.syms.end()) {
                next.add_term(m, c);
                continue;
            }
            Monomial rest = m;
            long e = se->second;
            rest.syms.erase(s);
            GrothElem base;
            base.add_term(rest, c);
            next += base * rel.pow(static_cast<unsigned long>(e));
        }
        x = next;
    }
    return x;
}

QPoly GrothElem::specialize(const Specialization& s) const {
    bool l_const = s.L_image.degree() <= 0;
    Rat l_val = l_const ? s.L_image.coeff(0) : Rat(0);
    QPoly acc;
    for (const auto& [m, c] : terms_) {
        QPoly term{Rat(c)};
        if (m.lexp >= 0) {
            term = term * s.L_image.pow(static_cast<unsigned long>(m.lexp));
        } else {
            if (!l_const || l_val == 0)
                throw ValidationError("specialize",
                                      "negative power of L needs an invertible image of L");
            Rat inv = Rat(1) / l_val;
            QPoly p{inv};
            term = term * p.pow(static_cast<unsigned long>(-m.lexp));
        }
        for (const auto& [name, e] : m.syms) {
            auto img = s.symbol_images.find(name);
            if (img == s.symbol_images.end())
                throw ValidationError("specialize", "no image for symbol '" + name + "'");
            term = term * img->second.pow(static_cast<unsigned long>(e));
        }
        acc += term;
    }
    return acc;
}

std::optional<long> GrothElem::virtual_dimension(const std::map<std::string, long>& dims) const {
    if (terms_.empty()) return std::nullopt;
    std::optional<long> best;
    for (const auto& [m, c] : terms_) {
        long w = m.lexp;
        for (const auto& [name, e] : m.syms) {
            auto it = dims.find(name);
            if (it == dims.end())
                throw ValidationError("virtual_dimension", "no dimension for symbol '" + name + "'");
            w += e * it->second;
        }
        if (!best || w > *best) best = w;
    }
    return best;
}

std::string GrothElem::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c < 0;
        Int a = abs(c);
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;
        std::vector<std::string> factors;
        if (m.lexp != 0) {
            if (m.lexp == 1)
                factors.push_back("L");
            else
                factors.push_back("L^" + std::to_string(m.lexp));
        }
        for (const auto& [name, e] : m.syms)
            factors.push_back(e == 1 ? name : name + "^" + std::to_string(e));
        if (factors.empty()) {
            out << a.get_str();
        } else {
            bool printed = false;
            if (a != 1) {
                out << a.get_str();
                printed = true;
            }
            for (const auto& f : factors) {
                if (printed) out << "*";
                out << f;
                printed = true;
            }
        }
    }
    return out.str();
}

namespace {

struct GTok {
    enum Kind { Num, Lvar, Ident, Caret, Star, Plus, Minus, End } kind;
    Int value;
    std::string name;
};

std::vector<GTok> lex(const std::string& s) {
    std::vector<GTok> toks;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
            toks.push_back({GTok::Num, Int(s.substr(i, j - i)), ""});
            i = j;
        } else if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() &&
                   (isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            std::string name = s.substr(i, j - i);
            if (name == "L")
                toks.push_back({GTok::Lvar, 0, ""});
            else
                toks.push_back({GTok::Ident, 0, name});
            i = j;
        } else if (c == '^') {
            toks.push_back({GTok::Caret, 0, ""});
            ++i;
        } else if (c == '*') {
            toks.push_back({GTok::Star, 0, ""});
            ++i;
        } else if (c == '+') {
            toks.push_back({GTok::Plus, 0, ""});
            ++i;
        } else if (c == '-') {
            toks.push_back({GTok::Minus, 0, ""});
            ++i;
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "' in class expression");
        }
    }
    toks.push_back({GTok::End, 0, ""});
    return toks;
}

long parse_exponent(const std::vector<GTok>& toks, size_t& pos) {
    if (toks[pos].kind != GTok::Caret) return 1;
    ++pos;
    long sign = 1;
    if (toks[pos].kind == GTok::Minus) { sign = -1; ++pos; }
    if (toks[pos].kind != GTok::Num) throw ParseError("exponent expected after '^'");
    long e = sign * to_long(toks[pos].value, "exponent");
    ++pos;
    return e;
}

}  // namespace

GrothElem GrothElem::parse(const std::string& text) {
    auto toks = lex(text);
    size_t pos = 0;
    GrothElem result;
    bool any = false;
    while (toks[pos].kind != GTok::End) {
        Int sign = 1;
        while (toks[pos].kind == GTok::Plus || toks[pos].kind == GTok::Minus) {
            if (toks[pos].kind == GTok::Minus) sign = -sign;
            ++pos;
        }
        Int coef = 1;
        Monomial m;
        bool saw_factor = false;
        while (true) {
            if (toks[pos].kind == GTok::Num) {
                coef *= toks[pos].value;
                ++pos;
            } else if (toks[pos].kind == GTok::Lvar) {
                ++pos;
                m.lexp += parse_exponent(toks, pos);
            } else if (toks[pos].kind == GTok::Ident) {
                std::string name = toks[pos].name;
                ++pos;
                long e = parse_exponent(toks, pos);
                if (e <= 0) throw ParseError("class symbol '" + name + "' needs a positive exponent");
                m.syms[name] += e;
            } else {
                break;
            }
            saw_factor = true;
            if (toks[pos].kind == GTok::Star) ++pos;
        }
        if (!saw_factor) throw ParseError("dangling sign in class expression");
        GrothElem t;
        t.add_term(m, sign * coef);
        result += t;
        any = true;
    }
    if (!any) throw ParseError("empty class expression");
    return result;
}

}  // namespace mzeta
