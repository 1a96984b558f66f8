#include "mzeta/zeta.hpp"

#include <algorithm>
#include <sstream>

namespace mzeta {

namespace {

using Numerator = ZetaRational::Numerator;

void add_into(Numerator& acc, const Numerator& x) {
    for (const auto& [d, c] : x) {
        auto it = acc.find(d);
        if (it == acc.end()) {
            acc.emplace(d, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

// multiply a T-polynomial by (1 - L^a T^b)^times
Numerator mul_factor(const Numerator& num, long a, long b, long times) {
    Numerator acc = num;
    for (long i = 0; i < times; ++i) {
        Numerator next;
        for (const auto& [d, c] : acc) {
            // c*T^d - c*L^a*T^{d+b}
            auto it = next.find(d);
            if (it == next.end())
                next.emplace(d, c);
            else {
                it->second += c;
                if (it->second.is_zero()) next.erase(it);
            }
            GrothElem shifted = -(c.mul_L_power(a));
            auto jt = next.find(d + b);
            if (jt == next.end())
                next.emplace(d + b, shifted);
            else {
                jt->second += shifted;
                if (jt->second.is_zero()) next.erase(jt);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

long degree_of(const Numerator& num) {
    return num.empty() ? -1 : num.rbegin()->first;
}

// exact quotient of num by (1 - sign * L^a T^b); nullopt if not divisible.
// The divisor is a unit at T = 0, so the quotient builds from the bottom.
std::optional<Numerator> divide_by_binomial(const Numerator& num, long a, long b, int sign) {
    if (num.empty()) return Numerator{};
    long deg = degree_of(num);
    std::map<long, GrothElem> q;
    for (long k = 0; k <= deg; ++k) {
        GrothElem nk;
        if (auto it = num.find(k); it != num.end()) nk = it->second;
        GrothElem prev;
        if (auto it = q.find(k - b); it != q.end()) prev = it->second;
        GrothElem qk = nk + GrothElem::constant(sign) * prev.mul_L_power(a);
        if (!qk.is_zero()) q.emplace(k, qk);
    }
    for (long k = deg - b + 1; k <= deg; ++k)
        if (q.count(k)) return std::nullopt;
    Numerator out;
    for (auto& [d, c] : q)
        if (d <= deg - b && !c.is_zero()) out.emplace(d, c);
    return out;
}

}  // namespace

ZetaRational::ZetaRational(Numerator num, DenomMap den)
    : num_(std::move(num)), den_(std::move(den)) {
    for (const auto& [key, mult] : den_) {
        if (key.second < 1) throw ValidationError("denominator", "factor needs T-exponent b >= 1");
        if (mult < 1) throw ValidationError("denominator", "factor multiplicity must be >= 1");
    }
    for (const auto& [d, c] : num_)
        if (d < 0) throw ValidationError("numerator", "negative T-degree");
    prune();
}

void ZetaRational::prune() {
    for (auto it = num_.begin(); it != num_.end();)
        it = it->second.is_zero() ? num_.erase(it) : std::next(it);
}

std::vector<DenomFactor> ZetaRational::denominator_factors() const {
    std::vector<DenomFactor> out;
    for (const auto& [key, mult] : den_) out.push_back({key.first, key.second, mult});
    return out;
}

bool ZetaRational::has_symbols() const {
    for (const auto& [d, c] : num_)
        if (c.has_symbols()) return true;
    return false;
}

ZetaRational ZetaRational::operator+(const ZetaRational& o) const {
    DenomMap total = den_;
    for (const auto& [key, mult] : o.den_) {
        auto it = total.find(key);
        if (it == total.end())
            total.emplace(key, mult);
        else
            it->second = std::max(it->second, mult);
    }
    auto complement = [&](const ZetaRational& z) {
        Numerator acc = z.num_;
        for (const auto& [key, mult] : total) {
            long own = 0;
            if (auto it = z.den_.find(key); it != z.den_.end()) own = it->second;
            if (mult > own) acc = mul_factor(acc, key.first, key.second, mult - own);
        }
        return acc;
    };
    Numerator num = complement(*this);
    add_into(num, complement(o));
    ZetaRational r;
    r.num_ = std::move(num);
    r.den_ = std::move(total);
    r.prune();
    return r;
}

ZetaRational ZetaRational::operator-(const ZetaRational& o) const {
    ZetaRational neg = o;
    for (auto& [d, c] : neg.num_) c = -c;
    return *this + neg;
}

bool ZetaRational::operator==(const ZetaRational& o) const {
    return (*this - o).numerator_is_zero();
}

ZetaRational ZetaRational::mul_class(const GrothElem& c) const {
    ZetaRational r = *this;
    for (auto& [d, coeff] : r.num_) coeff = coeff * c;
    r.prune();
    return r;
}

std::vector<GrothElem> ZetaRational::series_expand(long d_max) const {
    if (d_max < 1) throw ValidationError("series_expand", "d_max must be >= 1");
    // denominator expansion by convolution, truncated at d_max
    std::map<long, GrothElem> den_series;
    den_series.emplace(0, GrothElem::one());
    for (const auto& [key, mult] : den_) {
        auto [a, b] = key;
        // (1 - L^a T^b)^{-mult} = sum_j C(j+mult-1, mult-1) L^{aj} T^{bj}
        std::map<long, GrothElem> factor;
        for (long j = 0; j * b <= d_max; ++j) {
            Int binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(j + mult - 1),
                         static_cast<unsigned long>(mult - 1));
            factor.emplace(j * b, GrothElem::constant(binom).mul_L_power(a * j));
        }
        std::map<long, GrothElem> next;
        for (const auto& [d1, c1] : den_series) {
            for (const auto& [d2, c2] : factor) {
                if (d1 + d2 > d_max) break;
                auto it = next.find(d1 + d2);
                if (it == next.end())
                    next.emplace(d1 + d2, c1 * c2);
                else
                    it->second += c1 * c2;
            }
        }
        den_series = std::move(next);
    }
    std::vector<GrothElem> out(static_cast<size_t>(d_max));
    for (const auto& [d, c] : num_) {
        if (d > d_max) break;
        for (const auto& [j, s] : den_series) {
            long k = d + j;
            if (k > d_max) break;
            if (k >= 1) out[static_cast<size_t>(k - 1)] += c * s;
        }
    }
    return out;
}

ZetaRational ZetaRational::normalize(long check_depth) const {
    ZetaRational z = *this;
    if (z.num_.empty()) {
        z.den_.clear();
        return z;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = z.den_.begin(); it != z.den_.end();) {
            auto [a, b] = it->first;
            while (it->second > 0) {
                auto q = divide_by_binomial(z.num_, a, b, +1);
                if (!q) break;
                z.num_ = std::move(*q);
                --it->second;
                changed = true;
            }
            // (1 - L^{2a'}T^{2b'}) = (1 - L^{a'}T^{b'})(1 + L^{a'}T^{b'})
            if (it->second > 0 && a % 2 == 0 && b % 2 == 0) {
                auto q = divide_by_binomial(z.num_, a / 2, b / 2, -1);
                if (q) {
                    z.num_ = std::move(*q);
                    --it->second;
                    z.den_[{a / 2, b / 2}] += 1;
                    changed = true;
                    it = z.den_.begin();  // map mutated; restart scan
                    continue;
                }
            }
            it = (it->second == 0) ? z.den_.erase(it) : std::next(it);
        }
        if (z.num_.empty()) {
            z.den_.clear();
            break;
        }
    }
    if (check_depth > 0) {
        auto before = series_expand(check_depth);
        auto after = z.series_expand(check_depth);
        if (before != after)
            throw Error("normalize changed the series expansion; this is a bug");
    }
    return z;
}

PoleReport ZetaRational::poles() const {
    std::map<Rat, long> by_ratio;
    for (const auto& [key, mult] : den_) {
        Rat s(key.first, key.second);
        s.canonicalize();
        by_ratio[s] += mult;
    }
    PoleReport report;
    for (auto it = by_ratio.rbegin(); it != by_ratio.rend(); ++it)
        report.entries.push_back({it->first, it->second});
    return report;
}

std::string ZetaRational::to_string() const {
    std::ostringstream out;
    if (num_.empty()) {
        out << "0";
    } else {
        bool first = true;
        for (const auto& [d, c] : num_) {
            if (!first) out << " + ";
            first = false;
            std::string cs = c.to_string();
            bool simple = c.terms().size() == 1 && cs[0] != '-';
            if (d == 0) {
                out << (simple ? cs : "(" + cs + ")");
                continue;
            }
            if (cs == "1")
                ;  // bare T^d
            else
                out << (simple ? cs : "(" + cs + ")") << "*";
            out << "T";
            if (d != 1) out << "^" << d;
        }
    }
    if (!den_.empty()) {
        // factors sorted by (b, a)
        std::vector<DenomFactor> fs = denominator_factors();
        std::sort(fs.begin(), fs.end(), [](const DenomFactor& x, const DenomFactor& y) {
            return std::tie(x.b, x.a) < std::tie(y.b, y.a);
        });
        out << " / ";
        for (const auto& f : fs) {
            out << "(1 - ";
            if (f.a == 1)
                out << "L ";
            else if (f.a != 0)
                out << "L^" << f.a << " ";
            out << "T";
            if (f.b != 1) out << "^" << f.b;
            out << ")";
            if (f.mult != 1) out << "^" << f.mult;
        }
    }
    return out.str();
}

std::string PoleReport::to_json() const {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (const auto& e : entries) {
        if (!first) out << ",";
        first = false;
        out << "{\"s\":\"" << rat_to_string(e.s) << "\",\"order\":" << e.order << "}";
    }
    out << "]";
    return out.str();
}

ZetaRational closed_sum(long r, long e, long t, long alpha, const Rat& beta,
                        const GrothElem& scale) {
    if (e < 1) throw ValidationError("closed_sum", "modulus e must be >= 1");
    if (r < 0 || r >= e) throw ValidationError("closed_sum", "residue r must satisfy 0 <= r < e");
    if (t < 0) throw ValidationError("closed_sum", "degree t must be >= 0");
    Rat e0 = Rat(alpha * r, e) + beta;
    e0.canonicalize();
    if (e0.get_den() != 1)
        throw ValidationError("closed_sum",
                              "non-integral L-exponent on residue class: (alpha/e)*d + beta = " +
                                  rat_to_string(e0) + " at d = " + std::to_string(r));
    long E0 = to_long(e0.get_num(), "closed_sum L-exponent");

    // P(j) = (r + e j)^t, summed against X^j via Newton's forward differences:
    //   sum_{j>=0} P(j) X^j = sum_i d^iP(0) X^i / (1-X)^{i+1}
    std::vector<Int> values(t + 1);
    for (long j = 0; j <= t; ++j) values[j] = int_pow(Int(r + e * j), static_cast<unsigned long>(t));
    std::vector<Int> diffs = values;  // diffs[i] becomes d^iP(0)
    for (long i = 1; i <= t; ++i)
        for (long j = t; j >= i; --j) diffs[j] -= diffs[j - 1];

    // numerator over (1-X)^{t+1}, as a polynomial in X with integer coefficients
    std::vector<Int> numX(t + 2, Int(0));
    for (long i = 0; i <= t; ++i) {
        // diffs[i] * X^i * (1-X)^{t-i}
        Int sign = 1;
        for (long k = 0; k <= t - i; ++k) {
            Int binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(t - i),
                         static_cast<unsigned long>(k));
            numX[i + k] += diffs[i] * sign * binom;
            sign = -sign;
        }
    }
    if (r == 0) {
        // the index set starts at d = e, so drop the j = 0 term P(0)
        Int p0 = int_pow(Int(0), static_cast<unsigned long>(t));  // 0^0 = 1
        if (t == 0) p0 = 1;
        if (p0 != 0) {
            Int sign = 1;
            for (long k = 0; k <= t + 1; ++k) {
                Int binom;
                mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(t + 1),
                             static_cast<unsigned long>(k));
                numX[k] -= p0 * sign * binom;
                sign = -sign;
            }
        }
    }

    ZetaRational::Numerator num;
    for (long i = 0; i < static_cast<long>(numX.size()); ++i) {
        if (numX[i] == 0) continue;
        GrothElem c = scale * GrothElem::constant(numX[i]).mul_L_power(E0 + alpha * i);
        long d = r + e * i;
        auto it = num.find(d);
        if (it == num.end())
            num.emplace(d, c);
        else
            it->second += c;
    }
    ZetaRational::DenomMap den;
    den[{alpha, e}] = t + 1;
    return ZetaRational(std::move(num), std::move(den));
}

}  // namespace mzeta
