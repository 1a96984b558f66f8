#include "mzeta/igusa.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mzeta {
namespace igusa {

namespace {

const char kVarNames[] = "xyzw";

int var_index(char c) {
    switch (tolower(static_cast<unsigned char>(c))) {
        case 'x': return 0;
        case 'y': return 1;
        case 'z': return 2;
        case 'w': return 3;
        default: return -1;
    }
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// p^e as a checked uint64 capped below 2^62
std::uint64_t pow_u64(long p, long e) {
    std::uint64_t r = 1;
    for (long i = 0; i < e; ++i) {
        if (r > (std::uint64_t(1) << 62) / static_cast<std::uint64_t>(p))
            throw BudgetError("modulus p^" + std::to_string(e) + " exceeds the machine range");
        r *= static_cast<std::uint64_t>(p);
    }
    return r;
}

void check_budget(const IntPoly& f, long p, long m, long budget) {
    if (!is_prime(p)) throw ValidationError("p", std::to_string(p) + " is not prime");
    if (m < 0) throw ValidationError("m", "level must be >= 0");
    Int space = int_pow(Int(p), static_cast<unsigned long>(f.nvars) *
                                    static_cast<unsigned long>(m + 1));
    if (space > budget) {
        long max_m = -1;
        Int bound(budget);
        while (true) {
            Int next = int_pow(Int(p), static_cast<unsigned long>(f.nvars) *
                                           static_cast<unsigned long>(max_m + 2));
            if (next > bound) break;
            ++max_m;
        }
        std::ostringstream os;
        os << "search space p^(n(m+1)) = " << space.get_str() << " exceeds the budget " << budget
           << " (p = " << p << ", n = " << f.nvars << "); the budget allows m <= " << max_m
           << ". Raise MZETA_BUDGET to override.";
        throw BudgetError(os.str());
    }
}

// coefficients reduced into uint64 residues mod `mod` (mod < 2^31, so plain
// 64-bit products cannot overflow)
struct PreparedPoly {
    std::uint64_t mod;
    int nvars;
    std::vector<std::pair<std::array<int, 4>, std::uint64_t>> terms;
};

PreparedPoly prepare(const IntPoly& f, std::uint64_t mod) {
    if (mod >= (std::uint64_t(1) << 31))
        throw BudgetError("modulus " + std::to_string(mod) + " exceeds the fast-arithmetic range");
    PreparedPoly out;
    out.mod = mod;
    out.nvars = f.nvars;
    Int m(static_cast<unsigned long>(mod));
    for (const auto& [exps, c] : f.terms) {
        Int red = c % m;
        if (red < 0) red += m;
        std::uint64_t cv = red.get_ui();
        if (cv != 0) out.terms.push_back({exps, cv});
    }
    return out;
}

std::uint64_t eval(const PreparedPoly& f, const std::uint64_t a[4]) {
    std::uint64_t acc = 0;
    for (const auto& [exps, c] : f.terms) {
        std::uint64_t t = c;
        for (int v = 0; v < f.nvars; ++v) {
            std::uint64_t base = a[v] % f.mod;
            for (int e = 0; e < exps[static_cast<size_t>(v)]; ++e) t = t * base % f.mod;
        }
        acc = (acc + t) % f.mod;
    }
    return acc;
}

// deterministic parallel map: fixed chunking, buffers spliced in chunk order
template <typename Fn>
std::vector<std::uint64_t> parallel_collect(std::size_t total, Fn&& per_index) {
#ifdef _OPENMP
    int chunks = std::max(1, omp_get_max_threads());
#else
    int chunks = 1;
#endif
    std::vector<std::vector<std::uint64_t>> buf(static_cast<size_t>(chunks));
#ifdef _OPENMP
#pragma omp parallel for schedule(static, 1)
#endif
    for (int c = 0; c < chunks; ++c) {
        std::size_t lo = total * static_cast<std::size_t>(c) / static_cast<std::size_t>(chunks);
        std::size_t hi = total * static_cast<std::size_t>(c + 1) / static_cast<std::size_t>(chunks);
        for (std::size_t i = lo; i < hi; ++i) per_index(i, buf[static_cast<size_t>(c)]);
    }
    std::size_t n = 0;
    for (const auto& b : buf) n += b.size();
    std::vector<std::uint64_t> out;
    out.reserve(n);
    for (auto& b : buf) out.insert(out.end(), b.begin(), b.end());
    return out;
}

// solutions stored flat with stride nvars
std::vector<std::uint64_t> base_solutions(const IntPoly& f, long p) {
    PreparedPoly fp = prepare(f, static_cast<std::uint64_t>(p));
    int n = f.nvars;
    std::size_t total = 1;
    for (int v = 0; v < n; ++v) total *= static_cast<std::size_t>(p);
    return parallel_collect(total, [&](std::size_t idx, std::vector<std::uint64_t>& out) {
        std::uint64_t a[4] = {0, 0, 0, 0};
        std::size_t rest = idx;
        for (int v = 0; v < n; ++v) {
            a[v] = rest % static_cast<std::size_t>(p);
            rest /= static_cast<std::size_t>(p);
        }
        if (eval(fp, a) == 0)
            for (int v = 0; v < n; ++v) out.push_back(a[v]);
    });
}

std::vector<std::uint64_t> lift_solutions(const IntPoly& f, long p, long level,
                                          const std::vector<std::uint64_t>& sols) {
    // level k -> k+1: solutions mod p^{k+2} over those mod p^{k+1}
    int n = f.nvars;
    std::uint64_t step = pow_u64(p, level + 1);
    std::uint64_t mod = step * static_cast<std::uint64_t>(p);
    PreparedPoly fp = prepare(f, mod);
    std::size_t count = sols.size() / static_cast<std::size_t>(n);
    std::size_t branches = 1;
    for (int v = 0; v < n; ++v) branches *= static_cast<std::size_t>(p);
    return parallel_collect(count, [&](std::size_t i, std::vector<std::uint64_t>& out) {
        const std::uint64_t* a = &sols[i * static_cast<std::size_t>(n)];
        for (std::size_t b = 0; b < branches; ++b) {
            std::uint64_t cand[4] = {0, 0, 0, 0};
            std::size_t rest = b;
            for (int v = 0; v < n; ++v) {
                cand[v] = a[v] + step * (rest % static_cast<std::size_t>(p));
                rest /= static_cast<std::size_t>(p);
            }
            if (eval(fp, cand) == 0)
                for (int v = 0; v < n; ++v) out.push_back(cand[v]);
        }
    });
}

}  // namespace

std::optional<long> IntPoly::monomial_power() const {
    if (nvars != 1 || terms.size() != 1) return std::nullopt;
    const auto& [exps, c] = *terms.begin();
    if (c != 1 || exps[0] < 1) return std::nullopt;
    return exps[0];
}

IntPoly IntPoly::parse(const std::string& text) {
    IntPoly f;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    bool any = false;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        Int sign = 1;
        while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') sign = -sign;
            ++i;
            skip_ws();
        }
        Int coef = 1;
        std::array<int, 4> exps = {0, 0, 0, 0};
        bool saw_factor = false;
        while (i < text.size()) {
            skip_ws();
            if (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
                size_t j = i;
                while (j < text.size() && isdigit(static_cast<unsigned char>(text[j]))) ++j;
                coef *= Int(text.substr(i, j - i));
                i = j;
                saw_factor = true;
            } else if (i < text.size() && var_index(text[i]) >= 0) {
                int v = var_index(text[i]);
                ++i;
                long e = 1;
                skip_ws();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip_ws();
                    size_t j = i;
                    while (j < text.size() && isdigit(static_cast<unsigned char>(text[j]))) ++j;
                    if (j == i) throw ParseError("exponent expected after '^'");
                    e = std::stol(text.substr(i, j - i));
                    i = j;
                }
                if (e < 1 || e > 1000000) throw ParseError("exponent out of range");
                exps[static_cast<size_t>(v)] += static_cast<int>(e);
                f.nvars = std::max(f.nvars, v + 1);
                saw_factor = true;
            } else {
                break;
            }
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            if (i < text.size() && (text[i] == '+' || text[i] == '-')) break;
        }
        if (!saw_factor) throw ParseError("malformed polynomial near position " + std::to_string(i));
        Int& slot = f.terms[exps];
        slot += sign * coef;
        if (slot == 0) f.terms.erase(exps);
        any = true;
    }
    if (!any) throw ParseError("empty polynomial");
    bool constant = true;
    for (const auto& [exps, c] : f.terms)
        if (exps != std::array<int, 4>{0, 0, 0, 0}) constant = false;
    if (constant) throw ValidationError("poly", "polynomial must not be constant");
    if (f.nvars < 1) f.nvars = 1;
    return f;
}

std::string IntPoly::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [exps, c] = *it;
        bool neg = c < 0;
        Int a = abs(c);
        out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        bool printed = false;
        if (a != 1 || exps == std::array<int, 4>{0, 0, 0, 0}) {
            out << a.get_str();
            printed = true;
        }
        for (int v = 0; v < 4; ++v) {
            if (exps[static_cast<size_t>(v)] == 0) continue;
            if (printed) out << "*";
            out << kVarNames[v];
            if (exps[static_cast<size_t>(v)] != 1) out << "^" << exps[static_cast<size_t>(v)];
            printed = true;
        }
    }
    return first ? "0" : out.str();
}

Int count_solutions(const IntPoly& f, long p, long m, long budget) {
    check_budget(f, p, m, budget);
    auto sols = base_solutions(f, p);
    for (long k = 0; k < m; ++k) sols = lift_solutions(f, p, k, sols);
    return Int(static_cast<unsigned long>(sols.size() / static_cast<std::size_t>(f.nvars)));
}

Int count_solutions_flat(const IntPoly& f, long p, long m, long budget) {
    check_budget(f, p, m, budget);
    std::uint64_t mod = pow_u64(p, m + 1);
    PreparedPoly fp = prepare(f, mod);
    int n = f.nvars;
    Int space = int_pow(Int(p), static_cast<unsigned long>(n) * static_cast<unsigned long>(m + 1));
    std::size_t total = space.get_ui();
    long long count = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : count) schedule(static)
#endif
    for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
        std::uint64_t a[4] = {0, 0, 0, 0};
        std::uint64_t rest = static_cast<std::uint64_t>(idx);
        for (int v = 0; v < n; ++v) {
            a[v] = rest % mod;
            rest /= mod;
        }
        if (eval(fp, a) == 0) ++count;
    }
    return Int(static_cast<long>(count));
}

CountSeries poincare_truncated(const IntPoly& f, long p, long M, long budget) {
    check_budget(f, p, M, budget);
    CountSeries series;
    series.p = p;
    auto sols = base_solutions(f, p);
    int n = f.nvars;
    series.values.push_back(Int(static_cast<unsigned long>(sols.size() / static_cast<size_t>(n))));
    for (long k = 0; k < M; ++k) {
        sols = lift_solutions(f, p, k, sols);
        series.values.push_back(
            Int(static_cast<unsigned long>(sols.size() / static_cast<size_t>(n))));
    }
    return series;
}

std::optional<QRat> fit_rational(const CountSeries& series) {
    long M = static_cast<long>(series.values.size()) - 1;
    if (M < 6) throw ValidationError("fit_rational", "need at least 7 terms (M >= 6)");
    long max_order = M / 2 - 1;
    std::vector<Rat> v;
    for (const auto& x : series.values) v.emplace_back(x);

    for (long r = 1; r <= max_order; ++r) {
        // solve sum_i c_i N_{m-i} = N_m over all m >= r by elimination
        std::vector<std::vector<Rat>> rows;
        for (long m = r; m <= M; ++m) {
            std::vector<Rat> row;
            for (long i = 1; i <= r; ++i) row.push_back(v[static_cast<size_t>(m - i)]);
            row.push_back(v[static_cast<size_t>(m)]);
            rows.push_back(std::move(row));
        }
        long cols = r;
        std::vector<long> pivot_col;
        long rank = 0;
        bool inconsistent = false;
        for (long col = 0; col < cols && rank < static_cast<long>(rows.size()); ++col) {
            long sel = -1;
            for (long i = rank; i < static_cast<long>(rows.size()); ++i)
                if (rows[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(sel)]);
            Rat lead = rows[static_cast<size_t>(rank)][static_cast<size_t>(col)];
            for (auto& x : rows[static_cast<size_t>(rank)]) x /= lead;
            for (long i = 0; i < static_cast<long>(rows.size()); ++i) {
                if (i == rank) continue;
                Rat factor = rows[static_cast<size_t>(i)][static_cast<size_t>(col)];
                if (factor == 0) continue;
                for (long j = col; j <= cols; ++j)
                    rows[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                        factor * rows[static_cast<size_t>(rank)][static_cast<size_t>(j)];
            }
            pivot_col.push_back(col);
            ++rank;
        }
        for (long i = rank; i < static_cast<long>(rows.size()); ++i)
            if (rows[static_cast<size_t>(i)][static_cast<size_t>(cols)] != 0) inconsistent = true;
        if (inconsistent) continue;
        std::vector<Rat> c(static_cast<size_t>(r), Rat(0));  // free variables pinned to 0
        for (long i = 0; i < rank; ++i)
            c[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] =
                rows[static_cast<size_t>(i)][static_cast<size_t>(cols)];

        // B = 1 - sum c_i T^i ; A = (B * P) truncated below order r
        QPoly B(Rat(1));
        for (long i = 1; i <= r; ++i)
            B = B - QPoly::monomial(c[static_cast<size_t>(i - 1)], static_cast<int>(i));
        QPoly A;
        for (long j = 0; j < r; ++j) {
            Rat a = v[static_cast<size_t>(j)];
            for (long i = 1; i <= j; ++i) a -= c[static_cast<size_t>(i - 1)] * v[static_cast<size_t>(j - i)];
            A = A + QPoly::monomial(a, static_cast<int>(j));
        }
        QRat fit(A, B);
        // re-verify on every supplied term
        auto expanded = fit.series(static_cast<int>(M));
        bool ok = true;
        for (long j = 0; j <= M; ++j)
            if (expanded[static_cast<size_t>(j)] != v[static_cast<size_t>(j)]) ok = false;
        if (ok) return fit;
    }
    return std::nullopt;
}

QRat zeta_monomial(long k, long p) {
    if (k < 1) throw ValidationError("k", "exponent must be >= 1");
    if (!is_prime(p)) throw ValidationError("p", std::to_string(p) + " is not prime");
    Rat pinv(1, p);
    QPoly num{Rat(1) - pinv};
    QPoly den = QPoly(Rat(1)) - QPoly::monomial(pinv, static_cast<int>(k));
    QRat z(num, den);
    // truncated measure sum: sum_j u^{kj} (p^{-j} - p^{-j-1})
    const int J = 50;
    QPoly truncated;
    Rat pj(1);
    for (int j = 0; j <= J; ++j) {
        truncated = truncated + QPoly::monomial(pj * (Rat(1) - pinv), static_cast<int>(k) * j);
        pj *= pinv;
    }
    auto closed = z.series(static_cast<int>(k) * J);
    for (int i = 0; i <= static_cast<int>(k) * J; ++i)
        if (closed[static_cast<size_t>(i)] != truncated.coeff(i))
            throw Error("zeta_monomial closed form disagrees with the measure sum; this is a bug");
    return z;
}

PoinzetaReport poinzeta_compare(const std::vector<Rat>& lhs, const std::vector<Rat>& rhs) {
    PoinzetaReport rep;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.pass = true;
    size_t n = std::min(lhs.size(), rhs.size());
    for (size_t i = 0; i < n; ++i) {
        if (lhs[i] != rhs[i]) {
            rep.pass = false;
            rep.first_mismatch = static_cast<long>(i);
            break;
        }
    }
    return rep;
}

PoinzetaReport check_poinzeta(long k, long p, long M, long budget) {
    IntPoly f;
    f.nvars = 1;
    f.terms[{static_cast<int>(k), 0, 0, 0}] = 1;
    CountSeries series = poincare_truncated(f, p, M, budget);

    // left side: P(p^{-n} T), n = 1
    std::vector<Rat> lhs;
    Rat pm(1);
    for (long m = 0; m <= M; ++m) {
        lhs.push_back(Rat(series.values[static_cast<size_t>(m)]) * pm);
        pm /= p;
    }

    // right side: p (1 - Z(T)) / (1 - T), from the closed monomial form
    QRat z = zeta_monomial(k, p);
    QRat one(QPoly(Rat(1)), QPoly(Rat(1)));
    QRat geom(QPoly(Rat(1)), QPoly(Rat(1)) - QPoly::monomial(Rat(1), 1));
    QRat rhs_fn = (one - z) * geom * QRat(QPoly(Rat(p)), QPoly(Rat(1)));
    std::vector<Rat> rhs = rhs_fn.series(static_cast<int>(M));

    return poinzeta_compare(lhs, rhs);
}

}  // namespace igusa
}  // namespace mzeta
