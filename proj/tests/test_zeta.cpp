#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mzeta/zeta.hpp"

using namespace mzeta;

namespace {

ZetaRational simple(std::map<long, std::string> num_coeffs,
                    std::map<std::pair<long, long>, long> den) {
    ZetaRational::Numerator num;
    for (const auto& [d, s] : num_coeffs) num[d] = GrothElem::parse(s);
    return ZetaRational(std::move(num), std::move(den));
}

std::vector<GrothElem> parse_all(std::initializer_list<const char*> xs) {
    std::vector<GrothElem> out;
    for (const char* x : xs) out.push_back(GrothElem::parse(x));
    return out;
}

}  // namespace

TEST_CASE("series expansion of basic generating functions") {
    CHECK(simple({{1, "1"}}, {{{0, 1}, 1}}).series_expand(3) == parse_all({"1", "1", "1"}));
    CHECK(simple({{1, "1"}}, {{{0, 1}, 2}}).series_expand(4) ==
          parse_all({"1", "2", "3", "4"}));
    CHECK(simple({{2, "L"}}, {{{1, 2}, 1}}).series_expand(6) ==
          parse_all({"0", "L", "0", "L^2", "0", "L^3"}));
}

TEST_CASE("closed_sum") {
    CHECK(closed_sum(0, 1, 0, 0, Rat(0), GrothElem::one()) ==
          simple({{1, "1"}}, {{{0, 1}, 1}}));
    CHECK(closed_sum(0, 1, 1, 0, Rat(0), GrothElem::one()) ==
          simple({{1, "1"}}, {{{0, 1}, 2}}));

    // odd degrees with a half-integer intercept: sum L^{(d-1)/2} T^d
    ZetaRational z = closed_sum(1, 2, 0, 1, Rat(-1, 2), GrothElem::one());
    CHECK(z == simple({{1, "1"}}, {{{1, 2}, 1}}));
    auto coeffs = z.series_expand(10);
    for (long d = 1; d <= 10; ++d) {
        GrothElem want = d % 2 == 1 ? GrothElem::L((d - 1) / 2) : GrothElem::zero();
        CHECK(coeffs[d - 1] == want);
    }

    // exponent must be integral on the residue class
    CHECK_THROWS_AS(closed_sum(1, 2, 0, 1, Rat(0), GrothElem::one()), ValidationError);

    // direct evaluation oracle for a nontrivial class: d^2 L^{(d-2)/4+1} on d = 2 mod 4
    ZetaRational w = closed_sum(2, 4, 2, 1, Rat(1, 2), GrothElem::symbol("b"));
    auto ws = w.series_expand(20);
    for (long d = 1; d <= 20; ++d) {
        GrothElem want;
        if (d % 4 == 2)
            want = GrothElem::constant(d * d) *
                   GrothElem::symbol("b").mul_L_power((d - 2) / 4 + 1);
        CHECK(ws[d - 1] == want);
    }
}

TEST_CASE("normalize divides out removable factors") {
    // (1 - L^-1 T) c over the same factor collapses to c
    ZetaRational z = simple({{0, "c"}, {1, "-L^-1*c"}}, {{{-1, 1}, 1}});
    ZetaRational n = z.normalize();
    CHECK(n.denominator().empty());
    CHECK(n.numerator().size() == 1);
    CHECK(n.numerator().at(0) == GrothElem::symbol("c"));

    // already irreducible
    ZetaRational t = simple({{1, "1"}}, {{{0, 1}, 1}});
    CHECK(t.normalize() == t);
    CHECK(t.normalize().denominator() == t.denominator());

    // the even-factor split: (1 + T) c / (1 - T^2) = c / (1 - T)
    ZetaRational s = simple({{0, "c"}, {1, "c"}}, {{{0, 2}, 1}});
    ZetaRational sn = s.normalize();
    ZetaRational::DenomMap want{{{0, 1}, 1}};
    CHECK(sn.denominator() == want);
    CHECK(sn == s);

    // zero numerator clears the denominator
    ZetaRational zero = simple({}, {{{0, 1}, 2}});
    CHECK(zero.normalize().denominator().empty());
}

TEST_CASE("normalize preserves series on random instances") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> ndeg(0, 4), coef(-4, 4), apick(-2, 2), bpick(1, 3),
        nfac(1, 3);
    for (int i = 0; i < 100; ++i) {
        ZetaRational::Numerator num;
        int d = ndeg(rng);
        for (int k = 0; k <= d; ++k) {
            GrothElem c = GrothElem::constant(coef(rng)) +
                          GrothElem::constant(coef(rng)).mul_L_power(1) +
                          GrothElem::constant(coef(rng)) * GrothElem::symbol("b");
            if (!c.is_zero()) num[k] = c;
        }
        ZetaRational::DenomMap den;
        int f = nfac(rng);
        for (int k = 0; k < f; ++k) den[{apick(rng), bpick(rng)}] += 1;
        ZetaRational z(std::move(num), std::move(den));
        ZetaRational n = z.normalize(25);  // normalize rechecks the series itself
        CHECK(z.series_expand(25) == n.series_expand(25));
    }
}

TEST_CASE("pole report") {
    CHECK(simple({{1, "1"}}, {{{0, 1}, 1}}).poles().entries.size() == 1);
    CHECK(simple({{1, "1"}}, {{{0, 1}, 1}}).poles().entries[0].s == Rat(0));
    CHECK(simple({{1, "1"}}, {{{0, 1}, 2}}).poles().entries[0].order == 2);

    // factors with equal ratio a/b accumulate into one pole
    ZetaRational z = simple({{1, "1"}}, {{{1, 2}, 1}, {{2, 4}, 1}, {{0, 1}, 1}});
    auto poles = z.poles();
    REQUIRE(poles.entries.size() == 2);
    CHECK(poles.entries[0].s == Rat(1, 2));
    CHECK(poles.entries[0].order == 2);
    CHECK(poles.entries[1].s == Rat(0));
    CHECK(poles.entries[1].order == 1);

    CHECK(poles.to_json() == "[{\"s\":\"1/2\",\"order\":2},{\"s\":\"0\",\"order\":1}]");
}

TEST_CASE("pole locations stay inside the pre-normalization ratios") {
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> coef(-3, 3), apick(-2, 2), bpick(1, 3);
    for (int i = 0; i < 150; ++i) {
        ZetaRational::Numerator num;
        for (int k = 0; k <= 3; ++k) {
            GrothElem c = GrothElem::constant(coef(rng)).mul_L_power(apick(rng));
            if (!c.is_zero()) num[k] = c;
        }
        ZetaRational::DenomMap den;
        den[{apick(rng), bpick(rng)}] += 1;
        den[{apick(rng), bpick(rng)}] += 1;
        ZetaRational z(std::move(num), std::move(den));
        std::set<Rat> before;
        for (const auto& f : z.denominator_factors()) {
            Rat r(f.a, f.b);
            r.canonicalize();
            before.insert(r);
        }
        for (const auto& e : z.normalize().poles().entries) CHECK(before.count(e.s) == 1);
    }
}

TEST_CASE("addition over distinct denominators") {
    ZetaRational a = simple({{1, "c_1"}}, {{{0, 1}, 1}});
    ZetaRational b = simple({{2, "L*c_2"}}, {{{1, 2}, 1}});
    ZetaRational sum = a + b;
    auto coeffs = sum.series_expand(8);
    for (long d = 1; d <= 8; ++d) {
        GrothElem want = GrothElem::symbol("c_1");
        if (d % 2 == 0) want += GrothElem::symbol("c_2").mul_L_power(d / 2);
        CHECK(coeffs[d - 1] == want);
    }
}

TEST_CASE("canonical rendering") {
    ZetaRational z = simple({{1, "L"}, {6, "b"}}, {{{1, 6}, 1}, {{0, 1}, 2}});
    CHECK(z.to_string() == "L*T + b*T^6 / (1 - T)^2(1 - L T^6)");
    CHECK(simple({}, {}).to_string() == "0");
}

TEST_CASE("series_expand rejects nonpositive depth") {
    CHECK_THROWS_AS(simple({{1, "1"}}, {}).series_expand(0), ValidationError);
}
