#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mzeta/kodaira.hpp"
#include "mzeta/neron.hpp"

using namespace mzeta;

namespace {

ZetaRational make(std::map<long, std::string> num_coeffs,
                  std::map<std::pair<long, long>, long> den) {
    ZetaRational::Numerator num;
    for (const auto& [d, s] : num_coeffs) num[d] = GrothElem::parse(s);
    return ZetaRational(std::move(num), std::move(den));
}

}  // namespace

TEST_CASE("assembly: good reduction") {
    NeronData nd = kodaira_neron(KodairaTag::I0);
    CHECK(assemble_zeta(nd) == make({{1, "b"}}, {{{0, 1}, 1}}));
}

TEST_CASE("assembly: multiplicative reduction") {
    for (long n : {1L, 2L, 5L}) {
        NeronData nd = kodaira_neron(KodairaTag::In, n);
        ZetaRational want = make({{1, std::to_string(n) + "*L - " + std::to_string(n)}},
                                 {{{0, 1}, 2}});
        CHECK(assemble_zeta(nd) == want);
    }
}

TEST_CASE("assembly matches the refined sum term by term") {
    // independent evaluation: phi(d) (L-1)^t L^{u+ord(d)} B per degree
    for (const auto& inst : bundled_instances()) {
        NeronData nd = kodaira_neron(inst.tag, inst.n);
        auto coeffs = assemble_zeta(nd).series_expand(15);
        for (long d = 1; d <= 15; ++d) {
            const ResidueClass& cls = nd.residue(d);
            Rat ord = nd.ord(d);
            REQUIRE(ord.get_den() == 1);
            GrothElem want =
                GrothElem::constant(nd.phi(d)) *
                (GrothElem::L() - GrothElem::one()).pow(cls.toric_rank) *
                cls.B.mul_L_power(cls.unipotent_rank + ord.get_num().get_si());
            CHECK(coeffs[d - 1] == want);
        }
    }
}

TEST_CASE("unique pole at the base change conductor") {
    auto check = [](KodairaTag tag, long n, const Rat& s, long order) {
        UniquePoleReport rep = verify_unique_pole(kodaira_neron(tag, n));
        CHECK(rep.pass);
        REQUIRE(rep.poles.entries.size() == 1);
        CHECK(rep.poles.entries[0].s == s);
        CHECK(rep.poles.entries[0].order == order);
    };
    check(KodairaTag::I0, 0, Rat(0), 1);
    check(KodairaTag::In, 3, Rat(0), 2);
    check(KodairaTag::II, 0, Rat(1, 6), 1);
    check(KodairaTag::I0star, 0, Rat(1, 2), 1);
    check(KodairaTag::Instar, 2, Rat(1, 2), 2);
}

TEST_CASE("tau") {
    CHECK(tau(Rat(0)) == 1);
    CHECK(tau(Rat(1, 6)) == 6);
    CHECK(tau(Rat(5, 6)) == 6);
    CHECK(tau(Rat(-5, 6)) == 6);
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 24);
    for (int i = 0; i < 200; ++i) {
        Rat q(num(rng), den(rng));
        q.canonicalize();
        Int t = tau(q);
        Rat whole = q * Rat(t);
        whole.canonicalize();
        CHECK(whole.get_den() == 1);
        for (Int k = 1; k < t; ++k) {
            Rat partial = q * Rat(k);
            partial.canonicalize();
            CHECK(partial.get_den() != 1);
        }
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == ZPoly::parse("t - 1"));
    CHECK(cyclotomic(2) == ZPoly::parse("t + 1"));
    CHECK(cyclotomic(6) == ZPoly::parse("t^2 - t + 1"));
    CHECK(cyclotomic(12) == ZPoly::parse("t^4 - t^2 + 1"));
    for (long n = 1; n <= 30; ++n) {
        ZPoly prod(1);
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic(d);
        CHECK(prod == ZPoly::t_pow_minus_one(static_cast<int>(n)));
    }
}

TEST_CASE("gmp check") {
    // type II: pole 1/6, Phi_6 divides the H^1 polynomial
    ZetaRational z2 = assemble_zeta(kodaira_neron(KodairaTag::II)).normalize();
    GmpReport rep = gmp_check(z2, kodaira_char_polys(kodaira_sncd(KodairaTag::II)));
    CHECK(rep.pass);
    REQUIRE(rep.verdicts.size() == 1);
    CHECK(rep.verdicts[0].tau_value == 6);
    CHECK(rep.verdicts[0].matched_index == 1);

    // good reduction: pole 0 matches the H^0 polynomial t - 1
    ZetaRational z0 = assemble_zeta(kodaira_neron(KodairaTag::I0)).normalize();
    GmpReport rep0 = gmp_check(z0, kodaira_char_polys(kodaira_sncd(KodairaTag::I0)));
    CHECK(rep0.pass);
    CHECK(rep0.verdicts[0].matched_index == 0);

    // adversarial: a pole at 1/4 with no Phi_4 anywhere
    ZetaRational::Numerator num;
    num[1] = GrothElem::one();
    ZetaRational bad(std::move(num), {{{1, 4}, 1}});
    GmpReport repb = gmp_check(bad, {ZPoly::parse("t - 1")});
    CHECK(!repb.pass);
    CHECK(repb.verdicts[0].matched_index == -1);
}

TEST_CASE("euler trace check") {
    Specialization chi;
    chi.L_image = QPoly(Rat(1));
    chi.symbol_images["b"] = QPoly(Rat(0));

    EulerTraceReport in = euler_trace_check(kodaira_neron(KodairaTag::In, 4), 10, chi);
    CHECK(in.pass);
    for (const auto& e : in.entries) CHECK(!e.additive);

    EulerTraceReport ii = euler_trace_check(kodaira_neron(KodairaTag::II), 12, chi);
    CHECK(ii.pass);
    CHECK(ii.entries[0].additive);
    CHECK(ii.entries[0].chi_value == Rat(1));
    CHECK(ii.entries[1].chi_value == Rat(3));
    CHECK(!ii.entries[5].additive);  // d = 6: good reduction, expects 0

    EulerTraceReport i0 = euler_trace_check(kodaira_neron(KodairaTag::I0), 5, chi);
    CHECK(i0.pass);

    Specialization wrong;
    wrong.L_image = QPoly(Rat(2));
    CHECK_THROWS_AS(euler_trace_check(kodaira_neron(KodairaTag::I0), 3, wrong), ValidationError);
}

TEST_CASE("validation rejects inconsistent data") {
    NeronData nd = kodaira_neron(KodairaTag::II);
    CHECK_NOTHROW(nd.validate());

    NeronData broken = nd;
    broken.classes.pop_back();
    CHECK_THROWS_WITH_AS(broken.validate(), doctest::Contains("missing residue class"),
                         ValidationError);

    broken = nd;
    broken.classes[0].toric_rank = 2;  // t + u + dim B != g
    CHECK_THROWS_WITH_AS(broken.validate(), doctest::Contains("dim(B)"), ValidationError);

    broken = nd;
    broken.c = Rat(1, 5);  // c*e not an integer
    CHECK_THROWS_AS(broken.validate(), ValidationError);

    broken = nd;
    broken.classes[1].ord_intercept = Rat(1, 6);  // ord(1) != 0
    CHECK_THROWS_AS(broken.validate(), ValidationError);

    broken = nd;
    broken.c = Rat(0);  // c = 0 needs semi-abelian data
    CHECK_THROWS_AS(broken.validate(), ValidationError);
}

TEST_CASE("data file round trip") {
    for (const auto& inst : bundled_instances()) {
        NeronData nd = kodaira_neron(inst.tag, inst.n);
        NeronData back = NeronData::parse(nd.to_json());
        CHECK(back.e == nd.e);
        CHECK(back.c == nd.c);
        CHECK(assemble_zeta(back) == assemble_zeta(nd));
    }
}
