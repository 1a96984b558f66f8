#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mzeta/kodaira.hpp"

using namespace mzeta;

TEST_CASE("tags") {
    CHECK(kodaira_tag_from_string("IIstar") == KodairaTag::IIstar);
    CHECK(kodaira_tag_needs_n(KodairaTag::In));
    CHECK(kodaira_tag_needs_n(KodairaTag::Instar));
    CHECK(!kodaira_tag_needs_n(KodairaTag::IV));
    CHECK_THROWS_WITH_AS(kodaira_tag_from_string("V"), doctest::Contains("available tags"),
                         ValidationError);
    CHECK_THROWS_AS(kodaira_sncd(KodairaTag::In, 0), ValidationError);
}

TEST_CASE("bundled files agree with the builders") {
    std::string dir = default_data_dir();
    for (const auto& inst : bundled_instances()) {
        SncdModel file_model = load_bundled_sncd(dir, inst.name);
        SncdModel built = kodaira_sncd(inst.tag, inst.n);
        CHECK(file_model.to_json() == built.to_json());
        NeronData file_nd = load_bundled_neron(dir, inst.name);
        NeronData built_nd = kodaira_neron(inst.tag, inst.n);
        CHECK(file_nd.to_json() == built_nd.to_json());
    }
}

TEST_CASE("type II series spot values") {
    auto coeffs = assemble_zeta(kodaira_neron(KodairaTag::II)).series_expand(7);
    CHECK(coeffs[0] == GrothElem::parse("L"));
    CHECK(coeffs[1] == GrothElem::parse("3*L"));
    CHECK(coeffs[2] == GrothElem::parse("4*L"));
    CHECK(coeffs[3] == GrothElem::parse("3*L"));
    CHECK(coeffs[4] == GrothElem::parse("L"));
    CHECK(coeffs[5] == GrothElem::parse("L*b"));
    CHECK(coeffs[6] == GrothElem::parse("L^2"));
    CHECK(assemble_from_sncd(kodaira_sncd(KodairaTag::II)).series_expand(7) == coeffs);
}

TEST_CASE("I1 self-intersection model matches its group law") {
    SncdModel i1 = kodaira_sncd(KodairaTag::In, 1);
    CHECK(i1.components.size() == 1);
    REQUIRE(i1.strata.size() == 2);
    CHECK(i1.strata[1].J == std::vector<std::string>{"C", "C"});
    auto coeffs = assemble_from_sncd(i1).series_expand(20);
    for (long d = 1; d <= 20; ++d)
        CHECK(coeffs[d - 1] == GrothElem::constant(d) * GrothElem::parse("L - 1"));
}

TEST_CASE("chevalley ranks sum to the dimension") {
    for (const auto& inst : bundled_instances()) {
        NeronData nd = kodaira_neron(inst.tag, inst.n);
        for (const auto& cls : nd.classes) {
            auto dim = cls.B.virtual_dimension(nd.symbol_dims);
            REQUIRE(dim.has_value());
            CHECK(cls.toric_rank + cls.unipotent_rank + *dim == nd.g);
        }
    }
}

TEST_CASE("two-route equivalence for larger family parameters") {
    struct Case {
        KodairaTag tag;
        long n;
    };
    for (const auto& c : {Case{KodairaTag::In, 5}, Case{KodairaTag::In, 7},
                          Case{KodairaTag::Instar, 3}, Case{KodairaTag::Instar, 4}}) {
        auto sncd_route = assemble_from_sncd(kodaira_sncd(c.tag, c.n)).series_expand(24);
        auto neron_route = assemble_zeta(kodaira_neron(c.tag, c.n)).series_expand(24);
        CHECK(sncd_route == neron_route);
    }
}

TEST_CASE("fiber Euler characteristics are balanced") {
    // sum N_i chi(E_i^o) = chi of the generic fiber = 0 for these degenerations
    for (const auto& inst : bundled_instances()) {
        SncdModel m = kodaira_sncd(inst.tag, inst.n);
        Int total = 0;
        for (const auto& c : m.components) total += c.N * c.euler_open;
        CHECK(total == 0);
        CHECK(monodromy_zeta(m).degree() == 0);
    }
}
