#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mzeta/grothendieck.hpp"

using namespace mzeta;

namespace {

GrothElem random_elem(std::mt19937& rng) {
    static const char* names[] = {"a", "b", "c"};
    std::uniform_int_distribution<int> nterms(0, 4), coef(-9, 9), lexp(-3, 3), pick(0, 2),
        sexp(1, 2), nsyms(0, 2);
    GrothElem x;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        GrothElem term = GrothElem::constant(coef(rng)).mul_L_power(lexp(rng));
        int s = nsyms(rng);
        for (int j = 0; j < s; ++j) term = term * GrothElem::symbol(names[pick(rng)], sexp(rng));
        x += term;
    }
    return x;
}

}  // namespace

TEST_CASE("addition") {
    GrothElem L = GrothElem::L();
    CHECK((L + GrothElem::one()) + L.pow(2) == GrothElem::parse("L^2 + L + 1"));
    std::mt19937 rng(1);
    for (int i = 0; i < 50; ++i) {
        GrothElem x = random_elem(rng);
        CHECK(x + GrothElem::zero() == x);
    }
}

TEST_CASE("multiplication") {
    GrothElem L = GrothElem::L(), one = GrothElem::one();
    CHECK((L - one) * (L + one) == GrothElem::parse("L^2 - 1"));
    std::mt19937 rng(2);
    for (int i = 0; i < 50; ++i) {
        GrothElem x = random_elem(rng);
        CHECK(one * x == x);
    }
    GrothElem b = GrothElem::symbol("b");
    CHECK((L - one).pow(2) * b == GrothElem::parse("L^2*b - 2*L*b + b"));
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        GrothElem x = random_elem(rng), y = random_elem(rng), z = random_elem(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("substitute_relations") {
    std::map<std::string, GrothElem> rel = {
        {"P2", GrothElem::parse("L^2 + L + 1")}};
    CHECK(GrothElem::symbol("P2").substitute_relations(rel) == GrothElem::parse("L^2 + L + 1"));
    CHECK((GrothElem::symbol("P2") - GrothElem::parse("L^2 + L + 1"))
              .substitute_relations(rel)
              .is_zero());

    GrothElem x = GrothElem::parse("L*b - 2");
    CHECK(x.substitute_relations({}) == x);

    std::map<std::string, GrothElem> rel2 = {{"b", GrothElem::parse("L + 1")}};
    CHECK(GrothElem::symbol("b", 2).substitute_relations(rel2) ==
          GrothElem::parse("L^2 + 2*L + 1"));

    // chained substitution resolves through the dependency order
    std::map<std::string, GrothElem> chain = {
        {"u", GrothElem::symbol("v") + GrothElem::one()},
        {"v", GrothElem::L()}};
    CHECK(GrothElem::symbol("u").substitute_relations(chain) == GrothElem::parse("L + 1"));

    std::map<std::string, GrothElem> cyclic = {
        {"u", GrothElem::symbol("v")},
        {"v", GrothElem::symbol("u") + GrothElem::one()}};
    CHECK_THROWS_AS(GrothElem::symbol("u").substitute_relations(cyclic), ValidationError);
}

TEST_CASE("substitution commutes with ring operations") {
    std::mt19937 rng(4);
    std::map<std::string, GrothElem> rel = {
        {"a", GrothElem::parse("L - 1")},
        {"b", GrothElem::parse("L*c + 2")}};
    for (int i = 0; i < 100; ++i) {
        GrothElem x = random_elem(rng), y = random_elem(rng);
        CHECK((x + y).substitute_relations(rel) ==
              x.substitute_relations(rel) + y.substitute_relations(rel));
        CHECK((x * y).substitute_relations(rel) ==
              x.substitute_relations(rel) * y.substitute_relations(rel));
    }
}

TEST_CASE("specialize") {
    Specialization chi;
    chi.L_image = QPoly(Rat(1));
    chi.symbol_images["b"] = QPoly(Rat(0));

    CHECK(GrothElem::L().specialize(chi) == QPoly(Rat(1)));
    CHECK(GrothElem::parse("L^2 + L + 1").specialize(chi) == QPoly(Rat(3)));
    CHECK(GrothElem::parse("L*b - b").specialize(chi) == QPoly());

    GrothElem unmapped = GrothElem::symbol("q");
    CHECK_THROWS_WITH_AS(unmapped.specialize(chi), doctest::Contains("q"), ValidationError);

    // negative powers of L need an invertible image
    Specialization bad;
    bad.L_image = QPoly::monomial(Rat(1), 1);
    CHECK_THROWS_AS(GrothElem::L(-1).specialize(bad), ValidationError);
    CHECK(GrothElem::L(-2).specialize(chi) == QPoly(Rat(1)));
}

TEST_CASE("specialize is a homomorphism") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> nz(1, 5), small(-3, 3);
    for (int i = 0; i < 100; ++i) {
        Specialization s;
        s.L_image = QPoly(Rat(nz(rng)));
        for (const char* name : {"a", "b", "c"})
            s.symbol_images[name] = QPoly(Rat(small(rng))) + QPoly::monomial(Rat(small(rng)), 1);
        GrothElem x = random_elem(rng), y = random_elem(rng);
        CHECK((x + y).specialize(s) == x.specialize(s) + y.specialize(s));
        CHECK((x * y).specialize(s) == x.specialize(s) * y.specialize(s));
        CHECK(GrothElem::one().specialize(s) == QPoly(Rat(1)));
    }
}

TEST_CASE("virtual_dimension") {
    std::map<std::string, long> dims = {{"b", 1}};
    CHECK(GrothElem::L(3).virtual_dimension(dims) == 3);
    CHECK(!GrothElem::zero().virtual_dimension(dims).has_value());
    CHECK(GrothElem::parse("L*b + L^2").virtual_dimension(dims) == 2);
    CHECK_THROWS_AS(GrothElem::symbol("q").virtual_dimension(dims), ValidationError);

    // additive on products without leading-term cancellation
    std::mt19937 rng(6);
    std::uniform_int_distribution<int> coef(1, 5), lexp(0, 3), se(1, 2), nt(1, 3);
    for (int i = 0; i < 60; ++i) {
        auto positive = [&] {
            GrothElem x;
            int k = nt(rng);
            for (int j = 0; j < k; ++j)
                x += GrothElem::constant(coef(rng)).mul_L_power(lexp(rng)) *
                     GrothElem::symbol("b", se(rng));
            return x;
        };
        GrothElem x = positive(), y = positive();
        CHECK(*(x * y).virtual_dimension(dims) ==
              *x.virtual_dimension(dims) + *y.virtual_dimension(dims));
    }
}

TEST_CASE("canonical string round trip") {
    const char* fixtures[] = {
        "L^2*b - 2*L*b + b", "b - 6", "2*L", "0", "1", "-1", "1 + L^-1",
        "L^3 + a^2*b - 4*a*b^2 + 7", "3*L^-2*c",
    };
    for (const char* s : fixtures) CHECK(GrothElem::parse(s).to_string() == s);

    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        GrothElem x = random_elem(rng);
        CHECK(GrothElem::parse(x.to_string()) == x);
        CHECK(GrothElem::parse(x.to_string()).to_string() == x.to_string());
    }

    CHECK_THROWS_AS(GrothElem::parse(""), ParseError);
    CHECK_THROWS_AS(GrothElem::parse("b^-1"), ParseError);
    CHECK_THROWS_AS(GrothElem::parse("2 +"), ParseError);
    CHECK_THROWS_AS(GrothElem::parse("L$"), ParseError);
}
