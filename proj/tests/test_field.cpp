#include <set>

#include "gfharm/field.hpp"
#include "support.hpp"

using namespace gfharm;

namespace {

std::vector<int> monic_of(const GaloisField& f) { return f.modulus(); }

}  // namespace

TEST_CASE("default modulus is the lexicographically smallest irreducible, c0 first") {
    // x^2 + 1: -1 is not a square mod 3.
    CHECK(monic_of(*make_field(3, 2)) == std::vector<int>{1, 0, 1});
    // x^3 + 1 and x^3 + x^2 + 1 vanish at 2 and 1; x^3 + 2x^2 + 1 has no root in Z_3.
    CHECK(monic_of(*make_field(3, 3)) == std::vector<int>{1, 0, 2, 1});
    // x^2 + 1 splits mod 5; x^2 + x + 1 has discriminant -3 = 2, a non-residue.
    CHECK(monic_of(*make_field(5, 2)) == std::vector<int>{1, 1, 1});
    // x^2 + x + 1 is the only irreducible quadratic over Z_2.
    CHECK(monic_of(*make_field(2, 2)) == std::vector<int>{1, 1, 1});
    CHECK(monic_of(*make_field(7, 1)) == std::vector<int>{0, 1});
}

TEST_CASE("modulus override accepts both lengths") {
    auto a = make_field(3, 2, std::vector<int>{2, 1});
    auto b = make_field(3, 2, std::vector<int>{2, 1, 1});
    CHECK(a->same_as(*b));
    CHECK(a->modulus() == std::vector<int>{2, 1, 1});
}

TEST_CASE("construction errors") {
    auto kind_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        FAIL("no error raised");
        return ErrorKind::Parse;
    };
    CHECK(kind_of([] { make_field(4, 1); }) == ErrorKind::NotPrime);
    CHECK(kind_of([] { make_field(1, 1); }) == ErrorKind::NotPrime);
    // (x + 1)^2 over Z_3.
    CHECK(kind_of([] { make_field(3, 2, std::vector<int>{1, 2, 1}); }) == ErrorKind::ReducibleModulus);
    CHECK(kind_of([] { make_field(3, 2, std::vector<int>{1, 2, 1, 1}); }) == ErrorKind::DegreeMismatch);
    CHECK(kind_of([] { make_field(3, 2, std::vector<int>{1, 0, 2}); }) == ErrorKind::DegreeMismatch);
}

TEST_CASE("GF(9) modulo eps^2 + eps + 2: traces and dual basis") {
    auto f = make_field(3, 2, std::vector<int>{2, 1, 1});
    const std::vector<int> traces{0, 2, 1, 2, 1, 0, 1, 0, 2};
    for (std::uint32_t i = 0; i < 9; ++i) CHECK(f->trace(Element{i}) == traces[i]);
    // g = [[Tr 1, Tr eps], [Tr eps, Tr eps^2]] = [[2, 2], [2, 0]]; G = g^{-1} = [[0, 2], [2, 1]].
    const DualBasis& d = f->dual_basis();
    CHECK(d.gram(0, 0) == 2);
    CHECK(d.gram(0, 1) == 2);
    CHECK(d.gram(1, 1) == 0);
    CHECK(d.inverse_gram(0, 0) == 0);
    CHECK(d.inverse_gram(0, 1) == 2);
    CHECK(d.inverse_gram(1, 1) == 1);
    CHECK(f->format(d.elements[0]) == "0,2");
    CHECK(f->format(d.elements[1]) == "2,1");
}

TEST_CASE("arithmetic agrees with a schoolbook oracle") {
    for (auto [p, l] : testing::small_grid()) {
        auto f = make_field(p, l);
        const auto o = testing::oracle_for(*f);
        for (auto a : f->elements()) {
            CHECK(static_cast<int>(f->trace(a)) == o.trace(a.index));
            for (auto b : f->elements()) {
                REQUIRE(f->mul(a, b).index == o.mul(a.index, b.index));
                REQUIRE(f->add(a, b).index == o.add(a.index, b.index));
            }
        }
    }
}

TEST_CASE("frobenius iterates and subfields") {
    auto f = make_field(3, 3);
    for (auto a : f->elements()) {
        CHECK(f->frobenius(a, 3) == a);
        CHECK(f->frobenius(f->frobenius(a, 2), -2) == a);
        CHECK(f->frobenius(a, 1) == f->pow(a, 3));
    }
    CHECK(f->divisors() == std::vector<int>{1, 3});
    CHECK(f->subfield_elements(1).size() == 3);
    CHECK(f->galois_group(1) == std::vector<int>{1, 2, 3});
    CHECK(f->galois_group(3) == std::vector<int>{3});
    CHECK_THROWS_AS(f->subfield_trace(f->generator(), 1), Error);

    auto g = make_field(2, 4);
    CHECK(g->divisors() == std::vector<int>{1, 2, 4});
    CHECK(g->subfield_elements(2).size() == 4);
    for (auto a : g->subfield_elements(2)) CHECK(g->frobenius(a, 2) == a);
}

TEST_CASE("element text encoding") {
    auto f = make_field(3, 2, std::vector<int>{2, 1, 1});
    CHECK(f->format(Element{5}) == "2,1");
    CHECK(f->parse("2,1") == Element{5});
    CHECK(f->parse("5") == Element{5});
    CHECK(f->parse(" 0, 2 ") == Element{6});
    CHECK_THROWS_AS(f->parse("9"), Error);
    CHECK_THROWS_AS(f->parse("1,2,0"), Error);
    CHECK_THROWS_AS(f->parse("a,1"), Error);
    for (auto a : f->elements()) CHECK(f->parse(f->format(a)) == a);
}

TEST_CASE("half is the inverse of two, and undefined in characteristic 2") {
    CHECK(make_field(3, 1)->half() == 2);
    CHECK(make_field(7, 2)->half() == 4);
    try {
        make_field(2, 3)->half();
        FAIL("expected EvenCharacteristic");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EvenCharacteristic);
    }
}

TEST_CASE("components expand in the power and dual bases") {
    auto f = make_field(5, 2);
    const DualBasis& d = f->dual_basis();
    for (auto a : f->elements()) {
        const Components c = f->components(a);
        Element rebuilt = f->zero();
        for (int k = 0; k < 2; ++k) rebuilt = f->add(rebuilt, f->scale(c.dual[static_cast<std::size_t>(k)], d.elements[static_cast<std::size_t>(k)]));
        CHECK(rebuilt == a);
        CHECK(c.standard == f->coeffs(a));
    }
}

TEST_CASE("invert_mod_p") {
    PrimeMatrix m{2, {1, 2, 3, 4}};
    auto inv = invert_mod_p(m, 5);
    REQUIRE(inv);
    CHECK((*inv)(0, 0) == 3);  // det = -2 = 3, inverse of 3 is 2: 2 * [[4, -2], [-3, 1]]
    CHECK((*inv)(0, 1) == 1);
    CHECK((*inv)(1, 0) == 4);
    CHECK((*inv)(1, 1) == 2);
    CHECK_FALSE(invert_mod_p(PrimeMatrix{2, {1, 2, 2, 4}}, 5));
}
