#include <set>

#include "gfharm/fixtures.hpp"
#include "gfharm/symplectic.hpp"
#include "support.hpp"

using namespace gfharm;

TEST_CASE("Sp(2, q) has q(q^2 - 1) elements") {
    for (auto [p, l, count] : {std::tuple{3, 1, 24}, std::tuple{3, 2, 720}, std::tuple{5, 1, 120}, std::tuple{7, 1, 336}}) {
        auto f = make_field(p, l);
        DisplacementSystem ds(f);
        SymplecticSystem sy(ds);
        const auto all = sy.enumerate();
        CHECK(static_cast<int>(all.size()) == count);
        std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>> distinct;
        for (const auto& m : all) {
            CHECK(sy.is_valid(m));
            distinct.emplace(m.r.index, m.s.index, m.t.index, m.u.index);
        }
        CHECK(static_cast<int>(distinct.size()) == count);
    }
}

TEST_CASE("parameter validation") {
    auto f = make_field(5, 1);
    DisplacementSystem ds(f);
    SymplecticSystem sy(ds);
    CHECK_THROWS_AS(sy.params(f->zero(), f->one(), f->one()), Error);
    CHECK_THROWS_AS(sy.params(f->one(), f->one(), f->one(), f->one()), Error);
    const auto m = sy.params(Element{2}, Element{1}, Element{3});
    // u = (1 + 3) / 2 = 2
    CHECK(m.u == Element{2});
}

TEST_CASE("Gauss sums over GF(3) and GF(9)") {
    auto f3 = make_field(3, 1);
    DisplacementSystem ds3(f3);
    SymplecticSystem sy3(ds3);
    // 1 + 2 omega = i sqrt(3)
    const auto g = sy3.gauss_sum(f3->one()).value.to_complex();
    CHECK(g.real() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(g.imag() == doctest::Approx(std::sqrt(3.0)));
    CHECK(sy3.gauss_sum(f3->zero()).value == CycloScalar::integer(ds3.ring(), 3));

    auto f9 = make_field(3, 2);
    DisplacementSystem ds9(f9);
    SymplecticSystem sy9(ds9);
    CHECK(sy9.gauss_sum(f9->one()).value == CycloScalar::integer(ds9.ring(), 3));
}

TEST_CASE("generators realize their matrices") {
    auto f = make_field(3, 2);
    DisplacementSystem ds(f);
    SymplecticSystem sy(ds);
    for (auto xi : f->elements()) {
        CHECK(sy.action_check(sy.params(f->one(), xi, f->zero()), nullptr).ok());
        CHECK(sy.action_check(sy.params(f->one(), f->zero(), xi), nullptr).ok());
        CHECK(sy.generator_shear_x(xi).equals(sy.generator_shear_x_closed_form(xi)));
        if (xi != f->zero()) {
            const auto scaling = sy.generator_scaling(xi).dense();
            CHECK(sy.action_check(sy.params(xi, f->zero(), f->zero()), &scaling).ok());
        }
    }
}

TEST_CASE("synthesis covers the degenerate chart r = 0") {
    auto f = make_field(5, 1);
    DisplacementSystem ds(f);
    SymplecticSystem sy(ds);
    const SymplecticParams m{f->zero(), Element{2}, f->neg(f->inv(Element{2})), Element{4}};
    REQUIRE(sy.is_valid(m));
    CHECK_FALSE(sy.is_generic(m));
    CHECK(sy.action_check(m).ok());
}

TEST_CASE("closed form agrees with synthesis up to phase") {
    auto f = make_field(3, 2);
    DisplacementSystem ds(f);
    SymplecticSystem sy(ds);
    int checked = 0;
    for (auto r : f->elements()) {
        if (r == f->zero()) continue;
        for (auto t : f->elements()) {
            if (t == f->zero()) continue;
            const Element s = f->one();
            if (f->add(f->one(), f->mul(s, t)) == f->zero()) continue;
            const auto rep = sy.closed_form_elements_check(sy.params(r, s, t));
            CHECK(rep.matched);
            CHECK(rep.deviation == 0.0);
            ++checked;
        }
    }
    CHECK(checked > 0);
    CHECK_THROWS_AS(sy.closed_form_elements_check(sy.params(f->one(), f->one(), f->zero())), Error);
}

TEST_CASE("composition is a projective homomorphism") {
    auto f = make_field(5, 1);
    DisplacementSystem ds(f);
    SymplecticSystem sy(ds);
    const auto a = sy.params(Element{2}, Element{3}, Element{1});
    const auto b = sy.params(Element{1}, Element{4}, Element{2});
    CHECK(match_up_to_phase(sy.synthesize(a) * sy.synthesize(b), sy.synthesize(sy.compose(a, b))).matched);
}

TEST_CASE("GF(9) example: where S(1, 1 + eps, eps) sends X^eps") {
    auto f = gf9_field();
    DisplacementSystem ds(f);
    SymplecticSystem sy(ds);
    const Element eps = f->generator();
    const auto m = sy.params(f->one(), f->add(f->one(), eps), eps);
    // eps^2 = 1 + 2 eps, so u = 1 + (1 + eps) eps = 2.
    CHECK(m.u == f->from_int(2));
    const OperatorMatrix s = sy.synthesize(m);
    // (0, eps) -> (s eps, r eps) = (eps + eps^2, eps) = (1, eps).
    CHECK(conjugation_holds(s, ds.x_power(eps), ds.displacement(f->one(), eps)));
    // (eps, 0) -> (u eps, t eps) = (2 eps, 1 + 2 eps).
    CHECK(conjugation_holds(s, ds.z_power(eps), ds.displacement(f->parse("0,2"), f->parse("1,2"))));

    const auto witness = sy.non_factorization_witness(m);
    CHECK(witness.x_eps_is_one_tensor_x);
    CHECK(witness.not_a_tensor_product);
    CHECK(witness.schmidt_rank > 1);

    DisplacementSystem ds3(make_field(3, 1));
    SymplecticSystem sy3(ds3);
    CHECK_THROWS_AS(sy3.non_factorization_witness(SymplecticParams{Element{1}, Element{0}, Element{0}, Element{1}}), Error);
}

TEST_CASE("operator-Schmidt rank") {
    auto ring = CycloRing::for_field(3, 1);
    const OperatorMatrix x = MonomialMatrix(ring, {2, 0, 1}, {0, 0, 0}).dense();
    CHECK(operator_schmidt_rank(kron(x, x.adjoint()), 3, 3) == 1);
    CHECK(operator_schmidt_rank(kron(x, x) + kron(OperatorMatrix::identity(ring, 3), OperatorMatrix::identity(ring, 3)), 3, 3) == 2);
}

TEST_CASE("Frobenius conjugation maps S(M) to S(sigma M)") {
    auto f = make_field(3, 2);
    DisplacementSystem ds(f);
    SymplecticSystem sy(ds);
    const Element eps = f->generator();
    const auto rep = sy.frobenius_action_check(sy.params(eps, f->one(), eps), 1);
    CHECK(rep.action_matches);
    CHECK(rep.operator_phase.matched);
    const auto prime = sy.frobenius_action_check(sy.params(f->one(), f->one(), f->one()), 1);
    REQUIRE(prime.subfield_degree);
    CHECK(*prime.subfield_degree == 1);
    CHECK(prime.subfield_invariant.value_or(false));
}

TEST_CASE("transformed marginals") {
    auto f = make_field(3, 2);
    DisplacementSystem ds(f);
    SymplecticSystem sy(ds);
    const auto rep = sy.transformed_marginals(sy.params(f->generator(), f->one(), f->zero()));
    CHECK(rep.parity_invariant);
    CHECK(rep.marginals.position_with_parity);
    CHECK(rep.marginals.momentum_with_parity);
}
