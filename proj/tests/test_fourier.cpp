#include "gfharm/fourier.hpp"
#include "support.hpp"

using namespace gfharm;

TEST_CASE("F matches the brute-force character sum") {
    for (auto [p, l] : testing::small_grid()) {
        auto f = make_field(p, l);
        const OperatorMatrix fm = fourier_matrix(*f);
        CHECK(testing::distance(fm, oracle::fourier(testing::oracle_for(*f))) < 1e-9);
        CHECK(testing::distance(fourier_matrix(*f, Backend::Float), oracle::fourier(testing::oracle_for(*f))) < 1e-9);
    }
}

TEST_CASE("F is unitary with F^2 = P") {
    for (auto [p, l] : testing::small_grid()) {
        auto f = make_field(p, l);
        const OperatorMatrix fm = fourier_matrix(*f);
        const auto ring = harmonic_ring(*f);
        CHECK((fm * fm.adjoint()).equals(OperatorMatrix::identity(ring, fm.dim())));
        CHECK((fm * fm).equals(parity(*f).dense()));
    }
}

TEST_CASE("spectral ranks") {
    // tr F = q^{-1/2} sum omega^{Tr n^2}; with tr F^2 = 1 and tr 1 = q this fixes the ranks.
    // GF(3): tr F = i, so (1, i, -1, -i) have ranks (1, 1, 1, 0).
    CHECK(fourier_spectrum(*make_field(3, 1)).ranks == std::array<long long, 4>{1, 1, 1, 0});
    // GF(9): the quadratic Gauss sum is 3, tr F = 1, ranks (3, 2, 2, 2).
    CHECK(fourier_spectrum(*make_field(3, 2)).ranks == std::array<long long, 4>{3, 2, 2, 2});
    // GF(5): tr F = 1, ranks (2, 1, 1, 1).
    CHECK(fourier_spectrum(*make_field(5, 1)).ranks == std::array<long long, 4>{2, 1, 1, 1});
}

TEST_CASE("spectral projectors resolve F") {
    auto f = make_field(3, 3);
    const auto ring = harmonic_ring(*f);
    const FourierSpectrum s = fourier_spectrum(*f);
    OperatorMatrix sum = OperatorMatrix::zero(ring, 27), rebuilt = OperatorMatrix::zero(ring, 27);
    for (int r = 0; r < 4; ++r) {
        sum += s.projectors[static_cast<std::size_t>(r)];
        rebuilt += s.projectors[static_cast<std::size_t>(r)].scaled(CycloScalar::root(ring, ring->i_exponent(r)));
    }
    CHECK(sum.equals(OperatorMatrix::identity(ring, 27)));
    CHECK(rebuilt.equals(fourier_matrix(*f)));
}

TEST_CASE("prime subfield block of F for GF(27) is constant") {
    auto f = make_field(3, 3);
    const auto ring = harmonic_ring(*f);
    const auto idx = subfield_indices(*f, 1);
    const OperatorMatrix block = fourier_matrix(*f).block(idx);
    const CycloScalar v = CycloScalar::inverse_sqrt_prime_power(ring, 3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) CHECK(block.entry(i, j) == v);
    }
    CHECK(v.to_complex().real() == doctest::Approx(1.0 / std::sqrt(27.0)));
}

TEST_CASE("subfield power relation") {
    for (auto [p, l] : {std::pair{3, 2}, std::pair{3, 3}, std::pair{5, 2}, std::pair{2, 4}}) {
        auto f = make_field(p, l);
        for (int d : f->divisors()) {
            const auto rep = subfield_power_relation_check(*f, d);
            CHECK(rep.holds);
            CHECK(rep.exponent == l / d);
        }
    }
    CHECK_THROWS_AS(subfield_power_relation_check(*make_field(3, 2), 3), Error);
}

TEST_CASE("component factorization pairs standard with dual components") {
    auto f = make_field(3, 2, std::vector<int>{2, 1, 1});
    const auto rep = component_factorization_check(*f);
    CHECK(rep.dual_on_standard);
    CHECK(rep.standard_on_dual);
    CHECK(rep.naive_differs);
    REQUIRE(rep.witness);
    const auto prime = component_factorization_check(*make_field(5, 1));
    CHECK(prime.dual_on_standard);
    CHECK_FALSE(prime.naive_differs);
}

TEST_CASE("character basis") {
    auto f = make_field(3, 2);
    const auto ring = harmonic_ring(*f);
    const OperatorMatrix fm = fourier_matrix(*f);
    for (auto n : f->elements()) {
        const StateVector phi = phi_basis(*f, n);
        CHECK(inner_product(phi, phi).is_one());
        CHECK(apply(fm, basis_state(*f, n)) == phi_basis(*f, f->neg(n)));
        const auto fac = tensor_factorize_phi(*f, n);
        CHECK(fac.standard_on_dual);
        CHECK(fac.dual_on_standard);
    }
    CHECK(inner_product(phi_basis(*f, Element{1}), phi_basis(*f, Element{2})).is_zero());
}
