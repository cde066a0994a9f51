#include "gfharm/fixtures.hpp"
#include "gfharm/frobenius.hpp"
#include "support.hpp"

using namespace gfharm;

TEST_CASE("G permutes by the inverse Frobenius map") {
    auto f = make_field(3, 2, std::vector<int>{2, 1, 1});
    const MonomialMatrix g = frobenius_permutation(*f);
    CHECK(g.is_permutation());
    // (G chi)(n) = chi(n^{p^{l-1}}): rows 3 <-> 8, 4 <-> 6, 5 <-> 7 swap, 0, 1, 2 fixed.
    const std::vector<std::uint32_t> expect{0, 1, 2, 8, 6, 7, 4, 5, 3};
    CHECK(g.cols() == expect);
    CHECK(g.pow(2) == MonomialMatrix::identity(harmonic_ring(*f), 9));
}

TEST_CASE("eigenprojector ranks count Frobenius orbits") {
    // GF(9): 3 fixed points and 3 two-cycles.
    CHECK(frobenius_spectrum(*make_field(3, 2)).ranks == std::vector<long long>{6, 3});
    // GF(27): 3 fixed points and 8 three-cycles.
    CHECK(frobenius_spectrum(*make_field(3, 3)).ranks == std::vector<long long>{11, 8, 8});
    // GF(16): two fixed points, one two-cycle, three four-cycles.
    CHECK(frobenius_spectrum(*make_field(2, 4)).ranks == std::vector<long long>{6, 3, 4, 3});
    CHECK(frobenius_spectrum(*make_field(5, 1)).ranks == std::vector<long long>{5});
}

TEST_CASE("GF(9) projectors carry entries 0, 1/2 and 1") {
    auto f = gf9_field();
    const auto spec = frobenius_spectrum(*f);
    const auto& w0 = spec.projectors[0];
    const auto ring = harmonic_ring(*f);
    CHECK(w0.entry(0, 0).is_one());
    CHECK(w0.entry(3, 8) == CycloScalar::rational(ring, 1, 2));
    CHECK(spec.projectors[1].entry(3, 8) == CycloScalar::rational(ring, -1, 2));
    CHECK(w0.denom() == 2);
}

TEST_CASE("commutation and containment") {
    for (auto [p, l] : {std::pair{3, 2}, std::pair{3, 3}, std::pair{2, 2}, std::pair{5, 2}}) {
        auto f = make_field(p, l);
        CHECK(frobenius_fourier_commutation_check(*f).ok());
        const auto spec = frobenius_spectrum(*f);
        CHECK(prime_subspace_in_fixed_space(*f, spec));
        for (int d : f->divisors()) {
            const auto rep = combined_eigenspace_containment(*f, spec, d);
            CHECK(rep.holds);
            CHECK(static_cast<int>(rep.lambdas.size()) == d);
        }
    }
}

TEST_CASE("Galois group of the subfield subspace") {
    auto f = make_field(2, 4);
    const auto h = galois_group_H(*f, 2);
    CHECK(h.size() == 2);
    const OperatorMatrix pi = subspace_projector(*f, 2);
    for (const auto& g : h) CHECK((g * pi).equals(pi));
    const auto rotated = conjugated_galois_group(*f, fourier_matrix(*f), 2);
    for (std::size_t k = 0; k < h.size(); ++k) CHECK(rotated[k].equals(h[k].dense()));
    CHECK_THROWS_AS(galois_group_H(*f, 3), Error);
    try {
        conjugated_galois_group(*f, OperatorMatrix::identity(harmonic_ring(*f), 16).scaled(CycloScalar::integer(harmonic_ring(*f), 2)), 1);
        FAIL("expected NotUnitary");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotUnitary);
    }
}
