#include <random>

#include "gfharm/hilbert.hpp"
#include "support.hpp"

using namespace gfharm;

namespace {

OperatorMatrix random_matrix(const RingPtr& ring, int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-2, 2), k(0, ring->order() - 1);
    OperatorMatrix m = OperatorMatrix::zero(ring, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.set(i, j, CycloScalar::root(ring, k(rng)) * CycloScalar::rational(ring, c(rng), 1 + (i + j) % 3));
    }
    return m;
}

}  // namespace

TEST_CASE("adjoint is an involution and reverses products") {
    std::mt19937 rng(3);
    auto ring = CycloRing::for_field(5, 1);
    for (int k = 0; k < 5; ++k) {
        const auto a = random_matrix(ring, 5, rng);
        const auto b = random_matrix(ring, 5, rng);
        CHECK(a.adjoint().adjoint().equals(a));
        CHECK((a * b).adjoint().equals(b.adjoint() * a.adjoint()));
        CHECK((a * b).to_float().equals(a.to_float() * b.to_float()));
    }
}

TEST_CASE("shared denominators compare by cross multiplication") {
    auto ring = CycloRing::for_field(3, 1);
    OperatorMatrix a = OperatorMatrix::identity(ring, 2).scaled(CycloScalar::rational(ring, 1, 2));
    OperatorMatrix b = OperatorMatrix::identity(ring, 2).scaled(CycloScalar::rational(ring, 2, 4));
    CHECK(a.equals(b));
    CHECK(a.denom() == 2);
    CHECK((a + a).equals(OperatorMatrix::identity(ring, 2)));
    CHECK((a + a).denom() == 1);
}

TEST_CASE("backends do not mix silently") {
    auto ring = CycloRing::for_field(3, 1);
    const auto e = OperatorMatrix::identity(ring, 3);
    const auto f = OperatorMatrix::identity(ring, 3, Backend::Float);
    CHECK_THROWS_AS(e * f, Error);
    CHECK_THROWS_AS(f.entry(0, 0), Error);
    CHECK(e.equals(f));
    OperatorMatrix g = f;
    g.set(0, 1, std::complex<double>(1e-11, 0));
    CHECK(g.equals(f));
    CHECK_FALSE(g.equals(f, 1e-12));
}

TEST_CASE("monomial matrices") {
    auto ring = CycloRing::for_field(3, 1);
    const MonomialMatrix a(ring, {1, 2, 0}, {0, 4, 8});
    const MonomialMatrix b(ring, {2, 0, 1}, {3, 0, 1});
    CHECK((a * b).dense().equals(a.dense() * b.dense()));
    CHECK((a * a.adjoint()) == MonomialMatrix::identity(ring, 3));
    CHECK(a.pow(3).dense().equals(a.dense().pow(3)));
    CHECK(a.times_root(2).dense().equals(a.dense().scaled(CycloScalar::root(ring, 2))));
    CHECK(a.trace().is_zero());
    const OperatorMatrix d = b.dense();
    CHECK((d * a).equals(d * a.dense()));
    CHECK((a * d).equals(a.dense() * d));
    CHECK(trace_product(d, a) == (d * a.dense()).trace());
    CHECK_THROWS_AS(MonomialMatrix(ring, {0, 0, 1}, {0, 0, 0}), Error);
}

TEST_CASE("component_tensor puts factor lambda on digit lambda") {
    auto ring = CycloRing::for_field(3, 1);
    const OperatorMatrix x = MonomialMatrix(ring, {2, 0, 1}, {0, 0, 0}).dense();  // shift on Z_3
    const OperatorMatrix one = OperatorMatrix::identity(ring, 3);
    const std::vector<OperatorMatrix> first{x, one};
    const OperatorMatrix t = component_tensor(first);
    // index = d0 + 3 d1; shifting d0 maps 0 -> 1.
    CHECK(t.entry(1, 0).is_one());
    CHECK(t.entry(3, 0).is_zero());
    CHECK(t.equals(kron(one, x)));
}

TEST_CASE("phase matching") {
    std::mt19937 rng(5);
    auto ring = CycloRing::for_field(3, 2);
    const auto a = random_matrix(ring, 4, rng);
    const auto c = CycloScalar::root(ring, 5);
    const PhaseMatch m = match_up_to_phase(a.scaled(c), a);
    CHECK(m.matched);
    REQUIRE(m.phase);
    CHECK(*m.phase == c);
    CHECK(m.deviation == 0.0);
    CHECK_FALSE(match_up_to_phase(a.scaled(CycloScalar::integer(ring, 2)), a).matched);
    const PhaseMatch mf = match_up_to_phase(a.scaled(c).to_float(), a.to_float());
    CHECK(mf.matched);
    CHECK(std::abs(mf.value - c.to_complex()) < 1e-12);
}

TEST_CASE("block and embed") {
    auto ring = CycloRing::for_field(3, 1);
    std::mt19937 rng(9);
    const auto a = random_matrix(ring, 4, rng);
    const std::vector<std::uint32_t> idx{0, 2};
    const auto b = a.block(idx);
    CHECK(b.dim() == 2);
    CHECK(b.entry(1, 0) == a.entry(2, 0));
    const auto e = OperatorMatrix::embed(b, idx, 4);
    CHECK(e.entry(2, 2) == a.entry(2, 2));
    CHECK(e.entry(1, 1).is_zero());
}

TEST_CASE("unitarity") {
    auto ring = CycloRing::for_field(3, 1);
    CHECK(MonomialMatrix(ring, {1, 2, 0}, {0, 4, 8}).dense().is_unitary());
    CHECK_FALSE(OperatorMatrix::identity(ring, 3).scaled(CycloScalar::integer(ring, 2)).is_unitary());
}
