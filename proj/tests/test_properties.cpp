#include <random>

#include "gfharm/fourier.hpp"
#include "gfharm/symplectic.hpp"
#include "support.hpp"

using namespace gfharm;

namespace {

constexpr int kDraws = 200;

Element draw(std::mt19937_64& rng, const GaloisField& f) {
    return Element{static_cast<std::uint32_t>(rng() % f.order())};
}

}  // namespace

TEST_CASE("field operations agree with the schoolbook oracle on random triples") {
    std::mt19937_64 rng(7);
    for (auto [p, l] : testing::small_grid()) {
        auto f = make_field(p, l);
        const auto o = testing::oracle_for(*f);
        for (int i = 0; i < kDraws; ++i) {
            const Element a = draw(rng, *f), b = draw(rng, *f), c = draw(rng, *f);
            REQUIRE(f->add(a, b).index == o.add(a.index, b.index));
            REQUIRE(f->mul(a, b).index == o.mul(a.index, b.index));
            REQUIRE(f->trace(a) == o.trace(a.index));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->trace(f->frobenius(a)) == f->trace(a));
            if (a != f->zero()) CHECK(f->mul(a, f->inv(a)) == f->one());
        }
    }
}

TEST_CASE("displacement composition law on random labels") {
    std::mt19937_64 rng(11);
    for (auto [p, l] : testing::small_grid()) {
        auto f = make_field(p, l);
        DisplacementSystem ds(f);
        const auto h = ds.half_element();
        for (int i = 0; i < kDraws / 4; ++i) {
            const Element a = draw(rng, *f), b = draw(rng, *f), a2 = draw(rng, *f), b2 = draw(rng, *f);
            const Element sym = f->sub(f->mul(a, b2), f->mul(a2, b));
            const MonomialMatrix lhs = ds.displacement(a, b) * ds.displacement(a2, b2);
            const MonomialMatrix rhs = ds.displacement(f->add(a, a2), f->add(b, b2))
                                           .times_root(ds.ring()->omega_exponent(f->trace(f->mul(h, sym))));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("Fourier covariance on random labels") {
    std::mt19937_64 rng(13);
    for (auto [p, l] : {testing::GridPoint{3, 2}, testing::GridPoint{5, 1}, testing::GridPoint{7, 1}}) {
        auto f = make_field(p, l);
        DisplacementSystem ds(f);
        const OperatorMatrix fm = fourier_matrix(*f);
        for (int i = 0; i < 10; ++i) {
            const Element a = draw(rng, *f), b = draw(rng, *f);
            CHECK(conjugation_holds(fm, ds.displacement(a, b).dense(), ds.displacement(b, f->neg(a)).dense()));
        }
    }
}

TEST_CASE("random symplectic elements act on displacement labels") {
    std::mt19937_64 rng(17);
    for (auto [p, l] : {testing::GridPoint{3, 1}, testing::GridPoint{3, 2}, testing::GridPoint{5, 1}}) {
        auto f = make_field(p, l);
        DisplacementSystem ds(f);
        SymplecticSystem sy(ds);
        const auto all = sy.enumerate();
        for (int i = 0; i < 6; ++i) {
            const auto& a = all[rng() % all.size()];
            const auto& b = all[rng() % all.size()];
            CHECK(sy.action_check(a).ok());
            CHECK(match_up_to_phase(sy.synthesize(a) * sy.synthesize(b), sy.synthesize(sy.compose(a, b))).matched);
        }
    }
}

TEST_CASE("float backend tracks the exact backend") {
    for (auto [p, l] : testing::small_grid()) {
        auto f = make_field(p, l);
        const OperatorMatrix exact = fourier_matrix(*f);
        CHECK(exact.to_float().equals(fourier_matrix(*f, Backend::Float), 1e-9));
    }
}
