#include "gfharm/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace gfharm {

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;

    Outcome(bool ok) : passed(ok) {}  // NOLINT(google-explicit-constructor)
    Outcome(bool ok, std::string d) : passed(ok), detail(std::move(d)) {}
};

class Ctx {
public:
    Ctx(const SuiteConfig& cfg, std::string suite, VerifyReport& out)
        : cfg_(cfg),
          f(*cfg.field),
          ring(harmonic_ring(f)),
          q(static_cast<int>(f.order())),
          flt(cfg.backend == Backend::Float),
          rng(cfg.seed ^ std::hash<std::string>{}(suite)),
          suite_(std::move(suite)),
          out_(out) {}

    OperatorMatrix M(const OperatorMatrix& m) const { return flt ? m.to_float() : m; }
    OperatorMatrix M(const MonomialMatrix& m) const { return m.dense(cfg_.backend); }
    bool eq(const OperatorMatrix& a, const OperatorMatrix& b) const { return a.equals(b, cfg_.tolerance); }
    bool conj(const OperatorMatrix& u, const MonomialMatrix& a, const MonomialMatrix& b) const {
        return conjugation_holds(u, a, b, cfg_.tolerance);
    }
    OperatorMatrix identity() const { return OperatorMatrix::identity(ring, q, cfg_.backend); }
    OperatorMatrix zero() const { return OperatorMatrix::zero(ring, q, cfg_.backend); }
    double tol() const { return cfg_.tolerance; }
    const SuiteConfig& cfg() const { return cfg_; }

    void check(const std::string& identity, const std::function<Outcome()>& body) {
        CheckResult c;
        c.suite = suite_;
        c.identity = identity;
        try {
            Outcome o = body();
            c.passed = o.passed;
            c.detail = std::move(o.detail);
        } catch (const Error& e) {
            c.passed = false;
            c.detail = e.what();
        } catch (const std::exception& e) {
            c.passed = false;
            c.detail = std::string("internal: ") + e.what();
        }
        out_.checks.push_back(std::move(c));
    }

    void skip(const std::string& identity, const std::string& why) {
        CheckResult c;
        c.suite = suite_;
        c.identity = identity;
        c.skipped = true;
        c.detail = why;
        out_.checks.push_back(std::move(c));
    }

    Element random_element(bool nonzero = false) {
        std::uniform_int_distribution<std::uint32_t> dist(nonzero ? 1u : 0u, f.order() - 1);
        return f.element(dist(rng));
    }

    /// Every element when q <= limit, otherwise zero, one and random picks.
    std::vector<Element> elements(std::size_t limit) {
        if (f.order() <= limit) return f.elements();
        std::set<Element> pick{f.zero(), f.one()};
        while (pick.size() < limit) pick.insert(random_element());
        return {pick.begin(), pick.end()};
    }

    std::vector<DisplacementLabel> labels(std::size_t limit) {
        std::vector<DisplacementLabel> out;
        if (static_cast<std::size_t>(q) * static_cast<std::size_t>(q) <= limit) {
            for (auto a : f.elements()) {
                for (auto b : f.elements()) out.push_back({a, b});
            }
            return out;
        }
        out.push_back({f.zero(), f.zero()});
        while (out.size() < limit) out.push_back({random_element(), random_element()});
        return out;
    }

    const SuiteConfig& cfg_;
    const GaloisField& f;
    RingPtr ring;
    int q;
    bool flt;
    std::mt19937_64 rng;

private:
    std::string suite_;
    VerifyReport& out_;
};

std::string tagged(const std::string& name, const char* key, int value) {
    return name + "[" + key + "=" + std::to_string(value) + "]";
}

std::string label_text(const GaloisField& f, DisplacementLabel l) {
    return "(" + f.format(l.alpha) + " ; " + f.format(l.beta) + ")";
}

CycloScalar i_power(const RingPtr& ring, int r) { return CycloScalar::root(ring, ring->i_exponent(r)); }

// ---------------------------------------------------------------- gf

std::vector<int> naive_product(const GaloisField& f, const std::vector<int>& a, const std::vector<int>& b) {
    const int p = f.characteristic();
    const int l = f.degree();
    std::vector<int> prod(static_cast<std::size_t>(2 * l - 1), 0);
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) prod[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
    const auto& mod = f.modulus();
    for (int k = 2 * l - 2; k >= l; --k) {
        const int c = prod[static_cast<std::size_t>(k)] % p;
        prod[static_cast<std::size_t>(k)] = 0;
        if (c == 0) continue;
        for (int j = 0; j < l; ++j) prod[static_cast<std::size_t>(k - l + j)] -= c * mod[static_cast<std::size_t>(j)];
    }
    prod.resize(static_cast<std::size_t>(l));
    for (int& c : prod) c = ((c % p) + p) % p;
    return prod;
}

void gf_suite(Ctx& c) {
    const GaloisField& f = c.f;
    const int p = f.characteristic();
    const int l = f.degree();
    const auto all = f.elements();

    std::vector<std::pair<Element, Element>> pairs;
    if (f.order() <= 81) {
        for (auto a : all) {
            for (auto b : all) pairs.emplace_back(a, b);
        }
    } else {
        for (int k = 0; k < 4000; ++k) pairs.emplace_back(c.random_element(), c.random_element());
    }

    c.check("gf.field_axioms", [&]() -> Outcome {
        for (auto [a, b] : pairs) {
            const Element x = c.random_element();
            if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a)) return {false, "commutativity"};
            if (f.mul(a, f.add(b, x)) != f.add(f.mul(a, b), f.mul(a, x))) return {false, "distributivity"};
            if (f.mul(f.mul(a, b), x) != f.mul(a, f.mul(b, x))) return {false, "associativity"};
            if (f.add(a, f.neg(a)) != f.zero() || f.sub(a, b) != f.add(a, f.neg(b))) return {false, "additive inverse"};
            if (b != f.zero() && f.mul(f.div(a, b), b) != a) return {false, "division"};
        }
        for (auto a : all) {
            if (a != f.zero() && (f.mul(a, f.inv(a)) != f.one() || f.pow(a, f.order() - 1) != f.one())) {
                return {false, "multiplicative inverse of " + f.format(a)};
            }
            if (f.pow(a, f.order()) != a) return {false, "a^q != a"};
        }
        return true;
    });

    c.check("gf.product_matches_polynomial_reduction", [&]() -> Outcome {
        for (auto [a, b] : pairs) {
            const auto expect = naive_product(f, f.coeffs(a), f.coeffs(b));
            if (f.coeffs(f.mul(a, b)) != expect) return {false, f.format(a) + " * " + f.format(b)};
        }
        return true;
    });

    c.check("gf.frobenius_automorphism", [&]() -> Outcome {
        for (auto [a, b] : pairs) {
            if (f.frobenius(f.add(a, b)) != f.add(f.frobenius(a), f.frobenius(b))) return {false, "not additive"};
            if (f.frobenius(f.mul(a, b)) != f.mul(f.frobenius(a), f.frobenius(b))) return {false, "not multiplicative"};
        }
        int fixed = 0;
        for (auto a : all) {
            if (f.frobenius(a, l) != a) return {false, "sigma^l != id"};
            if (f.frobenius(f.frobenius(a), -1) != a) return {false, "inverse iterate"};
            if (f.frobenius(a) == a) ++fixed;
            if (f.frobenius(a) == a && a.index >= static_cast<std::uint32_t>(p)) return {false, "fixed point outside Z_p"};
        }
        return {fixed == p, std::to_string(fixed) + " fixed points"};
    });

    c.check("gf.trace_linear_and_balanced", [&]() -> Outcome {
        std::vector<int> hits(static_cast<std::size_t>(p), 0);
        for (auto a : all) {
            const int t = f.trace(a);
            if (t < 0 || t >= p) return {false, "trace outside Z_p"};
            ++hits[static_cast<std::size_t>(t)];
            if (f.trace(f.frobenius(a)) != t) return {false, "Tr(a^p) != Tr(a)"};
            for (int k = 0; k < p; ++k) {
                if (f.trace(f.scale(k, a)) != f.reduce(static_cast<long long>(k) * t)) return {false, "Z_p-linearity"};
            }
            Element conj_sum = f.zero();
            for (int k = 0; k < l; ++k) conj_sum = f.add(conj_sum, f.frobenius(a, k));
            if (conj_sum.index != static_cast<std::uint32_t>(t)) return {false, "sum of conjugates"};
        }
        for (auto [a, b] : pairs) {
            if (f.trace(f.add(a, b)) != f.reduce(f.trace(a) + f.trace(b))) return {false, "additivity"};
        }
        for (int h : hits) {
            if (h != static_cast<int>(f.order()) / p) return {false, "trace fibres unequal"};
        }
        return true;
    });

    c.check("gf.dual_basis", [&]() -> Outcome {
        const DualBasis& d = f.dual_basis();
        const Element eps = f.generator();
        for (int i = 0; i < l; ++i) {
            for (int j = 0; j < l; ++j) {
                if (d.gram(i, j) != f.trace(f.pow(eps, i + j))) return {false, "gram entry"};
                int prod = 0;
                for (int k = 0; k < l; ++k) prod += d.gram(i, k) * d.inverse_gram(k, j);
                if (f.reduce(prod) != (i == j ? 1 : 0)) return {false, "g G != 1"};
                if (f.trace(f.mul(f.pow(eps, i), d.elements[static_cast<std::size_t>(j)])) != (i == j ? 1 : 0)) {
                    return {false, "Tr(eps^k E_l) != delta"};
                }
            }
        }
        std::string basis;
        for (auto e : d.elements) basis += (basis.empty() ? "" : " ") + f.format(e);
        return {true, "E = " + basis};
    });

    c.check("gf.component_expansions", [&]() -> Outcome {
        const DualBasis& d = f.dual_basis();
        const Element eps = f.generator();
        for (auto a : all) {
            const Components comp = f.components(a);
            if (comp.standard != f.coeffs(a)) return {false, "standard components of " + f.format(a)};
            Element rebuilt = f.zero();
            for (int k = 0; k < l; ++k) {
                if (comp.dual[static_cast<std::size_t>(k)] != f.trace(f.mul(a, f.pow(eps, k)))) return {false, "dual component"};
                rebuilt = f.add(rebuilt, f.scale(comp.dual[static_cast<std::size_t>(k)], d.elements[static_cast<std::size_t>(k)]));
            }
            if (rebuilt != a) return {false, "sum of dual components"};
        }
        return true;
    });

    for (int d : f.divisors()) {
        c.check(tagged("gf.subfield", "d", d), [&, d]() -> Outcome {
            const auto sub = f.subfield_elements(d);
            long long size = 1;
            for (int k = 0; k < d; ++k) size *= p;
            if (static_cast<long long>(sub.size()) != size) return {false, "size " + std::to_string(sub.size())};
            const std::set<Element> members(sub.begin(), sub.end());
            for (auto a : all) {
                if (f.in_subfield(a, d) != (f.frobenius(a, d) == a)) return {false, "membership"};
            }
            for (auto a : sub) {
                for (auto b : sub) {
                    if (!members.count(f.add(a, b)) || !members.count(f.mul(a, b))) return {false, "not closed"};
                }
                Element conj_sum = f.zero();
                for (int k = 0; k < d; ++k) conj_sum = f.add(conj_sum, f.frobenius(a, k));
                const int tr_d = f.subfield_trace(a, d);
                if (conj_sum.index != static_cast<std::uint32_t>(tr_d)) return {false, "subfield trace"};
                if (f.trace(a) != f.reduce(static_cast<long long>(l / d) * tr_d)) return {false, "trace tower"};
            }
            const auto group = f.galois_group(d);
            if (static_cast<int>(group.size()) != l / d) return {false, "Galois group order"};
            for (int k : group) {
                for (auto a : sub) {
                    if (f.frobenius(a, k) != a) return {false, "Galois group moves the subfield"};
                }
            }
            return true;
        });
    }
}

// ---------------------------------------------------------------- fourier

void fourier_suite(Ctx& c) {
    const GaloisField& f = c.f;
    const int l = f.degree();
    const int p = f.characteristic();
    const OperatorMatrix fm = c.M(fourier_matrix(f));

    c.check("fourier.unitary", [&]() -> Outcome { return c.eq(fm * fm.adjoint(), c.identity()); });
    c.check("fourier.fourth_power", [&]() -> Outcome {
        const OperatorMatrix f2 = fm * fm;
        return {c.eq(f2 * f2, c.identity()) && c.eq(f2, c.M(parity(f))), "F^2 = P, F^4 = 1"};
    });

    c.check("fourier.spectral_decomposition", [&]() -> Outcome {
        const FourierSpectrum spec = fourier_spectrum(f);
        std::array<OperatorMatrix, 4> pr;
        OperatorMatrix sum = c.zero(), recon = c.zero();
        long long rank_sum = 0;
        for (int r = 0; r < 4; ++r) {
            pr[static_cast<std::size_t>(r)] = c.M(spec.projectors[static_cast<std::size_t>(r)]);
            sum += pr[static_cast<std::size_t>(r)];
            recon += pr[static_cast<std::size_t>(r)].scaled(i_power(c.ring, r));
            rank_sum += spec.ranks[static_cast<std::size_t>(r)];
        }
        for (int r = 0; r < 4; ++r) {
            const auto& a = pr[static_cast<std::size_t>(r)];
            if (!c.eq(a.adjoint(), a)) return {false, "pi_r not hermitian"};
            if (!c.eq(fm * a, a.scaled(i_power(c.ring, r)))) return {false, "F pi_r != i^r pi_r"};
            for (int s = 0; s < 4; ++s) {
                const OperatorMatrix prod = a * pr[static_cast<std::size_t>(s)];
                if (!c.eq(prod, r == s ? a : c.zero())) return {false, "pi_r pi_s != delta pi_r"};
            }
        }
        std::ostringstream ranks;
        ranks << "ranks " << spec.ranks[0] << "," << spec.ranks[1] << "," << spec.ranks[2] << "," << spec.ranks[3];
        return {c.eq(sum, c.identity()) && c.eq(recon, fm) && rank_sum == c.q, ranks.str()};
    });

    c.check("fourier.component_factorization", [&]() -> Outcome {
        const auto rep = component_factorization_check(f);
        const bool ok = rep.dual_on_standard && rep.standard_on_dual && (l == 1 || rep.naive_differs);
        std::string detail = l == 1 ? "prime field: naive product coincides" : "naive product differs";
        if (rep.witness) detail += " at (" + f.format(rep.witness->first) + ", " + f.format(rep.witness->second) + ")";
        return {ok, detail};
    });

    c.check("fourier.character_basis", [&]() -> Outcome {
        const auto picks = c.elements(12);
        std::vector<StateVector> phis;
        for (auto n : picks) phis.push_back(phi_basis(f, n));
        const OperatorMatrix exact_f = fourier_matrix(f);
        for (std::size_t i = 0; i < picks.size(); ++i) {
            for (std::size_t j = 0; j < picks.size(); ++j) {
                const CycloScalar ip = inner_product(phis[i], phis[j]);
                if (!(ip == CycloScalar::integer(c.ring, i == j ? 1 : 0))) return {false, "phi_n not orthonormal"};
            }
            const StateVector image = apply(exact_f, basis_state(f, picks[i]));
            if (!(image == phi_basis(f, f.neg(picks[i])))) return {false, "F delta_k != phi_{-k}"};
        }
        return true;
    });

    for (int d : f.divisors()) {
        c.check(tagged("fourier.subfield_power_relation", "d", d), [&, d]() -> Outcome {
            const auto idx = subfield_indices(f, d);
            const OperatorMatrix block = fm.block(idx);
            const OperatorMatrix small = c.M(subfield_fourier(f, d)).entrywise_pow(l / d);
            return {c.eq(block, small), "exponent " + std::to_string(l / d)};
        });
        if ((l / d) % p == 0) {
            c.check(tagged("fourier.constant_block", "d", d), [&, d]() -> Outcome {
                const auto idx = subfield_indices(f, d);
                const OperatorMatrix block = fm.block(idx);
                const int n = static_cast<int>(idx.size());
                OperatorMatrix expect = OperatorMatrix::zero(c.ring, n);
                const CycloScalar v = CycloScalar::inverse_sqrt_prime_power(c.ring, l);
                for (int i = 0; i < n; ++i) {
                    for (int j = 0; j < n; ++j) expect.set(i, j, v);
                }
                return {c.eq(block, c.M(expect)), "every entry p^{-l/2} = " + std::to_string(v.to_complex().real())};
            });
        }
    }
}

// ---------------------------------------------------------------- frobenius

void frobenius_suite(Ctx& c) {
    const GaloisField& f = c.f;
    const int l = f.degree();
    const OperatorMatrix g = c.M(frobenius_matrix(f));
    const OperatorMatrix fm = c.M(fourier_matrix(f));

    c.check("frobenius.order", [&]() -> Outcome {
        OperatorMatrix power = c.identity();
        for (int k = 1; k < l; ++k) {
            power = power * g;
            if (c.eq(power, c.identity())) return {false, "G^" + std::to_string(k) + " = 1"};
        }
        return c.eq(power * g, c.identity()) && g.is_unitary(c.tol());
    });

    c.check("frobenius.conjugates_labels", [&]() -> Outcome {
        for (auto a : c.elements(27)) {
            if (!c.conj(g, z_power(f, a), z_power(f, f.frobenius(a)))) return {false, "G Z^a G^dagger != Z^{a^p}"};
            if (!c.conj(g, x_power(f, a), x_power(f, f.frobenius(a)))) return {false, "G X^b G^dagger != X^{b^p}"};
        }
        return true;
    });

    if (l > 1) {
        c.check("frobenius.does_not_commute_with_z_eps", [&]() -> Outcome {
            const OperatorMatrix z = c.M(z_power(f, f.generator()));
            return !c.eq(g * z, z * g);
        });
    }

    c.check("frobenius.commutes_with_fourier", [&]() -> Outcome {
        if (!c.eq(g * fm, fm * g)) return {false, "[F, G] != 0"};
        const FourierSpectrum spec = fourier_spectrum(f);
        for (const auto& pr : spec.projectors) {
            const OperatorMatrix a = c.M(pr);
            if (!c.eq(g * a, a * g)) return {false, "[pi_r, G] != 0"};
        }
        return true;
    });

    for (int d : f.divisors()) {
        c.check(tagged("frobenius.subspace_projector", "d", d), [&, d]() -> Outcome {
            const OperatorMatrix pi = c.M(subspace_projector(f, d));
            if (!c.eq(g * pi, pi * g)) return {false, "[G, Pi_d] != 0"};
            return {c.eq(g.pow(d) * pi, pi), "G^d Pi_d = Pi_d"};
        });
        c.check(tagged("frobenius.galois_group_fixes_subspace", "d", d), [&, d]() -> Outcome {
            const OperatorMatrix pi = c.M(subspace_projector(f, d));
            const auto group = galois_group_H(f, d);
            if (static_cast<int>(group.size()) != l / d) return {false, "group order"};
            for (const auto& h : group) {
                if (!c.eq(c.M(h) * pi, pi)) return {false, "element moves h_d"};
            }
            const auto rotated = conjugated_galois_group(f, fourier_matrix(f), d);
            for (std::size_t k = 0; k < group.size(); ++k) {
                if (!c.eq(c.M(rotated[k]), c.M(group[k]))) return {false, "F H F^dagger != H"};
            }
            return true;
        });
    }

    const FrobeniusSpectrum spec = frobenius_spectrum(f);
    std::vector<OperatorMatrix> w;
    for (const auto& m : spec.projectors) w.push_back(c.M(m));

    c.check("frobenius.spectral_decomposition", [&]() -> Outcome {
        OperatorMatrix sum = c.zero();
        long long rank_sum = 0;
        std::string ranks;
        for (int lam = 0; lam < l; ++lam) {
            const auto& a = w[static_cast<std::size_t>(lam)];
            sum += a;
            rank_sum += spec.ranks[static_cast<std::size_t>(lam)];
            ranks += (lam ? "," : "") + std::to_string(spec.ranks[static_cast<std::size_t>(lam)]);
            const CycloScalar big_omega = CycloScalar::root(c.ring, static_cast<long long>(c.ring->order() / l) * lam);
            if (!c.eq(g * a, a.scaled(big_omega))) return {false, "G varpi != Omega^lambda varpi"};
            for (int mu = 0; mu < l; ++mu) {
                if (!c.eq(a * w[static_cast<std::size_t>(mu)], lam == mu ? a : c.zero())) return {false, "not orthogonal idempotents"};
            }
        }
        return {c.eq(sum, c.identity()) && rank_sum == c.q, "ranks " + ranks};
    });

    c.check("frobenius.prime_subspace_in_fixed_space", [&]() -> Outcome {
        const OperatorMatrix pi = c.M(subspace_projector(f, 1));
        return c.eq(pi * w[0], pi) && c.eq(w[0] * pi, pi);
    });

    for (int d : f.divisors()) {
        c.check(tagged("frobenius.combined_eigenspace_containment", "d", d), [&, d]() -> Outcome {
            const OperatorMatrix pi = c.M(subspace_projector(f, d));
            OperatorMatrix sum = c.zero();
            std::string lams;
            for (int lam = 0; lam < l; ++lam) {
                if ((d * lam) % l != 0) continue;
                sum += w[static_cast<std::size_t>(lam)];
                lams += (lams.empty() ? "" : ",") + std::to_string(lam);
            }
            return {c.eq(pi * sum, pi), "lambda in {" + lams + "}"};
        });
    }

    c.check("frobenius.basis_change_rejects_non_unitary", [&]() -> Outcome {
        try {
            conjugated_galois_group(f, OperatorMatrix::identity(c.ring, c.q).scaled(CycloScalar::integer(c.ring, 2)), 1);
        } catch (const Error& e) {
            return e.kind() == ErrorKind::NotUnitary;
        }
        return false;
    });
}

// ---------------------------------------------------------------- heisenberg

OperatorMatrix random_operator(Ctx& c) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> root(0, c.ring->order() - 1);
    OperatorMatrix m = OperatorMatrix::zero(c.ring, c.q);
    for (int i = 0; i < c.q; ++i) {
        for (int j = 0; j < c.q; ++j) {
            const int v = coef(c.rng);
            if (v != 0) m.set(i, j, CycloScalar::root(c.ring, root(c.rng)) * CycloScalar::integer(c.ring, v));
        }
    }
    return m;
}

StateVector random_state(Ctx& c) {
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<int> root(0, c.ring->order() - 1);
    StateVector v(c.ring, c.q);
    for (int i = 0; i < c.q; ++i) v[i] = CycloScalar::root(c.ring, root(c.rng)) * CycloScalar::integer(c.ring, coef(c.rng));
    v[0] = CycloScalar::integer(c.ring, 3);
    return v;
}

void heisenberg_suite(Ctx& c) {
    const GaloisField& f = c.f;
    if (f.characteristic() == 2) {
        c.skip("heisenberg", "EvenCharacteristic: displacement phases need 2^{-1}");
        return;
    }
    const DisplacementSystem ds(c.cfg().field, c.cfg().half_phase_offset);
    const Element h = ds.half_element();
    const auto pair_limit = static_cast<std::size_t>(c.flt ? 200 : 1 << 20);
    const auto labels = c.labels(c.flt ? 60 : 729);

    auto same = [&](const MonomialMatrix& a, const MonomialMatrix& b) {
        return c.flt ? c.eq(c.M(a), c.M(b)) : a == b;
    };
    auto product = [&](const MonomialMatrix& a, const MonomialMatrix& b) {
        return c.flt ? c.M(a) * c.M(b) : (a * b).dense();
    };
    std::vector<std::pair<DisplacementLabel, DisplacementLabel>> pairs;
    for (const auto& a : labels) {
        for (const auto& b : labels) {
            if (pairs.size() < pair_limit) pairs.emplace_back(a, b);
        }
    }
    std::shuffle(pairs.begin(), pairs.end(), c.rng);
    if (pairs.size() > 6000) pairs.resize(6000);

    c.check("heisenberg.commutation", [&]() -> Outcome {
        for (auto [x, y] : pairs) {
            const auto z = ds.z_power(x.alpha);
            const auto xx = ds.x_power(y.beta);
            const auto phase = CycloScalar::omega(c.ring, f.trace(f.mul(x.alpha, y.beta)));
            if (!c.eq(product(z, xx), product(xx, z).scaled(phase))) {
                return {false, "alpha=" + f.format(x.alpha) + " beta=" + f.format(y.beta)};
            }
        }
        return {true, std::to_string(pairs.size()) + " pairs"};
    });

    c.check("heisenberg.composition", [&]() -> Outcome {
        for (auto [x, y] : pairs) {
            const Element cross = f.sub(f.mul(x.alpha, y.beta), f.mul(y.alpha, x.beta));
            const auto phase = CycloScalar::omega(c.ring, f.trace(f.mul(h, cross)));
            const auto lhs = product(ds.displacement(x), ds.displacement(y));
            const auto rhs = c.M(ds.displacement(f.add(x.alpha, y.alpha), f.add(x.beta, y.beta))).scaled(phase);
            if (!c.eq(lhs, rhs)) return {false, label_text(f, x) + " * " + label_text(f, y)};
        }
        return {true, std::to_string(pairs.size()) + " pairs"};
    });

    c.check("heisenberg.adjoint", [&]() -> Outcome {
        for (const auto& x : labels) {
            const auto d = ds.displacement(x);
            if (!same(d.adjoint(), ds.displacement(f.neg(x.alpha), f.neg(x.beta)))) return {false, label_text(f, x)};
        }
        return true;
    });

    c.check("heisenberg.trace_orthogonality", [&]() -> Outcome {
        for (const auto& x : labels) {
            const bool origin = x.alpha == f.zero() && x.beta == f.zero();
            const auto tr = c.M(ds.displacement(x)).trace_value();
            if (std::abs(tr - std::complex<double>(origin ? c.q : 0, 0)) > 1e-9) return {false, label_text(f, x)};
        }
        return true;
    });

    c.check("heisenberg.fourier_covariance", [&]() -> Outcome {
        const OperatorMatrix fm = c.M(fourier_matrix(f));
        for (const auto& x : c.labels(81)) {
            if (!c.conj(fm, ds.displacement(x), ds.displacement(x.beta, f.neg(x.alpha)))) {
                return {false, "F D" + label_text(f, x) + " F^dagger"};
            }
        }
        return true;
    });

    c.check("heisenberg.parity_covariance", [&]() -> Outcome {
        const MonomialMatrix par = parity(f);
        for (const auto& x : labels) {
            if (!same(par * ds.displacement(x) * par, ds.displacement(f.neg(x.alpha), f.neg(x.beta)))) {
                return {false, label_text(f, x)};
            }
        }
        return true;
    });

    c.check("heisenberg.tensor_factorization", [&]() -> Outcome {
        for (const auto& x : labels) {
            if (c.flt) {
                std::vector<OperatorMatrix> dense;
                for (const auto& m : ds.tensor_factorize(x.alpha, x.beta)) dense.push_back(m.dense(Backend::Float));
                if (!c.eq(component_tensor(dense), c.M(ds.displacement(x)))) return {false, label_text(f, x)};
            } else if (!ds.tensor_factorization_holds(x.alpha, x.beta)) {
                return {false, label_text(f, x)};
            }
        }
        return true;
    });

    c.check("heisenberg.weyl_round_trip", [&]() -> Outcome {
        for (int k = 0; k < 5; ++k) {
            const OperatorMatrix theta = c.M(random_operator(c));
            if (!c.eq(ds.weyl_reconstruct(ds.weyl_expand(theta)), theta)) return {false, "operator " + std::to_string(k)};
        }
        return {true, "5 random operators"};
    });

    c.check("heisenberg.resolution_of_identity", [&]() -> Outcome {
        const StateVector v = random_state(c);
        const OperatorMatrix rank_one = outer(v, v);
        const std::vector<std::pair<const char*, OperatorMatrix>> thetas{
            {"1", OperatorMatrix::identity(c.ring, c.q)},
            {"Q_0", point_projector(f, f.zero())},
            {"random rank one", rank_one},
        };
        for (const auto& [name, theta] : thetas) {
            if (!ds.resolution_of_identity_check(c.M(theta)).identity) return {false, std::string("Theta = ") + name};
        }
        if (!c.flt) {
            const StateVector psi = phi_basis(f, c.random_element());
            const StateVector chi = random_state(c);
            const auto rep = ds.resolution_of_identity_check(outer(psi, psi), &psi, &chi);
            if (!rep.expansion.value_or(false)) return {false, "state expansion"};
        }
        return true;
    });

    c.check("heisenberg.marginals_with_parity", [&]() -> Outcome {
        const MarginalReport rep = ds.marginal_projectors(c.cfg().backend);
        std::string detail = "sum_alpha D P = Q_{beta/2}; sum_beta D P = F Q_{alpha/2} F^dagger";
        return {rep.position_with_parity && rep.momentum_with_parity, detail};
    });

    for (int d : f.divisors()) {
        c.check(tagged("heisenberg.subfield_displacement", "d", d), [&, d]() -> Outcome {
            const auto idx = subfield_indices(f, d);
            const auto sub = f.subfield_elements(d);
            const OperatorMatrix fd = c.M(subfield_fourier(f, d));
            std::vector<DisplacementLabel> subl;
            for (auto a : sub) {
                for (auto b : sub) subl.push_back({a, b});
            }
            if (subl.size() > 81) {
                std::shuffle(subl.begin(), subl.end(), c.rng);
                subl.resize(81);
            }
            for (const auto& x : subl) {
                const OperatorMatrix block = c.M(ds.displacement(x)).block(idx);
                const OperatorMatrix small = c.M(ds.subfield_displacement(d, x.alpha, x.beta)).entrywise_pow(f.degree() / d);
                if (!c.eq(block, small)) return {false, "power relation at " + label_text(f, x)};
                const auto z = ds.subfield_displacement(d, x.alpha, f.zero());
                const auto xs = ds.subfield_displacement(d, f.zero(), x.alpha);
                const auto xneg = ds.subfield_displacement(d, f.zero(), f.neg(x.alpha));
                if (!c.conj(fd, z, xneg) || !c.conj(fd, xs, z)) return {false, "subfield Fourier action"};
            }
            return {true, std::to_string(subl.size()) + " labels"};
        });
    }
}

// ---------------------------------------------------------------- symplectic

void symplectic_suite(Ctx& c) {
    const GaloisField& f = c.f;
    if (f.characteristic() == 2) {
        c.skip("symplectic", "EvenCharacteristic: displacement phases need 2^{-1}");
        return;
    }
    const DisplacementSystem ds(c.cfg().field, c.cfg().half_phase_offset);
    const SymplecticSystem sy(ds);
    const std::uint64_t q = f.order();
    const bool exhaustive = c.cfg().exhaustive && q <= kExhaustiveLimit;
    const auto alphas = c.elements(27);

    std::vector<SymplecticParams> elements;
    if (exhaustive) {
        elements = sy.enumerate();
    } else {
        for (int k = 0; k < c.cfg().samples; ++k) {
            if (k % 4 == 3) {
                const Element s = c.random_element(true);
                elements.push_back({f.zero(), s, f.neg(f.inv(s)), c.random_element()});
            } else {
                elements.push_back(sy.params(c.random_element(true), c.random_element(), c.random_element()));
            }
        }
    }
    auto text = [&](const SymplecticParams& m) {
        return "S(r=" + f.format(m.r) + ", s=" + f.format(m.s) + ", t=" + f.format(m.t) + ", u=" + f.format(m.u) + ")";
    };
    auto acts_correctly = [&](const OperatorMatrix& s, const SymplecticParams& m, const std::vector<DisplacementLabel>& general) {
        for (auto a : alphas) {
            if (!c.conj(s, ds.z_power(a), ds.displacement(sy.act(m, {a, f.zero()})))) return false;
            if (!c.conj(s, ds.x_power(a), ds.displacement(sy.act(m, {f.zero(), a})))) return false;
        }
        for (const auto& l : general) {
            if (!c.conj(s, ds.displacement(l), ds.displacement(sy.act(m, l)))) return false;
        }
        return true;
    };

    if (q <= 49) {
        c.check("symplectic.group_order", [&]() -> Outcome {
            const auto all = sy.enumerate();
            std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>> distinct;
            for (const auto& m : all) {
                if (!sy.is_valid(m)) return {false, "invalid " + text(m)};
                distinct.emplace(m.r.index, m.s.index, m.t.index, m.u.index);
            }
            const std::uint64_t expect = q * (q * q - 1);
            return {distinct.size() == expect && all.size() == expect, std::to_string(distinct.size()) + " elements"};
        });
    }

    c.check("symplectic.generators", [&]() -> Outcome {
        for (auto xi : c.elements(27)) {
            if (!(sy.generator_shear_x(xi).equals(sy.generator_shear_x_closed_form(xi)))) {
                return {false, "shear closed form at " + f.format(xi)};
            }
            const auto general = c.labels(9);
            if (!acts_correctly(c.M(sy.generator_shear_z(xi)), sy.params(f.one(), xi, f.zero()), general)) {
                return {false, "S(1, xi, 0) action"};
            }
            if (!acts_correctly(c.M(sy.generator_shear_x(xi)), sy.params(f.one(), f.zero(), xi), general)) {
                return {false, "S(1, 0, xi) action"};
            }
            if (xi != f.zero() && !acts_correctly(c.M(sy.generator_scaling(xi)), sy.params(xi, f.zero(), f.zero()), general)) {
                return {false, "S(xi, 0, 0) action"};
            }
        }
        return true;
    });

    c.check("symplectic.action", [&]() -> Outcome {
        const auto general = c.labels(exhaustive ? 81 : 40);
        for (const auto& m : elements) {
            const OperatorMatrix s = c.M(sy.synthesize(m));
            if (!s.is_unitary(c.tol())) return {false, text(m) + " not unitary"};
            if (!acts_correctly(s, m, general)) return {false, text(m)};
            for (int k = 0; k < 4; ++k) {
                const Element a = c.random_element(), b = c.random_element();
                const auto zp = ds.displacement(sy.act(m, {a, f.zero()}));
                const auto xp = ds.displacement(sy.act(m, {f.zero(), b}));
                const auto phase = CycloScalar::omega(c.ring, f.trace(f.mul(a, b)));
                if (!(zp * xp).dense().equals((xp * zp).dense().scaled(phase))) return {false, "transformed commutation"};
            }
        }
        return {true, std::to_string(elements.size()) + (exhaustive ? " elements (exhaustive)" : " sampled elements")};
    });

    c.check("symplectic.homomorphism", [&]() -> Outcome {
        std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
        const int rounds = std::min<int>(8, static_cast<int>(elements.size()));
        for (int k = 0; k < rounds; ++k) {
            const auto& a = elements[pick(c.rng)];
            const auto& b = elements[pick(c.rng)];
            const OperatorMatrix lhs = c.M(sy.synthesize(a)) * c.M(sy.synthesize(b));
            const PhaseMatch m = match_up_to_phase(lhs, c.M(sy.synthesize(sy.compose(a, b))), c.tol());
            if (!m.matched) return {false, text(a) + " * " + text(b)};
        }
        return {true, "S(A) S(B) = phase * S(AB)"};
    });

    c.check("symplectic.closed_form", [&]() -> Outcome {
        std::vector<SymplecticParams> triples;
        for (auto r : f.elements()) {
            if (r == f.zero()) continue;
            for (auto s : f.elements()) {
                for (auto t : f.elements()) {
                    if (t == f.zero() || f.add(f.one(), f.mul(s, t)) == f.zero()) continue;
                    triples.push_back(sy.params(r, s, t));
                }
            }
        }
        const auto valid = triples.size();
        const auto want = static_cast<std::size_t>(c.cfg().closed_form_samples);
        if (!exhaustive && triples.size() > want) {
            std::shuffle(triples.begin(), triples.end(), c.rng);
            triples.resize(want);
        }
        double worst = 0.0;
        for (const auto& m : triples) {
            const PhaseMatch pm = match_up_to_phase(c.M(sy.closed_form(m)), c.M(sy.synthesize(m)), c.tol());
            worst = std::max(worst, pm.deviation);
            if (!pm.matched) return {false, text(m)};
        }
        std::ostringstream out;
        out << triples.size() << " of " << valid << " valid triples, max deviation " << worst;
        return {true, out.str()};
    });

    c.check("symplectic.gauss_sum_modulus", [&]() -> Outcome {
        for (auto a : c.elements(49)) {
            const CycloScalar g = sy.gauss_sum(a).value;
            const auto expect = CycloScalar::integer(c.ring, a == f.zero() ? static_cast<std::int64_t>(q * q) : static_cast<std::int64_t>(q));
            if (!(g * g.conj() == expect)) return {false, "|G(" + f.format(a) + ")|^2"};
        }
        return true;
    });

    if (f.degree() > 1) {
        c.check("symplectic.frobenius_covariance", [&]() -> Outcome {
            const MonomialMatrix gk = frobenius_permutation(f);
            const OperatorMatrix g = c.M(gk);
            std::vector<SymplecticParams> picks(elements.begin(), elements.begin() + std::min<std::size_t>(4, elements.size()));
            picks.push_back(sy.params(f.one(), f.one(), f.one()));
            const auto general = c.labels(27);
            for (const auto& m : picks) {
                const OperatorMatrix s = c.M(sy.synthesize(m));
                const OperatorMatrix rotated = g * s * g.adjoint();
                const SymplecticParams mk = sy.frobenius(m, 1);
                if (!acts_correctly(rotated, mk, general)) return {false, "action of G S G^dagger for " + text(m)};
                if (!match_up_to_phase(rotated, c.M(sy.synthesize(mk)), c.tol()).matched) return {false, "phase for " + text(m)};
                for (int d : f.divisors()) {
                    if (d == f.degree()) break;
                    if (!(f.in_subfield(m.r, d) && f.in_subfield(m.s, d) && f.in_subfield(m.t, d) && f.in_subfield(m.u, d))) continue;
                    const OperatorMatrix gd = g.pow(d);
                    if (!acts_correctly(gd * s * gd.adjoint(), m, general)) return {false, "subfield invariance for " + text(m)};
                    break;
                }
            }
            return true;
        });
    }

    c.check("symplectic.transformed_marginals", [&]() -> Outcome {
        const OperatorMatrix par = c.M(parity(f));
        const std::size_t n = std::min<std::size_t>(3, elements.size());
        for (std::size_t k = 0; k < n; ++k) {
            const OperatorMatrix s = c.M(sy.synthesize(elements[k]));
            if (!c.eq(s * par, par * s)) return {false, "S P != P S for " + text(elements[k])};
            const MarginalReport rep = ds.marginal_projectors(c.cfg().backend, &s);
            if (!rep.position_with_parity || !rep.momentum_with_parity) return {false, text(elements[k])};
        }
        return true;
    });

    if (f.degree() == 2) {
        c.check("symplectic.not_a_tensor_product", [&]() -> Outcome {
            const Element eps = f.generator();
            const NonFactorizationReport rep = sy.non_factorization_witness(sy.params(f.one(), f.add(f.one(), eps), eps));
            return {rep.not_a_tensor_product, "operator-Schmidt rank " + std::to_string(rep.schmidt_rank)};
        });
    }
}

}  // namespace

bool VerifyReport::ok() const { return count_failed() == 0; }

int VerifyReport::count_passed() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.skipped && c.passed; }));
}

int VerifyReport::count_failed() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.skipped && !c.passed; }));
}

int VerifyReport::count_skipped() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.skipped; }));
}

void VerifyReport::append(const VerifyReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"all", "gf", "fourier", "frobenius", "heisenberg", "symplectic"};
    return names;
}

bool is_suite(std::string_view name) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

VerifyReport run_suite(std::string_view suite, const SuiteConfig& cfg) {
    if (!cfg.field) raise(ErrorKind::Parse, "no field configured");
    if (!is_suite(suite)) raise(ErrorKind::Parse, "unknown suite \"" + std::string(suite) + "\"");
    VerifyReport report;
    report.p = cfg.field->characteristic();
    report.ell = cfg.field->degree();
    report.modulus = cfg.field->modulus();
    report.backend = cfg.backend;

    static const std::map<std::string, void (*)(Ctx&)> runners{
        {"gf", gf_suite},
        {"fourier", fourier_suite},
        {"frobenius", frobenius_suite},
        {"heisenberg", heisenberg_suite},
        {"symplectic", symplectic_suite},
    };
    for (const auto& name : suite_names()) {
        if (name == "all" || (suite != "all" && suite != name)) continue;
        Ctx ctx(cfg, name, report);
        runners.at(name)(ctx);
    }
    return report;
}

const std::vector<std::pair<int, int>>& default_grid() {
    static const std::vector<std::pair<int, int>> grid{{3, 1}, {3, 2}, {5, 1}, {3, 3}, {5, 2}, {7, 1}};
    return grid;
}

Json to_json(const CheckResult& c) {
    Json j;
    j["suite"] = c.suite;
    j["identity"] = c.identity;
    j["status"] = c.skipped ? "skipped" : (c.passed ? "pass" : "fail");
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

Json to_json(const VerifyReport& r) {
    Json j;
    j["p"] = r.p;
    j["ell"] = r.ell;
    j["modulus"] = r.modulus;
    j["backend"] = to_string(r.backend);
    j["passed"] = r.count_passed();
    j["failed"] = r.count_failed();
    j["skipped"] = r.count_skipped();
    j["ok"] = r.ok();
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace gfharm
