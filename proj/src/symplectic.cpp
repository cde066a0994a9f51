#include "gfharm/symplectic.hpp"


namespace gfharm {

namespace {

// Labels used where a full q^2 sweep would be too slow.
std::vector<DisplacementLabel> sweep_labels(const GaloisField& f) {
    std::vector<DisplacementLabel> out;
    if (f.order() <= 27) {
        for (auto a : f.elements()) {
            for (auto b : f.elements()) out.push_back({a, b});
        }
        return out;
    }
    std::vector<Element> basis{f.zero()};
    Element e = f.one();
    for (int l = 0; l < f.degree(); ++l) {
        basis.push_back(e);
        e = f.mul(e, f.generator());
    }
    basis.push_back(f.add(basis.back(), f.one()));
    for (auto a : basis) {
        for (auto b : basis) out.push_back({a, b});
    }
    return out;
}

std::string label_text(const GaloisField& f, DisplacementLabel l) {
    return "(" + f.format(l.alpha) + " ; " + f.format(l.beta) + ")";
}

}  // namespace

SymplecticSystem::SymplecticSystem(const DisplacementSystem& ds) : ds_(ds), fourier_(fourier_matrix(ds.field())) {}

SymplecticParams SymplecticSystem::params(Element r, Element s, Element t) const {
    const GaloisField& f = field();
    if (r == f.zero()) raise(ErrorKind::ConstraintViolated, "u is determined by (r, s, t) only when r != 0");
    return {r, s, t, f.div(f.add(f.one(), f.mul(s, t)), r)};
}

SymplecticParams SymplecticSystem::params(Element r, Element s, Element t, Element u) const {
    SymplecticParams m{r, s, t, u};
    if (!is_valid(m)) raise(ErrorKind::ConstraintViolated, "r u - s t must equal 1");
    return m;
}

bool SymplecticSystem::is_valid(const SymplecticParams& m) const {
    const GaloisField& f = field();
    return f.sub(f.mul(m.r, m.u), f.mul(m.s, m.t)) == f.one();
}

SymplecticParams SymplecticSystem::compose(const SymplecticParams& a, const SymplecticParams& b) const {
    const GaloisField& f = field();
    // [[u, s], [t, r]] products
    SymplecticParams c;
    c.u = f.add(f.mul(a.u, b.u), f.mul(a.s, b.t));
    c.s = f.add(f.mul(a.u, b.s), f.mul(a.s, b.r));
    c.t = f.add(f.mul(a.t, b.u), f.mul(a.r, b.t));
    c.r = f.add(f.mul(a.t, b.s), f.mul(a.r, b.r));
    return c;
}

SymplecticParams SymplecticSystem::frobenius(const SymplecticParams& m, int k) const {
    const GaloisField& f = field();
    return {f.frobenius(m.r, k), f.frobenius(m.s, k), f.frobenius(m.t, k), f.frobenius(m.u, k)};
}

DisplacementLabel SymplecticSystem::act(const SymplecticParams& m, DisplacementLabel l) const {
    const GaloisField& f = field();
    return {f.add(f.mul(m.u, l.alpha), f.mul(m.s, l.beta)), f.add(f.mul(m.t, l.alpha), f.mul(m.r, l.beta))};
}

std::vector<SymplecticParams> SymplecticSystem::enumerate() const {
    const GaloisField& f = field();
    std::vector<SymplecticParams> out;
    for (auto r : f.elements()) {
        if (r == f.zero()) continue;
        for (auto s : f.elements()) {
            for (auto t : f.elements()) out.push_back(params(r, s, t));
        }
    }
    for (auto s : f.elements()) {
        if (s == f.zero()) continue;
        const Element t = f.neg(f.inv(s));
        for (auto u : f.elements()) out.push_back({f.zero(), s, t, u});
    }
    return out;
}

GaussSumValue SymplecticSystem::gauss_sum(Element a) const {
    const GaloisField& f = field();
    const auto& ring = ds_.ring();
    const auto d = static_cast<std::size_t>(ring->degree());
    std::vector<std::int64_t> acc(d, 0);
    for (auto k : f.elements()) {
        const auto r = ring->root(ring->omega_exponent(f.trace(f.mul(a, f.mul(k, k)))));
        for (std::size_t j = 0; j < d; ++j) acc[j] += r[j];
    }
    return {a, CycloScalar(ring, std::move(acc), 1)};
}

MonomialMatrix SymplecticSystem::generator_scaling(Element xi) const {
    const GaloisField& f = field();
    if (xi == f.zero()) raise(ErrorKind::ZeroScaling, "scaling generator needs xi != 0");
    const Element inv = f.inv(xi);
    std::vector<std::uint32_t> cols;
    for (auto n : f.elements()) cols.push_back(f.mul(inv, n).index);
    return MonomialMatrix(ds_.ring(), std::move(cols), std::vector<int>(f.order(), 0));
}

MonomialMatrix SymplecticSystem::generator_shear_z(Element xi) const {
    const GaloisField& f = field();
    const Element c = f.mul(ds_.half_element(), xi);
    std::vector<std::uint32_t> cols;
    std::vector<int> phases;
    for (auto m : f.elements()) {
        cols.push_back(m.index);
        phases.push_back(ds_.ring()->omega_exponent(f.trace(f.mul(c, f.mul(m, m)))));
    }
    return MonomialMatrix(ds_.ring(), std::move(cols), std::move(phases));
}

OperatorMatrix SymplecticSystem::generator_shear_x(Element xi) const {
    return fourier_ * generator_shear_z(field().neg(xi)) * fourier_.adjoint();
}

OperatorMatrix SymplecticSystem::generator_shear_x_closed_form(Element xi) const {
    const GaloisField& f = field();
    const auto& ring = ds_.ring();
    const int q = static_cast<int>(f.order());
    const Element c = f.neg(f.mul(ds_.half_element(), xi));
    const auto d = static_cast<std::size_t>(ring->degree());
    OperatorMatrix out = OperatorMatrix::zero(ring, q);
    for (auto n : f.elements()) {
        for (auto m : f.elements()) {
            std::vector<std::int64_t> acc(d, 0);
            for (auto k : f.elements()) {
                const Element e = f.add(f.mul(c, f.mul(k, k)), f.mul(k, f.sub(n, m)));
                const auto r = ring->root(ring->omega_exponent(f.trace(e)));
                for (std::size_t j = 0; j < d; ++j) acc[j] += r[j];
            }
            out.set(static_cast<int>(n.index), static_cast<int>(m.index), CycloScalar(ring, std::move(acc), q));
        }
    }
    return out;
}

bool SymplecticSystem::is_generic(const SymplecticParams& m) const {
    const GaloisField& f = field();
    return m.r != f.zero() && f.add(f.one(), f.mul(m.s, m.t)) != f.zero();
}

OperatorMatrix SymplecticSystem::synthesize(const SymplecticParams& m) const {
    if (!is_valid(m)) raise(ErrorKind::ConstraintViolated, "r u - s t must equal 1");
    const GaloisField& f = field();
    if (!is_generic(m)) {
        // M = M' J with J = [[0, 1], [-1, 0]] realized by F; M' = M J^{-1} is always generic here.
        const SymplecticParams chart{f.neg(m.t), f.neg(m.u), m.r, m.s};
        return synthesize(chart) * fourier_;
    }
    const Element w = f.add(f.one(), f.mul(m.s, m.t));
    const Element xi1 = f.div(f.mul(m.r, m.t), w);
    const Element xi2 = f.div(f.mul(m.s, w), m.r);
    const Element xi3 = f.div(m.r, w);
    return generator_shear_x(xi1) * generator_shear_z(xi2) * generator_scaling(xi3);
}

ActionReport SymplecticSystem::action_check(const SymplecticParams& m, const OperatorMatrix* op) const {
    const GaloisField& f = field();
    const OperatorMatrix s = op ? *op : synthesize(m);
    ActionReport report;
    report.unitary = s.is_unitary();
    report.z_law = report.x_law = report.general_law = true;
    for (auto a : f.elements()) {
        report.z_law = report.z_law && conjugation_holds(s, ds_.z_power(a), ds_.displacement(f.mul(m.u, a), f.mul(m.t, a)));
        report.x_law = report.x_law && conjugation_holds(s, ds_.x_power(a), ds_.displacement(f.mul(m.s, a), f.mul(m.r, a)));
    }
    for (auto l : sweep_labels(f)) {
        report.general_law = report.general_law && conjugation_holds(s, ds_.displacement(l), ds_.displacement(act(m, l)));
    }
    report.commutation = true;
    const OperatorMatrix sd = s.adjoint();
    const std::vector<Element> probes{f.one(), f.generator()};
    for (auto a : probes) {
        for (auto b : probes) {
            const OperatorMatrix zp = s * ds_.z_power(a) * sd;
            const OperatorMatrix xp = s * ds_.x_power(b) * sd;
            const auto phase = CycloScalar::omega(ds_.ring(), f.trace(f.mul(a, b)));
            report.commutation = report.commutation && (zp * xp).equals((xp * zp).scaled(phase));
        }
    }
    return report;
}

OperatorMatrix SymplecticSystem::closed_form(const SymplecticParams& m) const {
    const GaloisField& f = field();
    const Element w = f.add(f.one(), f.mul(m.s, m.t));
    if (m.r == f.zero() || m.t == f.zero() || w == f.zero()) {
        raise(ErrorKind::DomainRestriction, "closed form needs r, t and 1 + st nonzero");
    }
    const Element h = ds_.half_element();
    const Element rt = f.mul(m.r, m.t);
    const Element a = f.neg(f.mul(h, f.mul(f.inv(w), rt)));
    const Element scale = f.mul(h, f.inv(rt));
    const auto& ring = ds_.ring();
    const CycloScalar g = gauss_sum(a).value * CycloScalar::rational(ring, 1, static_cast<std::int64_t>(f.order()));
    std::vector<CycloScalar> table;
    for (int k = 0; k < f.characteristic(); ++k) table.push_back(g * CycloScalar::omega(ring, k));
    OperatorMatrix out = OperatorMatrix::zero(ring, static_cast<int>(f.order()));
    for (auto n : f.elements()) {
        for (auto mm : f.elements()) {
            // B = (2rt)^{-1} [(1 + st) n^2 - 2 n m r + m^2 r^2]
            Element b = f.mul(w, f.mul(n, n));
            b = f.sub(b, f.scale(2, f.mul(n, f.mul(mm, m.r))));
            b = f.add(b, f.mul(f.mul(mm, mm), f.mul(m.r, m.r)));
            b = f.mul(scale, b);
            out.set(static_cast<int>(n.index), static_cast<int>(mm.index), table[static_cast<std::size_t>(f.trace(b))]);
        }
    }
    return out;
}

ClosedFormReport SymplecticSystem::closed_form_elements_check(const SymplecticParams& m) const {
    const GaloisField& f = field();
    const OperatorMatrix cf = closed_form(m);
    ClosedFormReport report;
    const Element w = f.add(f.one(), f.mul(m.s, m.t));
    report.a = f.neg(f.mul(ds_.half_element(), f.mul(f.inv(w), f.mul(m.r, m.t))));
    const PhaseMatch pm = match_up_to_phase(cf, synthesize(m));
    report.matched = pm.matched;
    report.phase = pm.phase;
    report.phase_value = pm.value;
    report.deviation = pm.deviation;
    return report;
}

FrobeniusActionReport SymplecticSystem::frobenius_action_check(const SymplecticParams& m, int power) const {
    const GaloisField& f = field();
    const MonomialMatrix g = frobenius_permutation(f);
    const OperatorMatrix s = synthesize(m);
    FrobeniusActionReport report;
    report.power = power;
    const MonomialMatrix gk = g.pow(power);
    const OperatorMatrix conj = gk * s * gk.adjoint();
    const SymplecticParams mk = frobenius(m, power);
    report.action_matches = true;
    for (auto l : sweep_labels(f)) {
        report.action_matches = report.action_matches && conjugation_holds(conj, ds_.displacement(l), ds_.displacement(act(mk, l)));
    }
    report.operator_phase = match_up_to_phase(conj, synthesize(mk));

    for (int d : f.divisors()) {
        if (f.in_subfield(m.r, d) && f.in_subfield(m.s, d) && f.in_subfield(m.t, d) && f.in_subfield(m.u, d)) {
            report.subfield_degree = d;
            break;
        }
    }
    if (report.subfield_degree && *report.subfield_degree < f.degree()) {
        const MonomialMatrix gd = g.pow(*report.subfield_degree);
        const OperatorMatrix fixed = gd * s * gd.adjoint();
        bool ok = true;
        for (auto l : sweep_labels(f)) ok = ok && conjugation_holds(fixed, ds_.displacement(l), ds_.displacement(act(m, l)));
        report.subfield_invariant = ok;
    }
    return report;
}

TransformedMarginalReport SymplecticSystem::transformed_marginals(const SymplecticParams& m) const {
    const OperatorMatrix s = synthesize(m);
    TransformedMarginalReport report;
    report.marginals = ds_.marginal_projectors(Backend::Exact, &s);
    const MonomialMatrix par = parity(field());
    report.parity_invariant = (s * par).equals(par * s);
    return report;
}

int operator_schmidt_rank(const OperatorMatrix& op, int a, int b) {
    if (op.dim() != a * b) raise(ErrorKind::DimensionMismatch, "split does not match operator dimension");
    const auto& ring = op.ring();
    // Realigned matrix R[(i1, k1), (i2, k2)] = op[i1 b + i2, k1 b + k2].
    const int rows = a * a, cols = b * b;
    std::vector<std::vector<CycloScalar>> r(static_cast<std::size_t>(rows), std::vector<CycloScalar>(static_cast<std::size_t>(cols), CycloScalar(ring)));
    for (int i1 = 0; i1 < a; ++i1) {
        for (int k1 = 0; k1 < a; ++k1) {
            for (int i2 = 0; i2 < b; ++i2) {
                for (int k2 = 0; k2 < b; ++k2) {
                    r[static_cast<std::size_t>(i1 * a + k1)][static_cast<std::size_t>(i2 * b + k2)] =
                        op.entry(i1 * b + i2, k1 * b + k2);
                }
            }
        }
    }
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i) {
            if (!r[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(r[static_cast<std::size_t>(pivot)], r[static_cast<std::size_t>(rank)]);
        const auto& prow = r[static_cast<std::size_t>(rank)];
        const CycloScalar inv = prow[static_cast<std::size_t>(c)].inverse();
        for (int i = rank + 1; i < rows; ++i) {
            auto& row = r[static_cast<std::size_t>(i)];
            if (row[static_cast<std::size_t>(c)].is_zero()) continue;
            const CycloScalar factor = row[static_cast<std::size_t>(c)] * inv;
            for (int j = c; j < cols; ++j) row[static_cast<std::size_t>(j)] -= factor * prow[static_cast<std::size_t>(j)];
        }
        ++rank;
    }
    return rank;
}

NonFactorizationReport SymplecticSystem::non_factorization_witness(const SymplecticParams& m) const {
    const GaloisField& f = field();
    if (f.degree() != 2) raise(ErrorKind::WrongFixture, "witness is defined for quadratic extensions");
    const int p = f.characteristic();
    const auto& ring = ds_.ring();
    NonFactorizationReport report;
    const Element eps = f.generator();

    const std::vector<OperatorMatrix> one_x{OperatorMatrix::identity(ring, p), ds_.component_x(1).dense()};
    report.x_eps_is_one_tensor_x = component_tensor(one_x).equals(ds_.x_power(eps).dense());

    const OperatorMatrix s = synthesize(m);
    report.image = act(m, {f.zero(), eps});
    const Components ca = f.components(report.image.alpha);
    const Components cb = f.components(report.image.beta);
    for (int l = 0; l < 2; ++l) report.image_factors.emplace_back(ca.dual[static_cast<std::size_t>(l)], cb.standard[static_cast<std::size_t>(l)]);
    report.image_factorization_holds = conjugation_holds(s, ds_.x_power(eps), ds_.displacement(report.image)) &&
                                       ds_.tensor_factorization_holds(report.image.alpha, report.image.beta);
    report.image_first_factor_scalar = report.image_factors[0] == std::make_pair(0, 0);

    report.schmidt_rank = operator_schmidt_rank(s, p, p);
    report.not_a_tensor_product = report.schmidt_rank > 1;

    auto pair_text = [](std::pair<int, int> pr) {
        return "D_p(" + std::to_string(pr.first) + "," + std::to_string(pr.second) + ")";
    };
    report.chain.push_back("X^eps = 1 (x) X_p: " + std::string(report.x_eps_is_one_tensor_x ? "holds" : "fails"));
    report.chain.push_back("S X^eps S^dagger = D" + label_text(f, report.image) + " = " + pair_text(report.image_factors[0]) +
                           " (x) " + pair_text(report.image_factors[1]));
    report.chain.push_back(std::string("first factor of the image is ") +
                           (report.image_first_factor_scalar ? "scalar" : "not scalar") +
                           "; a product S1 (x) S2 would keep it scalar");
    report.chain.push_back("operator-Schmidt rank of S = " + std::to_string(report.schmidt_rank));
    return report;
}

}  // namespace gfharm
