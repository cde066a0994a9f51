#include "gfharm/heisenberg.hpp"

#include <map>

namespace gfharm {

MonomialMatrix z_power(const GaloisField& field, Element alpha) {
    auto ring = harmonic_ring(field);
    std::vector<std::uint32_t> cols;
    std::vector<int> phases;
    for (auto m : field.elements()) {
        cols.push_back(m.index);
        phases.push_back(ring->omega_exponent(field.trace(field.mul(alpha, m))));
    }
    return MonomialMatrix(ring, std::move(cols), std::move(phases));
}

MonomialMatrix x_power(const GaloisField& field, Element beta) {
    std::vector<std::uint32_t> cols;
    for (auto n : field.elements()) cols.push_back(field.sub(n, beta).index);
    return MonomialMatrix(harmonic_ring(field), std::move(cols), std::vector<int>(field.order(), 0));
}

std::complex<double> WeylTable::value(Element alpha, Element beta) const {
    const auto k = static_cast<std::size_t>(alpha.index) * static_cast<std::size_t>(dim) + beta.index;
    return backend == Backend::Exact ? exact[k].to_complex() : approx[k];
}

namespace {

// Sums monomial matrices exactly and divides by `denom`.
OperatorMatrix sum_monomials(const RingPtr& ring, int dim, const std::vector<MonomialMatrix>& terms, std::int64_t denom) {
    const auto d = static_cast<std::size_t>(ring->degree());
    std::vector<std::int64_t> acc(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim) * d, 0);
    for (const auto& t : terms) {
        for (int n = 0; n < dim; ++n) {
            const auto cell = static_cast<std::size_t>(n) * static_cast<std::size_t>(dim) + t.col(n);
            const auto r = ring->root(t.phase(n));
            for (std::size_t k = 0; k < d; ++k) acc[cell * d + k] += r[k];
        }
    }
    OperatorMatrix out = OperatorMatrix::zero(ring, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const auto cell = static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j);
            std::vector<std::int64_t> c(acc.begin() + static_cast<std::ptrdiff_t>(cell * d),
                                        acc.begin() + static_cast<std::ptrdiff_t>((cell + 1) * d));
            out.set(i, j, CycloScalar(ring, std::move(c), denom));
        }
    }
    return out;
}

OperatorMatrix in_frame(const OperatorMatrix& m, const OperatorMatrix* frame) {
    return frame ? conjugate(*frame, m) : m;
}

}  // namespace

DisplacementSystem::DisplacementSystem(FieldPtr field, int half_phase_offset) : field_(std::move(field)) {
    if (field_->characteristic() == 2) raise(ErrorKind::EvenCharacteristic, "displacements need odd p");
    ring_ = harmonic_ring(*field_);
    half_ = field_->reduce(static_cast<long long>(field_->half()) + half_phase_offset);
}

MonomialMatrix DisplacementSystem::displacement(Element alpha, Element beta) const {
    const GaloisField& f = *field_;
    const Element h = half_element();
    const Element base = f.mul(h, f.mul(alpha, beta));
    std::vector<std::uint32_t> cols;
    std::vector<int> phases;
    for (auto n : f.elements()) {
        const Element m = f.sub(n, beta);
        cols.push_back(m.index);
        phases.push_back(ring_->omega_exponent(f.trace(f.add(base, f.mul(alpha, m)))));
    }
    return MonomialMatrix(ring_, std::move(cols), std::move(phases));
}

MonomialMatrix DisplacementSystem::component_z(int a) const {
    const int p = field_->characteristic();
    std::vector<std::uint32_t> cols;
    std::vector<int> phases;
    for (int m = 0; m < p; ++m) {
        cols.push_back(static_cast<std::uint32_t>(m));
        phases.push_back(ring_->omega_exponent(static_cast<long long>(a) * m));
    }
    return MonomialMatrix(ring_, std::move(cols), std::move(phases));
}

MonomialMatrix DisplacementSystem::component_x(int b) const {
    const int p = field_->characteristic();
    std::vector<std::uint32_t> cols;
    for (int n = 0; n < p; ++n) cols.push_back(static_cast<std::uint32_t>(field_->reduce(n - b)));
    return MonomialMatrix(ring_, std::move(cols), std::vector<int>(static_cast<std::size_t>(p), 0));
}

MonomialMatrix DisplacementSystem::component_displacement(int a, int b) const {
    return (component_z(a) * component_x(b)).times_root(ring_->omega_exponent(-static_cast<long long>(half_) * a * b));
}

std::vector<MonomialMatrix> DisplacementSystem::tensor_factorize(Element alpha, Element beta) const {
    const Components ca = field_->components(alpha);
    const Components cb = field_->components(beta);
    std::vector<MonomialMatrix> out;
    for (int l = 0; l < field_->degree(); ++l) {
        const auto k = static_cast<std::size_t>(l);
        out.push_back(component_displacement(ca.dual[k], cb.standard[k]));
    }
    return out;
}

bool DisplacementSystem::tensor_factorization_holds(Element alpha, Element beta) const {
    std::vector<OperatorMatrix> dense;
    for (const auto& m : tensor_factorize(alpha, beta)) dense.push_back(m.dense());
    return component_tensor(dense).equals(displacement(alpha, beta).dense());
}

WeylTable DisplacementSystem::weyl_expand(const OperatorMatrix& theta) const {
    if (theta.dim() != dim()) raise(ErrorKind::DimensionMismatch, "operator dimension");
    WeylTable table;
    table.dim = dim();
    table.backend = theta.backend();
    for (auto a : field_->elements()) {
        for (auto b : field_->elements()) {
            const auto d = displacement(a, b);
            if (theta.exact()) {
                table.exact.push_back(trace_product(theta, d));
            } else {
                table.approx.push_back(trace_product_value(theta, d));
            }
        }
    }
    return table;
}

OperatorMatrix DisplacementSystem::weyl_reconstruct(const WeylTable& table) const {
    if (table.dim != dim()) raise(ErrorKind::DimensionMismatch, "Weyl table dimension");
    const int q = dim();
    const auto cells = static_cast<std::size_t>(q) * static_cast<std::size_t>(q);
    const GaloisField& f = *field_;
    auto weight_index = [&](Element a, Element b) {
        return static_cast<std::size_t>(f.neg(a).index) * static_cast<std::size_t>(q) + f.neg(b).index;
    };
    if (table.backend == Backend::Float) {
        OperatorMatrix out = OperatorMatrix::zero(ring_, q, Backend::Float);
        std::vector<std::complex<double>> acc(cells, 0.0);
        for (auto a : f.elements()) {
            for (auto b : f.elements()) {
                const auto w = table.approx[weight_index(a, b)];
                if (w == 0.0) continue;
                const auto d = displacement(a, b);
                for (int n = 0; n < q; ++n) {
                    const double angle = 2.0 * M_PI * d.phase(n) / ring_->order();
                    acc[static_cast<std::size_t>(n) * static_cast<std::size_t>(q) + d.col(n)] +=
                        w * std::complex<double>(std::cos(angle), std::sin(angle));
                }
            }
        }
        for (int i = 0; i < q; ++i) {
            for (int j = 0; j < q; ++j) out.set(i, j, acc[static_cast<std::size_t>(i * q + j)] / static_cast<double>(q));
        }
        return out;
    }
    std::vector<CycloScalar> acc(cells, CycloScalar(ring_));
    for (auto a : f.elements()) {
        for (auto b : f.elements()) {
            const auto& w = table.exact[weight_index(a, b)];
            if (w.is_zero()) continue;
            const auto d = displacement(a, b);
            for (int n = 0; n < q; ++n) {
                acc[static_cast<std::size_t>(n) * static_cast<std::size_t>(q) + d.col(n)] +=
                    w * CycloScalar::root(ring_, d.phase(n));
            }
        }
    }
    OperatorMatrix out = OperatorMatrix::zero(ring_, q);
    const auto inv_q = CycloScalar::rational(ring_, 1, q);
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) out.set(i, j, acc[static_cast<std::size_t>(i * q + j)] * inv_q);
    }
    return out;
}

ResolutionReport DisplacementSystem::resolution_of_identity_check(const OperatorMatrix& theta, const StateVector* psi,
                                                                 const StateVector* chi) const {
    if (theta.dim() != dim()) raise(ErrorKind::DimensionMismatch, "operator dimension");
    const int q = dim();
    ResolutionReport report;
    OperatorMatrix sum = OperatorMatrix::zero(ring_, q, theta.backend());
    for (auto a : field_->elements()) {
        for (auto b : field_->elements()) sum += conjugate(displacement(a, b), theta);
    }
    if (theta.exact()) {
        const CycloScalar tr = theta.trace();
        if (tr.is_zero()) raise(ErrorKind::ZeroTrace, "resolution of identity needs tr(Theta) != 0");
        sum = sum.scaled((tr * CycloScalar::integer(ring_, q)).inverse());
    } else {
        const auto tr = theta.trace_value();
        if (std::abs(tr) < 1e-12) raise(ErrorKind::ZeroTrace, "resolution of identity needs tr(Theta) != 0");
        OperatorMatrix scaled = OperatorMatrix::zero(ring_, q, Backend::Float);
        for (int i = 0; i < q; ++i) {
            for (int j = 0; j < q; ++j) scaled.set(i, j, sum.value(i, j) / (tr * static_cast<double>(q)));
        }
        sum = scaled;
    }
    report.identity = sum.equals(OperatorMatrix::identity(ring_, q, theta.backend()));

    if (psi && chi) {
        StateVector rebuilt(ring_, q);
        for (auto a : field_->elements()) {
            for (auto b : field_->elements()) {
                const StateVector dpsi = apply(displacement(a, b), *psi);
                const CycloScalar u = inner_product(dpsi, *chi);
                if (u.is_zero()) continue;
                for (int n = 0; n < q; ++n) rebuilt[n] += u * dpsi[n];
            }
        }
        const auto inv_q = CycloScalar::rational(ring_, 1, q);
        for (int n = 0; n < q; ++n) rebuilt[n] *= inv_q;
        report.expansion = rebuilt == *chi;
    }
    return report;
}

MarginalReport DisplacementSystem::marginal_projectors(Backend backend, const OperatorMatrix* frame) const {
    const GaloisField& f = *field_;
    const int q = dim();
    const Element h = half_element();
    const MonomialMatrix par = parity(f);
    const OperatorMatrix fourier = fourier_matrix(f);
    auto prepare = [&](const OperatorMatrix& m) {
        OperatorMatrix r = backend == Backend::Exact ? m : m.to_float();
        return in_frame(r, frame);
    };

    MarginalReport report;
    report.position = report.momentum = true;
    report.position_with_parity = report.momentum_with_parity = true;
    for (auto beta : f.elements()) {
        std::vector<MonomialMatrix> terms;
        for (auto alpha : f.elements()) terms.push_back(displacement(alpha, beta));
        const OperatorMatrix sum = sum_monomials(ring_, q, terms, q);
        const bool lit = prepare(sum).equals(prepare(point_projector(f, f.neg(f.mul(h, beta)))));
        const bool par_ok = prepare(sum * par).equals(prepare(point_projector(f, f.mul(h, beta))));
        if (!lit && !report.position_counterexample) report.position_counterexample = beta;
        report.position = report.position && lit;
        report.position_with_parity = report.position_with_parity && par_ok;
    }
    for (auto alpha : f.elements()) {
        std::vector<MonomialMatrix> terms;
        for (auto beta : f.elements()) terms.push_back(displacement(alpha, beta));
        const OperatorMatrix sum = sum_monomials(ring_, q, terms, q);
        const OperatorMatrix target = conjugate(fourier, point_projector(f, f.mul(h, alpha)));
        const bool lit = prepare(sum).equals(prepare(target));
        const bool par_ok = prepare(sum * par).equals(prepare(target));
        if (!lit && !report.momentum_counterexample) report.momentum_counterexample = alpha;
        report.momentum = report.momentum && lit;
        report.momentum_with_parity = report.momentum_with_parity && par_ok;
    }
    return report;
}

MonomialMatrix DisplacementSystem::subfield_displacement(int d, Element alpha, Element beta) const {
    const GaloisField& f = *field_;
    if (!f.is_divisor(d)) raise(ErrorKind::NotADivisor, "d must divide the extension degree");
    if (!f.in_subfield(alpha, d) || !f.in_subfield(beta, d)) {
        raise(ErrorKind::NotInSubfield, "subfield displacement labels must lie in GF(p^d)");
    }
    const auto sub = f.subfield_elements(d);
    std::map<std::uint32_t, std::uint32_t> position;
    for (std::size_t i = 0; i < sub.size(); ++i) position[sub[i].index] = static_cast<std::uint32_t>(i);
    const Element base = f.mul(half_element(), f.mul(alpha, beta));
    std::vector<std::uint32_t> cols;
    std::vector<int> phases;
    for (auto n : sub) {
        const Element m = f.sub(n, beta);
        cols.push_back(position.at(m.index));
        phases.push_back(ring_->omega_exponent(f.subfield_trace(f.add(base, f.mul(alpha, m)), d)));
    }
    return MonomialMatrix(ring_, std::move(cols), std::move(phases));
}

SubfieldDisplacementReport DisplacementSystem::subfield_displacement_check(int d, Element alpha, Element beta) const {
    const GaloisField& f = *field_;
    SubfieldDisplacementReport report;
    const auto idx = subfield_indices(f, d);
    const OperatorMatrix block = displacement(alpha, beta).dense().block(idx);
    const OperatorMatrix small = subfield_displacement(d, alpha, beta).dense();
    report.power_relation = block.equals(small.entrywise_pow(f.degree() / d));

    const OperatorMatrix fd = subfield_fourier(f, d);
    const Element zero = f.zero();
    const OperatorMatrix z = subfield_displacement(d, alpha, zero).dense();
    const OperatorMatrix x_neg = subfield_displacement(d, zero, f.neg(alpha)).dense();
    const OperatorMatrix x = subfield_displacement(d, zero, alpha).dense();
    report.fourier_on_z = conjugation_holds(fd, z, x_neg);
    report.fourier_on_x = conjugation_holds(fd, x, z);
    return report;
}

}  // namespace gfharm
