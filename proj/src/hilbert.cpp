#include "gfharm/hilbert.hpp"

namespace gfharm {

RingPtr harmonic_ring(const GaloisField& field) {
    return CycloRing::for_field(field.characteristic(), field.degree());
}

StateVector::StateVector(RingPtr ring, int dim)
    : ring_(ring), values_(static_cast<std::size_t>(dim), CycloScalar(ring)) {}

StateVector::StateVector(std::vector<CycloScalar> values) : values_(std::move(values)) {
    if (values_.empty()) raise(ErrorKind::DimensionMismatch, "empty state");
    ring_ = values_.front().ring();
}

std::vector<std::complex<double>> StateVector::to_complex() const {
    std::vector<std::complex<double>> out;
    out.reserve(values_.size());
    for (const auto& v : values_) out.push_back(v.to_complex());
    return out;
}

CycloScalar inner_product(const StateVector& chi, const StateVector& h) {
    if (chi.dim() != h.dim()) raise(ErrorKind::DimensionMismatch, "state dimensions differ");
    CycloScalar s(chi.ring());
    for (int m = 0; m < chi.dim(); ++m) {
        if (chi[m].is_zero() || h[m].is_zero()) continue;
        s += chi[m].conj() * h[m];
    }
    return s;
}

std::complex<double> inner_product(const std::vector<std::complex<double>>& chi,
                                   const std::vector<std::complex<double>>& h) {
    if (chi.size() != h.size()) raise(ErrorKind::DimensionMismatch, "state dimensions differ");
    std::complex<double> s = 0.0;
    for (std::size_t m = 0; m < chi.size(); ++m) s += std::conj(chi[m]) * h[m];
    return s;
}

StateVector apply(const OperatorMatrix& op, const StateVector& chi) {
    if (op.dim() != chi.dim()) raise(ErrorKind::DimensionMismatch, "operator and state dimensions differ");
    StateVector out(chi.ring(), chi.dim());
    for (int i = 0; i < op.dim(); ++i) {
        CycloScalar s(chi.ring());
        for (int j = 0; j < op.dim(); ++j) {
            if (op.entry_is_zero(i, j) || chi[j].is_zero()) continue;
            s += op.entry(i, j) * chi[j];
        }
        out[i] = s;
    }
    return out;
}

StateVector apply(const MonomialMatrix& op, const StateVector& chi) {
    if (op.dim() != chi.dim()) raise(ErrorKind::DimensionMismatch, "operator and state dimensions differ");
    StateVector out(chi.ring(), chi.dim());
    for (int n = 0; n < op.dim(); ++n) {
        out[n] = CycloScalar::root(chi.ring(), op.phase(n)) * chi[static_cast<int>(op.col(n))];
    }
    return out;
}

OperatorMatrix outer(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) raise(ErrorKind::DimensionMismatch, "state dimensions differ");
    OperatorMatrix m = OperatorMatrix::zero(a.ring(), a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < b.dim(); ++j) {
            if (!b[j].is_zero()) m.set(i, j, a[i] * b[j].conj());
        }
    }
    return m;
}

StateVector basis_state(const GaloisField& field, Element k) {
    auto ring = harmonic_ring(field);
    StateVector s(ring, static_cast<int>(field.order()));
    s[static_cast<int>(k.index)] = CycloScalar::integer(ring, 1);
    return s;
}

OperatorMatrix point_projector(const GaloisField& field, Element k, Backend backend) {
    auto ring = harmonic_ring(field);
    OperatorMatrix m = OperatorMatrix::zero(ring, static_cast<int>(field.order()));
    const int i = static_cast<int>(k.index);
    m.set(i, i, CycloScalar::integer(ring, 1));
    return backend == Backend::Exact ? m : m.to_float();
}

std::vector<std::uint32_t> subfield_indices(const GaloisField& field, int d) {
    std::vector<std::uint32_t> out;
    for (auto e : field.subfield_elements(d)) out.push_back(e.index);
    return out;
}

OperatorMatrix subspace_projector(const GaloisField& field, int d, Backend backend) {
    auto ring = harmonic_ring(field);
    OperatorMatrix m = OperatorMatrix::zero(ring, static_cast<int>(field.order()));
    const auto one = CycloScalar::integer(ring, 1);
    for (auto i : subfield_indices(field, d)) m.set(static_cast<int>(i), static_cast<int>(i), one);
    return backend == Backend::Exact ? m : m.to_float();
}

StateVector phi_basis(const GaloisField& field, Element n) {
    auto ring = harmonic_ring(field);
    const auto norm = CycloScalar::inverse_sqrt_prime_power(ring, field.degree());
    std::vector<CycloScalar> phases;
    for (int t = 0; t < field.characteristic(); ++t) phases.push_back(norm * CycloScalar::omega(ring, -t));
    StateVector s(ring, static_cast<int>(field.order()));
    for (auto m : field.elements()) s[static_cast<int>(m.index)] = phases[static_cast<std::size_t>(field.trace(field.mul(n, m)))];
    return s;
}

MonomialMatrix parity(const GaloisField& field) {
    std::vector<std::uint32_t> cols;
    for (auto m : field.elements()) cols.push_back(field.neg(m).index);
    return MonomialMatrix(harmonic_ring(field), std::move(cols), std::vector<int>(field.order(), 0));
}

StateVector component_phi(const RingPtr& ring, int p, int a) {
    const auto norm = CycloScalar::inverse_sqrt_prime_power(ring, 1);
    StateVector s(ring, p);
    for (int b = 0; b < p; ++b) s[b] = norm * CycloScalar::omega(ring, -static_cast<long long>(a) * b);
    return s;
}

PhiFactorization tensor_factorize_phi(const GaloisField& field, Element n) {
    auto ring = harmonic_ring(field);
    const int p = field.characteristic();
    const int ell = field.degree();
    const Components cn = field.components(n);

    PhiFactorization out;
    out.standard_labels = cn.standard;
    out.dual_labels = cn.dual;
    for (int l = 0; l < ell; ++l) {
        out.standard_factors.push_back(component_phi(ring, p, cn.standard[static_cast<std::size_t>(l)]));
        out.dual_factors.push_back(component_phi(ring, p, cn.dual[static_cast<std::size_t>(l)]));
    }

    const StateVector phi = phi_basis(field, n);
    out.standard_on_dual = true;
    out.dual_on_standard = true;
    for (auto m : field.elements()) {
        const Components cm = field.components(m);
        CycloScalar a = CycloScalar::integer(ring, 1);
        CycloScalar b = CycloScalar::integer(ring, 1);
        for (int l = 0; l < ell; ++l) {
            const auto k = static_cast<std::size_t>(l);
            a *= out.standard_factors[k][cm.dual[k]];
            b *= out.dual_factors[k][cm.standard[k]];
        }
        const auto& target = phi[static_cast<int>(m.index)];
        out.standard_on_dual = out.standard_on_dual && a == target;
        out.dual_on_standard = out.dual_on_standard && b == target;
    }
    return out;
}

}  // namespace gfharm
