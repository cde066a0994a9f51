#include "gfharm/fourier.hpp"

#include <cmath>

namespace gfharm {

namespace {

// Table of p^{-e/2} omega^t for t in Z_p.
std::vector<CycloScalar> scaled_omegas(const RingPtr& ring, int p, int e) {
    const auto norm = CycloScalar::inverse_sqrt_prime_power(ring, e);
    std::vector<CycloScalar> out;
    for (int t = 0; t < p; ++t) out.push_back(norm * CycloScalar::omega(ring, t));
    return out;
}

}  // namespace

OperatorMatrix fourier_matrix(const GaloisField& field, Backend backend) {
    auto ring = harmonic_ring(field);
    const auto table = scaled_omegas(ring, field.characteristic(), field.degree());
    const int q = static_cast<int>(field.order());
    OperatorMatrix f = OperatorMatrix::zero(ring, q);
    for (auto n : field.elements()) {
        for (auto m : field.elements()) {
            f.set(static_cast<int>(n.index), static_cast<int>(m.index),
                  table[static_cast<std::size_t>(field.trace(field.mul(n, m)))]);
        }
    }
    return backend == Backend::Exact ? f : f.to_float();
}

StateVector fourier_transform(const GaloisField& field, const StateVector& chi) {
    if (chi.dim() != static_cast<int>(field.order())) raise(ErrorKind::DimensionMismatch, "state dimension");
    return apply(fourier_matrix(field), chi);
}

OperatorMatrix component_fourier(const RingPtr& ring, int p) {
    const auto table = scaled_omegas(ring, p, 1);
    OperatorMatrix f = OperatorMatrix::zero(ring, p);
    for (int a = 0; a < p; ++a) {
        for (int b = 0; b < p; ++b) f.set(a, b, table[static_cast<std::size_t>(a * b % p)]);
    }
    return f;
}

ComponentFactorizationReport component_factorization_check(const GaloisField& field) {
    auto ring = harmonic_ring(field);
    const int p = field.characteristic();
    const int ell = field.degree();
    const OperatorMatrix f = fourier_matrix(field);
    const OperatorMatrix fp = component_fourier(ring, p);

    ComponentFactorizationReport report;
    report.dual_on_standard = true;
    report.standard_on_dual = true;
    std::vector<Components> comps;
    for (auto m : field.elements()) comps.push_back(field.components(m));

    for (auto n : field.elements()) {
        const auto& cn = comps[n.index];
        for (auto m : field.elements()) {
            const auto& cm = comps[m.index];
            CycloScalar a = CycloScalar::integer(ring, 1), b = a, naive = a;
            for (int l = 0; l < ell; ++l) {
                const auto k = static_cast<std::size_t>(l);
                a *= fp.entry(cn.dual[k], cm.standard[k]);
                b *= fp.entry(cn.standard[k], cm.dual[k]);
                naive *= fp.entry(cn.standard[k], cm.standard[k]);
            }
            const auto target = f.entry(static_cast<int>(n.index), static_cast<int>(m.index));
            report.dual_on_standard = report.dual_on_standard && a == target;
            report.standard_on_dual = report.standard_on_dual && b == target;
            if (!report.witness && !(naive == target)) {
                report.naive_differs = true;
                report.witness = std::make_pair(n, m);
            }
        }
    }
    return report;
}

OperatorMatrix subfield_fourier(const GaloisField& field, int d) {
    if (!field.is_divisor(d)) raise(ErrorKind::NotADivisor, "d must divide the extension degree");
    auto ring = harmonic_ring(field);
    const auto table = scaled_omegas(ring, field.characteristic(), d);
    const auto sub = field.subfield_elements(d);
    const int n = static_cast<int>(sub.size());
    OperatorMatrix f = OperatorMatrix::zero(ring, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto prod = field.mul(sub[static_cast<std::size_t>(i)], sub[static_cast<std::size_t>(j)]);
            f.set(i, j, table[static_cast<std::size_t>(field.subfield_trace(prod, d))]);
        }
    }
    return f;
}

OperatorMatrix subfield_fourier_embedded(const GaloisField& field, int d) {
    const auto idx = subfield_indices(field, d);
    return OperatorMatrix::embed(subfield_fourier(field, d), idx, static_cast<int>(field.order()));
}

PowerRelationReport subfield_power_relation_check(const GaloisField& field, int d) {
    if (!field.is_divisor(d)) raise(ErrorKind::NotADivisor, "d must divide the extension degree");
    PowerRelationReport report;
    report.d = d;
    report.exponent = field.degree() / d;
    const auto idx = subfield_indices(field, d);
    const OperatorMatrix lhs = fourier_matrix(field).block(idx);
    const OperatorMatrix sub = subfield_fourier(field, d);
    const int n = static_cast<int>(idx.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!(lhs.entry(i, j) == sub.entry(i, j).pow(report.exponent))) ++report.mismatches;
        }
    }
    report.holds = report.mismatches == 0;
    return report;
}

FourierSpectrum fourier_spectrum(const GaloisField& field, Backend backend) {
    auto ring = harmonic_ring(field);
    const int q = static_cast<int>(field.order());
    const OperatorMatrix f = fourier_matrix(field);
    std::array<OperatorMatrix, 4> powers{OperatorMatrix::identity(ring, q), f, f * f, OperatorMatrix()};
    powers[3] = powers[2] * f;

    FourierSpectrum spec;
    const auto quarter = CycloScalar::rational(ring, 1, 4);
    for (int r = 0; r < 4; ++r) {
        OperatorMatrix sum = OperatorMatrix::zero(ring, q);
        for (int k = 0; k < 4; ++k) {
            // (i^{-r} F)^k = i^{-rk} F^k
            sum += powers[static_cast<std::size_t>(k)].scaled(CycloScalar::root(ring, ring->i_exponent(-r * k)));
        }
        OperatorMatrix pi = sum.scaled(quarter);
        std::int64_t num = 0, den = 1;
        if (pi.trace().is_rational(&num, &den) && den == 1) spec.ranks[static_cast<std::size_t>(r)] = num;
        spec.projectors[static_cast<std::size_t>(r)] = backend == Backend::Exact ? pi : pi.to_float();
    }
    return spec;
}

}  // namespace gfharm
