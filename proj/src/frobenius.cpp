#include "gfharm/frobenius.hpp"

namespace gfharm {

MonomialMatrix frobenius_permutation(const GaloisField& field) {
    std::vector<std::uint32_t> cols;
    for (auto n : field.elements()) cols.push_back(field.frobenius(n, -1).index);
    return MonomialMatrix(harmonic_ring(field), std::move(cols), std::vector<int>(field.order(), 0));
}

OperatorMatrix frobenius_matrix(const GaloisField& field, Backend backend) {
    return frobenius_permutation(field).dense(backend);
}

std::vector<MonomialMatrix> galois_group_H(const GaloisField& field, int d) {
    if (!field.is_divisor(d)) raise(ErrorKind::NotADivisor, "d must divide the extension degree");
    const MonomialMatrix g = frobenius_permutation(field);
    std::vector<MonomialMatrix> out;
    for (int k = 0; k < field.degree(); k += d) out.push_back(g.pow(k));
    return out;
}

std::vector<OperatorMatrix> conjugated_galois_group(const GaloisField& field, const OperatorMatrix& u, int d) {
    if (!u.is_unitary()) raise(ErrorKind::NotUnitary, "conjugating operator is not unitary");
    std::vector<OperatorMatrix> out;
    const OperatorMatrix ud = u.adjoint();
    for (const auto& g : galois_group_H(field, d)) out.push_back(u * g * ud);
    return out;
}

CommutationReport frobenius_fourier_commutation_check(const GaloisField& field, Backend backend) {
    const MonomialMatrix g = frobenius_permutation(field);
    const OperatorMatrix f = fourier_matrix(field, backend);
    CommutationReport report;
    report.fourier = (f * g).equals(g * f);
    const auto spec = fourier_spectrum(field, backend);
    for (std::size_t r = 0; r < 4; ++r) {
        report.spectral[r] = (spec.projectors[r] * g).equals(g * spec.projectors[r]);
    }
    return report;
}

FrobeniusSpectrum frobenius_spectrum(const GaloisField& field, Backend backend) {
    auto ring = harmonic_ring(field);
    const int ell = field.degree();
    const int q = static_cast<int>(field.order());
    const int step = ring->order() / ell;  // Omega = zeta^step
    const MonomialMatrix g = frobenius_permutation(field);
    const auto inv_ell = CycloScalar::rational(ring, 1, ell);

    FrobeniusSpectrum spec;
    for (int lambda = 0; lambda < ell; ++lambda) {
        OperatorMatrix sum = OperatorMatrix::zero(ring, q);
        MonomialMatrix term = MonomialMatrix::identity(ring, q);
        const MonomialMatrix rotated = g.times_root(-static_cast<long long>(lambda) * step);
        for (int k = 0; k < ell; ++k) {
            sum += term.dense();
            term = term * rotated;
        }
        OperatorMatrix w = sum.scaled(inv_ell);
        std::int64_t num = 0, den = 1;
        spec.ranks.push_back(w.trace().is_rational(&num, &den) && den == 1 ? num : -1);
        spec.projectors.push_back(backend == Backend::Exact ? w : w.to_float());
    }
    return spec;
}

bool prime_subspace_in_fixed_space(const GaloisField& field, const FrobeniusSpectrum& spec) {
    const Backend b = spec.projectors.front().backend();
    const OperatorMatrix pi1 = subspace_projector(field, 1, b);
    const auto& w0 = spec.projectors.front();
    return (pi1 * w0).equals(pi1) && (w0 * pi1).equals(pi1);
}

ContainmentReport combined_eigenspace_containment(const GaloisField& field, const FrobeniusSpectrum& spec, int d) {
    if (!field.is_divisor(d)) raise(ErrorKind::NotADivisor, "d must divide the extension degree");
    const int ell = field.degree();
    ContainmentReport report;
    report.d = d;
    const Backend b = spec.projectors.front().backend();
    OperatorMatrix sum = OperatorMatrix::zero(harmonic_ring(field), static_cast<int>(field.order()), b);
    for (int lambda = 0; lambda < ell; ++lambda) {
        if ((d * lambda) % ell != 0) continue;
        report.lambdas.push_back(lambda);
        sum += spec.projectors[static_cast<std::size_t>(lambda)];
    }
    const OperatorMatrix pid = subspace_projector(field, d, b);
    report.holds = (pid * sum).equals(pid) && (sum * pid).equals(pid);
    return report;
}

}  // namespace gfharm
