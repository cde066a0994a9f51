#pragma once

#include <vector>

#include "gfharm/fourier.hpp"

namespace gfharm {

/// G(n, m) = delta(n, m^p), so (G chi)(n) = chi(n^{p^{l-1}}).
MonomialMatrix frobenius_permutation(const GaloisField& field);
OperatorMatrix frobenius_matrix(const GaloisField& field, Backend backend = Backend::Exact);

/// {1, G^d, G^{2d}, ..., G^{l-d}}.
std::vector<MonomialMatrix> galois_group_H(const GaloisField& field, int d);

/// {U G^{kd} U^dagger}; throws NotUnitary unless U U^dagger = 1.
std::vector<OperatorMatrix> conjugated_galois_group(const GaloisField& field, const OperatorMatrix& u, int d);

struct CommutationReport {
    bool fourier = false;                  // [F, G] = 0
    std::array<bool, 4> spectral{};        // [pi_r, G] = 0
    bool ok() const { return fourier && spectral[0] && spectral[1] && spectral[2] && spectral[3]; }
};

CommutationReport frobenius_fourier_commutation_check(const GaloisField& field, Backend backend = Backend::Exact);

struct FrobeniusSpectrum {
    /// varpi_lambda projects on the eigenvalue Omega^lambda, Omega = exp(2 pi i / l).
    std::vector<OperatorMatrix> projectors;
    std::vector<long long> ranks;
};

FrobeniusSpectrum frobenius_spectrum(const GaloisField& field, Backend backend = Backend::Exact);

struct ContainmentReport {
    int d = 0;
    /// Eigenvalue indices lambda with Omega^{d lambda} = 1.
    std::vector<int> lambdas;
    bool holds = false;  // Pi_d (sum varpi_lambda) = Pi_d
};

/// Pi_1 varpi_0 = varpi_0 Pi_1 = Pi_1.
bool prime_subspace_in_fixed_space(const GaloisField& field, const FrobeniusSpectrum& spec);
ContainmentReport combined_eigenspace_containment(const GaloisField& field, const FrobeniusSpectrum& spec, int d);

}  // namespace gfharm
