#pragma once

#include <array>
#include <optional>
#include <utility>

#include "gfharm/hilbert.hpp"

namespace gfharm {

/// F(n, m) = p^{-l/2} omega^{Tr(nm)}.
OperatorMatrix fourier_matrix(const GaloisField& field, Backend backend = Backend::Exact);

/// chi~ = F chi.
StateVector fourier_transform(const GaloisField& field, const StateVector& chi);

/// F_p(a, b) = p^{-1/2} omega^{ab} on Z_p.
OperatorMatrix component_fourier(const RingPtr& ring, int p);

struct ComponentFactorizationReport {
    bool dual_on_standard = false;  // F(n,m) = prod F_p(n-bar_l, m_l)
    bool standard_on_dual = false;  // F(n,m) = prod F_p(n_l, m-bar_l)
    bool naive_differs = false;     // some entry differs from prod F_p(n_l, m_l)
    std::optional<std::pair<Element, Element>> witness;
    bool ok() const { return dual_on_standard && standard_on_dual && naive_differs; }
};

/// For l = 1 the naive product coincides with F and `naive_differs` stays false.
ComponentFactorizationReport component_factorization_check(const GaloisField& field);

/// The p^d x p^d matrix p^{-d/2} omega^{Tr_d(nm)} on GF(p^d), rows in canonical order.
OperatorMatrix subfield_fourier(const GaloisField& field, int d);
/// The same matrix placed on the subfield indices of the p^l x p^l space.
OperatorMatrix subfield_fourier_embedded(const GaloisField& field, int d);

struct PowerRelationReport {
    int d = 0;
    int exponent = 0;  // l / d
    bool holds = false;
    int mismatches = 0;
};

/// (Pi_d F Pi_d)(n, m) = [subfield F(n, m)]^{l/d} for n, m in GF(p^d).
PowerRelationReport subfield_power_relation_check(const GaloisField& field, int d);

struct FourierSpectrum {
    /// pi_r projects on the eigenvalue i^r.
    std::array<OperatorMatrix, 4> projectors;
    std::array<long long, 4> ranks{};
};

FourierSpectrum fourier_spectrum(const GaloisField& field, Backend backend = Backend::Exact);

}  // namespace gfharm
