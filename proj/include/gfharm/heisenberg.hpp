#pragma once

#include <optional>
#include <vector>

#include "gfharm/fourier.hpp"

namespace gfharm {

struct DisplacementLabel {
    Element alpha;
    Element beta;
};

/// Z^alpha(m, m) = omega^{Tr(alpha m)}. Valid in every characteristic.
MonomialMatrix z_power(const GaloisField& field, Element alpha);
/// X^beta(n, m) = delta(n, m + beta).
MonomialMatrix x_power(const GaloisField& field, Element beta);

/// Weyl function W(alpha, beta) = tr[Theta D(alpha, beta)], indexed alpha * q + beta.
struct WeylTable {
    int dim = 0;
    Backend backend = Backend::Exact;
    std::vector<CycloScalar> exact;
    std::vector<std::complex<double>> approx;

    std::complex<double> value(Element alpha, Element beta) const;
};

struct ResolutionReport {
    bool identity = false;
    /// Set only when a rank-one state expansion was requested.
    std::optional<bool> expansion;
};

struct MarginalReport {
    /// p^{-l} sum_alpha D(alpha, beta) = Q_{-beta/2} for every beta.
    bool position = false;
    /// p^{-l} sum_beta D(alpha, beta) = F Q_{alpha/2} F^dagger for every alpha.
    bool momentum = false;
    std::optional<Element> position_counterexample;
    std::optional<Element> momentum_counterexample;
    /// The same sums followed by the parity P: Q_{beta/2} and F Q_{alpha/2} F^dagger.
    bool position_with_parity = false;
    bool momentum_with_parity = false;
};

struct SubfieldDisplacementReport {
    bool power_relation = false;      // [Pi_d D Pi_d](n,m) = [D_d(n,m)]^{l/d}
    bool fourier_on_z = false;        // F_d Z_d^alpha F_d^dagger = X_d^{-alpha}
    bool fourier_on_x = false;        // F_d X_d^alpha F_d^dagger = Z_d^alpha
    bool ok() const { return power_relation && fourier_on_z && fourier_on_x; }
};

/// Displacement operators D(alpha, beta) = Z^alpha X^beta omega^{-Tr(alpha beta)/2} for odd p.
///
/// `half_phase_offset` replaces the field inverse of 2 by 2^{-1} + offset in every
/// phase; a nonzero offset breaks the composition law and exists for negative controls.
class DisplacementSystem {
public:
    explicit DisplacementSystem(FieldPtr field, int half_phase_offset = 0);

    const GaloisField& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    const RingPtr& ring() const noexcept { return ring_; }
    int dim() const noexcept { return static_cast<int>(field_->order()); }
    /// The Z_p value used for 2^{-1} in phases.
    int half() const noexcept { return half_; }
    Element half_element() const { return field_->from_int(half_); }

    MonomialMatrix z_power(Element alpha) const { return gfharm::z_power(*field_, alpha); }
    MonomialMatrix x_power(Element beta) const { return gfharm::x_power(*field_, beta); }
    /// [D(alpha, beta)](n, m) = omega^{Tr(alpha beta / 2 + alpha m)} delta(n, m + beta).
    MonomialMatrix displacement(Element alpha, Element beta) const;
    MonomialMatrix displacement(DisplacementLabel l) const { return displacement(l.alpha, l.beta); }

    /// Component-space operators on Z_p.
    MonomialMatrix component_z(int a) const;
    MonomialMatrix component_x(int b) const;
    /// Z_p^a X_p^b omega^{-ab/2}.
    MonomialMatrix component_displacement(int a, int b) const;
    /// Factors D_p(alpha-bar_l, beta_l), l = 0 .. l-1.
    std::vector<MonomialMatrix> tensor_factorize(Element alpha, Element beta) const;
    /// D(alpha, beta) = component_tensor(factors).
    bool tensor_factorization_holds(Element alpha, Element beta) const;

    WeylTable weyl_expand(const OperatorMatrix& theta) const;
    /// p^{-l} sum D(alpha, beta) W(-alpha, -beta).
    OperatorMatrix weyl_reconstruct(const WeylTable& table) const;

    /// p^{-l} sum D Theta D^dagger / tr(Theta) = 1; with `psi` and `chi` also checks
    /// chi = p^{-l} sum (D psi, chi) D psi for normalized psi.
    ResolutionReport resolution_of_identity_check(const OperatorMatrix& theta, const StateVector* psi = nullptr,
                                                  const StateVector* chi = nullptr) const;

    /// Marginal sums, optionally in the frame rotated by the unitary `frame`.
    MarginalReport marginal_projectors(Backend backend = Backend::Exact, const OperatorMatrix* frame = nullptr) const;

    /// D_d(alpha, beta) on GF(p^d), rows in canonical subfield order.
    MonomialMatrix subfield_displacement(int d, Element alpha, Element beta) const;
    SubfieldDisplacementReport subfield_displacement_check(int d, Element alpha, Element beta) const;

private:
    FieldPtr field_;
    RingPtr ring_;
    int half_;
};

}  // namespace gfharm
