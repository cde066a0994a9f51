#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfharm/frobenius.hpp"
#include "gfharm/heisenberg.hpp"

namespace gfharm {

/// SL(2) element acting on displacement labels as
/// (alpha, beta) -> (u alpha + s beta, t alpha + r beta), with r u - s t = 1.
struct SymplecticParams {
    Element r, s, t, u;
};

struct GaussSumValue {
    Element a;
    CycloScalar value;
};

struct ActionReport {
    bool z_law = false;          // S Z^alpha S^dagger = D(u alpha, t alpha)
    bool x_law = false;          // S X^beta S^dagger = D(s beta, r beta)
    bool general_law = false;    // S D(alpha, beta) S^dagger = D(u alpha + s beta, t alpha + r beta)
    bool commutation = false;    // Z' X' = X' Z' omega^{Tr(alpha beta)}
    bool unitary = false;
    bool ok() const { return z_law && x_law && general_law && commutation && unitary; }
};

struct ClosedFormReport {
    Element a;                       // Gauss-sum argument
    bool matched = false;
    std::optional<CycloScalar> phase;
    std::complex<double> phase_value;
    double deviation = 0.0;
};

struct FrobeniusActionReport {
    int power = 1;
    bool action_matches = false;           // G^k S G^-k acts like S(r^{p^k}, s^{p^k}, t^{p^k})
    PhaseMatch operator_phase;             // G^k S G^-k versus the synthesized conjugate parameters
    std::optional<int> subfield_degree;    // smallest d with r, s, t in GF(p^d)
    std::optional<bool> subfield_invariant;
};

struct TransformedMarginalReport {
    MarginalReport marginals;
    bool parity_invariant = false;  // S P S^dagger = P
};

struct NonFactorizationReport {
    bool x_eps_is_one_tensor_x = false;
    /// Image of X^eps under S, computed from the action law, and its component factors.
    DisplacementLabel image;
    std::vector<std::pair<int, int>> image_factors;
    bool image_factorization_holds = false;
    /// First factor of the image is a multiple of the identity.
    bool image_first_factor_scalar = false;
    /// Operator-Schmidt rank of S across the two component spaces.
    int schmidt_rank = 0;
    bool not_a_tensor_product = false;
    std::vector<std::string> chain;
};

/// Operators realizing Sp(2, GF(p^l)) on the p^l-dimensional space, odd p.
class SymplecticSystem {
public:
    explicit SymplecticSystem(const DisplacementSystem& ds);

    const DisplacementSystem& displacements() const noexcept { return ds_; }
    const GaloisField& field() const noexcept { return ds_.field(); }

    /// Builds parameters from (r, s, t); requires r != 0, u = r^{-1}(1 + st).
    SymplecticParams params(Element r, Element s, Element t) const;
    /// Validates r u - s t = 1.
    SymplecticParams params(Element r, Element s, Element t, Element u) const;
    bool is_valid(const SymplecticParams& m) const;
    SymplecticParams compose(const SymplecticParams& a, const SymplecticParams& b) const;
    SymplecticParams frobenius(const SymplecticParams& m, int k) const;
    /// The label (u alpha + s beta, t alpha + r beta).
    DisplacementLabel act(const SymplecticParams& m, DisplacementLabel l) const;

    /// All q(q^2 - 1) elements: r != 0 with u = (1 + st)/r, then r = 0 with t = -1/s and u free.
    std::vector<SymplecticParams> enumerate() const;

    GaussSumValue gauss_sum(Element a) const;

    /// S(xi, 0, 0)(n, m) = delta(xi^{-1} n, m); realizes diag(1/xi, xi).
    MonomialMatrix generator_scaling(Element xi) const;
    /// S(1, xi, 0) = diag omega^{Tr(xi m^2 / 2)}; realizes [[1, xi], [0, 1]].
    MonomialMatrix generator_shear_z(Element xi) const;
    /// S(1, 0, xi) = F S(1, -xi, 0) F^dagger; realizes [[1, 0], [xi, 1]].
    OperatorMatrix generator_shear_x(Element xi) const;
    /// p^{-l} sum_k omega^{Tr(-xi k^2 / 2 + k n - k m)}.
    OperatorMatrix generator_shear_x_closed_form(Element xi) const;

    /// Unitary S with S D(v) S^dagger = D(M v).
    OperatorMatrix synthesize(const SymplecticParams& m) const;
    /// True when the three-generator product applies without the Fourier chart change.
    bool is_generic(const SymplecticParams& m) const;

    ActionReport action_check(const SymplecticParams& m, const OperatorMatrix* op = nullptr) const;
    /// Requires r, t, 1 + st nonzero; throws DomainRestriction otherwise.
    ClosedFormReport closed_form_elements_check(const SymplecticParams& m) const;
    OperatorMatrix closed_form(const SymplecticParams& m) const;
    FrobeniusActionReport frobenius_action_check(const SymplecticParams& m, int power = 1) const;
    TransformedMarginalReport transformed_marginals(const SymplecticParams& m) const;

    /// For GF(3^2): follows the image of X^eps under S(r, s, t) and tests whether S is a tensor product.
    NonFactorizationReport non_factorization_witness(const SymplecticParams& m) const;

private:
    const DisplacementSystem& ds_;
    OperatorMatrix fourier_;
};

/// Operator-Schmidt rank of a (a*b)-dimensional operator across the split index = i * b + j.
int operator_schmidt_rank(const OperatorMatrix& op, int a, int b);

}  // namespace gfharm
