#pragma once

#include <complex>
#include <vector>

#include "gfharm/cyclo.hpp"
#include "gfharm/field.hpp"
#include "gfharm/operator.hpp"

namespace gfharm {

/// The cyclotomic ring holding every scalar for functions on this field.
RingPtr harmonic_ring(const GaloisField& field);

/// Complex function on GF(p^l), indexed by canonical element order.
class StateVector {
public:
    StateVector() = default;
    StateVector(RingPtr ring, int dim);
    explicit StateVector(std::vector<CycloScalar> values);

    int dim() const noexcept { return static_cast<int>(values_.size()); }
    const RingPtr& ring() const noexcept { return ring_; }
    const CycloScalar& operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    CycloScalar& operator[](int i) { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<CycloScalar>& values() const noexcept { return values_; }

    std::vector<std::complex<double>> to_complex() const;

    friend bool operator==(const StateVector& a, const StateVector& b) { return a.values_ == b.values_; }

private:
    RingPtr ring_;
    std::vector<CycloScalar> values_;
};

/// (chi, h) = sum_m conj(chi(m)) h(m).
CycloScalar inner_product(const StateVector& chi, const StateVector& h);
std::complex<double> inner_product(const std::vector<std::complex<double>>& chi,
                                   const std::vector<std::complex<double>>& h);

StateVector apply(const OperatorMatrix& op, const StateVector& chi);
StateVector apply(const MonomialMatrix& op, const StateVector& chi);
/// |a><b| as an operator.
OperatorMatrix outer(const StateVector& a, const StateVector& b);

/// Point mass at k.
StateVector basis_state(const GaloisField& field, Element k);

/// Q_k = |k><k|.
OperatorMatrix point_projector(const GaloisField& field, Element k, Backend backend = Backend::Exact);
/// Sum of Q_k over the subfield GF(p^d).
OperatorMatrix subspace_projector(const GaloisField& field, int d, Backend backend = Backend::Exact);
/// Canonical indices of GF(p^d) inside GF(p^l).
std::vector<std::uint32_t> subfield_indices(const GaloisField& field, int d);

/// phi_n(m) = p^{-l/2} omega^{-Tr(nm)}.
StateVector phi_basis(const GaloisField& field, Element n);

/// (P chi)(n) = chi(-n).
MonomialMatrix parity(const GaloisField& field);

/// Component factors of phi_n: varphi_a(b) = p^{-1/2} omega^{-ab} on Z_p.
struct PhiFactorization {
    /// Labels pairing standard components of n with dual components of m.
    std::vector<int> standard_labels;
    /// Labels pairing dual components of n with standard components of m.
    std::vector<int> dual_labels;
    /// Each factor as a p-vector, in component order.
    std::vector<StateVector> standard_factors;
    std::vector<StateVector> dual_factors;
    bool standard_on_dual = false;
    bool dual_on_standard = false;
};

PhiFactorization tensor_factorize_phi(const GaloisField& field, Element n);

/// varphi_a on Z_p as a p-vector.
StateVector component_phi(const RingPtr& ring, int p, int a);

}  // namespace gfharm
