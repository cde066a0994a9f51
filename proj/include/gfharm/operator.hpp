#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gfharm/cyclo.hpp"

namespace gfharm {

enum class Backend { Exact, Float };

const char* to_string(Backend b) noexcept;

/// Default tolerance for float-backend operator equality (Frobenius norm).
inline constexpr double kOperatorTolerance = 1e-9;

/// Dense square matrix over Q(zeta_N) or over complex doubles.
///
/// The exact backend keeps a single positive denominator shared by all entries and
/// an integer numerator per entry, stored as phi(N) power-basis coefficients.
class OperatorMatrix {
public:
    OperatorMatrix() = default;

    static OperatorMatrix zero(RingPtr ring, int dim, Backend backend = Backend::Exact);
    static OperatorMatrix identity(RingPtr ring, int dim, Backend backend = Backend::Exact);

    Backend backend() const noexcept { return backend_; }
    bool exact() const noexcept { return backend_ == Backend::Exact; }
    int dim() const noexcept { return dim_; }
    const RingPtr& ring() const noexcept { return ring_; }
    std::int64_t denom() const noexcept { return denom_; }

    /// Exact entry; throws BackendMismatch on the float backend.
    CycloScalar entry(int row, int col) const;
    /// Complex value of an entry on either backend.
    std::complex<double> value(int row, int col) const;
    bool entry_is_zero(int row, int col) const;
    std::span<const std::int64_t> numerator(int row, int col) const;

    void set(int row, int col, const CycloScalar& v);
    void set(int row, int col, std::complex<double> v);

    OperatorMatrix& operator+=(const OperatorMatrix& o);
    OperatorMatrix& operator-=(const OperatorMatrix& o);
    friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
    friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }
    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);

    OperatorMatrix scaled(const CycloScalar& s) const;
    OperatorMatrix adjoint() const;
    OperatorMatrix pow(long long n) const;
    /// Entrywise power, used by the subfield power relations.
    OperatorMatrix entrywise_pow(long long n) const;
    OperatorMatrix transpose() const;

    CycloScalar trace() const;
    std::complex<double> trace_value() const;

    bool is_zero() const;
    /// Exact equality when both are exact, otherwise Frobenius-norm distance <= tol.
    bool equals(const OperatorMatrix& o, double tol = kOperatorTolerance) const;
    double distance(const OperatorMatrix& o) const;

    /// U U^dagger = 1.
    bool is_unitary(double tol = kOperatorTolerance) const;

    OperatorMatrix to_float() const;

    /// Submatrix on the given row/column indices.
    OperatorMatrix block(std::span<const std::uint32_t> indices) const;
    /// dim x dim matrix carrying `small` on the given indices, zero elsewhere.
    static OperatorMatrix embed(const OperatorMatrix& small, std::span<const std::uint32_t> indices, int dim);

private:
    friend class MonomialMatrix;
    friend OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator*(const OperatorMatrix& a, const class MonomialMatrix& m);
    friend OperatorMatrix operator*(const class MonomialMatrix& m, const OperatorMatrix& a);
    friend CycloScalar trace_product(const OperatorMatrix& a, const class MonomialMatrix& m);
    friend std::complex<double> trace_product_value(const OperatorMatrix& a, const class MonomialMatrix& m);

    std::size_t phi() const noexcept { return static_cast<std::size_t>(ring_->degree()); }
    std::size_t offset(int row, int col) const noexcept {
        return (static_cast<std::size_t>(row) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(col)) * phi();
    }
    void require_compatible(const OperatorMatrix& o) const;
    void rescale_denominator(std::int64_t new_denom);
    void normalize();

    Backend backend_ = Backend::Exact;
    int dim_ = 0;
    RingPtr ring_;
    std::int64_t denom_ = 1;
    std::vector<std::int64_t> coeffs_;
    std::vector<std::complex<double>> values_;
};

/// Matrix with exactly one nonzero entry per row, of the form zeta_N^phase.
/// Row n has its entry in column col(n).
class MonomialMatrix {
public:
    MonomialMatrix() = default;
    MonomialMatrix(RingPtr ring, std::vector<std::uint32_t> cols, std::vector<int> phases);

    static MonomialMatrix identity(RingPtr ring, int dim);

    int dim() const noexcept { return static_cast<int>(cols_.size()); }
    const RingPtr& ring() const noexcept { return ring_; }
    std::uint32_t col(int row) const { return cols_[static_cast<std::size_t>(row)]; }
    /// Exponent of zeta_N in [0, N).
    int phase(int row) const { return phases_[static_cast<std::size_t>(row)]; }
    const std::vector<std::uint32_t>& cols() const noexcept { return cols_; }

    friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
    MonomialMatrix adjoint() const;
    MonomialMatrix pow(long long n) const;
    MonomialMatrix times_root(long long k) const;

    CycloScalar trace() const;
    OperatorMatrix dense(Backend backend = Backend::Exact) const;
    bool is_permutation() const;

    friend bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) {
        return a.cols_ == b.cols_ && a.phases_ == b.phases_;
    }

private:
    RingPtr ring_;
    std::vector<std::uint32_t> cols_;
    std::vector<int> phases_;
};

OperatorMatrix operator*(const OperatorMatrix& a, const MonomialMatrix& m);
OperatorMatrix operator*(const MonomialMatrix& m, const OperatorMatrix& a);
/// tr(A M) in O(dim).
CycloScalar trace_product(const OperatorMatrix& a, const MonomialMatrix& m);
std::complex<double> trace_product_value(const OperatorMatrix& a, const MonomialMatrix& m);
/// M A M^dagger.
OperatorMatrix conjugate(const MonomialMatrix& m, const OperatorMatrix& a);
/// U A U^dagger.
OperatorMatrix conjugate(const OperatorMatrix& u, const OperatorMatrix& a);

/// Kronecker product; index of (i, j) is i * b.dim() + j.
OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b);
/// Operator acting with factors[lambda] on base-p digit lambda of the canonical index,
/// i.e. factors[l-1] (x) ... (x) factors[0].
OperatorMatrix component_tensor(std::span<const OperatorMatrix> factors);

/// U A = B U, the form in which U A U^dagger = B is checked for unitary U.
bool conjugation_holds(const OperatorMatrix& u, const OperatorMatrix& a, const OperatorMatrix& b,
                       double tol = kOperatorTolerance);
bool conjugation_holds(const OperatorMatrix& u, const MonomialMatrix& a, const MonomialMatrix& b,
                       double tol = kOperatorTolerance);

/// Result of comparing two operators up to a global phase.
struct PhaseMatch {
    bool matched = false;
    std::optional<CycloScalar> phase;  // exact backend
    std::complex<double> value;        // A = value * B
    double deviation = 0.0;            // max |A_ij - value * B_ij|
};

/// Finds c with A = c B and |c| = 1, taking c from the first nonzero entry of B.
PhaseMatch match_up_to_phase(const OperatorMatrix& a, const OperatorMatrix& b, double tol = kOperatorTolerance);

}  // namespace gfharm
