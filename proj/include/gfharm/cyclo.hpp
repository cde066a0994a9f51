#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "gfharm/error.hpp"

namespace gfharm {

class CycloRing;
using RingPtr = std::shared_ptr<const CycloRing>;

/// Z[zeta_N] with a distinguished odd-or-two prime p whose root of unity
/// omega = zeta_N^{N/p} and square root sqrt(p) live inside the ring.
///
/// Elements are stored in the power basis 1, zeta, ..., zeta^{phi(N)-1}, reduced
/// modulo the N-th cyclotomic polynomial.
class CycloRing {
public:
    /// Shared, cached ring for order N and prime p. Requires p | N and, for the
    /// square root, 4 | N (8 | N when p = 2).
    static RingPtr get(int order, int prime);
    /// The ring used for GF(p^l): N = lcm(4, p, l), or lcm(8, l) when p = 2.
    static RingPtr for_field(int p, int degree);

    int order() const noexcept { return order_; }
    int prime() const noexcept { return prime_; }
    /// phi(N), the length of every coefficient vector.
    int degree() const noexcept { return degree_; }
    /// Monic Phi_N, little-endian, length degree()+1.
    const std::vector<std::int64_t>& cyclotomic() const noexcept { return cyclotomic_; }
    /// zeta^k in the power basis, any integer k.
    std::span<const std::int64_t> root(long long k) const;
    /// Exponent of zeta equal to omega^k.
    int omega_exponent(long long k) const;
    /// Exponent of zeta equal to i^k.
    int i_exponent(long long k) const;
    /// Power-basis coefficients of sqrt(p).
    const std::vector<std::int64_t>& sqrt_prime() const noexcept { return sqrt_prime_; }

    /// Reduces an unreduced coefficient vector (any length) modulo Phi_N.
    void reduce(std::span<const __int128> wide, std::span<std::int64_t> out) const;
    /// out = a * b mod Phi_N.
    void multiply(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                  std::span<std::int64_t> out) const;
    /// out = sigma_k(a), the automorphism zeta -> zeta^k (gcd(k, N) = 1).
    void automorphism(std::span<const std::int64_t> a, long long k, std::span<std::int64_t> out) const;

    CycloRing(int order, int prime);

private:
    int order_;
    int prime_;
    int degree_;
    std::vector<std::int64_t> cyclotomic_;
    std::vector<std::int64_t> roots_;  // order_ rows of degree_ coefficients
    std::vector<std::int64_t> sqrt_prime_;
};

/// Exact scalar (1/denom) * sum_j c_j zeta_N^j in Q(zeta_N).
///
/// Canonical form: coefficients reduced modulo Phi_N, denominator positive and
/// coprime to the content of the coefficients; zero has denominator 1. Half-integer
/// powers of p are absorbed through the Gauss-sum representation of sqrt(p), so
/// the stored scale exponent is always 0.
class CycloScalar {
public:
    CycloScalar() = default;
    explicit CycloScalar(RingPtr ring);
    CycloScalar(RingPtr ring, std::vector<std::int64_t> coeffs, std::int64_t denom = 1);

    static CycloScalar integer(RingPtr ring, std::int64_t value);
    static CycloScalar rational(RingPtr ring, std::int64_t num, std::int64_t den);
    /// zeta_N^k.
    static CycloScalar root(RingPtr ring, long long k);
    /// omega^k with omega = exp(2 pi i / p).
    static CycloScalar omega(RingPtr ring, long long k);
    /// p^{-e/2}.
    static CycloScalar inverse_sqrt_prime_power(RingPtr ring, int e);
    /// coeffs * p^{-scale_exp/2} / denom.
    static CycloScalar scaled(RingPtr ring, std::vector<std::int64_t> coeffs, int scale_exp, std::int64_t denom);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
    std::int64_t denom() const noexcept { return denom_; }
    int scale_exp() const noexcept { return 0; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// True if the value lies in Q; `value` receives numerator and denominator.
    bool is_rational(std::int64_t* num = nullptr, std::int64_t* den = nullptr) const noexcept;

    CycloScalar conj() const;
    CycloScalar inverse() const;
    CycloScalar pow(long long e) const;
    CycloScalar galois(long long k) const;

    std::complex<double> to_complex() const;

    CycloScalar& operator+=(const CycloScalar& o);
    CycloScalar& operator-=(const CycloScalar& o);
    CycloScalar& operator*=(const CycloScalar& o);

    friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
    friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
    friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
    friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) { return a * b.inverse(); }
    CycloScalar operator-() const;

    friend bool operator==(const CycloScalar& a, const CycloScalar& b);

private:
    void normalize();
    void require_same_ring(const CycloScalar& o) const;

    RingPtr ring_;
    std::vector<std::int64_t> coeffs_;
    std::int64_t denom_ = 1;
};

/// embed_float: complex value under zeta_N -> exp(2 pi i / N).
inline std::complex<double> embed_float(const CycloScalar& x) { return x.to_complex(); }

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t narrow(__int128 v);

}  // namespace gfharm
