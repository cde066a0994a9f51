#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gfharm/error.hpp"

namespace gfharm {

/// An element of GF(p^l), identified by its canonical index sum_j m_j p^j.
/// The coefficient vector (m_0, ..., m_{l-1}) is recovered through the owning field.
struct Element {
    std::uint32_t index = 0;

    constexpr auto operator<=>(const Element&) const = default;
};

/// Square matrix over Z_p, row-major.
struct PrimeMatrix {
    int size = 0;
    std::vector<int> cells;

    int operator()(int row, int col) const { return cells[static_cast<std::size_t>(row * size + col)]; }
    int& operator()(int row, int col) { return cells[static_cast<std::size_t>(row * size + col)]; }
    bool operator==(const PrimeMatrix&) const = default;
};

/// Gram matrix g of the power basis under the trace form, its inverse G and
/// the dual basis E_k = sum_l G_{kl} eps^l, so that Tr(eps^k E_l) = delta_{kl}.
struct DualBasis {
    PrimeMatrix gram;
    PrimeMatrix inverse_gram;
    std::vector<Element> elements;
};

/// Standard components m_l = Tr(m E_l) and dual components Tr(m eps^l).
struct Components {
    std::vector<int> standard;
    std::vector<int> dual;
};

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

/// Largest field order accepted by make_field.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

/// Finite field GF(p^l) realised as Z_p[x] modulo a monic irreducible polynomial.
/// All lookup tables are built once at construction; the object is immutable afterwards.
class GaloisField {
public:
    /// Builds a validated field. `modulus` lists (c_0, ..., c_{l-1}) or (c_0, ..., c_{l-1}, 1);
    /// when absent, the lexicographically smallest monic irreducible polynomial is used,
    /// comparing c_0 first.
    static FieldPtr make(int p, int degree, std::optional<std::vector<int>> modulus = std::nullopt);

    int characteristic() const noexcept { return p_; }
    int degree() const noexcept { return degree_; }
    std::uint32_t order() const noexcept { return order_; }
    /// Monic modulus (c_0, ..., c_{l-1}, 1).
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    Element zero() const noexcept { return Element{0}; }
    Element one() const noexcept { return Element{1}; }
    /// The class of x, i.e. the generator eps of the power basis.
    Element generator() const;
    Element element(std::uint32_t index) const;
    Element from_int(long long value) const;
    Element from_coeffs(std::span<const int> coeffs) const;
    std::vector<int> coeffs(Element a) const;
    int coeff(Element a, int j) const { return digits_[a.index * static_cast<std::uint32_t>(degree_) + static_cast<std::uint32_t>(j)]; }
    /// Elements in canonical index order.
    std::vector<Element> elements() const;

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;
    Element div(Element a, Element b) const;
    Element pow(Element a, long long exponent) const;
    /// Multiplies by an integer read modulo p.
    Element scale(long long c, Element a) const;

    /// m^{p^k}; k may be any integer (negative iterates invert the Frobenius map).
    Element frobenius(Element a, long long k = 1) const;
    /// Absolute trace Tr(m) = sum_{k<l} m^{p^k}, in Z_p.
    int trace(Element a) const { return trace_[a.index]; }
    /// Trace of the extension GF(p^d)/Z_p; requires d | l and m in GF(p^d).
    int subfield_trace(Element a, int d) const;

    bool is_divisor(int d) const noexcept { return d >= 1 && d <= degree_ && degree_ % d == 0; }
    std::vector<int> divisors() const;
    bool in_subfield(Element a, int d) const;
    /// GF(p^d) inside this field, in canonical index order.
    std::vector<Element> subfield_elements(int d) const;
    /// Exponents {d, 2d, ..., l} of the Frobenius powers fixing GF(p^d) pointwise.
    std::vector<int> galois_group(int d) const;

    const DualBasis& dual_basis() const noexcept { return dual_; }
    Components components(Element a) const;

    /// Field inverse of 2 as an element of Z_p. Throws EvenCharacteristic for p = 2.
    int half() const;
    /// Integer reduced into [0, p).
    int reduce(long long v) const noexcept {
        long long r = v % p_;
        return static_cast<int>(r < 0 ? r + p_ : r);
    }

    /// "m0,m1,...,m{l-1}".
    std::string format(Element a) const;
    /// Accepts the comma-separated coefficient form or a bare canonical index.
    Element parse(std::string_view text) const;

    bool same_as(const GaloisField& other) const noexcept {
        return p_ == other.p_ && degree_ == other.degree_ && modulus_ == other.modulus_;
    }

    GaloisField(int p, int degree, std::vector<int> monic_modulus);

private:
    void build_tables();
    void build_dual_basis();
    std::vector<int> slow_mul(const std::vector<int>& a, const std::vector<int>& b) const;
    std::uint32_t index_of(std::span<const int> coeffs) const;

    int p_;
    int degree_;
    std::uint32_t order_;
    std::vector<int> modulus_;
    std::vector<std::uint32_t> powers_of_p_;
    std::vector<std::uint8_t> digits_;
    std::vector<std::uint32_t> exp_;   // exp_[k] = g^k, k in [0, 2(q-1))
    std::vector<std::uint32_t> log_;   // log_[a] for a != 0
    std::vector<std::uint32_t> frob_;
    std::vector<int> trace_;
    DualBasis dual_;
};

inline FieldPtr make_field(int p, int degree, std::optional<std::vector<int>> modulus = std::nullopt) {
    return GaloisField::make(p, degree, std::move(modulus));
}

bool is_prime(long long n) noexcept;

/// True when the monic polynomial (c_0, ..., c_{n-1}, 1) has no monic factor of
/// degree 1..floor(n/2) over Z_p.
bool is_irreducible(int p, std::span<const int> monic);

/// Inverse of a square matrix over Z_p; std::nullopt when singular.
std::optional<PrimeMatrix> invert_mod_p(const PrimeMatrix& m, int p);

}  // namespace gfharm
