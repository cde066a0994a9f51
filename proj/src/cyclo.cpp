#include "gfharm/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

namespace gfharm {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) raise(ErrorKind::Overflow, "cyclotomic coefficient overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) raise(ErrorKind::Overflow, "cyclotomic coefficient overflow");
    return r;
}

std::int64_t narrow(__int128 v) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN)) {
        raise(ErrorKind::Overflow, "cyclotomic coefficient overflow");
    }
    return static_cast<std::int64_t>(v);
}

namespace {

using Poly = std::vector<std::int64_t>;

// Exact quotient of integer polynomials by a monic divisor.
Poly divide_exact(Poly num, const Poly& den) {
    const std::size_t dd = den.size() - 1;
    Poly quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        const std::int64_t lead = num[i];
        quot[i - dd] = lead;
        if (lead == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= lead * den[j];
    }
    return quot;
}

Poly cyclotomic_poly(int n) {
    Poly num(static_cast<std::size_t>(n) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) num = divide_exact(std::move(num), cyclotomic_poly(d));
    }
    return num;
}

int legendre(int a, int p) {
    a %= p;
    if (a == 0) return 0;
    long long r = 1, b = a;
    for (int e = (p - 1) / 2; e > 0; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return r == 1 ? 1 : -1;
}

std::int64_t content(const std::vector<std::int64_t>& c) {
    std::int64_t g = 0;
    for (auto v : c) g = std::gcd(g, v < 0 ? -v : v);
    return g;
}

}  // namespace

CycloRing::CycloRing(int order, int prime) : order_(order), prime_(prime) {
    if (order < 1 || prime < 2 || order % prime != 0) {
        raise(ErrorKind::DomainRestriction, "ring order must be a multiple of p");
    }
    cyclotomic_ = cyclotomic_poly(order);
    degree_ = static_cast<int>(cyclotomic_.size()) - 1;

    const auto d = static_cast<std::size_t>(degree_);
    roots_.assign(static_cast<std::size_t>(order_) * d, 0);
    Poly cur(d, 0);
    cur[0] = 1;
    for (int k = 0; k < order_; ++k) {
        std::copy(cur.begin(), cur.end(), roots_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(k) * d));
        // cur *= x, then fold x^d back using Phi_N (monic).
        const std::int64_t top = cur[d - 1];
        for (std::size_t j = d - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        for (std::size_t j = 0; j < d; ++j) cur[j] -= top * cyclotomic_[j];
    }

    sqrt_prime_.assign(d, 0);
    if (prime_ == 2) {
        if (order_ % 8 != 0) return;
        const auto a = root(order_ / 8);
        const auto b = root(-order_ / 8);
        for (std::size_t j = 0; j < d; ++j) sqrt_prime_[j] = a[j] + b[j];
    } else {
        if (order_ % 4 != 0) return;
        // Quadratic Gauss sum g_p; g_p^2 = (-1|p) p.
        Poly gauss(d, 0);
        for (int k = 1; k < prime_; ++k) {
            const auto z = root(static_cast<long long>(order_ / prime_) * k);
            const int chi = legendre(k, prime_);
            for (std::size_t j = 0; j < d; ++j) gauss[j] += chi * z[j];
        }
        if (prime_ % 4 == 1) {
            sqrt_prime_ = gauss;
        } else {
            multiply(gauss, root(3LL * order_ / 4), sqrt_prime_);
        }
    }
    Poly square(d, 0);
    multiply(sqrt_prime_, sqrt_prime_, square);
    for (std::size_t j = 0; j < d; ++j) {
        if (square[j] != (j == 0 ? prime_ : 0)) raise(ErrorKind::DomainRestriction, "sqrt(p) construction failed");
    }
}

RingPtr CycloRing::get(int order, int prime) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, RingPtr> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{order, prime}];
    if (!slot) slot = std::make_shared<const CycloRing>(order, prime);
    return slot;
}

RingPtr CycloRing::for_field(int p, int degree) {
    const int base = p == 2 ? 8 : 4;
    return get(std::lcm(std::lcm(base, p), degree), p);
}

std::span<const std::int64_t> CycloRing::root(long long k) const {
    long long r = k % order_;
    if (r < 0) r += order_;
    const auto d = static_cast<std::size_t>(degree_);
    return {roots_.data() + static_cast<std::size_t>(r) * d, d};
}

int CycloRing::omega_exponent(long long k) const {
    long long r = (k % prime_ + prime_) % prime_;
    return static_cast<int>(r * (order_ / prime_));
}

int CycloRing::i_exponent(long long k) const {
    long long r = (k % 4 + 4) % 4;
    return static_cast<int>(r * (order_ / 4));
}

void CycloRing::reduce(std::span<const __int128> wide, std::span<std::int64_t> out) const {
    const auto d = static_cast<std::size_t>(degree_);
    __int128 acc[128];
    std::vector<__int128> big;
    __int128* a = acc;
    if (d > 128) {
        big.assign(d, 0);
        a = big.data();
    } else {
        std::fill(acc, acc + d, 0);
    }
    for (std::size_t j = 0; j < wide.size(); ++j) {
        const __int128 w = wide[j];
        if (w == 0) continue;
        if (j < d) {
            a[j] += w;
        } else {
            const auto r = root(static_cast<long long>(j));
            for (std::size_t i = 0; i < d; ++i) {
                if (r[i] != 0) a[i] += w * r[i];
            }
        }
    }
    for (std::size_t i = 0; i < d; ++i) out[i] = narrow(a[i]);
}

void CycloRing::multiply(std::span<const std::int64_t> x, std::span<const std::int64_t> y,
                         std::span<std::int64_t> out) const {
    const auto d = static_cast<std::size_t>(degree_);
    std::vector<__int128> wide(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) wide[i + j] += static_cast<__int128>(x[i]) * y[j];
    }
    reduce(wide, out);
}

void CycloRing::automorphism(std::span<const std::int64_t> a, long long k, std::span<std::int64_t> out) const {
    const auto d = static_cast<std::size_t>(degree_);
    std::vector<__int128> acc(d, 0);
    for (std::size_t j = 0; j < d; ++j) {
        if (a[j] == 0) continue;
        const auto r = root(k * static_cast<long long>(j));
        for (std::size_t i = 0; i < d; ++i) acc[i] += static_cast<__int128>(a[j]) * r[i];
    }
    for (std::size_t i = 0; i < d; ++i) out[i] = narrow(acc[i]);
}

CycloScalar::CycloScalar(RingPtr ring)
    : ring_(std::move(ring)), coeffs_(static_cast<std::size_t>(ring_->degree()), 0) {}

CycloScalar::CycloScalar(RingPtr ring, std::vector<std::int64_t> coeffs, std::int64_t denom)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)), denom_(denom) {
    const auto d = static_cast<std::size_t>(ring_->degree());
    if (coeffs_.size() != d) {
        // Accept unreduced input of any length.
        std::vector<__int128> wide(coeffs_.begin(), coeffs_.end());
        coeffs_.assign(d, 0);
        ring_->reduce(wide, coeffs_);
    }
    if (denom_ == 0) raise(ErrorKind::DivisionByZero, "zero denominator");
    normalize();
}

CycloScalar CycloScalar::integer(RingPtr ring, std::int64_t value) { return rational(std::move(ring), value, 1); }

CycloScalar CycloScalar::rational(RingPtr ring, std::int64_t num, std::int64_t den) {
    CycloScalar s(std::move(ring));
    s.coeffs_[0] = num;
    if (den == 0) raise(ErrorKind::DivisionByZero, "zero denominator");
    s.denom_ = den;
    s.normalize();
    return s;
}

CycloScalar CycloScalar::root(RingPtr ring, long long k) {
    auto r = ring->root(k);
    std::vector<std::int64_t> c(r.begin(), r.end());
    return CycloScalar(std::move(ring), std::move(c), 1);
}

CycloScalar CycloScalar::omega(RingPtr ring, long long k) {
    const int e = ring->omega_exponent(k);
    return root(std::move(ring), e);
}

CycloScalar CycloScalar::inverse_sqrt_prime_power(RingPtr ring, int e) {
    return scaled(ring, std::vector<std::int64_t>{1}, e, 1);
}

CycloScalar CycloScalar::scaled(RingPtr ring, std::vector<std::int64_t> coeffs, int scale_exp, std::int64_t denom) {
    if (scale_exp < 0) raise(ErrorKind::DomainRestriction, "negative scale exponent");
    CycloScalar base(ring, std::move(coeffs), denom);
    const std::int64_t p = ring->prime();
    std::int64_t whole = 1;
    for (int i = 0; i < scale_exp / 2; ++i) whole = checked_mul(whole, p);
    CycloScalar result = base * rational(ring, 1, whole);
    if (scale_exp % 2 == 1) {
        // 1/sqrt(p) = sqrt(p)/p.
        CycloScalar root_p(ring, ring->sqrt_prime(), ring->prime());
        result *= root_p;
    }
    return result;
}

void CycloScalar::normalize() {
    const std::int64_t g0 = content(coeffs_);
    if (g0 == 0) {
        denom_ = 1;
        return;
    }
    std::int64_t g = std::gcd(g0, denom_ < 0 ? -denom_ : denom_);
    if (denom_ < 0) g = -g;
    if (g != 1) {
        for (auto& c : coeffs_) c /= g;
        denom_ /= g;
    }
}

void CycloScalar::require_same_ring(const CycloScalar& o) const {
    if (!ring_ || !o.ring_) raise(ErrorKind::BackendMismatch, "scalar without ring");
    if (ring_ != o.ring_ && (ring_->order() != o.ring_->order() || ring_->prime() != o.ring_->prime())) {
        raise(ErrorKind::BackendMismatch, "scalars from different cyclotomic rings");
    }
}

bool CycloScalar::is_zero() const noexcept {
    for (auto c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

bool CycloScalar::is_rational(std::int64_t* num, std::int64_t* den) const noexcept {
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
        if (coeffs_[j] != 0) return false;
    }
    if (num) *num = coeffs_.empty() ? 0 : coeffs_[0];
    if (den) *den = denom_;
    return true;
}

bool CycloScalar::is_one() const noexcept {
    std::int64_t n, d;
    return is_rational(&n, &d) && n == 1 && d == 1;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
    require_same_ring(o);
    const std::int64_t g = std::gcd(denom_, o.denom_);
    const std::int64_t fa = o.denom_ / g;
    const std::int64_t fb = denom_ / g;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        coeffs_[j] = checked_add(checked_mul(coeffs_[j], fa), checked_mul(o.coeffs_[j], fb));
    }
    denom_ = checked_mul(denom_, fa);
    normalize();
    return *this;
}

CycloScalar CycloScalar::operator-() const {
    CycloScalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) { return *this += -o; }

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
    require_same_ring(o);
    std::vector<std::int64_t> out(coeffs_.size());
    ring_->multiply(coeffs_, o.coeffs_, out);
    coeffs_ = std::move(out);
    denom_ = checked_mul(denom_, o.denom_);
    normalize();
    return *this;
}

CycloScalar CycloScalar::galois(long long k) const {
    if (std::gcd(k, static_cast<long long>(ring_->order())) != 1) {
        raise(ErrorKind::DomainRestriction, "galois exponent " + std::to_string(k) + " is not a unit mod " + std::to_string(ring_->order()));
    }
    CycloScalar r(ring_);
    ring_->automorphism(coeffs_, k, r.coeffs_);
    r.denom_ = denom_;
    r.normalize();
    return r;
}

CycloScalar CycloScalar::conj() const { return galois(-1); }

CycloScalar CycloScalar::inverse() const {
    if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero scalar");
    std::int64_t rn = 0, rd = 1;
    if (is_rational(&rn, &rd)) return rn < 0 ? rational(ring_, -rd, -rn) : rational(ring_, rd, rn);
    const CycloScalar c = conj();
    if ((*this * c).is_one()) return c;
    const int n = ring_->order();
    // Product of all non-trivial Galois conjugates of the numerator; numerator times it is the norm.
    CycloScalar numerator(ring_, coeffs_, 1);
    CycloScalar cofactor = integer(ring_, 1);
    for (int k = 2; k < n; ++k) {
        if (std::gcd(k, n) == 1) cofactor *= numerator.galois(k);
    }
    const CycloScalar norm = numerator * cofactor;
    std::int64_t nn, nd;
    if (!norm.is_rational(&nn, &nd) || nd != 1 || nn == 0) {
        raise(ErrorKind::Overflow, "norm computation failed");
    }
    return cofactor * rational(ring_, denom_, nn);
}

CycloScalar CycloScalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloScalar result = integer(ring_, 1);
    CycloScalar base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::complex<double> CycloScalar::to_complex() const {
    if (!ring_) return {};
    std::complex<double> sum = 0.0;
    const double n = ring_->order();
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / n;
        sum += static_cast<double>(coeffs_[j]) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return sum / static_cast<double>(denom_);
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
    a.require_same_ring(b);
    return a.denom_ == b.denom_ && a.coeffs_ == b.coeffs_;
}

}  // namespace gfharm
