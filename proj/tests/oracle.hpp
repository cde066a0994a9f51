#pragma once

// Brute-force reference implementations for cross-checking the library.
// Nothing here uses lookup tables or the cyclotomic ring.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

struct Field {
    int p;
    int l;
    std::vector<int> monic;  // c_0 .. c_{l-1}, 1

    std::uint32_t order() const {
        std::uint32_t q = 1;
        for (int i = 0; i < l; ++i) q *= static_cast<std::uint32_t>(p);
        return q;
    }

    std::vector<int> digits(std::uint32_t idx) const {
        std::vector<int> d(static_cast<std::size_t>(l));
        for (auto& x : d) {
            x = static_cast<int>(idx % static_cast<std::uint32_t>(p));
            idx /= static_cast<std::uint32_t>(p);
        }
        return d;
    }

    std::uint32_t index(const std::vector<int>& d) const {
        std::uint32_t idx = 0, w = 1;
        for (int x : d) {
            idx += static_cast<std::uint32_t>(((x % p) + p) % p) * w;
            w *= static_cast<std::uint32_t>(p);
        }
        return idx;
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        auto x = digits(a), y = digits(b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
        return index(x);
    }

    std::uint32_t neg(std::uint32_t a) const {
        auto x = digits(a);
        for (auto& v : x) v = -v;
        return index(x);
    }

    // Schoolbook product, then long division by the modulus.
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        auto x = digits(a), y = digits(b);
        std::vector<long long> prod(static_cast<std::size_t>(2 * l), 0);
        for (int i = 0; i < l; ++i) {
            for (int j = 0; j < l; ++j) prod[static_cast<std::size_t>(i + j)] += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
        }
        for (int k = 2 * l - 1; k >= l; --k) {
            const long long c = prod[static_cast<std::size_t>(k)];
            for (int j = 0; j <= l; ++j) prod[static_cast<std::size_t>(k - l + j)] -= c * monic[static_cast<std::size_t>(j)];
        }
        std::vector<int> out(static_cast<std::size_t>(l));
        for (int i = 0; i < l; ++i) out[static_cast<std::size_t>(i)] = static_cast<int>(((prod[static_cast<std::size_t>(i)] % p) + p) % p);
        return index(out);
    }

    // Trace of the Z_p-linear map x -> a x in the basis 1, eps, ...
    int trace(std::uint32_t a) const {
        long long t = 0;
        std::uint32_t basis = 1;
        for (int j = 0; j < l; ++j) {
            t += digits(mul(a, basis))[static_cast<std::size_t>(j)];
            basis *= static_cast<std::uint32_t>(p);
        }
        return static_cast<int>(t % p);
    }

    int half() const { return (p + 1) / 2; }

    std::uint32_t scale(int c, std::uint32_t a) const {
        auto x = digits(a);
        for (auto& v : x) v *= c;
        return index(x);
    }
};

inline cd omega(int p, long long k) {
    const double angle = 2.0 * M_PI * static_cast<double>(((k % p) + p) % p) / p;
    return {std::cos(angle), std::sin(angle)};
}

using Matrix = std::vector<cd>;  // row-major q x q

inline Matrix fourier(const Field& f) {
    const auto q = f.order();
    Matrix m(static_cast<std::size_t>(q) * q);
    const double norm = 1.0 / std::sqrt(static_cast<double>(q));
    for (std::uint32_t n = 0; n < q; ++n) {
        for (std::uint32_t k = 0; k < q; ++k) m[n * q + k] = norm * omega(f.p, f.trace(f.mul(n, k)));
    }
    return m;
}

// D(a, b)(n, m) = omega^{Tr(a b / 2 + a m)} delta(n, m + b).
inline Matrix displacement(const Field& f, std::uint32_t a, std::uint32_t b) {
    const auto q = f.order();
    Matrix m(static_cast<std::size_t>(q) * q, 0.0);
    const std::uint32_t hab = f.scale(f.half(), f.mul(a, b));
    for (std::uint32_t col = 0; col < q; ++col) {
        const std::uint32_t row = f.add(col, b);
        m[row * q + col] = omega(f.p, f.trace(f.add(hab, f.mul(a, col))));
    }
    return m;
}

inline double distance(const Matrix& a, const Matrix& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += std::norm(a[k] - b[k]);
    return std::sqrt(s);
}

}  // namespace oracle
