#include "gfharm/operator.hpp"

#include <cmath>
#include <numeric>

namespace gfharm {

const char* to_string(Backend b) noexcept { return b == Backend::Exact ? "exact" : "float"; }

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
    return checked_mul(a / std::gcd(a, b), b);
}

bool all_zero(std::span<const std::int64_t> c) {
    for (auto v : c) {
        if (v != 0) return false;
    }
    return true;
}

// Multiplies a coefficient vector by zeta^k in place.
void rotate(const CycloRing& ring, std::span<std::int64_t> a, long long k) {
    if (k % ring.order() == 0 || all_zero(a)) return;
    std::vector<std::int64_t> out(a.size());
    ring.multiply(a, ring.root(k), out);
    std::copy(out.begin(), out.end(), a.begin());
}

std::complex<double> root_value(const CycloRing& ring, long long k) {
    const double angle = 2.0 * M_PI * static_cast<double>(k % ring.order()) / ring.order();
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

OperatorMatrix OperatorMatrix::zero(RingPtr ring, int dim, Backend backend) {
    OperatorMatrix m;
    m.backend_ = backend;
    m.dim_ = dim;
    m.ring_ = std::move(ring);
    const auto cells = static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
    if (backend == Backend::Exact) {
        m.coeffs_.assign(cells * m.phi(), 0);
    } else {
        m.values_.assign(cells, 0.0);
    }
    return m;
}

OperatorMatrix OperatorMatrix::identity(RingPtr ring, int dim, Backend backend) {
    OperatorMatrix m = zero(std::move(ring), dim, backend);
    for (int i = 0; i < dim; ++i) {
        if (backend == Backend::Exact) {
            m.coeffs_[m.offset(i, i)] = 1;
        } else {
            m.values_[static_cast<std::size_t>(i * dim + i)] = 1.0;
        }
    }
    return m;
}

CycloScalar OperatorMatrix::entry(int row, int col) const {
    if (!exact()) raise(ErrorKind::BackendMismatch, "exact entry requested from float matrix");
    auto n = numerator(row, col);
    return CycloScalar(ring_, std::vector<std::int64_t>(n.begin(), n.end()), denom_);
}

std::complex<double> OperatorMatrix::value(int row, int col) const {
    if (!exact()) return values_[static_cast<std::size_t>(row * dim_ + col)];
    return entry(row, col).to_complex();
}

bool OperatorMatrix::entry_is_zero(int row, int col) const {
    if (!exact()) return values_[static_cast<std::size_t>(row * dim_ + col)] == 0.0;
    return all_zero(numerator(row, col));
}

std::span<const std::int64_t> OperatorMatrix::numerator(int row, int col) const {
    return {coeffs_.data() + offset(row, col), phi()};
}

void OperatorMatrix::rescale_denominator(std::int64_t new_denom) {
    if (new_denom == denom_) return;
    const std::int64_t f = new_denom / denom_;
    for (auto& c : coeffs_) {
        if (c != 0) c = checked_mul(c, f);
    }
    denom_ = new_denom;
}

void OperatorMatrix::set(int row, int col, const CycloScalar& v) {
    if (!exact()) {
        values_[static_cast<std::size_t>(row * dim_ + col)] = v.to_complex();
        return;
    }
    const std::size_t off = offset(row, col);
    if (v.is_zero()) {
        std::fill_n(coeffs_.begin() + static_cast<std::ptrdiff_t>(off), phi(), 0);
        return;
    }
    rescale_denominator(lcm_checked(denom_, v.denom()));
    const std::int64_t f = denom_ / v.denom();
    for (std::size_t k = 0; k < phi(); ++k) coeffs_[off + k] = checked_mul(v.coeffs()[k], f);
}

void OperatorMatrix::set(int row, int col, std::complex<double> v) {
    if (exact()) raise(ErrorKind::BackendMismatch, "complex value stored into exact matrix");
    values_[static_cast<std::size_t>(row * dim_ + col)] = v;
}

void OperatorMatrix::require_compatible(const OperatorMatrix& o) const {
    if (dim_ != o.dim_) raise(ErrorKind::DimensionMismatch, "operator dimensions differ");
    if (backend_ != o.backend_) raise(ErrorKind::BackendMismatch, "operator backends differ");
    if (exact() && ring_->order() != o.ring_->order()) raise(ErrorKind::BackendMismatch, "operator rings differ");
}

void OperatorMatrix::normalize() {
    if (!exact()) return;
    std::int64_t g = abs64(denom_);
    for (auto c : coeffs_) {
        if (c != 0) {
            g = std::gcd(g, abs64(c));
            if (g == 1) return;
        }
    }
    bool any = false;
    for (auto c : coeffs_) any = any || c != 0;
    if (!any) {
        denom_ = 1;
        return;
    }
    if (g > 1) {
        for (auto& c : coeffs_) c /= g;
        denom_ /= g;
    }
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& o) {
    require_compatible(o);
    if (!exact()) {
        for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
        return *this;
    }
    const std::int64_t l = lcm_checked(denom_, o.denom_);
    rescale_denominator(l);
    const std::int64_t f = l / o.denom_;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (o.coeffs_[k] != 0) coeffs_[k] = checked_add(coeffs_[k], checked_mul(o.coeffs_[k], f));
    }
    normalize();
    return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& o) {
    return *this += o.scaled(CycloScalar::integer(o.ring_, -1));
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    a.require_compatible(b);
    const int n = a.dim_;
    OperatorMatrix c = OperatorMatrix::zero(a.ring_, n, a.backend_);
    if (!a.exact()) {
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                const auto aik = a.values_[static_cast<std::size_t>(i * n + k)];
                if (aik == 0.0) continue;
                for (int j = 0; j < n; ++j) {
                    c.values_[static_cast<std::size_t>(i * n + j)] += aik * b.values_[static_cast<std::size_t>(k * n + j)];
                }
            }
        }
        return c;
    }
    const std::size_t d = a.phi();
    std::vector<char> b_nonzero(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) b_nonzero[static_cast<std::size_t>(k * n + j)] = !b.entry_is_zero(k, j);
    }
    std::vector<__int128> wide(static_cast<std::size_t>(n) * (2 * d - 1));
    for (int i = 0; i < n; ++i) {
        std::fill(wide.begin(), wide.end(), 0);
        for (int k = 0; k < n; ++k) {
            const std::int64_t* x = a.coeffs_.data() + a.offset(i, k);
            if (all_zero({x, d})) continue;
            for (int j = 0; j < n; ++j) {
                if (!b_nonzero[static_cast<std::size_t>(k * n + j)]) continue;
                const std::int64_t* y = b.coeffs_.data() + b.offset(k, j);
                __int128* w = wide.data() + static_cast<std::size_t>(j) * (2 * d - 1);
                for (std::size_t s = 0; s < d; ++s) {
                    if (x[s] == 0) continue;
                    for (std::size_t t = 0; t < d; ++t) w[s + t] += static_cast<__int128>(x[s]) * y[t];
                }
            }
        }
        for (int j = 0; j < n; ++j) {
            std::span<const __int128> w(wide.data() + static_cast<std::size_t>(j) * (2 * d - 1), 2 * d - 1);
            a.ring_->reduce(w, {c.coeffs_.data() + c.offset(i, j), d});
        }
    }
    c.denom_ = checked_mul(a.denom_, b.denom_);
    c.normalize();
    return c;
}

OperatorMatrix OperatorMatrix::scaled(const CycloScalar& s) const {
    OperatorMatrix r = *this;
    if (!exact()) {
        const auto v = s.to_complex();
        for (auto& x : r.values_) x *= v;
        return r;
    }
    const std::size_t d = phi();
    std::vector<std::int64_t> out(d);
    for (std::size_t off = 0; off < coeffs_.size(); off += d) {
        std::span<const std::int64_t> x(coeffs_.data() + off, d);
        if (all_zero(x)) continue;
        ring_->multiply(x, s.coeffs(), out);
        std::copy(out.begin(), out.end(), r.coeffs_.begin() + static_cast<std::ptrdiff_t>(off));
    }
    r.denom_ = checked_mul(denom_, s.denom());
    r.normalize();
    return r;
}

OperatorMatrix OperatorMatrix::adjoint() const {
    OperatorMatrix r = zero(ring_, dim_, backend_);
    r.denom_ = denom_;
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            if (!exact()) {
                r.values_[static_cast<std::size_t>(j * dim_ + i)] = std::conj(values_[static_cast<std::size_t>(i * dim_ + j)]);
                continue;
            }
            auto src = numerator(i, j);
            if (all_zero(src)) continue;
            ring_->automorphism(src, -1, {r.coeffs_.data() + r.offset(j, i), phi()});
        }
    }
    return r;
}

OperatorMatrix OperatorMatrix::transpose() const {
    OperatorMatrix r = zero(ring_, dim_, backend_);
    r.denom_ = denom_;
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            if (!exact()) {
                r.values_[static_cast<std::size_t>(j * dim_ + i)] = values_[static_cast<std::size_t>(i * dim_ + j)];
            } else {
                std::copy_n(coeffs_.begin() + static_cast<std::ptrdiff_t>(offset(i, j)), phi(),
                            r.coeffs_.begin() + static_cast<std::ptrdiff_t>(r.offset(j, i)));
            }
        }
    }
    return r;
}

OperatorMatrix OperatorMatrix::pow(long long n) const {
    if (n < 0) raise(ErrorKind::DomainRestriction, "negative matrix power");
    OperatorMatrix result = identity(ring_, dim_, backend_);
    OperatorMatrix base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

OperatorMatrix OperatorMatrix::entrywise_pow(long long n) const {
    OperatorMatrix r = zero(ring_, dim_, backend_);
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            if (exact()) {
                r.set(i, j, entry(i, j).pow(n));
            } else {
                r.values_[static_cast<std::size_t>(i * dim_ + j)] =
                    std::pow(values_[static_cast<std::size_t>(i * dim_ + j)], static_cast<double>(n));
            }
        }
    }
    r.normalize();
    return r;
}

CycloScalar OperatorMatrix::trace() const {
    if (!exact()) raise(ErrorKind::BackendMismatch, "exact trace of float matrix");
    std::vector<std::int64_t> sum(phi(), 0);
    for (int i = 0; i < dim_; ++i) {
        auto x = numerator(i, i);
        for (std::size_t k = 0; k < phi(); ++k) sum[k] = checked_add(sum[k], x[k]);
    }
    return CycloScalar(ring_, std::move(sum), denom_);
}

std::complex<double> OperatorMatrix::trace_value() const {
    if (exact()) return trace().to_complex();
    std::complex<double> s = 0.0;
    for (int i = 0; i < dim_; ++i) s += values_[static_cast<std::size_t>(i * dim_ + i)];
    return s;
}

bool OperatorMatrix::is_zero() const {
    if (exact()) return all_zero(coeffs_);
    for (auto v : values_) {
        if (v != 0.0) return false;
    }
    return true;
}

double OperatorMatrix::distance(const OperatorMatrix& o) const {
    if (dim_ != o.dim_) raise(ErrorKind::DimensionMismatch, "operator dimensions differ");
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) s += std::norm(value(i, j) - o.value(i, j));
    }
    return std::sqrt(s);
}

bool OperatorMatrix::equals(const OperatorMatrix& o, double tol) const {
    if (dim_ != o.dim_) raise(ErrorKind::DimensionMismatch, "operator dimensions differ");
    if (exact() && o.exact()) {
        if (ring_->order() != o.ring_->order()) raise(ErrorKind::BackendMismatch, "operator rings differ");
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (static_cast<__int128>(coeffs_[k]) * o.denom_ != static_cast<__int128>(o.coeffs_[k]) * denom_) return false;
        }
        return true;
    }
    if (exact()) return to_float().equals(o, tol);
    if (o.exact()) return equals(o.to_float(), tol);
    double s = 0.0;
    for (std::size_t k = 0; k < values_.size(); ++k) s += std::norm(values_[k] - o.values_[k]);
    return std::sqrt(s) <= tol;
}

bool OperatorMatrix::is_unitary(double tol) const {
    return (*this * adjoint()).equals(identity(ring_, dim_, backend_), tol);
}

OperatorMatrix OperatorMatrix::to_float() const {
    if (!exact()) return *this;
    OperatorMatrix r = zero(ring_, dim_, Backend::Float);
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(ring_->order()));
    for (int k = 0; k < ring_->order(); ++k) roots[static_cast<std::size_t>(k)] = root_value(*ring_, k);
    const double inv = 1.0 / static_cast<double>(denom_);
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            auto x = numerator(i, j);
            std::complex<double> v = 0.0;
            for (std::size_t k = 0; k < phi(); ++k) {
                if (x[k] != 0) v += static_cast<double>(x[k]) * roots[k];
            }
            r.values_[static_cast<std::size_t>(i * dim_ + j)] = v * inv;
        }
    }
    return r;
}

OperatorMatrix OperatorMatrix::block(std::span<const std::uint32_t> indices) const {
    const int n = static_cast<int>(indices.size());
    OperatorMatrix r = zero(ring_, n, backend_);
    r.denom_ = denom_;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int si = static_cast<int>(indices[static_cast<std::size_t>(i)]);
            const int sj = static_cast<int>(indices[static_cast<std::size_t>(j)]);
            if (exact()) {
                std::copy_n(coeffs_.begin() + static_cast<std::ptrdiff_t>(offset(si, sj)), phi(),
                            r.coeffs_.begin() + static_cast<std::ptrdiff_t>(r.offset(i, j)));
            } else {
                r.values_[static_cast<std::size_t>(i * n + j)] = values_[static_cast<std::size_t>(si * dim_ + sj)];
            }
        }
    }
    r.normalize();
    return r;
}

OperatorMatrix OperatorMatrix::embed(const OperatorMatrix& small, std::span<const std::uint32_t> indices, int dim) {
    if (static_cast<int>(indices.size()) != small.dim_) raise(ErrorKind::DimensionMismatch, "embedding index count");
    OperatorMatrix r = zero(small.ring_, dim, small.backend_);
    r.denom_ = small.denom_;
    const int n = small.dim_;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int ti = static_cast<int>(indices[static_cast<std::size_t>(i)]);
            const int tj = static_cast<int>(indices[static_cast<std::size_t>(j)]);
            if (small.exact()) {
                std::copy_n(small.coeffs_.begin() + static_cast<std::ptrdiff_t>(small.offset(i, j)), small.phi(),
                            r.coeffs_.begin() + static_cast<std::ptrdiff_t>(r.offset(ti, tj)));
            } else {
                r.values_[static_cast<std::size_t>(ti * dim + tj)] = small.values_[static_cast<std::size_t>(i * n + j)];
            }
        }
    }
    return r;
}

MonomialMatrix::MonomialMatrix(RingPtr ring, std::vector<std::uint32_t> cols, std::vector<int> phases)
    : ring_(std::move(ring)), cols_(std::move(cols)), phases_(std::move(phases)) {
    if (cols_.size() != phases_.size()) raise(ErrorKind::DimensionMismatch, "monomial column/phase length");
    if (!is_permutation()) raise(ErrorKind::DomainRestriction, "monomial columns must form a permutation");
    const int n = ring_->order();
    for (auto& e : phases_) e = ((e % n) + n) % n;
}

MonomialMatrix MonomialMatrix::identity(RingPtr ring, int dim) {
    std::vector<std::uint32_t> cols(static_cast<std::size_t>(dim));
    std::iota(cols.begin(), cols.end(), 0u);
    return MonomialMatrix(std::move(ring), std::move(cols), std::vector<int>(static_cast<std::size_t>(dim), 0));
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
    if (a.dim() != b.dim()) raise(ErrorKind::DimensionMismatch, "monomial dimensions differ");
    std::vector<std::uint32_t> cols(a.cols_.size());
    std::vector<int> phases(a.cols_.size());
    for (std::size_t n = 0; n < cols.size(); ++n) {
        const auto mid = a.cols_[n];
        cols[n] = b.cols_[mid];
        phases[n] = a.phases_[n] + b.phases_[mid];
    }
    return MonomialMatrix(a.ring_, std::move(cols), std::move(phases));
}

MonomialMatrix MonomialMatrix::adjoint() const {
    std::vector<std::uint32_t> cols(cols_.size());
    std::vector<int> phases(cols_.size());
    for (std::size_t n = 0; n < cols_.size(); ++n) {
        cols[cols_[n]] = static_cast<std::uint32_t>(n);
        phases[cols_[n]] = -phases_[n];
    }
    return MonomialMatrix(ring_, std::move(cols), std::move(phases));
}

MonomialMatrix MonomialMatrix::pow(long long n) const {
    if (n < 0) return adjoint().pow(-n);
    MonomialMatrix result = identity(ring_, dim());
    MonomialMatrix base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

MonomialMatrix MonomialMatrix::times_root(long long k) const {
    std::vector<int> phases = phases_;
    for (auto& e : phases) e = static_cast<int>((e + k) % ring_->order());
    return MonomialMatrix(ring_, cols_, std::move(phases));
}

CycloScalar MonomialMatrix::trace() const {
    CycloScalar s(ring_);
    for (std::size_t n = 0; n < cols_.size(); ++n) {
        if (cols_[n] == n) s += CycloScalar::root(ring_, phases_[n]);
    }
    return s;
}

OperatorMatrix MonomialMatrix::dense(Backend backend) const {
    OperatorMatrix m = OperatorMatrix::zero(ring_, dim(), backend);
    for (int n = 0; n < dim(); ++n) {
        const int c = static_cast<int>(cols_[static_cast<std::size_t>(n)]);
        if (backend == Backend::Exact) {
            auto r = ring_->root(phases_[static_cast<std::size_t>(n)]);
            std::copy(r.begin(), r.end(), m.coeffs_.begin() + static_cast<std::ptrdiff_t>(m.offset(n, c)));
        } else {
            m.values_[static_cast<std::size_t>(n * dim() + c)] = root_value(*ring_, phases_[static_cast<std::size_t>(n)]);
        }
    }
    return m;
}

bool MonomialMatrix::is_permutation() const {
    std::vector<char> seen(cols_.size(), 0);
    for (auto c : cols_) {
        if (c >= cols_.size() || seen[c]) return false;
        seen[c] = 1;
    }
    return true;
}

OperatorMatrix operator*(const OperatorMatrix& a, const MonomialMatrix& m) {
    if (a.dim() != m.dim()) raise(ErrorKind::DimensionMismatch, "operator dimensions differ");
    OperatorMatrix r = OperatorMatrix::zero(a.ring_, a.dim_, a.backend_);
    r.denom_ = a.denom_;
    const int n = a.dim_;
    // (A M)(i, col[k]) = A(i, k) zeta^{phase[k]}
    for (int k = 0; k < n; ++k) {
        const int c = static_cast<int>(m.col(k));
        const int e = m.phase(k);
        for (int i = 0; i < n; ++i) {
            if (a.exact()) {
                std::span<std::int64_t> dst(r.coeffs_.data() + r.offset(i, c), r.phi());
                auto src = a.numerator(i, k);
                std::copy(src.begin(), src.end(), dst.begin());
                rotate(*a.ring_, dst, e);
            } else {
                r.values_[static_cast<std::size_t>(i * n + c)] =
                    a.values_[static_cast<std::size_t>(i * n + k)] * root_value(*a.ring_, e);
            }
        }
    }
    return r;
}

OperatorMatrix operator*(const MonomialMatrix& m, const OperatorMatrix& a) {
    if (a.dim() != m.dim()) raise(ErrorKind::DimensionMismatch, "operator dimensions differ");
    OperatorMatrix r = OperatorMatrix::zero(a.ring_, a.dim_, a.backend_);
    r.denom_ = a.denom_;
    const int n = a.dim_;
    // (M A)(k, j) = zeta^{phase[k]} A(col[k], j)
    for (int k = 0; k < n; ++k) {
        const int c = static_cast<int>(m.col(k));
        const int e = m.phase(k);
        for (int j = 0; j < n; ++j) {
            if (a.exact()) {
                std::span<std::int64_t> dst(r.coeffs_.data() + r.offset(k, j), r.phi());
                auto src = a.numerator(c, j);
                std::copy(src.begin(), src.end(), dst.begin());
                rotate(*a.ring_, dst, e);
            } else {
                r.values_[static_cast<std::size_t>(k * n + j)] =
                    a.values_[static_cast<std::size_t>(c * n + j)] * root_value(*a.ring_, e);
            }
        }
    }
    return r;
}

CycloScalar trace_product(const OperatorMatrix& a, const MonomialMatrix& m) {
    // tr(A M) = sum_k A(col[k], k) zeta^{phase[k]}
    const std::size_t d = a.phi();
    std::vector<std::int64_t> sum(d, 0), tmp(d);
    for (int k = 0; k < a.dim_; ++k) {
        auto src = a.numerator(static_cast<int>(m.col(k)), k);
        if (all_zero(src)) continue;
        std::copy(src.begin(), src.end(), tmp.begin());
        rotate(*a.ring_, tmp, m.phase(k));
        for (std::size_t j = 0; j < d; ++j) sum[j] = checked_add(sum[j], tmp[j]);
    }
    return CycloScalar(a.ring_, std::move(sum), a.denom_);
}

std::complex<double> trace_product_value(const OperatorMatrix& a, const MonomialMatrix& m) {
    if (a.exact()) return trace_product(a, m).to_complex();
    std::complex<double> s = 0.0;
    for (int k = 0; k < a.dim_; ++k) {
        s += a.values_[static_cast<std::size_t>(static_cast<int>(m.col(k)) * a.dim_ + k)] * root_value(*a.ring_, m.phase(k));
    }
    return s;
}

OperatorMatrix conjugate(const MonomialMatrix& m, const OperatorMatrix& a) { return (m * a) * m.adjoint(); }

OperatorMatrix conjugate(const OperatorMatrix& u, const OperatorMatrix& a) { return u * a * u.adjoint(); }

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.backend_ != b.backend_) raise(ErrorKind::BackendMismatch, "operator backends differ");
    const int na = a.dim_, nb = b.dim_, n = na * nb;
    OperatorMatrix r = OperatorMatrix::zero(a.ring_, n, a.backend_);
    const std::size_t d = a.phi();
    std::vector<std::int64_t> out(d);
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < na; ++j) {
            if (a.entry_is_zero(i, j)) continue;
            for (int k = 0; k < nb; ++k) {
                for (int l = 0; l < nb; ++l) {
                    const int row = i * nb + k, col = j * nb + l;
                    if (a.exact()) {
                        if (b.entry_is_zero(k, l)) continue;
                        a.ring_->multiply(a.numerator(i, j), b.numerator(k, l), out);
                        std::copy(out.begin(), out.end(), r.coeffs_.begin() + static_cast<std::ptrdiff_t>(r.offset(row, col)));
                    } else {
                        r.values_[static_cast<std::size_t>(row * n + col)] =
                            a.values_[static_cast<std::size_t>(i * na + j)] * b.values_[static_cast<std::size_t>(k * nb + l)];
                    }
                }
            }
        }
    }
    if (a.exact()) {
        r.denom_ = checked_mul(a.denom_, b.denom_);
        r.normalize();
    }
    return r;
}

OperatorMatrix component_tensor(std::span<const OperatorMatrix> factors) {
    if (factors.empty()) raise(ErrorKind::DimensionMismatch, "empty tensor product");
    OperatorMatrix r = factors.back();
    for (std::size_t k = factors.size() - 1; k-- > 0;) r = kron(r, factors[k]);
    return r;
}

bool conjugation_holds(const OperatorMatrix& u, const OperatorMatrix& a, const OperatorMatrix& b, double tol) {
    return (u * a).equals(b * u, tol);
}

bool conjugation_holds(const OperatorMatrix& u, const MonomialMatrix& a, const MonomialMatrix& b, double tol) {
    return (u * a).equals(b * u, tol);
}

PhaseMatch match_up_to_phase(const OperatorMatrix& a, const OperatorMatrix& b, double tol) {
    if (a.dim() != b.dim()) raise(ErrorKind::DimensionMismatch, "operator dimensions differ");
    PhaseMatch m;
    const int n = a.dim();
    int pi = -1, pj = -1;
    double best = 0.0;
    for (int i = 0; i < n && pi < 0; ++i) {
        for (int j = 0; j < n; ++j) {
            if (b.exact() ? !b.entry_is_zero(i, j) : std::abs(b.value(i, j)) > 1e-6) {
                pi = i;
                pj = j;
                break;
            }
        }
    }
    if (pi < 0) return m;
    if (a.exact() && b.exact()) {
        const CycloScalar bij = b.entry(pi, pj);
        const CycloScalar c = a.entry(pi, pj) * bij.inverse();
        m.phase = c;
        m.value = c.to_complex();
        const bool unit = (c * c.conj()).is_one();
        const bool same = a.equals(b.scaled(c));
        m.deviation = a.distance(b.scaled(c));
        m.matched = unit && same;
        return m;
    }
    m.value = a.value(pi, pj) / b.value(pi, pj);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) best = std::max(best, std::abs(a.value(i, j) - m.value * b.value(i, j)));
    }
    m.deviation = best;
    m.matched = std::abs(std::abs(m.value) - 1.0) <= tol && best <= tol;
    return m;
}

}  // namespace gfharm
