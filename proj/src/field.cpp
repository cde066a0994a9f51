#include "gfharm/field.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace gfharm {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NotInSubfield: return "NotInSubfield";
        case ErrorKind::NotADivisor: return "NotADivisor";
        case ErrorKind::SingularGram: return "SingularGram";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::BackendMismatch: return "BackendMismatch";
        case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
        case ErrorKind::NotUnitary: return "NotUnitary";
        case ErrorKind::ZeroTrace: return "ZeroTrace";
        case ErrorKind::ZeroScaling: return "ZeroScaling";
        case ErrorKind::ConstraintViolated: return "ConstraintViolated";
        case ErrorKind::DomainRestriction: return "DomainRestriction";
        case ErrorKind::WrongFixture: return "WrongFixture";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::TooLarge: return "TooLarge";
    }
    return "Unknown";
}

bool is_prime(long long n) noexcept {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace {

int mod(long long v, int p) {
    long long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

int inverse_mod(int a, int p) {
    // p is prime and small; Fermat.
    long long result = 1, base = mod(a, p);
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<int>(result);
}

// Remainder of `num` modulo the monic polynomial `den`, both little-endian.
std::vector<int> poly_rem(std::vector<int> num, std::span<const int> den, int p) {
    const std::size_t dd = den.size() - 1;
    while (num.size() > dd) {
        const int lead = num.back();
        if (lead != 0) {
            const std::size_t shift = num.size() - 1 - dd;
            for (std::size_t i = 0; i < dd; ++i) {
                num[shift + i] = mod(num[shift + i] - static_cast<long long>(lead) * den[i], p);
            }
        }
        num.pop_back();
    }
    return num;
}

}  // namespace

bool is_irreducible(int p, std::span<const int> monic) {
    const int n = static_cast<int>(monic.size()) - 1;
    if (n < 1 || monic.back() != 1) return false;
    for (int k = 1; k <= n / 2; ++k) {
        long long count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        std::vector<int> factor(static_cast<std::size_t>(k) + 1, 0);
        factor[static_cast<std::size_t>(k)] = 1;
        for (long long code = 0; code < count; ++code) {
            long long c = code;
            for (int i = 0; i < k; ++i) {
                factor[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
                c /= p;
            }
            auto rem = poly_rem(std::vector<int>(monic.begin(), monic.end()), factor, p);
            if (std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; })) return false;
        }
    }
    return true;
}

std::optional<PrimeMatrix> invert_mod_p(const PrimeMatrix& m, int p) {
    const int n = m.size;
    PrimeMatrix a = m;
    PrimeMatrix inv{n, std::vector<int>(static_cast<std::size_t>(n * n), 0)};
    for (int i = 0; i < n; ++i) inv(i, i) = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (mod(a(r, col), p) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        for (int c = 0; c < n; ++c) {
            std::swap(a(col, c), a(pivot, c));
            std::swap(inv(col, c), inv(pivot, c));
        }
        const int s = inverse_mod(a(col, col), p);
        for (int c = 0; c < n; ++c) {
            a(col, c) = mod(static_cast<long long>(a(col, c)) * s, p);
            inv(col, c) = mod(static_cast<long long>(inv(col, c)) * s, p);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const int f = a(r, col);
            if (f == 0) continue;
            for (int c = 0; c < n; ++c) {
                a(r, c) = mod(a(r, c) - static_cast<long long>(f) * a(col, c), p);
                inv(r, c) = mod(inv(r, c) - static_cast<long long>(f) * inv(col, c), p);
            }
        }
    }
    return inv;
}

FieldPtr GaloisField::make(int p, int degree, std::optional<std::vector<int>> modulus) {
    if (!is_prime(p)) raise(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (degree < 1) raise(ErrorKind::DegreeMismatch, "extension degree must be at least 1");
    long long order = 1;
    for (int i = 0; i < degree; ++i) {
        order *= p;
        if (order > kMaxFieldOrder) {
            raise(ErrorKind::TooLarge, "field order exceeds " + std::to_string(kMaxFieldOrder));
        }
    }

    std::vector<int> monic;
    if (modulus) {
        monic = *modulus;
        if (static_cast<int>(monic.size()) == degree + 1) {
            if (mod(monic.back(), p) != 1) {
                raise(ErrorKind::DegreeMismatch, "modulus must be monic");
            }
        } else if (static_cast<int>(monic.size()) == degree) {
            monic.push_back(1);
        } else {
            raise(ErrorKind::DegreeMismatch, "modulus has " + std::to_string(modulus->size()) +
                                                 " coefficients, degree is " + std::to_string(degree));
        }
        for (int& c : monic) c = mod(c, p);
        if (!is_irreducible(p, monic)) {
            raise(ErrorKind::ReducibleModulus, "modulus factors over Z_" + std::to_string(p));
        }
    } else {
        // c_0 is the most significant position of the lexicographic order.
        monic.assign(static_cast<std::size_t>(degree) + 1, 0);
        monic.back() = 1;
        bool found = false;
        for (long long code = 0; code < order && !found; ++code) {
            long long c = code;
            for (int i = degree - 1; i >= 0; --i) {
                monic[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
                c /= p;
            }
            found = is_irreducible(p, monic);
        }
        if (!found) raise(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
    }
    return std::make_shared<const GaloisField>(p, degree, std::move(monic));
}

GaloisField::GaloisField(int p, int degree, std::vector<int> monic_modulus)
    : p_(p), degree_(degree), order_(1), modulus_(std::move(monic_modulus)) {
    for (int i = 0; i < degree_; ++i) {
        powers_of_p_.push_back(order_);
        order_ *= static_cast<std::uint32_t>(p_);
    }
    build_tables();
    build_dual_basis();
}

std::vector<int> GaloisField::slow_mul(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = mod(prod[i + j] + static_cast<long long>(a[i]) * b[j], p_);
        }
    }
    auto r = poly_rem(std::move(prod), modulus_, p_);
    r.resize(static_cast<std::size_t>(degree_), 0);
    return r;
}

std::uint32_t GaloisField::index_of(std::span<const int> coeffs) const {
    std::uint32_t idx = 0;
    for (int j = 0; j < degree_; ++j) {
        idx += static_cast<std::uint32_t>(mod(coeffs[static_cast<std::size_t>(j)], p_)) * powers_of_p_[static_cast<std::size_t>(j)];
    }
    return idx;
}

void GaloisField::build_tables() {
    const std::size_t q = order_;
    const std::size_t l = static_cast<std::size_t>(degree_);
    digits_.resize(q * l);
    for (std::uint32_t idx = 0; idx < order_; ++idx) {
        std::uint32_t v = idx;
        for (std::size_t j = 0; j < l; ++j) {
            digits_[idx * l + j] = static_cast<std::uint8_t>(v % static_cast<std::uint32_t>(p_));
            v /= static_cast<std::uint32_t>(p_);
        }
    }

    // Smallest-index primitive element; its powers give exp/log tables.
    const std::uint32_t group = order_ - 1;
    exp_.assign(2 * static_cast<std::size_t>(group), 0);
    log_.assign(q, 0);
    for (std::uint32_t cand = 1; cand < order_; ++cand) {
        const auto g = coeffs(Element{cand});
        std::vector<int> cur(l, 0);
        cur[0] = 1;
        std::uint32_t k = 0;
        bool primitive = true;
        do {
            exp_[k] = index_of(cur);
            ++k;
            cur = slow_mul(cur, g);
            if (index_of(cur) == 1 && k < group) {
                primitive = false;
                break;
            }
        } while (k < group);
        if (primitive) break;
    }
    for (std::uint32_t k = 0; k < group; ++k) {
        exp_[k + group] = exp_[k];
        log_[exp_[k]] = k;
    }

    frob_.resize(q);
    for (std::uint32_t idx = 0; idx < order_; ++idx) frob_[idx] = pow(Element{idx}, p_).index;

    trace_.resize(q);
    for (std::uint32_t idx = 0; idx < order_; ++idx) {
        Element sum = zero();
        Element conj{idx};
        for (int k = 0; k < degree_; ++k) {
            sum = add(sum, conj);
            conj = Element{frob_[conj.index]};
        }
        if (sum.index >= static_cast<std::uint32_t>(p_)) {
            raise(ErrorKind::ReducibleModulus, "trace left the prime field; modulus is not irreducible");
        }
        trace_[idx] = static_cast<int>(sum.index);
    }
}

void GaloisField::build_dual_basis() {
    const int l = degree_;
    std::vector<Element> basis;
    basis.reserve(static_cast<std::size_t>(l));
    for (int j = 0; j < l; ++j) basis.push_back(Element{powers_of_p_[static_cast<std::size_t>(j)]});

    PrimeMatrix gram{l, std::vector<int>(static_cast<std::size_t>(l * l), 0)};
    for (int a = 0; a < l; ++a) {
        for (int b = 0; b < l; ++b) gram(a, b) = trace(pow(generator(), a + b));
    }
    auto inverse = invert_mod_p(gram, p_);
    if (!inverse) raise(ErrorKind::SingularGram, "trace form Gram matrix is singular");

    std::vector<Element> dual;
    for (int k = 0; k < l; ++k) {
        Element e = zero();
        for (int j = 0; j < l; ++j) e = add(e, scale((*inverse)(k, j), basis[static_cast<std::size_t>(j)]));
        dual.push_back(e);
    }
    dual_ = DualBasis{std::move(gram), std::move(*inverse), std::move(dual)};
}

Element GaloisField::generator() const {
    if (degree_ == 1) return from_int(-modulus_[0]);
    return Element{static_cast<std::uint32_t>(p_)};
}

Element GaloisField::element(std::uint32_t index) const {
    if (index >= order_) raise(ErrorKind::Parse, "element index " + std::to_string(index) + " out of range");
    return Element{index};
}

Element GaloisField::from_int(long long value) const { return Element{static_cast<std::uint32_t>(mod(value, p_))}; }

Element GaloisField::from_coeffs(std::span<const int> c) const {
    if (static_cast<int>(c.size()) != degree_) {
        raise(ErrorKind::Parse, "expected " + std::to_string(degree_) + " coefficients");
    }
    return Element{index_of(c)};
}

std::vector<int> GaloisField::coeffs(Element a) const {
    std::vector<int> out(static_cast<std::size_t>(degree_));
    for (int j = 0; j < degree_; ++j) out[static_cast<std::size_t>(j)] = coeff(a, j);
    return out;
}

std::vector<Element> GaloisField::elements() const {
    std::vector<Element> out(order_);
    for (std::uint32_t i = 0; i < order_; ++i) out[i] = Element{i};
    return out;
}

Element GaloisField::add(Element a, Element b) const {
    std::uint32_t idx = 0;
    for (int j = 0; j < degree_; ++j) {
        int s = coeff(a, j) + coeff(b, j);
        if (s >= p_) s -= p_;
        idx += static_cast<std::uint32_t>(s) * powers_of_p_[static_cast<std::size_t>(j)];
    }
    return Element{idx};
}

Element GaloisField::neg(Element a) const {
    std::uint32_t idx = 0;
    for (int j = 0; j < degree_; ++j) {
        const int c = coeff(a, j);
        idx += static_cast<std::uint32_t>(c == 0 ? 0 : p_ - c) * powers_of_p_[static_cast<std::size_t>(j)];
    }
    return Element{idx};
}

Element GaloisField::sub(Element a, Element b) const { return add(a, neg(b)); }

Element GaloisField::scale(long long c, Element a) const {
    const int s = mod(c, p_);
    std::uint32_t idx = 0;
    for (int j = 0; j < degree_; ++j) {
        idx += static_cast<std::uint32_t>(mod(static_cast<long long>(coeff(a, j)) * s, p_)) *
               powers_of_p_[static_cast<std::size_t>(j)];
    }
    return Element{idx};
}

Element GaloisField::mul(Element a, Element b) const {
    if (a.index == 0 || b.index == 0) return zero();
    return Element{exp_[log_[a.index] + log_[b.index]]};
}

Element GaloisField::inv(Element a) const {
    if (a.index == 0) raise(ErrorKind::DivisionByZero, "zero has no inverse");
    const std::uint32_t group = order_ - 1;
    return Element{exp_[(group - log_[a.index]) % group]};
}

Element GaloisField::div(Element a, Element b) const { return mul(a, inv(b)); }

Element GaloisField::pow(Element a, long long exponent) const {
    if (a.index == 0) {
        if (exponent > 0) return zero();
        if (exponent == 0) return one();
        raise(ErrorKind::DivisionByZero, "negative power of zero");
    }
    const long long group = static_cast<long long>(order_) - 1;
    long long e = (static_cast<long long>(log_[a.index]) * (exponent % group)) % group;
    if (e < 0) e += group;
    return Element{exp_[static_cast<std::size_t>(e)]};
}

Element GaloisField::frobenius(Element a, long long k) const {
    long long steps = k % degree_;
    if (steps < 0) steps += degree_;
    for (long long i = 0; i < steps; ++i) a = Element{frob_[a.index]};
    return a;
}

bool GaloisField::in_subfield(Element a, int d) const {
    if (!is_divisor(d)) raise(ErrorKind::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(degree_));
    return frobenius(a, d) == a;
}

int GaloisField::subfield_trace(Element a, int d) const {
    if (!in_subfield(a, d)) raise(ErrorKind::NotInSubfield, format(a) + " is not in GF(p^" + std::to_string(d) + ")");
    Element sum = zero();
    Element conj = a;
    for (int k = 0; k < d; ++k) {
        sum = add(sum, conj);
        conj = Element{frob_[conj.index]};
    }
    return static_cast<int>(sum.index);
}

std::vector<int> GaloisField::divisors() const {
    std::vector<int> out;
    for (int d = 1; d <= degree_; ++d) {
        if (degree_ % d == 0) out.push_back(d);
    }
    return out;
}

std::vector<Element> GaloisField::subfield_elements(int d) const {
    if (!is_divisor(d)) raise(ErrorKind::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(degree_));
    std::vector<Element> out;
    for (std::uint32_t i = 0; i < order_; ++i) {
        if (frobenius(Element{i}, d).index == i) out.push_back(Element{i});
    }
    return out;
}

std::vector<int> GaloisField::galois_group(int d) const {
    if (!is_divisor(d)) raise(ErrorKind::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(degree_));
    std::vector<int> out;
    for (int k = d; k <= degree_; k += d) out.push_back(k);
    return out;
}

Components GaloisField::components(Element a) const {
    Components c;
    c.standard.reserve(static_cast<std::size_t>(degree_));
    c.dual.reserve(static_cast<std::size_t>(degree_));
    Element eps_power = one();
    for (int j = 0; j < degree_; ++j) {
        c.standard.push_back(trace(mul(a, dual_.elements[static_cast<std::size_t>(j)])));
        c.dual.push_back(trace(mul(a, eps_power)));
        eps_power = mul(eps_power, generator());
    }
    return c;
}

int GaloisField::half() const {
    if (p_ == 2) raise(ErrorKind::EvenCharacteristic, "2 is not invertible in characteristic 2");
    return (p_ + 1) / 2;
}

std::string GaloisField::format(Element a) const {
    std::ostringstream out;
    for (int j = 0; j < degree_; ++j) {
        if (j) out << ',';
        out << coeff(a, j);
    }
    return out.str();
}

Element GaloisField::parse(std::string_view text) const {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        long long v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
            raise(ErrorKind::Parse, "bad integer '" + std::string(s) + "'");
        }
        return v;
    };
    text = trim(text);
    if (text.find(',') == std::string_view::npos) {
        const long long v = parse_int(text);
        if (v < 0 || v >= static_cast<long long>(order_)) {
            raise(ErrorKind::Parse, "element index " + std::string(text) + " out of range");
        }
        return Element{static_cast<std::uint32_t>(v)};
    }
    std::vector<int> c;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        c.push_back(mod(parse_int(text.substr(start, comma - start)), p_));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return from_coeffs(c);
}

}  // namespace gfharm
