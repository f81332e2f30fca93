#include "pp/poly.hpp"

#include <algorithm>
#include <bit>

namespace pp {

namespace {

constexpr uint64_t kEvenBits = 0x5555555555555555ull;
constexpr uint64_t kOddBits = 0xaaaaaaaaaaaaaaaaull;

// Compress the even-indexed bits of w into the low 32 bits.
uint64_t compress_even(uint64_t w) {
    w &= kEvenBits;
    w = (w | (w >> 1)) & 0x3333333333333333ull;
    w = (w | (w >> 2)) & 0x0f0f0f0f0f0f0f0full;
    w = (w | (w >> 4)) & 0x00ff00ff00ff00ffull;
    w = (w | (w >> 8)) & 0x0000ffff0000ffffull;
    w = (w | (w >> 16)) & 0x00000000ffffffffull;
    return w;
}

// Spread the low 32 bits of w to even positions.
uint64_t spread_even(uint64_t w) {
    w &= 0x00000000ffffffffull;
    w = (w | (w << 16)) & 0x0000ffff0000ffffull;
    w = (w | (w << 8)) & 0x00ff00ff00ff00ffull;
    w = (w | (w << 4)) & 0x0f0f0f0f0f0f0f0full;
    w = (w | (w << 2)) & 0x3333333333333333ull;
    w = (w | (w << 1)) & kEvenBits;
    return w;
}

}  // namespace

void Poly::normalize() noexcept {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

Poly Poly::monomial(uint64_t k) {
    std::vector<uint64_t> w(k / 64 + 1, 0);
    w[k / 64] = 1ull << (k % 64);
    return Poly(std::move(w));
}

Poly Poly::from_words(std::vector<uint64_t> words) { return Poly(std::move(words)); }

uint64_t Poly::degree() const {
    if (w_.empty()) raise(errc::domain, "degree of the zero polynomial is undefined");
    return 64 * (w_.size() - 1) + (63 - static_cast<uint64_t>(std::countl_zero(w_.back())));
}

bool Poly::coeff(uint64_t i) const noexcept {
    uint64_t word = i / 64;
    if (word >= w_.size()) return false;
    return (w_[word] >> (i % 64)) & 1;
}

void Poly::set_coeff(uint64_t i, bool value) {
    uint64_t word = i / 64;
    if (word >= w_.size()) {
        if (!value) return;
        w_.resize(word + 1, 0);
    }
    if (value)
        w_[word] |= 1ull << (i % 64);
    else
        w_[word] &= ~(1ull << (i % 64));
    normalize();
}

uint64_t Poly::weight() const noexcept {
    uint64_t n = 0;
    for (uint64_t w : w_) n += static_cast<uint64_t>(std::popcount(w));
    return n;
}

Poly Poly::shifted(uint64_t k) const {
    if (is_zero() || k == 0) return *this;
    uint64_t words = k / 64, bits = k % 64;
    std::vector<uint64_t> out(w_.size() + words + 1, 0);
    for (size_t i = 0; i < w_.size(); ++i) {
        out[i + words] ^= w_[i] << bits;
        if (bits) out[i + words + 1] ^= w_[i] >> (64 - bits);
    }
    return Poly(std::move(out));
}

void Poly::xor_shifted(const Poly& q, uint64_t k) {
    uint64_t words = k / 64, bits = k % 64;
    size_t need = q.w_.size() + words + (bits ? 1 : 0);
    if (w_.size() < need) w_.resize(need, 0);
    for (size_t i = 0; i < q.w_.size(); ++i) {
        w_[i + words] ^= q.w_[i] << bits;
        if (bits) w_[i + words + 1] ^= q.w_[i] >> (64 - bits);
    }
    normalize();
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (w_.size() < rhs.w_.size()) w_.resize(rhs.w_.size(), 0);
    for (size_t i = 0; i < rhs.w_.size(); ++i) w_[i] ^= rhs.w_[i];
    normalize();
    return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly out = a;
    out += b;
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    const Poly& lo = (a.w_.size() <= b.w_.size()) ? a : b;
    const Poly& hi = (a.w_.size() <= b.w_.size()) ? b : a;
    Poly out;
    out.w_.assign(lo.w_.size() + hi.w_.size(), 0);
    for (size_t i = 0; i < lo.w_.size(); ++i) {
        uint64_t w = lo.w_[i];
        while (w) {
            int j = std::countr_zero(w);
            w &= w - 1;
            out.xor_shifted(hi, 64 * i + static_cast<uint64_t>(j));
        }
    }
    out.normalize();
    return out;
}

std::strong_ordering Poly::operator<=>(const Poly& rhs) const noexcept {
    if (w_.size() != rhs.w_.size()) return w_.size() <=> rhs.w_.size();
    for (size_t i = w_.size(); i-- > 0;)
        if (w_[i] != rhs.w_[i]) return w_[i] <=> rhs.w_[i];
    return std::strong_ordering::equal;
}

uint64_t Poly::hash() const noexcept {
    uint64_t h = 0xcbf29ce484222325ull;
    for (uint64_t w : w_) {
        h ^= w;
        h *= 0x100000001b3ull;
    }
    return h;
}

DivRem divrem(const Poly& p, const Poly& q) {
    if (q.is_zero()) raise(errc::domain, "division by the zero polynomial");
    DivRem out;
    out.rem = p;
    if (p.is_zero()) return out;
    uint64_t dq = q.degree();
    while (!out.rem.is_zero() && out.rem.degree() >= dq) {
        uint64_t shift = out.rem.degree() - dq;
        out.rem.xor_shifted(q, shift);
        out.quot.set_coeff(shift, true);
    }
    return out;
}

Poly exact_div(const Poly& p, const Poly& q) {
    DivRem dr = divrem(p, q);
    if (!dr.rem.is_zero()) raise(errc::internal, "exact_div: nonzero remainder");
    return dr.quot;
}

Poly gcd(Poly p, Poly q) {
    if (p.is_zero() && q.is_zero()) raise(errc::domain, "gcd(0, 0) is undefined");
    while (!q.is_zero()) {
        Poly r = divrem(p, q).rem;
        p = std::move(q);
        q = std::move(r);
    }
    return p;
}

Poly pow(const Poly& p, uint64_t e) {
    Poly base = p, out = Poly::one();
    while (e) {
        if (e & 1) out *= base;
        e >>= 1;
        if (e) base = square(base);
    }
    return out;
}

Poly square(const Poly& p) {
    Poly out;
    out.w_.assign(2 * p.w_.size(), 0);
    for (size_t i = 0; i < p.w_.size(); ++i) {
        out.w_[2 * i] = spread_even(p.w_[i]);
        out.w_[2 * i + 1] = spread_even(p.w_[i] >> 32);
    }
    out.normalize();
    return out;
}

Poly conjugate(const Poly& p) {
    if (p.is_zero()) return p;
    // Horner: r <- r*(x+1) + c_i, from the top coefficient down.
    Poly r;
    Poly one = Poly::one();
    for (uint64_t i = p.degree() + 1; i-- > 0;) {
        r = r.shifted(1) + r;
        if (p.coeff(i)) r += one;
    }
    return r;
}

Poly derivative(const Poly& p) {
    std::vector<uint64_t> w(p.words().size(), 0);
    for (size_t i = 0; i < w.size(); ++i) w[i] = (p.words()[i] & 0xaaaaaaaaaaaaaaaaull) >> 1;
    return Poly::from_words(std::move(w));
}

int alpha(const Poly& s, uint64_t l) {
    if (s.is_zero()) raise(errc::domain, "alpha: zero polynomial");
    uint64_t d = s.degree();
    if (l > d) raise(errc::domain, "alpha: index exceeds the degree");
    return s.coeff(d - l) ? 1 : 0;
}

bool is_square(const Poly& s) noexcept {
    for (uint64_t w : s.words())
        if (w & 0xaaaaaaaaaaaaaaaaull) return false;
    return true;
}

Poly sqrt_exact(const Poly& s) {
    if (!is_square(s)) raise(errc::domain, "sqrt of a non-square polynomial");
    const auto& in = s.words();
    std::vector<uint64_t> w((in.size() + 1) / 2, 0);
    for (size_t i = 0; i < in.size(); ++i) {
        uint64_t half = compress_even(in[i]);
        w[i / 2] |= (i % 2) ? (half << 32) : half;
    }
    return Poly::from_words(std::move(w));
}

std::optional<SplitExponents> split_exponents(const Poly& s) {
    if (s.is_zero()) raise(errc::domain, "split test on the zero polynomial");
    // u = multiplicity of the factor x = index of the lowest set coefficient.
    const auto& w = s.words();
    uint64_t u = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i]) {
            u = 64 * i + static_cast<uint64_t>(std::countr_zero(w[i]));
            break;
        }
    }
    uint64_t words = u / 64, bits = u % 64;
    std::vector<uint64_t> shifted;
    shifted.reserve(w.size() - words);
    for (size_t i = words; i < w.size(); ++i) {
        uint64_t v = w[i] >> bits;
        if (bits && i + 1 < w.size()) v |= w[i + 1] << (64 - bits);
        shifted.push_back(v);
    }
    Poly rest = Poly::from_words(std::move(shifted));
    // rest(0) = 1, so rest = (x+1)^v iff conjugate(rest) = x^v.
    uint64_t v = rest.degree();
    if (conjugate(rest) == Poly::monomial(v)) return SplitExponents{u, v};
    return std::nullopt;
}

}  // namespace pp
