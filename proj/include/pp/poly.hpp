#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pp {

enum class errc { parse, domain, limit, io, internal };

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

class Poly;
struct DivRem;
DivRem divrem(const Poly& p, const Poly& q);
Poly square(const Poly& p);

/// Polynomial over GF(2), dense bit-packed: bit i of word i/64 is the
/// coefficient of x^i. The word vector is normalized (no trailing zero
/// words); the zero polynomial is the empty vector and has no degree.
class Poly {
public:
    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly one() { return monomial(0); }
    static Poly x() { return monomial(1); }
    static Poly monomial(uint64_t k);
    static Poly from_words(std::vector<uint64_t> words);

    bool is_zero() const noexcept { return w_.empty(); }
    bool is_one() const noexcept { return w_.size() == 1 && w_[0] == 1; }

    /// Degree of a nonzero polynomial; the zero polynomial has none.
    uint64_t degree() const;

    bool coeff(uint64_t i) const noexcept;
    void set_coeff(uint64_t i, bool value);

    uint64_t weight() const noexcept;  // number of nonzero coefficients

    const std::vector<uint64_t>& words() const noexcept { return w_; }

    /// Multiply by x^k.
    Poly shifted(uint64_t k) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs) { *this = *this * rhs; return *this; }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);

    bool operator==(const Poly&) const = default;

    /// Total order by (degree, numeric value of the coefficient bits).
    std::strong_ordering operator<=>(const Poly& rhs) const noexcept;

    /// Stable 64-bit content hash (used to derive per-input rng streams).
    uint64_t hash() const noexcept;

private:
    explicit Poly(std::vector<uint64_t> w) : w_(std::move(w)) { normalize(); }
    void normalize() noexcept;
    void xor_shifted(const Poly& q, uint64_t k);

    std::vector<uint64_t> w_;

    friend DivRem divrem(const Poly& p, const Poly& q);
    friend Poly square(const Poly& p);
};

struct DivRem {
    Poly quot;
    Poly rem;
};

/// Exact division; raises if the remainder is nonzero.
Poly exact_div(const Poly& p, const Poly& q);

/// Euclidean gcd (monic by construction over GF(2)). gcd(0,0) is an error.
Poly gcd(Poly p, Poly q);

/// Repeated squaring; pow(p, 0) = 1 for every p.
Poly pow(const Poly& p, uint64_t e);

Poly square(const Poly& p);

/// Substitution x -> x+1 (an involutive ring automorphism).
Poly conjugate(const Poly& p);

/// Formal derivative (characteristic 2: even-exponent terms vanish).
Poly derivative(const Poly& p);

/// Coefficient of x^{deg(s)-l}, read from the top. Requires s != 0 and
/// l <= deg(s); out-of-range l is an error rather than a silent zero.
int alpha(const Poly& s, uint64_t l);

/// True iff every monomial exponent is even, i.e. s is a square.
bool is_square(const Poly& s) noexcept;

/// Square root of a square; error for non-squares.
Poly sqrt_exact(const Poly& s);

struct SplitExponents {
    uint64_t u;
    uint64_t v;
};

/// Exponents (u, v) when s = x^u (x+1)^v, nullopt otherwise. s must be
/// nonzero; the constant 1 splits with (0, 0).
std::optional<SplitExponents> split_exponents(const Poly& s);

}  // namespace pp
