#include "pp/text.hpp"

#include <cctype>

#include "pp/factor.hpp"
#include "pp/mersenne.hpp"

namespace pp {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Poly run() {
        Poly out = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        raise(errc::parse, "parse error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    uint64_t integer() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an integer");
        uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<uint64_t>(text_[pos_] - '0');
            if (value > (1ull << 32)) fail("integer too large");
            ++pos_;
        }
        return value;
    }

    Poly expr() {
        Poly out = term();
        while (eat('+')) out += term();
        return out;
    }

    Poly term() {
        Poly out = factor();
        while (eat('*')) out *= factor();
        return out;
    }

    Poly factor() {
        Poly base = atom();
        if (eat('^')) return pow(base, integer());
        return base;
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            return Poly::x();
        }
        if (c == 'M') {
            ++pos_;
            if (!eat('(')) fail("expected '(' after M");
            uint64_t a = integer();
            if (!eat(',')) fail("expected ',' in M(a,b)");
            uint64_t b = integer();
            if (!eat(')')) fail("expected ')' in M(a,b)");
            if (a == 0 || b == 0) fail("M(a,b) requires a, b >= 1");
            return mersenne_poly({a, b});
        }
        if (c == '0' && pos_ + 1 < text_.size() && (text_[pos_ + 1] == 'x' || text_[pos_ + 1] == 'X'))
            return hex_atom();
        if (c == '0') {
            ++pos_;
            return Poly::zero();
        }
        if (c == '1') {
            ++pos_;
            return Poly::one();
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Poly hex_atom() {
        pos_ += 2;
        size_t start = pos_;
        while (pos_ < text_.size() && std::isxdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected hex digits after 0x");
        // Digits run most-significant first; bit i is the coefficient of x^i.
        size_t ndigits = pos_ - start;
        std::vector<uint64_t> words((ndigits + 15) / 16, 0);
        for (size_t k = 0; k < ndigits; ++k) {
            char d = text_[pos_ - 1 - k];
            uint64_t v = std::isdigit(static_cast<unsigned char>(d))
                             ? static_cast<uint64_t>(d - '0')
                             : static_cast<uint64_t>(std::tolower(d) - 'a' + 10);
            words[k / 16] |= v << (4 * (k % 16));
        }
        return Poly::from_words(std::move(words));
    }

    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).run(); }

std::string to_algebraic(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (uint64_t i = p.degree() + 1; i-- > 0;) {
        if (!p.coeff(i)) continue;
        if (!out.empty()) out += '+';
        if (i == 0)
            out += '1';
        else if (i == 1)
            out += 'x';
        else
            out += "x^" + std::to_string(i);
    }
    return out;
}

std::string to_hex(const Poly& p) {
    if (p.is_zero()) return "0x0";
    static const char* digits = "0123456789abcdef";
    const auto& w = p.words();
    std::string out;
    for (size_t i = w.size(); i-- > 0;) {
        for (int nib = 15; nib >= 0; --nib) {
            uint64_t v = (w[i] >> (4 * nib)) & 0xf;
            if (out.empty() && v == 0) continue;
            out += digits[v];
        }
    }
    return "0x" + out;
}

std::string format_poly(const Poly& p, TextStyle style) {
    switch (style) {
        case TextStyle::algebraic:
            return to_algebraic(p);
        case TextStyle::hex:
            return to_hex(p);
        case TextStyle::product: {
            if (p.is_zero()) return "0";
            if (p.is_one()) return "1";
            std::string out;
            Factorization factors = factorize(p);
            for (const auto& [prime, mult] : factors.entries()) {
                if (!out.empty()) out += '*';
                if (prime == Poly::x())
                    out += 'x';
                else if (prime == Poly::x() + Poly::one())
                    out += "(x+1)";
                else if (auto m = as_mersenne_prime(prime))
                    out += "M(" + std::to_string(m->a) + "," + std::to_string(m->b) + ")";
                else
                    out += "(" + to_algebraic(prime) + ")";
                out += "^" + std::to_string(mult);
            }
            return out;
        }
    }
    raise(errc::internal, "unknown text style");
}

}  // namespace pp
