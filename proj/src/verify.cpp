#include "pp/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "pp/divisor.hpp"
#include "pp/intarith.hpp"
#include "pp/search.hpp"
#include "pp/text.hpp"
#include "parallel.hpp"

namespace pp {

namespace {

CheckResult pass(std::string id, std::string anchor, std::string statement) {
    return {std::move(id), CheckStatus::pass, statement, statement, std::move(anchor)};
}

CheckResult fail(std::string id, std::string anchor, std::string expected, std::string actual) {
    return {std::move(id), CheckStatus::fail, std::move(expected), std::move(actual),
            std::move(anchor)};
}

bool all_factors_mersenne(const Factorization& f) {
    return std::all_of(f.entries().begin(), f.entries().end(), [](const FactorEntry& e) {
        return as_mersenne_prime_unchecked(e.prime).has_value();
    });
}

CheckResult check_unitary_list() {
    const char* anchor = "unitary perfect classes U_j^(2^n)";
    for (uint32_t j = 0; j < unitary_base_list().size(); ++j) {
        Poly u = unitary_base_list()[j];
        for (uint32_t n = 0; n <= 2; ++n) {
            if (sigma_star(u) != u)
                return fail("unitary-U", anchor,
                            "sigma*(U" + std::to_string(j + 1) + "^(2^" + std::to_string(n) +
                                ")) fixed",
                            "sigma* moved the polynomial");
            u = square(u);
        }
    }
    return pass("unitary-U", anchor, "sigma*(U_j^(2^n)) = U_j^(2^n) for j=1..9, n=0..2");
}

CheckResult check_trivial_family() {
    const char* anchor = "trivial perfect family (x^2+x)^(2^n-1)";
    for (uint32_t n = 1; n <= 6; ++n) {
        Poly t = trivial_perfect(n);
        if (sigma(t) != t)
            return fail("trivial-family", anchor, "sigma fixes n=" + std::to_string(n), "moved");
    }
    return pass("trivial-family", anchor, "sigma((x^2+x)^(2^n-1)) fixed for n=1..6");
}

CheckResult check_sigma_m2_2() {
    // The printed display says M1*M3; computation gives M1*conj(M3).
    const char* anchor = "sigma(M2^2) display";
    Poly computed = sigma_prime_power(mersenne_poly({1, 2}), 2);
    Poly printed = mersenne_poly({1, 1}) * mersenne_poly({1, 3});
    Poly corrected = mersenne_poly({1, 1}) * mersenne_poly({3, 1});
    CheckResult row;
    row.check_id = "sigma-M2-2";
    row.anchor = anchor;
    row.expected = "M(1,1)*M(1,3) as printed";
    row.actual = format_poly(computed, TextStyle::product);
    if (computed == printed)
        row.status = CheckStatus::pass;
    else if (computed == corrected)
        row.status = CheckStatus::discrepancy;  // printed display is off by a conjugate
    else
        row.status = CheckStatus::fail;
    return row;
}

CheckResult check_display(std::string id, std::string anchor, const Poly& computed,
                          const std::string& display) {
    Poly expected = parse_poly(display);
    if (computed == expected) return pass(std::move(id), std::move(anchor), display);
    return fail(std::move(id), std::move(anchor), display,
                format_poly(computed, TextStyle::product));
}

CheckResult check_u_display(std::string id, uint64_t h, const std::string& display,
                            bool expect_square) {
    Poly u = u_iterate({1, 2}, h);
    std::string anchor = "U_" + std::to_string(2 * h) + " display (does not split)";
    Poly expected = parse_poly(display);
    if (u != expected)
        return fail(std::move(id), std::move(anchor), display, format_poly(u, TextStyle::product));
    if (split_exponents(u))
        return fail(std::move(id), std::move(anchor), display + " must not split", "it splits");
    if (is_square(u) != expect_square)
        return fail(std::move(id), std::move(anchor), "square flag", "mismatch");
    return pass(std::move(id), std::move(anchor), display);
}

CheckResult check_canaday() {
    const char* anchor = "sigma(x^a) all-Mersenne iff a in {2,4,6}";
    for (uint64_t a = 1; a <= 20; ++a) {
        bool all = all_factors_mersenne(factorize(sigma_prime_power(Poly::x(), a)));
        bool expected = a == 2 || a == 4 || a == 6;
        if (all != expected)
            return fail("canaday-sigma-x", anchor, "a=" + std::to_string(a) + " -> " +
                        (expected ? "all-Mersenne" : "mixed"), all ? "all-Mersenne" : "mixed");
    }
    return pass("canaday-sigma-x", anchor, "exactly a in {2,4,6} for a <= 20");
}

CheckResult check_alpha_window() {
    const char* anchor = "alpha_l(sigma(M^(2h))) coefficient windows";
    for (MersennePair m : enumerate_mersenne(8)) {
        Poly M = mersenne_poly(m);
        uint64_t w = m.a + m.b;
        for (uint64_t h = 1; h <= 10; ++h) {
            Poly s = sigma_prime_power(M, 2 * h);
            Poly top = pow(M, 2 * h);
            Poly top2 = top + pow(M, 2 * h - 1);
            for (uint64_t l = 1; l <= w - 1; ++l)
                if (alpha(s, l) != alpha(top, l))
                    return fail("alpha-window", anchor, "window 1 match", "mismatch");
            for (uint64_t l = w; l <= 2 * w - 1; ++l)
                if (alpha(s, l) != alpha(top2, l))
                    return fail("alpha-window", anchor, "window 2 match", "mismatch");
        }
    }
    return pass("alpha-window", anchor, "both windows for all Mersenne primes of degree <= 8, h <= 10");
}

CheckResult check_p_reduction() {
    const char* anchor = "sigma(M^(k-1)) divides sigma(M^(2h)) for k | 2h+1";
    for (MersennePair m : enumerate_mersenne(6)) {
        Poly M = mersenne_poly(m);
        for (uint64_t h = 1; h <= 15; ++h) {
            Poly big = sigma_prime_power(M, 2 * h);
            for (uint64_t k = 1; k <= 2 * h + 1; ++k) {
                if ((2 * h + 1) % k) continue;
                if (!divrem(big, sigma_prime_power(M, k - 1)).rem.is_zero())
                    return fail("p-reduction", anchor, "exact division", "nonzero remainder");
            }
        }
    }
    return pass("p-reduction", anchor, "all divisor pairs for Mersenne degree <= 6, h <= 15");
}

CheckResult check_anydivides() {
    const char* anchor = "every degree-2 irreducible != M divides sigma(M^2)";
    Poly m1 = mersenne_poly({1, 1});
    for (MersennePair m : enumerate_mersenne(8)) {
        if (m == MersennePair{1, 1}) continue;
        Poly s = sigma_prime_power(mersenne_poly(m), 2);
        if (!divrem(s, m1).rem.is_zero())
            return fail("anydivides", anchor, "x^2+x+1 divides", "does not divide");
    }
    return pass("anydivides", anchor, "x^2+x+1 divides sigma(M^2) for Mersenne M != M1, degree <= 8");
}

CheckResult check_no_mersenne_8k() {
    const char* anchor = "no Mersenne prime of degree 8, 16 or 24";
    auto all = enumerate_mersenne(24);
    for (MersennePair m : all) {
        uint64_t d = m.a + m.b;
        if (d == 8 || d == 16 || d == 24)
            return fail("no-mersenne-8k", anchor, "empty degree slices",
                        "found degree " + std::to_string(d));
    }
    return pass("no-mersenne-8k", anchor, "degree slices 8, 16, 24 are empty");
}

CheckResult check_counting() {
    const char* anchor = "phi(m) < N2(m) for m >= 4";
    for (uint64_t m = 4; m <= 64; ++m)
        if (euler_phi(m) >= count_irreducibles(m))
            return fail("counting", anchor, "phi < N2", "violated at m=" + std::to_string(m));
    return pass("counting", anchor, "phi(m) < N2(m) for 4 <= m <= 64");
}

CheckResult check_ord2_table() {
    const char* anchor = "ord_p(2) values: 97, 673, Fermat primes";
    const std::pair<uint64_t, uint64_t> table[] = {{97, 48}, {673, 48}, {17, 8}, {257, 16}, {65537, 32}};
    for (auto [p, expected] : table) {
        uint64_t got = ord2_mod(p);
        if (got != expected)
            return fail("ord2-table", anchor, "ord_" + std::to_string(p) + "(2) = " + std::to_string(expected),
                        std::to_string(got));
    }
    return pass("ord2-table", anchor, "ord2: 97->48, 673->48, 17->8, 257->16, 65537->32");
}

CheckResult check_m3_alpha() {
    const char* anchor = "sigma(M3^(2h)) keeps a non-Mersenne factor";
    Poly M3 = mersenne_poly({1, 3});
    for (uint64_t h = 1; h <= 12; ++h) {
        if (all_factors_mersenne(factorize(sigma_prime_power(M3, 2 * h))))
            return fail("m3-alpha", anchor, "non-Mersenne factor at every h <= 12",
                        "all factors Mersenne at h=" + std::to_string(h));
    }
    return pass("m3-alpha", anchor, "non-Mersenne factor present for h = 1..12");
}

CheckResult check_theorem2_odd() {
    const char* anchor = "odd Mersenne-only powers with a qualifying 2h+1 are imperfect";
    auto qualifying = [](uint64_t h) {
        for (const auto& [p, e] : factor_u64(2 * h + 1)) {
            bool mersenne_number = std::has_single_bit(p + 1);
            bool fermat = classify_prime(p).is_fermat_prime;
            if ((mersenne_number && p != 7) || (fermat && p != 5)) return true;
        }
        return false;
    };
    auto primes = enumerate_mersenne(8);
    for (size_t i = 0; i < primes.size(); ++i) {
        for (size_t j = i; j < primes.size(); ++j) {
            for (uint64_t hi : {1, 2, 4, 8}) {
                for (uint64_t hj : {1, 2, 4, 8}) {
                    if (!qualifying(hi) && !qualifying(hj)) continue;
                    Poly Pi = mersenne_poly(primes[i]), Pj = mersenne_poly(primes[j]);
                    Poly a, s;
                    if (i == j) {
                        if (hi != hj) continue;
                        a = pow(Pi, 2 * hi);
                        s = sigma_prime_power(Pi, 2 * hi);
                    } else {
                        a = pow(Pi, 2 * hi) * pow(Pj, 2 * hj);
                        s = sigma_prime_power(Pi, 2 * hi) * sigma_prime_power(Pj, 2 * hj);
                    }
                    if (a.degree() > 80) continue;
                    if (s == a)
                        return fail("theorem2-odd", anchor, "no perfect instance",
                                    "perfect: " + format_poly(a, TextStyle::product));
                }
            }
        }
    }
    return pass("theorem2-odd", anchor, "no perfect instance among the sampled odd candidates");
}

}  // namespace

const char* check_status_name(CheckStatus status) noexcept {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::discrepancy: return "discrepancy";
    }
    return "?";
}

CheckResult check_perfect_list(std::span<const Poly> list) {
    const char* anchor = "perfect polynomial list T_1..T_11";
    for (size_t i = 0; i < list.size(); ++i) {
        Poly s = sigma(list[i]);
        if (s != list[i])
            return fail("perfect-T", anchor,
                        "sigma(T" + std::to_string(i + 1) + ") = " + to_hex(list[i]),
                        "sigma(T" + std::to_string(i + 1) + ") = " + to_hex(s));
    }
    return pass("perfect-T", anchor, "sigma(T_i) = T_i for i = 1..11");
}

std::vector<CheckResult> run_paper_suite(uint32_t jobs) {
    const std::vector<std::function<CheckResult()>> checks = {
        [] { return check_perfect_list(perfect_list()); },
        check_unitary_list,
        check_trivial_family,
        check_sigma_m2_2,
        [] {
            return check_display("sigma-M2-6", "sigma(M2^6) display",
                                 sigma_prime_power(mersenne_poly({1, 2}), 6),
                                 "(x^3+x^2+1)*(x^6+x^5+1)*(x^9+x^7+x^5+x+1)");
        },
        [] {
            return check_display("sigma-M2-8", "sigma(M2^8) display",
                                 sigma_prime_power(mersenne_poly({1, 2}), 8),
                                 "(x^2+x+1)*(x^4+x^3+1)*(x^6+x+1)*(x^12+x^8+x^7+x^4+1)");
        },
        [] { return check_u_display("u4-display", 2, "x^3*(x+1)^6*(x^3+x+1)", false); },
        [] { return check_u_display("u6-display", 3, "x^8*(x+1)^4*(x^3+x+1)^2", true); },
        check_canaday,
        check_alpha_window,
        check_p_reduction,
        check_anydivides,
        check_no_mersenne_8k,
        check_counting,
        check_ord2_table,
        check_m3_alpha,
        check_theorem2_odd,
    };
    std::vector<CheckResult> out;
    out.reserve(checks.size());
    detail::run_partitions_ordered<CheckResult>(
        static_cast<uint32_t>(checks.size()), 0, jobs,
        [&](uint32_t i) { return checks[i](); },
        [&](uint32_t, CheckResult& row) {
            out.push_back(std::move(row));
            return true;
        });
    std::sort(out.begin(), out.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
    return out;
}

}  // namespace pp
