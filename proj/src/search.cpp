#include "pp/search.hpp"

#include <algorithm>
#include <bit>

#include "pp/intarith.hpp"
#include "parallel.hpp"

namespace pp {

namespace {

const std::vector<MersennePair>& small_family() {
    static const std::vector<MersennePair> five = {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}};
    return five;
}

bool in_small_family(MersennePair m) {
    const auto& five = small_family();
    return std::find(five.begin(), five.end(), m) != five.end();
}

bool factors_mersenne_or_linear(const Factorization& f) {
    for (const auto& [prime, mult] : f.entries()) {
        if (prime.degree() == 1) continue;
        if (!as_mersenne_prime_unchecked(prime)) return false;
    }
    return true;
}

struct SearchTables {
    std::vector<uint64_t> exponents;  // admissible values for a and b (0 included)
    std::vector<MersennePair> primes;
    // per prime: admissible h values with the precomputed P^h and its sigma
    struct PowerRow {
        uint32_t h;
        uint64_t degree;
        Poly power;
        Poly power_sigma;
    };
    std::vector<std::vector<PowerRow>> powers;
    std::vector<Poly> x_powers, x1_powers;        // x^a, (x+1)^b for admissible exponents
    std::vector<Poly> x_sigma, x1_sigma;          // matching sigma factors
};

// sigma(x^a)/sigma*((x+1)^b) etc. must themselves divide the candidate,
// so every exponent whose sigma leaves the split-or-Mersenne world can
// never occur in a hit. The final equality test keeps this a pure
// speedup: pruning only removes provably dead branches.
SearchTables build_tables(uint32_t max_degree, PerfectMode mode, bool prune) {
    SearchTables t;
    bool unitary = mode == PerfectMode::unitary;
    Poly X = Poly::x(), X1 = Poly::x() + Poly::one();
    t.exponents.push_back(0);
    for (uint64_t e = 1; e + 1 <= max_degree; ++e) {
        Poly s = unitary ? pow(X, e) + Poly::one() : sigma_prime_power(X, e);
        if (prune && !factors_mersenne_or_linear(factorize(s))) continue;
        t.exponents.push_back(e);
    }
    for (uint64_t e : t.exponents) {
        t.x_powers.push_back(pow(X, e));
        t.x1_powers.push_back(pow(X1, e));
        t.x_sigma.push_back(e == 0 ? Poly::one()
                                   : (unitary ? pow(X, e) + Poly::one() : sigma_prime_power(X, e)));
        t.x1_sigma.push_back(e == 0 ? Poly::one()
                                    : (unitary ? pow(X1, e) + Poly::one() : sigma_prime_power(X1, e)));
    }
    if (max_degree >= 3) {
        t.primes = enumerate_mersenne(max_degree - 1);
        std::sort(t.primes.begin(), t.primes.end(), [](MersennePair lhs, MersennePair rhs) {
            return std::pair(lhs.a + lhs.b, lhs.a) < std::pair(rhs.a + rhs.b, rhs.a);
        });
    }
    t.powers.resize(t.primes.size());
    for (size_t i = 0; i < t.primes.size(); ++i) {
        Poly P = mersenne_poly(t.primes[i]);
        uint64_t d = P.degree();
        for (uint32_t h = 1; d * h + 1 <= max_degree; ++h) {
            Poly s = unitary ? pow(P, h) + Poly::one() : sigma_prime_power(P, h);
            if (prune && !factors_mersenne_or_linear(factorize(s))) continue;
            t.powers[i].push_back({h, d * h, pow(P, h), std::move(s)});
        }
    }
    return t;
}

struct SignatureSearcher {
    const SearchTables& tables;
    uint32_t max_degree;
    PerfectMode mode;
    uint32_t partition;
    std::vector<SearchHit>* out;
    std::vector<PrimePower> stack;

    void run(size_t ai, size_t bi) {
        uint64_t a = tables.exponents[ai], b = tables.exponents[bi];
        if (a + b < 1 || a + b > max_degree) return;
        Poly value = tables.x_powers[ai] * tables.x1_powers[bi];
        Poly sig = tables.x_sigma[ai] * tables.x1_sigma[bi];
        descend(0, max_degree - a - b, a, b, value, sig);
    }

    void descend(size_t from, uint64_t budget, uint64_t a, uint64_t b, const Poly& value,
                 const Poly& sig) {
        if (value == sig) {
            SearchHit hit;
            hit.polynomial = value;
            hit.a = a;
            hit.b = b;
            hit.powers = stack;
            hit.mode = mode;
            hit.classification = classify_perfect(value, mode);
            hit.indecomposable = is_indecomposable(value, mode);
            hit.partition = partition;
            out->push_back(std::move(hit));
        }
        for (size_t i = from; i < tables.primes.size(); ++i) {
            uint64_t d = tables.primes[i].a + tables.primes[i].b;
            if (d > budget) break;  // primes are degree-sorted
            for (const auto& row : tables.powers[i]) {
                if (row.degree > budget) break;
                stack.push_back({tables.primes[i], row.h});
                descend(i + 1, budget - row.degree, a, b, value * row.power, sig * row.power_sigma);
                stack.pop_back();
            }
        }
    }
};

}  // namespace

std::vector<std::string> hypothesis_tags(MersennePair m, uint32_t h) {
    std::vector<std::string> tags;
    if (m == MersennePair{1, 1} || m == MersennePair{1, 3} || m == MersennePair{3, 1})
        tags.push_back("m1-m3-family");
    if ((m == MersennePair{1, 2} || m == MersennePair{2, 1}) && h >= 2)
        tags.push_back("m2-family-h2");
    if (!in_small_family(m)) {
        bool mersenne_p = false, ord8 = false;
        for (const auto& [p, e] : factor_u64(2ull * h + 1)) {
            if (p != 7 && std::has_single_bit(p + 1)) mersenne_p = true;
            if (ord2_mod(p) % 8 == 0) ord8 = true;
        }
        if (mersenne_p) tags.push_back("mersenne-p");
        if (ord8) tags.push_back("ord8-p");
    }
    return tags;
}

std::vector<SearchHit> search_perfect(uint32_t max_degree, PerfectMode mode,
                                      const SearchOptions& options) {
    if (max_degree > kMaxSearchDegree) raise(errc::limit, "search: max_degree exceeds the cap");
    if (max_degree < 1) raise(errc::domain, "search: max_degree must be >= 1");
    SearchTables tables = build_tables(max_degree, mode, options.prune);

    uint32_t n = static_cast<uint32_t>(tables.exponents.size());
    uint32_t partitions = n * n;
    std::vector<SearchHit> all;
    detail::run_partitions_ordered<std::vector<SearchHit>>(
        partitions, options.skip_partitions, options.jobs,
        [&](uint32_t part) {
            std::vector<SearchHit> hits;
            SignatureSearcher searcher{tables, max_degree, mode, part, &hits, {}};
            searcher.run(part / n, part % n);
            return hits;
        },
        [&](uint32_t, std::vector<SearchHit>& hits) {
            for (auto& h : hits) all.push_back(std::move(h));
            return true;
        });
    return all;
}

std::vector<std::vector<MersennePair>> special_perfect_candidates(uint32_t max_degree) {
    if (max_degree > kMaxSearchDegree) raise(errc::limit, "search: max_degree exceeds the cap");
    std::vector<MersennePair> primes;
    if (max_degree >= 4) {
        primes = enumerate_mersenne(max_degree / 2);
        std::sort(primes.begin(), primes.end(), [](MersennePair lhs, MersennePair rhs) {
            return std::pair(lhs.a + lhs.b, lhs.a) < std::pair(rhs.a + rhs.b, rhs.a);
        });
    }
    std::vector<std::vector<MersennePair>> out;
    std::vector<MersennePair> stack;
    auto rec = [&](auto&& self, size_t from, uint64_t budget) -> void {
        if (!stack.empty()) out.push_back(stack);
        for (size_t i = from; i < primes.size(); ++i) {
            uint64_t d = 2 * (primes[i].a + primes[i].b);
            if (d > budget) break;
            stack.push_back(primes[i]);
            self(self, i + 1, budget - d);
            stack.pop_back();
        }
    };
    rec(rec, 0, max_degree);
    return out;
}

std::vector<SearchHit> search_special_perfect(uint32_t max_degree, const SearchOptions& options) {
    std::vector<SearchHit> hits;
    for (const auto& candidate : special_perfect_candidates(max_degree)) {
        Poly value = Poly::one(), sig = Poly::one();
        for (MersennePair m : candidate) {
            Poly P = mersenne_poly(m);
            value *= square(P);
            sig *= sigma_prime_power(P, 2);
        }
        if (value != sig) continue;
        SearchHit hit;
        hit.polynomial = value;
        hit.powers.reserve(candidate.size());
        for (MersennePair m : candidate) hit.powers.push_back({m, 2});
        hit.mode = PerfectMode::perfect;
        hit.classification = classify_perfect(value, PerfectMode::perfect);
        hit.indecomposable = is_indecomposable(value, PerfectMode::perfect);
        hits.push_back(std::move(hit));
    }
    return hits;
}

void conjecture_scan(uint32_t max_m_degree, uint32_t max_h, const SearchOptions& options,
                     const std::function<bool(const SigmaReport&)>& emit) {
    if (max_m_degree > kMaxScanDegree || max_h > kMaxScanH)
        raise(errc::limit, "conjecture_scan: bounds exceed the caps");
    if (max_m_degree < 2 || max_h < 1) raise(errc::domain, "conjecture_scan: empty range");
    std::vector<MersennePair> primes = enumerate_mersenne(max_m_degree);

    detail::run_partitions_ordered<std::vector<SigmaReport>>(
        static_cast<uint32_t>(primes.size()), options.skip_partitions, options.jobs,
        [&](uint32_t part) {
            MersennePair m = primes[part];
            Poly M = mersenne_poly(m);
            std::vector<SigmaReport> rows;
            rows.reserve(max_h);
            for (uint32_t h = 1; h <= max_h; ++h) {
                Poly S = sigma_prime_power(M, 2ull * h);
                Factorization f = factorize_cached(S, options.seed, options.cache);
                SigmaReport row;
                row.m = m;
                row.h = h;
                row.squarefree = f.squarefree();
                row.all_mersenne = true;
                Poly u = Poly::one();
                for (const auto& [prime, mult] : f.entries()) {
                    SigmaFactor sf{prime, mult, as_mersenne_prime_unchecked(prime)};
                    if (!sf.mersenne) row.all_mersenne = false;
                    u *= sigma_prime_power(prime, mult);
                    row.factors.push_back(std::move(sf));
                }
                row.split = split_exponents(u);
                row.u_splits = row.split.has_value();
                row.u_square = is_square(u);
                row.tags = hypothesis_tags(m, h);
                row.known_exception =
                    (m == MersennePair{1, 2} || m == MersennePair{2, 1}) && h == 1;
                row.seed = options.seed;
                row.partition = part;
                rows.push_back(std::move(row));
            }
            return rows;
        },
        [&](uint32_t, std::vector<SigmaReport>& rows) {
            for (const auto& row : rows)
                if (!emit(row)) return false;
            return true;
        });
}

std::vector<SigmaReport> conjecture_scan_collect(uint32_t max_m_degree, uint32_t max_h,
                                                 const SearchOptions& options) {
    std::vector<SigmaReport> out;
    conjecture_scan(max_m_degree, max_h, options, [&](const SigmaReport& row) {
        out.push_back(row);
        return true;
    });
    return out;
}

}  // namespace pp
