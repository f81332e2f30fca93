#include "perfectpoly.h"

#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "pp/cache.hpp"
#include "pp/divisor.hpp"
#include "pp/intarith.hpp"
#include "pp/jsonl.hpp"
#include "pp/search.hpp"
#include "pp/text.hpp"
#include "pp/verify.hpp"

namespace {

thread_local std::string g_last_error;

pp_status set_error(pp::errc code, const char* what) {
    g_last_error = what;
    switch (code) {
        case pp::errc::parse: return PP_ERR_PARSE;
        case pp::errc::domain: return PP_ERR_DOMAIN;
        case pp::errc::limit: return PP_ERR_LIMIT;
        case pp::errc::io: return PP_ERR_IO;
        case pp::errc::internal: return PP_ERR_INTERNAL;
    }
    return PP_ERR_INTERNAL;
}

template <typename Fn>
pp_status guarded(Fn&& fn) {
    try {
        fn();
        return PP_OK;
    } catch (const pp::error& e) {
        return set_error(e.code(), e.what());
    } catch (const std::exception& e) {
        return set_error(pp::errc::internal, e.what());
    }
}

const pp::Poly& unwrap(const pp_poly* p) { return *reinterpret_cast<const pp::Poly*>(p); }
pp_poly* wrap(pp::Poly p) { return reinterpret_cast<pp_poly*>(new pp::Poly(std::move(p))); }

struct Row {
    std::string jsonl;
    std::string display;
    uint32_t partition = 0;
};

}  // namespace

struct pp_factorization {
    pp::Factorization value;
    std::vector<pp::Poly> primes;  // stable storage for borrowed references
};

struct pp_rows {
    std::vector<Row> rows;
};

struct pp_session {
    std::unique_ptr<pp::FactorCache> cache;
    uint64_t seed = pp::kDefaultFactorSeed;
    uint32_t jobs = 1;
    uint32_t skip_partitions = 0;
    std::vector<std::string> warnings;

    pp::SearchOptions options() const {
        pp::SearchOptions o;
        o.jobs = jobs;
        o.seed = seed;
        o.cache = cache.get();
        o.skip_partitions = skip_partitions;
        return o;
    }
};

extern "C" {

const char* pp_version(void) { return "1.0.0"; }

const char* pp_last_error(void) { return g_last_error.c_str(); }

void pp_string_free(char* s) { std::free(s); }

static char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

pp_status pp_poly_parse(const char* text, pp_poly** out) {
    return guarded([&] { *out = wrap(pp::parse_poly(text)); });
}

pp_status pp_poly_format(const pp_poly* p, pp_format_style style, char** out) {
    return guarded([&] {
        pp::TextStyle s = style == PP_FORMAT_ALGEBRAIC ? pp::TextStyle::algebraic
                          : style == PP_FORMAT_HEX    ? pp::TextStyle::hex
                                                      : pp::TextStyle::product;
        *out = dup_string(pp::format_poly(unwrap(p), s));
    });
}

pp_poly* pp_poly_clone(const pp_poly* p) { return wrap(unwrap(p)); }

void pp_poly_free(pp_poly* p) { delete reinterpret_cast<pp::Poly*>(p); }

int64_t pp_poly_degree(const pp_poly* p) {
    const pp::Poly& q = unwrap(p);
    return q.is_zero() ? -1 : static_cast<int64_t>(q.degree());
}

int pp_poly_is_zero(const pp_poly* p) { return unwrap(p).is_zero() ? 1 : 0; }

int pp_poly_equal(const pp_poly* a, const pp_poly* b) { return unwrap(a) == unwrap(b) ? 1 : 0; }

pp_status pp_poly_add(const pp_poly* a, const pp_poly* b, pp_poly** out) {
    return guarded([&] { *out = wrap(unwrap(a) + unwrap(b)); });
}

pp_status pp_poly_mul(const pp_poly* a, const pp_poly* b, pp_poly** out) {
    return guarded([&] { *out = wrap(unwrap(a) * unwrap(b)); });
}

pp_status pp_poly_divrem(const pp_poly* a, const pp_poly* b, pp_poly** quot, pp_poly** rem) {
    return guarded([&] {
        pp::DivRem dr = pp::divrem(unwrap(a), unwrap(b));
        *quot = wrap(std::move(dr.quot));
        *rem = wrap(std::move(dr.rem));
    });
}

pp_status pp_poly_gcd(const pp_poly* a, const pp_poly* b, pp_poly** out) {
    return guarded([&] { *out = wrap(pp::gcd(unwrap(a), unwrap(b))); });
}

pp_status pp_poly_pow(const pp_poly* p, uint64_t e, pp_poly** out) {
    return guarded([&] { *out = wrap(pp::pow(unwrap(p), e)); });
}

pp_status pp_poly_conjugate(const pp_poly* p, pp_poly** out) {
    return guarded([&] { *out = wrap(pp::conjugate(unwrap(p))); });
}

pp_status pp_poly_alpha(const pp_poly* p, uint64_t l, int* out) {
    return guarded([&] { *out = pp::alpha(unwrap(p), l); });
}

int pp_poly_is_square(const pp_poly* p) { return pp::is_square(unwrap(p)) ? 1 : 0; }

pp_status pp_poly_sqrt(const pp_poly* p, pp_poly** out) {
    return guarded([&] { *out = wrap(pp::sqrt_exact(unwrap(p))); });
}

pp_status pp_poly_splits(const pp_poly* p, int* out_splits, uint64_t* u, uint64_t* v) {
    return guarded([&] {
        auto split = pp::split_exponents(unwrap(p));
        *out_splits = split.has_value() ? 1 : 0;
        if (split) {
            if (u) *u = split->u;
            if (v) *v = split->v;
        }
    });
}

static pp_factorization* wrap_factorization(pp::Factorization f) {
    auto* out = new pp_factorization{std::move(f), {}};
    out->primes.reserve(out->value.entries().size());
    for (const auto& e : out->value.entries()) out->primes.push_back(e.prime);
    return out;
}

pp_status pp_factorize(pp_session* session, const pp_poly* p, pp_factorization** out) {
    return guarded([&] {
        uint64_t seed = session ? session->seed : pp::kDefaultFactorSeed;
        pp::FactorCache* cache = session ? session->cache.get() : nullptr;
        *out = wrap_factorization(pp::factorize_cached(unwrap(p), seed, cache));
    });
}

pp_status pp_squarefree_decompose(const pp_poly* p, pp_factorization** out) {
    return guarded([&] {
        auto parts = pp::squarefree_decompose(unwrap(p));
        auto* rows = new pp_factorization{{}, {}};
        // keep the (part, multiplicity) pairs as-is; entries are coprime
        rows->value = pp::Factorization::from_entries(parts);
        rows->primes.reserve(rows->value.entries().size());
        for (const auto& e : rows->value.entries()) rows->primes.push_back(e.prime);
        *out = rows;
    });
}

size_t pp_factorization_size(const pp_factorization* f) { return f->value.entries().size(); }

const pp_poly* pp_factorization_prime(const pp_factorization* f, size_t i) {
    return reinterpret_cast<const pp_poly*>(&f->primes[i]);
}

uint32_t pp_factorization_multiplicity(const pp_factorization* f, size_t i) {
    return f->value.entries()[i].multiplicity;
}

void pp_factorization_free(pp_factorization* f) { delete f; }

pp_status pp_factorization_jsonl(const pp_poly* p, const pp_factorization* f, char** out) {
    return guarded([&] { *out = dup_string(pp::jsonl_factorization(unwrap(p), f->value)); });
}

pp_status pp_poly_is_irreducible(const pp_poly* p, int* out) {
    return guarded([&] { *out = pp::is_irreducible(unwrap(p)) ? 1 : 0; });
}

pp_status pp_poly_order(const pp_poly* p, uint64_t* out) {
    return guarded([&] { *out = pp::poly_order(unwrap(p)); });
}

pp_status pp_poly_is_primitive(const pp_poly* p, int* out) {
    return guarded([&] { *out = pp::is_primitive(unwrap(p)) ? 1 : 0; });
}

pp_status pp_sigma(const pp_poly* a, pp_poly** out) {
    return guarded([&] { *out = wrap(pp::sigma(unwrap(a))); });
}

pp_status pp_sigma_star(const pp_poly* a, pp_poly** out) {
    return guarded([&] { *out = wrap(pp::sigma_star(unwrap(a))); });
}

pp_status pp_is_perfect(const pp_poly* a, int* out) {
    return guarded([&] { *out = pp::is_perfect(unwrap(a)) ? 1 : 0; });
}

pp_status pp_is_unitary_perfect(const pp_poly* a, int* out) {
    return guarded([&] { *out = pp::is_unitary_perfect(unwrap(a)) ? 1 : 0; });
}

pp_status pp_is_special_perfect(const pp_poly* a, int* out) {
    return guarded([&] { *out = pp::is_special_perfect(unwrap(a)) ? 1 : 0; });
}

pp_status pp_is_indecomposable(const pp_poly* a, pp_mode mode, int* out) {
    return guarded([&] {
        auto m = mode == PP_MODE_UNITARY ? pp::PerfectMode::unitary : pp::PerfectMode::perfect;
        *out = pp::is_indecomposable(unwrap(a), m) ? 1 : 0;
    });
}

pp_status pp_classify_perfect(const pp_poly* a, pp_mode mode, pp_perfect_class* out) {
    return guarded([&] {
        auto m = mode == PP_MODE_UNITARY ? pp::PerfectMode::unitary : pp::PerfectMode::perfect;
        pp::PerfectClass cls = pp::classify_perfect(unwrap(a), m);
        out->kind = pp::perfect_kind_name(cls.kind);
        out->index = cls.index;
        out->power = cls.power;
        out->conjugated = cls.conjugated ? 1 : 0;
    });
}

pp_status pp_u_iterate(uint64_t a, uint64_t b, uint64_t h, pp_poly** out) {
    return guarded([&] { *out = wrap(pp::u_iterate({a, b}, h)); });
}

pp_status pp_mersenne_poly(uint64_t a, uint64_t b, pp_poly** out) {
    return guarded([&] { *out = wrap(pp::mersenne_poly({a, b})); });
}

pp_status pp_is_mersenne_prime(const pp_poly* p, int* out, uint64_t* a, uint64_t* b) {
    return guarded([&] {
        auto pair = pp::as_mersenne_prime(unwrap(p));
        *out = pair.has_value() ? 1 : 0;
        if (pair) {
            if (a) *a = pair->a;
            if (b) *b = pair->b;
        }
    });
}

pp_status pp_count_irreducibles(uint64_t m, uint64_t* out) {
    return guarded([&] { *out = pp::count_irreducibles(m); });
}

pp_status pp_mersenne_list(uint64_t max_degree, pp_rows** out) {
    return guarded([&] {
        auto* rows = new pp_rows;
        for (pp::MersennePair m : pp::enumerate_mersenne(max_degree))
            rows->rows.push_back({pp::jsonl_mersenne_row(m), pp::display_mersenne_row(m), 0});
        *out = rows;
    });
}

pp_status pp_ord2(uint64_t p, uint64_t* out) {
    return guarded([&] { *out = pp::ord2_mod(p); });
}

pp_status pp_classify_prime(uint64_t p, pp_prime_profile* out) {
    return guarded([&] {
        pp::PrimeProfile profile = pp::classify_prime(p);
        out->p = profile.p;
        out->ord2 = profile.ord2;
        out->is_mersenne_number = profile.is_mersenne_number ? 1 : 0;
        out->is_fermat_prime = profile.is_fermat_prime ? 1 : 0;
    });
}

pp_session* pp_session_new(void) { return new pp_session; }

void pp_session_free(pp_session* s) { delete s; }

pp_status pp_session_set_cache(pp_session* s, const char* path) {
    return guarded([&] {
        s->cache = std::make_unique<pp::FactorCache>(path);
        for (const auto& w : s->cache->warnings()) s->warnings.push_back(w);
    });
}

void pp_session_set_seed(pp_session* s, uint64_t seed) { s->seed = seed; }

void pp_session_set_jobs(pp_session* s, uint32_t jobs) { s->jobs = jobs ? jobs : 1; }

void pp_session_set_skip_partitions(pp_session* s, uint32_t n) { s->skip_partitions = n; }

size_t pp_session_warning_count(const pp_session* s) { return s->warnings.size(); }

const char* pp_session_warning(const pp_session* s, size_t i) { return s->warnings[i].c_str(); }

pp_status pp_search_perfect(pp_session* session, uint32_t max_degree, pp_mode mode,
                            pp_rows** out) {
    return guarded([&] {
        pp::SearchOptions options = session ? session->options() : pp::SearchOptions{};
        auto m = mode == PP_MODE_UNITARY ? pp::PerfectMode::unitary : pp::PerfectMode::perfect;
        auto* rows = new pp_rows;
        for (const auto& hit : pp::search_perfect(max_degree, m, options))
            rows->rows.push_back(
                {pp::jsonl_search_hit(hit), pp::display_search_hit(hit), hit.partition});
        *out = rows;
    });
}

pp_status pp_search_special(pp_session* session, uint32_t max_degree, pp_rows** out) {
    return guarded([&] {
        pp::SearchOptions options = session ? session->options() : pp::SearchOptions{};
        auto* rows = new pp_rows;
        for (const auto& hit : pp::search_special_perfect(max_degree, options))
            rows->rows.push_back(
                {pp::jsonl_search_hit(hit), pp::display_search_hit(hit), hit.partition});
        *out = rows;
    });
}

pp_status pp_conjecture_scan(pp_session* session, uint32_t max_m_degree, uint32_t max_h,
                             pp_rows** out) {
    return guarded([&] {
        pp::SearchOptions options = session ? session->options() : pp::SearchOptions{};
        auto* rows = new pp_rows;
        pp::conjecture_scan(max_m_degree, max_h, options, [&](const pp::SigmaReport& report) {
            rows->rows.push_back({pp::jsonl_sigma_report(report),
                                  pp::display_sigma_report(report), report.partition});
            return true;
        });
        *out = rows;
    });
}

pp_status pp_conjecture_scan_stream(pp_session* session, uint32_t max_m_degree, uint32_t max_h,
                                    pp_row_callback cb, void* user) {
    return guarded([&] {
        pp::SearchOptions options = session ? session->options() : pp::SearchOptions{};
        pp::conjecture_scan(max_m_degree, max_h, options, [&](const pp::SigmaReport& report) {
            std::string jsonl = pp::jsonl_sigma_report(report);
            std::string display = pp::display_sigma_report(report);
            return cb(user, report.partition, jsonl.c_str(), display.c_str()) == 0;
        });
    });
}

pp_status pp_verify_paper(pp_session* session, pp_rows** out, int* n_fail, int* n_discrepancy) {
    return guarded([&] {
        uint32_t jobs = session ? session->jobs : 1;
        auto* rows = new pp_rows;
        int fails = 0, discrepancies = 0;
        for (const auto& row : pp::run_paper_suite(jobs)) {
            if (row.status == pp::CheckStatus::fail) ++fails;
            if (row.status == pp::CheckStatus::discrepancy) ++discrepancies;
            rows->rows.push_back({pp::jsonl_check_result(row), pp::display_check_result(row), 0});
        }
        if (n_fail) *n_fail = fails;
        if (n_discrepancy) *n_discrepancy = discrepancies;
        *out = rows;
    });
}

size_t pp_rows_size(const pp_rows* rows) { return rows->rows.size(); }

const char* pp_rows_jsonl(const pp_rows* rows, size_t i) { return rows->rows[i].jsonl.c_str(); }

const char* pp_rows_display(const pp_rows* rows, size_t i) { return rows->rows[i].display.c_str(); }

uint32_t pp_rows_partition(const pp_rows* rows, size_t i) { return rows->rows[i].partition; }

void pp_rows_free(pp_rows* rows) { delete rows; }

}  // extern "C"
