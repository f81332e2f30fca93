#include "pp/jsonl.hpp"

#include <json.hpp>

#include "pp/text.hpp"

namespace pp {

using ordered_json = nlohmann::ordered_json;

std::string jsonl_mersenne_row(MersennePair m) {
    ordered_json row;
    row["a"] = m.a;
    row["b"] = m.b;
    row["degree"] = m.a + m.b;
    row["poly_hex"] = to_hex(mersenne_poly(m));
    return row.dump();
}

std::string display_mersenne_row(MersennePair m) {
    return "M(" + std::to_string(m.a) + "," + std::to_string(m.b) + ") degree " +
           std::to_string(m.a + m.b) + "  " + to_algebraic(mersenne_poly(m));
}

std::string jsonl_search_hit(const SearchHit& hit) {
    ordered_json row;
    row["mode"] = hit.mode == PerfectMode::perfect ? "perfect" : "unitary";
    row["a"] = hit.a;
    row["b"] = hit.b;
    auto powers = ordered_json::array();
    for (const auto& p : hit.powers) {
        ordered_json q;
        q["a"] = p.pair.a;
        q["b"] = p.pair.b;
        q["h"] = p.h;
        powers.push_back(std::move(q));
    }
    row["powers"] = std::move(powers);
    row["degree"] = hit.polynomial.degree();
    row["poly_hex"] = to_hex(hit.polynomial);
    row["class"] = perfect_kind_name(hit.classification.kind);
    const auto& cls = hit.classification;
    row["index"] = (cls.kind == PerfectKind::paper_T || cls.kind == PerfectKind::unitary_paper_U ||
                    cls.kind == PerfectKind::trivial_perfect)
                       ? ordered_json(cls.index)
                       : ordered_json(nullptr);
    row["power"] =
        cls.kind == PerfectKind::unitary_paper_U ? ordered_json(cls.power) : ordered_json(nullptr);
    row["conjugate_of_listed"] = cls.conjugated;
    row["indecomposable"] = hit.indecomposable;
    return row.dump();
}

std::string display_search_hit(const SearchHit& hit) {
    std::string out = format_poly(hit.polynomial, TextStyle::product);
    out += "  [";
    out += perfect_kind_name(hit.classification.kind);
    if (hit.classification.kind == PerfectKind::paper_T)
        out += " T" + std::to_string(hit.classification.index);
    if (hit.classification.kind == PerfectKind::unitary_paper_U) {
        out += " U" + std::to_string(hit.classification.index);
        if (hit.classification.power) out += "^(2^" + std::to_string(hit.classification.power) + ")";
        if (hit.classification.conjugated) out += " (conjugate)";
    }
    out += hit.indecomposable ? ", indecomposable]" : ", decomposable]";
    return out;
}

std::string jsonl_sigma_report(const SigmaReport& report) {
    ordered_json row;
    row["a"] = report.m.a;
    row["b"] = report.m.b;
    row["h"] = report.h;
    row["squarefree"] = report.squarefree;
    row["all_mersenne"] = report.all_mersenne;
    auto factors = ordered_json::array();
    for (const auto& f : report.factors) {
        ordered_json q;
        q["hex"] = to_hex(f.prime);
        q["degree"] = f.prime.degree();
        q["mult"] = f.multiplicity;
        q["mersenne"] = f.mersenne.has_value();
        q["pair"] = f.mersenne ? ordered_json::array({f.mersenne->a, f.mersenne->b})
                               : ordered_json(nullptr);
        factors.push_back(std::move(q));
    }
    row["factors"] = std::move(factors);
    row["u_splits"] = report.u_splits;
    row["u_square"] = report.u_square;
    row["u"] = report.split ? ordered_json(report.split->u) : ordered_json(nullptr);
    row["v"] = report.split ? ordered_json(report.split->v) : ordered_json(nullptr);
    row["tags"] = report.tags;
    row["known_exception"] = report.known_exception;
    row["seed"] = report.seed;
    return row.dump();
}

std::string display_sigma_report(const SigmaReport& report) {
    std::string out = "M(" + std::to_string(report.m.a) + "," + std::to_string(report.m.b) +
                      ") h=" + std::to_string(report.h) + "  omega=" +
                      std::to_string(report.factors.size());
    out += report.squarefree ? " squarefree" : " non-squarefree";
    out += report.all_mersenne ? " all-mersenne" : " has-non-mersenne";
    if (report.tags.empty())
        out += " [uncovered]";
    else {
        out += " [";
        for (size_t i = 0; i < report.tags.size(); ++i) {
            if (i) out += ',';
            out += report.tags[i];
        }
        out += ']';
    }
    if (report.known_exception) out += " (known exception)";
    return out;
}

std::string jsonl_check_result(const CheckResult& row) {
    ordered_json out;
    out["check_id"] = row.check_id;
    out["status"] = check_status_name(row.status);
    out["expected"] = row.expected;
    out["actual"] = row.actual;
    out["paper_anchor"] = row.anchor;
    return out.dump();
}

std::string display_check_result(const CheckResult& row) {
    std::string out = row.check_id;
    out.resize(std::max<size_t>(out.size(), 18), ' ');
    out += "  ";
    out += check_status_name(row.status);
    if (row.status != CheckStatus::pass) out += "  expected: " + row.expected + "  actual: " + row.actual;
    return out;
}

std::string display_factorization(const Factorization& f) {
    if (f.empty()) return "1";
    std::string out;
    for (const auto& [prime, mult] : f.entries()) {
        if (!out.empty()) out += "\xc2\xb7";  // middle dot
        out += "(" + to_algebraic(prime) + ")";
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    return out;
}

std::string jsonl_factorization(const Poly& p, const Factorization& f) {
    ordered_json row;
    row["poly_hex"] = to_hex(p);
    row["degree"] = p.is_zero() ? ordered_json(nullptr) : ordered_json(p.degree());
    auto factors = ordered_json::array();
    for (const auto& e : f.entries()) factors.push_back({to_hex(e.prime), e.multiplicity});
    row["factors"] = std::move(factors);
    return row.dump();
}

}  // namespace pp
