// Command-line front end. All mathematics goes through the shared
// library's C API (perfectpoly.h); this file only does argument
// handling, output routing, and the resume checkpoint bookkeeping.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "perfectpoly.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitVerifyFail = 2;
constexpr int kExitDiscrepancy = 3;
constexpr int kExitUsage = 64;

struct CliError {
    int code;
    std::string message;
};

void check(pp_status status) {
    if (status == PP_OK) return;
    throw CliError{kExitDomain, pp_last_error()};
}

struct PolyHandle {
    pp_poly* p = nullptr;
    PolyHandle() = default;
    explicit PolyHandle(pp_poly* raw) : p(raw) {}
    PolyHandle(const PolyHandle&) = delete;
    PolyHandle(PolyHandle&& other) noexcept : p(other.p) { other.p = nullptr; }
    ~PolyHandle() { pp_poly_free(p); }
};

PolyHandle parse(const std::string& text) {
    pp_poly* p = nullptr;
    check(pp_poly_parse(text.c_str(), &p));
    return PolyHandle{p};
}

std::string format(const pp_poly* p, pp_format_style style) {
    char* s = nullptr;
    check(pp_poly_format(p, style, &s));
    std::string out = s;
    pp_string_free(s);
    return out;
}

// Common options shared by the heavier subcommands.
struct RunOptions {
    std::string jsonl_path;
    std::string cache_path;
    std::string resume_path;
    uint32_t jobs = 1;
};

struct Session {
    pp_session* s = nullptr;
    Session() : s(pp_session_new()) {}
    ~Session() { pp_session_free(s); }
};

std::string warnings_to_stderr(pp_session* s) {
    std::string last;
    for (size_t i = 0; i < pp_session_warning_count(s); ++i) {
        last = pp_session_warning(s, i);
        std::cerr << "warning: " << last << "\n";
    }
    return last;
}

// Checkpoint file: {"schema":1,"key":<config digest>,"completed_partitions":N}
struct Checkpoint {
    std::string path;
    std::string key;
    uint32_t completed = 0;

    void load() {
        if (path.empty()) return;
        std::ifstream in(path);
        if (!in) return;  // fresh checkpoint
        nlohmann::json row = nlohmann::json::parse(in, nullptr, false);
        if (row.is_discarded() || row.value("schema", -1) != 1)
            throw CliError{kExitDomain, "resume: unreadable checkpoint " + path};
        if (row.value("key", "") != key)
            throw CliError{kExitDomain, "resume: checkpoint was written for different arguments"};
        completed = row.value("completed_partitions", 0u);
    }

    void store(uint32_t done) const {
        if (path.empty()) return;
        nlohmann::ordered_json row;
        row["schema"] = 1;
        row["key"] = key;
        row["completed_partitions"] = done;
        std::ofstream out(path, std::ios::trunc);
        out << row.dump() << "\n";
    }
};

class RowSink {
public:
    RowSink(const std::string& path, bool append, bool echo_display)
        : echo_display_(echo_display) {
        if (!path.empty()) {
            file_.open(path, append ? std::ios::app : std::ios::trunc);
            if (!file_) throw CliError{kExitDomain, "cannot open " + path};
            to_file_ = true;
        }
    }

    void row(const char* jsonl, const char* display) {
        ++count_;
        if (to_file_) {
            file_ << jsonl << "\n";
            if (echo_display_) std::cout << display << "\n";
        } else {
            std::cout << jsonl << "\n";
        }
    }

    size_t count() const { return count_; }

private:
    std::ofstream file_;
    bool to_file_ = false;
    bool echo_display_ = false;
    size_t count_ = 0;
};

void emit_rows(pp_rows* rows, RowSink& sink) {
    for (size_t i = 0; i < pp_rows_size(rows); ++i)
        sink.row(pp_rows_jsonl(rows, i), pp_rows_display(rows, i));
}

uint64_t parse_u64(const std::string& text, const char* what) {
    try {
        size_t used = 0;
        uint64_t value = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw CliError{kExitDomain, std::string("invalid ") + what + ": " + text};
    }
}

std::pair<uint64_t, uint64_t> parse_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw CliError{kExitDomain, "--mersenne expects a,b (e.g. 1,2)"};
    return {parse_u64(text.substr(0, comma), "--mersenne a"),
            parse_u64(text.substr(comma + 1), "--mersenne b")};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"perfect polynomials over GF(2): arithmetic, divisor sums, searches"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string poly_text, mersenne_pair, mode_name = "perfect";
    uint64_t power = 1, max_degree = 0, max_h = 0, ord2_p = 0;
    bool factor_output = false;
    RunOptions run;
    uint64_t seed = 0;
    bool seed_set = false;

    auto add_common = [&](CLI::App* cmd, bool cache, bool resume) {
        cmd->add_option("--jsonl", run.jsonl_path, "write JSONL rows to this file");
        if (cache) cmd->add_option("--cache", run.cache_path, "on-disk factorization cache file");
        cmd->add_option("--jobs", run.jobs, "worker threads")->check(CLI::Range(1u, 256u));
        cmd->add_option_function<uint64_t>(
            "--seed", [&](uint64_t v) { seed = v; seed_set = true; },
            "equal-degree splitting seed");
        if (resume) cmd->add_option("--resume", run.resume_path, "checkpoint file for resuming");
    };

    auto* cmd_factor = app.add_subcommand("factor", "factor a polynomial");
    cmd_factor->add_option("poly", poly_text, "polynomial (algebraic, hex or product form)")
        ->required();
    add_common(cmd_factor, true, false);

    auto* cmd_sigma = app.add_subcommand("sigma", "sum of divisors");
    cmd_sigma->add_option("poly", poly_text, "polynomial");
    cmd_sigma->add_option("--mersenne", mersenne_pair, "exponent pair a,b for M = 1+x^a(x+1)^b");
    cmd_sigma->add_option("--power", power, "apply sigma to M^N");
    cmd_sigma->add_flag("--factor", factor_output, "print the factored result");

    auto* cmd_sigma_star = app.add_subcommand("sigma-star", "sum of unitary divisors");
    cmd_sigma_star->add_option("poly", poly_text, "polynomial");
    cmd_sigma_star->add_option("--mersenne", mersenne_pair, "exponent pair a,b");
    cmd_sigma_star->add_option("--power", power, "apply sigma* to M^N");
    cmd_sigma_star->add_flag("--factor", factor_output, "print the factored result");

    auto* cmd_check = app.add_subcommand("perfect-check", "test and classify a polynomial");
    cmd_check->add_option("poly", poly_text, "polynomial")->required();
    cmd_check->add_option("--mode", mode_name, "perfect|unitary")
        ->check(CLI::IsMember({"perfect", "unitary"}));

    auto* cmd_search_p = app.add_subcommand("search-perfect", "bounded perfect search");
    cmd_search_p->add_option("--max-degree", max_degree, "degree bound")->required();
    add_common(cmd_search_p, false, true);

    auto* cmd_search_u = app.add_subcommand("search-unitary", "bounded unitary perfect search");
    cmd_search_u->add_option("--max-degree", max_degree, "degree bound")->required();
    add_common(cmd_search_u, false, true);

    auto* cmd_search_s = app.add_subcommand("search-special", "special perfect search");
    cmd_search_s->add_option("--max-degree", max_degree, "degree bound")->required();
    add_common(cmd_search_s, false, false);

    auto* cmd_list = app.add_subcommand("mersenne-list", "enumerate Mersenne prime polynomials");
    cmd_list->add_option("--max-degree", max_degree, "degree bound")->required();
    cmd_list->add_option("--jsonl", run.jsonl_path, "write JSONL rows to this file");

    auto* cmd_scan = app.add_subcommand("conjecture-scan", "sigma(M^(2h)) factor reports");
    cmd_scan->add_option("--max-degree", max_degree, "Mersenne prime degree bound")->required();
    cmd_scan->add_option("--max-h", max_h, "largest h")->required();
    add_common(cmd_scan, true, true);

    auto* cmd_verify = app.add_subcommand("verify-paper", "replay the published identities");
    cmd_verify->add_option("--jobs", run.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    cmd_verify->add_option("--jsonl", run.jsonl_path, "write the ledger as JSONL");

    auto* cmd_ord2 = app.add_subcommand("ord2", "multiplicative order of 2 mod p");
    cmd_ord2->add_option("p", ord2_p, "odd prime")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints usage
        return kExitUsage;
    }

    try {
        Session session;
        if (!run.cache_path.empty()) check(pp_session_set_cache(session.s, run.cache_path.c_str()));
        if (seed_set) pp_session_set_seed(session.s, seed);
        pp_session_set_jobs(session.s, run.jobs);

        // Resolves the sigma/sigma-star input: a literal polynomial or M^power.
        auto sigma_input = [&]() -> PolyHandle {
            if (!mersenne_pair.empty()) {
                auto [a, b] = parse_pair(mersenne_pair);
                pp_poly* m = nullptr;
                check(pp_mersenne_poly(a, b, &m));
                PolyHandle base{m};
                pp_poly* raised = nullptr;
                check(pp_poly_pow(base.p, power, &raised));
                return PolyHandle{raised};
            }
            if (poly_text.empty())
                throw CliError{kExitDomain, "provide a polynomial or --mersenne a,b"};
            return parse(poly_text);
        };

        auto print_factored = [&](const pp_poly* value) {
            pp_factorization* f = nullptr;
            check(pp_factorize(session.s, value, &f));
            std::string line;
            for (size_t i = 0; i < pp_factorization_size(f); ++i) {
                if (i) line += "·";
                line += "(" + format(pp_factorization_prime(f, i), PP_FORMAT_ALGEBRAIC) + ")";
                uint32_t mult = pp_factorization_multiplicity(f, i);
                if (mult > 1) line += "^" + std::to_string(mult);
            }
            if (pp_factorization_size(f) == 0) line = "1";
            if (!run.jsonl_path.empty()) {
                char* row = nullptr;
                check(pp_factorization_jsonl(value, f, &row));
                std::ofstream out(run.jsonl_path, std::ios::trunc);
                out << row << "\n";
                pp_string_free(row);
            }
            pp_factorization_free(f);
            std::cout << line << "\n";
        };

        if (cmd_factor->parsed()) {
            PolyHandle p = parse(poly_text);
            if (pp_poly_is_zero(p.p)) throw CliError{kExitDomain, "cannot factor 0"};
            print_factored(p.p);
            warnings_to_stderr(session.s);
            return kExitOk;
        }

        if (cmd_sigma->parsed() || cmd_sigma_star->parsed()) {
            PolyHandle input = sigma_input();
            pp_poly* value = nullptr;
            check(cmd_sigma->parsed() ? pp_sigma(input.p, &value)
                                      : pp_sigma_star(input.p, &value));
            PolyHandle result{value};
            if (factor_output)
                print_factored(result.p);
            else
                std::cout << format(result.p, PP_FORMAT_ALGEBRAIC) << "\n";
            return kExitOk;
        }

        if (cmd_check->parsed()) {
            PolyHandle p = parse(poly_text);
            pp_mode mode = mode_name == "unitary" ? PP_MODE_UNITARY : PP_MODE_PERFECT;
            int perfect = 0, unitary = 0;
            check(pp_is_perfect(p.p, &perfect));
            check(pp_is_unitary_perfect(p.p, &unitary));
            pp_perfect_class cls{};
            check(pp_classify_perfect(p.p, mode, &cls));
            nlohmann::ordered_json row;
            row["poly_hex"] = format(p.p, PP_FORMAT_HEX);
            row["degree"] = pp_poly_degree(p.p);
            row["mode"] = mode_name;
            row["perfect"] = perfect != 0;
            row["unitary_perfect"] = unitary != 0;
            row["class"] = cls.kind;
            row["index"] = cls.index ? nlohmann::ordered_json(cls.index) : nullptr;
            row["power"] = std::string(cls.kind) == "unitary-paper-U"
                               ? nlohmann::ordered_json(cls.power)
                               : nullptr;
            row["conjugate_of_listed"] = cls.conjugated != 0;
            bool applicable = mode == PP_MODE_UNITARY ? unitary : perfect;
            if (applicable) {
                int indecomposable = 0;
                check(pp_is_indecomposable(p.p, mode, &indecomposable));
                row["indecomposable"] = indecomposable != 0;
            } else {
                row["indecomposable"] = nullptr;
            }
            std::cout << row.dump() << "\n";
            return kExitOk;
        }

        if (cmd_search_p->parsed() || cmd_search_u->parsed() || cmd_search_s->parsed()) {
            std::string key = "search:" + std::string(cmd_search_p->parsed()   ? "perfect"
                                                      : cmd_search_u->parsed() ? "unitary"
                                                                               : "special") +
                              ":" + std::to_string(max_degree);
            Checkpoint ckpt{run.resume_path, key};
            ckpt.load();
            pp_session_set_skip_partitions(session.s, ckpt.completed);
            pp_rows* rows = nullptr;
            if (cmd_search_s->parsed())
                check(pp_search_special(session.s, static_cast<uint32_t>(max_degree), &rows));
            else
                check(pp_search_perfect(
                    session.s, static_cast<uint32_t>(max_degree),
                    cmd_search_u->parsed() ? PP_MODE_UNITARY : PP_MODE_PERFECT, &rows));
            RowSink sink(run.jsonl_path, ckpt.completed > 0, true);
            emit_rows(rows, sink);
            uint32_t last = ckpt.completed;
            for (size_t i = 0; i < pp_rows_size(rows); ++i)
                last = std::max(last, pp_rows_partition(rows, i) + 1);
            pp_rows_free(rows);
            if (!run.jsonl_path.empty())
                std::cout << sink.count() << (sink.count() == 1 ? " hit\n" : " hits\n");
            ckpt.store(last);
            return kExitOk;
        }

        if (cmd_list->parsed()) {
            pp_rows* rows = nullptr;
            check(pp_mersenne_list(max_degree, &rows));
            RowSink sink(run.jsonl_path, false, false);
            emit_rows(rows, sink);
            pp_rows_free(rows);
            if (!run.jsonl_path.empty()) std::cout << sink.count() << " pairs\n";
            return kExitOk;
        }

        if (cmd_scan->parsed()) {
            Checkpoint ckpt{run.resume_path,
                            "scan:" + std::to_string(max_degree) + ":" + std::to_string(max_h)};
            ckpt.load();
            pp_session_set_skip_partitions(session.s, ckpt.completed);
            RowSink sink(run.jsonl_path, ckpt.completed > 0, false);
            struct StreamState {
                RowSink* sink;
                Checkpoint* ckpt;
                uint32_t current;
                bool any = false;
            } state{&sink, &ckpt, ckpt.completed};
            check(pp_conjecture_scan_stream(
                session.s, static_cast<uint32_t>(max_degree), static_cast<uint32_t>(max_h),
                [](void* user, uint32_t partition, const char* jsonl, const char* display) -> int {
                    auto* st = static_cast<StreamState*>(user);
                    if (st->any && partition != st->current)
                        st->ckpt->store(partition);  // previous partition fully emitted
                    st->current = partition;
                    st->any = true;
                    st->sink->row(jsonl, display);
                    return 0;
                },
                &state));
            if (state.any) ckpt.store(state.current + 1);
            warnings_to_stderr(session.s);
            if (!run.jsonl_path.empty()) std::cout << sink.count() << " reports\n";
            return kExitOk;
        }

        if (cmd_verify->parsed()) {
            pp_rows* rows = nullptr;
            int fails = 0, discrepancies = 0;
            check(pp_verify_paper(session.s, &rows, &fails, &discrepancies));
            std::ofstream jsonl;
            if (!run.jsonl_path.empty()) jsonl.open(run.jsonl_path, std::ios::trunc);
            for (size_t i = 0; i < pp_rows_size(rows); ++i) {
                std::cout << pp_rows_display(rows, i) << "\n";
                if (jsonl.is_open()) jsonl << pp_rows_jsonl(rows, i) << "\n";
            }
            size_t total = pp_rows_size(rows);
            pp_rows_free(rows);
            std::cout << total << " checks: " << (total - fails - discrepancies) << " pass, "
                      << fails << " fail, " << discrepancies << " discrepancy\n";
            if (fails) return kExitVerifyFail;
            if (discrepancies) return kExitDiscrepancy;
            return kExitOk;
        }

        if (cmd_ord2->parsed()) {
            uint64_t order = 0;
            check(pp_ord2(ord2_p, &order));
            std::cout << order << "\n";
            return kExitOk;
        }

        throw CliError{kExitUsage, "no subcommand"};
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
