// Command line front end: solve single instances, run batch grids with an
// optional enumeration cross-check, inspect the Pell and Lucas layers, and
// scan the square-test exclusions over trace ranges.
//
// Exit codes: 0 success, 1 internal error or oracle mismatch,
//             2 validation error, 64 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "quartic/arith.hpp"
#include "quartic/errors.hpp"
#include "quartic/lucas.hpp"
#include "quartic/oracle.hpp"
#include "quartic/pell.hpp"
#include "quartic/report_json.hpp"
#include "quartic/solver.hpp"

using namespace quartic;
using nlohmann::ordered_json;
using solver::Form;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;
constexpr int kExitUsage = 64;

// ---------------------------------------------------------------- output

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output path: " + path);
        os = &file;
    }
    std::ostream& stream() { return *os; }
};

std::string check_decimal(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        return "expected a nonnegative decimal integer, got '" + s + "'";
    return {};
}

unsigned default_jobs() {
    if (const char* env = std::getenv("QUARTIC_JOBS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

Form parse_form(const std::string& name) {
    auto form = solver::form_from_string(name);
    if (!form)
        throw ValidationError(ValidationError::Code::UnsupportedForm,
                              "unknown form '" + name + "' (expected x2y4 or x4y2)");
    return *form;
}

std::string csv_escape_free(const mpz_class& v) { return v.get_str(); }

// ---------------------------------------------------------------- solve

struct SolveOpts {
    std::string form = "x2y4";
    std::string a, b;
    int c = 1;
    unsigned long n_max = 99;
    std::string format = "json";
    std::string out;
};

int run_solve(const SolveOpts& opts) {
    Output output;
    output.open(opts.out);

    solver::EquationInstance inst{parse_form(opts.form), mpz_class(opts.a), mpz_class(opts.b),
                                  opts.c};
    auto report = solver::solve(inst, opts.n_max);

    if (opts.format == "csv") {
        output.stream() << "x,y,n,coprime\n";
        for (const auto& s : report.solutions)
            output.stream() << csv_escape_free(s.x) << ',' << csv_escape_free(s.y) << ','
                            << csv_escape_free(s.n) << ',' << (s.coprime ? "true" : "false")
                            << '\n';
    } else {
        output.stream() << json_io::to_json(report).dump() << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- pell

struct PellOpts {
    std::string a, b, d;
    int c = 1;
    std::string format = "json";
    std::string out;
};

int run_pell(const PellOpts& opts) {
    Output output;
    output.open(opts.out);

    if (!opts.d.empty()) {
        mpz_class D(opts.d);
        auto cf = pell::cf_expand_sqrt(D);
        auto unit = pell::pell_unit(D);
        if (opts.format == "csv") {
            output.stream() << "D,a0,period_length,t1,u1\n"
                            << D.get_str() << ',' << cf.a0.get_str() << ',' << cf.period.size()
                            << ',' << unit.t1.get_str() << ',' << unit.u1.get_str() << '\n';
        } else {
            ordered_json j = json_io::to_json(cf);
            j["t1"] = unit.t1.get_str();
            j["u1"] = unit.u1.get_str();
            output.stream() << j.dump() << '\n';
        }
        return kExitOk;
    }

    if (opts.a.empty() || opts.b.empty()) {
        std::cerr << "usage: pell needs either -D or all of -A, -B, -C\n";
        return kExitUsage;
    }
    auto fund = pell::minimal_solution(mpz_class(opts.a), mpz_class(opts.b), opts.c);
    if (opts.format == "csv") {
        output.stream() << "A,B,C,solvable,a,b,trace\n";
        if (fund)
            output.stream() << opts.a << ',' << opts.b << ',' << opts.c << ",true,"
                            << fund->a.get_str() << ',' << fund->b.get_str() << ','
                            << fund->trace.get_str() << '\n';
        else
            output.stream() << opts.a << ',' << opts.b << ',' << opts.c << ",false,,,\n";
    } else {
        if (fund) {
            ordered_json j = json_io::to_json(*fund);
            j["solvable"] = true;
            output.stream() << j.dump() << '\n';
        } else {
            output.stream() << ordered_json{{"A", opts.a},
                                            {"B", opts.b},
                                            {"C", std::to_string(opts.c)},
                                            {"solvable", false}}
                                   .dump()
                            << '\n';
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------- lucas

struct LucasOpts {
    std::string trace;
    std::string n, k;
    std::string format = "json";
    std::string out;
};

int run_lucas(const LucasOpts& opts) {
    Output output;
    output.open(opts.out);
    lucas::TraceUnit t = lucas::TraceUnit(mpz_class(opts.trace));

    if (!opts.n.empty()) {
        mpz_class n(opts.n);
        mpz_class p = lucas::p_value(t, n);
        mpz_class q = lucas::q_value(t, n);
        mpz_class u_n = lucas::lucas_uv(t, n).U;
        if (opts.format == "csv") {
            output.stream() << "t,n,p_n,q_n,u_n\n"
                            << t.t().get_str() << ',' << n.get_str() << ',' << p.get_str() << ','
                            << q.get_str() << ',' << u_n.get_str() << '\n';
        } else {
            output.stream() << ordered_json{{"t", t.t().get_str()},
                                            {"n", n.get_str()},
                                            {"p_n", p.get_str()},
                                            {"q_n", q.get_str()},
                                            {"u_n", u_n.get_str()}}
                                   .dump()
                            << '\n';
        }
        return kExitOk;
    }

    if (opts.k.empty()) {
        std::cerr << "usage: lucas needs -n or -k\n";
        return kExitUsage;
    }
    mpz_class k(opts.k);
    auto pair = lucas::lucas_uv(t, k);
    if (opts.format == "csv") {
        output.stream() << "t,k,u,v\n"
                        << t.t().get_str() << ',' << k.get_str() << ',' << pair.U.get_str() << ','
                        << pair.V.get_str() << '\n';
    } else {
        output.stream() << ordered_json{{"t", t.t().get_str()},
                                        {"k", k.get_str()},
                                        {"u", pair.U.get_str()},
                                        {"v", pair.V.get_str()}}
                               .dump()
                        << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- scan-lemmas

struct ScanOpts {
    std::int64_t t_min = 3;
    std::int64_t t_max = 0;
    std::uint64_t n_max = 99;
    bool probe_even = false;
    unsigned jobs = 0;
    std::string format = "json";
    std::string out;
};

int run_scan(const ScanOpts& opts) {
    Output output;
    output.open(opts.out);
    unsigned jobs = opts.jobs ? opts.jobs : default_jobs();

    std::vector<oracle::ScanViolation> violations;
    if (opts.n_max >= 5 && opts.t_max >= opts.t_min)
        violations = oracle::lemma_scan(opts.t_min, opts.t_max, opts.n_max, jobs);
    std::vector<oracle::ScanViolation> probe_hits;
    if (opts.probe_even && opts.n_max >= 5)
        probe_hits = oracle::q_even_trace_probe(opts.t_max, opts.n_max, jobs);

    if (opts.format == "csv") {
        output.stream() << "section,kind,t,n,value\n";
        for (const auto& v : violations)
            output.stream() << "lemma,"
                            << (v.kind == oracle::ScanViolation::Kind::PSquare ? "p_square"
                                                                               : "q_square")
                            << ',' << v.t << ',' << v.n << ',' << v.value.get_str() << '\n';
        for (const auto& v : probe_hits)
            output.stream() << "even_trace_probe,q_square," << v.t << ',' << v.n << ','
                            << v.value.get_str() << '\n';
    } else {
        for (const auto& v : violations) {
            ordered_json j = json_io::to_json(v);
            j["section"] = "lemma";
            output.stream() << j.dump() << '\n';
        }
        for (const auto& v : probe_hits) {
            ordered_json j = json_io::to_json(v);
            j["section"] = "even_trace_probe";
            output.stream() << j.dump() << '\n';
        }
        output.stream() << ordered_json{{"summary",
                                         {{"violations", std::to_string(violations.size())},
                                          {"probe_hits", std::to_string(probe_hits.size())}}}}
                               .dump()
                        << '\n';
    }
    return violations.empty() ? kExitOk : kExitInternal;
}

// ---------------------------------------------------------------- verify

struct VerifyOpts {
    std::string form = "x2y4";
    std::string a, b;
    int c = 1;
    std::string y_bound = "10000";
    unsigned long n_max = 99;
    std::string format = "json";
    std::string out;
};

int run_verify(const VerifyOpts& opts) {
    Output output;
    output.open(opts.out);

    solver::EquationInstance inst{parse_form(opts.form), mpz_class(opts.a), mpz_class(opts.b),
                                  opts.c};
    auto report = solver::solve(inst, opts.n_max);
    auto cmp = oracle::compare_with_brute_force(report, mpz_class(opts.y_bound));

    if (opts.format == "csv") {
        output.stream() << "form,A,B,C,solutions,match,missing,extra\n"
                        << opts.form << ',' << opts.a << ',' << opts.b << ',' << opts.c << ','
                        << report.solutions.size() << ',' << (cmp.match ? "true" : "false") << ','
                        << cmp.missing.size() << ',' << cmp.extra.size() << '\n';
    } else {
        ordered_json j;
        j["report"] = json_io::to_json(report);
        j["oracle_bound"] = opts.y_bound;
        ordered_json missing = ordered_json::array();
        for (const auto& s : cmp.missing) missing.push_back(json_io::to_json(s));
        ordered_json extra = ordered_json::array();
        for (const auto& s : cmp.extra) extra.push_back(json_io::to_json(s));
        j["missing"] = std::move(missing);
        j["extra"] = std::move(extra);
        j["match"] = cmp.match;
        output.stream() << j.dump() << '\n';
    }
    return cmp.match ? kExitOk : kExitInternal;
}

// ---------------------------------------------------------------- batch

struct BatchOpts {
    unsigned long a_min = 1, a_max = 30;
    unsigned long b_min = 1, b_max = 30;
    std::vector<int> c_values = {1, 2, 4};
    std::vector<std::string> forms = {"x2y4", "x4y2"};
    std::string y_bound = "0"; // 0 = skip oracle
    unsigned long n_max = 99;
    unsigned jobs = 0;
    std::string format = "json";
    std::string out;
    int test_candidate_limit = 0; // test hook: keep solutions from the first N candidates only
};

struct BatchRow {
    solver::EquationInstance inst;
    std::optional<ValidationError::Code> skip_reason;
    std::optional<solver::SolveReport> report;
    std::optional<oracle::Comparison> oracle_cmp;
    std::string internal_error;
};

int run_batch(const BatchOpts& opts) {
    Output output;
    output.open(opts.out);

    std::vector<Form> forms;
    for (const auto& f : opts.forms) forms.push_back(parse_form(f));
    std::vector<int> c_values = opts.c_values;
    for (int c : c_values)
        if (c != 1 && c != 2 && c != 4)
            throw ValidationError(ValidationError::Code::NotAdmissible,
                                  "--c accepts only 1, 2 and 4");
    const mpz_class y_bound(opts.y_bound);

    std::vector<BatchRow> rows;
    for (Form form : forms)
        for (unsigned long a = opts.a_min; a <= opts.a_max; ++a)
            for (unsigned long b = opts.b_min; b <= opts.b_max; ++b)
                for (int c : c_values) {
                    if (form == Form::X4Y2 && c != 4) continue; // never admissible, keep grids small
                    rows.push_back({{form, mpz_class(a), mpz_class(b), c}, {}, {}, {}, {}});
                }

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t idx = next.fetch_add(1);
            if (idx >= rows.size()) return;
            BatchRow& row = rows[idx];
            try {
                row.skip_reason = solver::admissibility_failure(row.inst);
                if (row.skip_reason) continue;
                auto report = solver::solve(row.inst, opts.n_max);
                if (opts.test_candidate_limit > 0) {
                    // mismatch injection for harness self-tests: drop
                    // solutions beyond the first N candidate exponents
                    std::set<std::string> keep;
                    for (size_t i = 0;
                         i < report.candidates.size() &&
                         i < static_cast<size_t>(opts.test_candidate_limit);
                         ++i)
                        keep.insert(report.candidates[i].n.get_str());
                    std::vector<solver::SolutionRecord> kept;
                    for (auto& s : report.solutions)
                        if (keep.count(s.n.get_str())) kept.push_back(s);
                    report.solutions = std::move(kept);
                }
                if (y_bound > 0)
                    row.oracle_cmp = oracle::compare_with_brute_force(report, y_bound);
                row.report = std::move(report);
            } catch (const std::exception& e) {
                row.internal_error = e.what();
            }
        }
    };

    unsigned jobs = opts.jobs ? opts.jobs : default_jobs();
    jobs = std::min<size_t>(jobs, rows.size() ? rows.size() : 1);
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    size_t solved = 0, skipped = 0, mismatches = 0, internal = 0;
    const bool csv = (opts.format == "csv");
    if (csv)
        output.stream() << "form,A,B,C,status,reason,solutions,bound,completeness,oracle_match\n";

    for (const auto& row : rows) {
        std::string status, reason, completeness, oracle_match;
        size_t n_solutions = 0;
        int bound = 0;
        if (!row.internal_error.empty()) {
            ++internal;
            status = "error";
            reason = row.internal_error;
        } else if (row.skip_reason) {
            ++skipped;
            status = "skipped";
            reason = to_string(*row.skip_reason);
        } else {
            ++solved;
            status = "solved";
            n_solutions = row.report->solutions.size();
            bound = row.report->theorem_bound;
            completeness = row.report->completeness.kind ==
                                   solver::Completeness::Kind::Certified
                               ? "certified"
                               : "heuristic_bound";
            if (row.oracle_cmp) {
                oracle_match = row.oracle_cmp->match ? "true" : "false";
                if (!row.oracle_cmp->match) ++mismatches;
            }
        }

        if (csv) {
            output.stream() << solver::to_string(row.inst.form) << ',' << row.inst.A.get_str()
                            << ',' << row.inst.B.get_str() << ',' << row.inst.C << ',' << status
                            << ',' << reason << ',' << n_solutions << ',' << bound << ','
                            << completeness << ',' << oracle_match << '\n';
        } else {
            ordered_json j = json_io::to_json(row.inst);
            j["status"] = status;
            if (!reason.empty()) j["reason"] = reason;
            if (row.report) {
                ordered_json solutions = ordered_json::array();
                for (const auto& s : row.report->solutions)
                    solutions.push_back(json_io::to_json(s));
                j["solutions"] = std::move(solutions);
                j["theorem_bound"] = std::to_string(bound);
                j["completeness"] = completeness;
                if (row.oracle_cmp) j["oracle_match"] = row.oracle_cmp->match;
            }
            output.stream() << j.dump() << '\n';
        }
    }

    if (!csv) {
        // instances counts the admissible (executed) ones; skipped combos are
        // reported per row and tallied separately
        output.stream() << ordered_json{{"summary",
                                         {{"instances", std::to_string(solved + internal)},
                                          {"solved", std::to_string(solved)},
                                          {"skipped", std::to_string(skipped)},
                                          {"mismatches", std::to_string(mismatches)},
                                          {"errors", std::to_string(internal)}}}}
                               .dump()
                        << '\n';
    }
    return (mismatches == 0 && internal == 0) ? kExitOk : kExitInternal;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for A x^2 - B y^4 = C (C in {1,2,4}) and A x^4 - B y^2 = 4"};
    app.require_subcommand(1);

    SolveOpts solve_opts;
    auto* solve_cmd = app.add_subcommand("solve", "solve one instance and print the report");
    solve_cmd->add_option("--form", solve_opts.form, "x2y4 or x4y2")->required();
    solve_cmd->add_option("-A", solve_opts.a)->required()->check(check_decimal);
    solve_cmd->add_option("-B", solve_opts.b)->required()->check(check_decimal);
    solve_cmd->add_option("-C", solve_opts.c)->required();
    solve_cmd->add_option("--n-max", solve_opts.n_max,
                          "odd exponent scan bound for the heuristic x4y2 path");
    solve_cmd->add_option("--format", solve_opts.format)->check(CLI::IsMember({"json", "csv"}));
    solve_cmd->add_option("--out", solve_opts.out, "write output to a file instead of stdout");

    PellOpts pell_opts;
    auto* pell_cmd = app.add_subcommand("pell", "minimal solutions of the quadratic layer");
    pell_cmd->add_option("-A", pell_opts.a)->check(check_decimal);
    pell_cmd->add_option("-B", pell_opts.b)->check(check_decimal);
    pell_cmd->add_option("-C", pell_opts.c);
    pell_cmd->add_option("-D", pell_opts.d, "print cf expansion and unit of sqrt(D) instead")
        ->check(check_decimal);
    pell_cmd->add_option("--format", pell_opts.format)->check(CLI::IsMember({"json", "csv"}));
    pell_cmd->add_option("--out", pell_opts.out);

    LucasOpts lucas_opts;
    auto* lucas_cmd = app.add_subcommand("lucas", "evaluate P_n, Q_n, U_k, V_k at a trace");
    lucas_cmd->add_option("-t", lucas_opts.trace, "trace, >= 3")->required()->check(check_decimal);
    lucas_cmd->add_option("-n", lucas_opts.n, "odd index: print P_n, Q_n, U_n")
        ->check(check_decimal);
    lucas_cmd->add_option("-k", lucas_opts.k, "index: print U_k, V_k")->check(check_decimal);
    lucas_cmd->add_option("--format", lucas_opts.format)->check(CLI::IsMember({"json", "csv"}));
    lucas_cmd->add_option("--out", lucas_opts.out);

    ScanOpts scan_opts;
    auto* scan_cmd = app.add_subcommand("scan-lemmas", "square scans of P_n and Q_n over traces");
    scan_cmd->add_option("--t-min", scan_opts.t_min)->check(CLI::Range(std::int64_t(3), INT64_MAX));
    scan_cmd->add_option("--t-max", scan_opts.t_max)->required();
    scan_cmd->add_option("--n-max", scan_opts.n_max);
    scan_cmd->add_flag("--probe-even-traces", scan_opts.probe_even,
                       "also report Q squares at even traces (expected hits)");
    scan_cmd->add_option("--jobs", scan_opts.jobs, "worker threads (default: QUARTIC_JOBS or cores)");
    scan_cmd->add_option("--format", scan_opts.format)->check(CLI::IsMember({"json", "csv"}));
    scan_cmd->add_option("--out", scan_opts.out);

    VerifyOpts verify_opts;
    auto* verify_cmd = app.add_subcommand("verify", "solve one instance and cross-check it "
                                                    "against exhaustive enumeration");
    verify_cmd->add_option("--form", verify_opts.form)->required();
    verify_cmd->add_option("-A", verify_opts.a)->required()->check(check_decimal);
    verify_cmd->add_option("-B", verify_opts.b)->required()->check(check_decimal);
    verify_cmd->add_option("-C", verify_opts.c)->required();
    verify_cmd->add_option("--y-bound", verify_opts.y_bound, "enumeration bound")
        ->check(check_decimal);
    verify_cmd->add_option("--n-max", verify_opts.n_max);
    verify_cmd->add_option("--format", verify_opts.format)->check(CLI::IsMember({"json", "csv"}));
    verify_cmd->add_option("--out", verify_opts.out);

    BatchOpts batch_opts;
    auto* batch_cmd = app.add_subcommand("batch", "solve a grid of instances, optionally "
                                                  "cross-checking each against enumeration");
    batch_cmd->add_option("--a-min", batch_opts.a_min);
    batch_cmd->add_option("--a-max", batch_opts.a_max);
    batch_cmd->add_option("--b-min", batch_opts.b_min);
    batch_cmd->add_option("--b-max", batch_opts.b_max);
    batch_cmd->add_option("--c", batch_opts.c_values, "C values to include")->delimiter(',');
    batch_cmd->add_option("--forms", batch_opts.forms, "forms to include")->delimiter(',');
    batch_cmd->add_option("--y-bound", batch_opts.y_bound,
                          "enumeration cross-check bound, 0 skips the oracle")
        ->check(check_decimal);
    batch_cmd->add_option("--n-max", batch_opts.n_max);
    batch_cmd->add_option("--jobs", batch_opts.jobs, "worker threads (default: QUARTIC_JOBS or cores)");
    batch_cmd->add_option("--format", batch_opts.format)->check(CLI::IsMember({"json", "csv"}));
    batch_cmd->add_option("--out", batch_opts.out);
    batch_cmd->add_option("--test-candidate-limit", batch_opts.test_candidate_limit)
        ->group(""); // mismatch injection hook for harness self-tests

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*solve_cmd) return run_solve(solve_opts);
        if (*pell_cmd) return run_pell(pell_opts);
        if (*lucas_cmd) return run_lucas(lucas_opts);
        if (*scan_cmd) return run_scan(scan_opts);
        if (*verify_cmd) return run_verify(verify_opts);
        if (*batch_cmd) return run_batch(batch_opts);
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
