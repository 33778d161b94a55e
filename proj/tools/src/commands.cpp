#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pairlin/determinant.hpp"
#include "pairlin/diagnostics.hpp"
#include "pairlin/instances.hpp"
#include "pairlin/rank.hpp"
#include "pairlin/relations.hpp"
#include "pairlin/report.hpp"
#include "pairlin/solvers.hpp"
#include "pairlin_cli/cli.hpp"
#include "pairlin_cli/examples.hpp"
#include "pairlin_cli/suites.hpp"

namespace pairlin::cli {

ExitCode exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::CapExceeded:
        case ErrorCode::Undecidable:
        case ErrorCode::DomainEmpty:
        case ErrorCode::NoConvergence:
            return CapOrUndecidable;
        default:
            return InputError;
    }
}

namespace {

struct Options {
    std::string format = "kv";
    std::uint64_t seed = kDefaultSeed;
    std::size_t trials = 100;
    std::string file;
    std::string domain = "auto";
    std::string condition;
    std::string method;
    std::string rhs;
    std::size_t max_iter = 0;
    std::string spec;
    std::string name;
    std::string what;
};

CoefficientDomain domain_for(const Matrix& a, const std::string& text) {
    if (text == "auto") return default_domain(a);
    if (text == "exact") return exact_domain(a.alg());
    if (text.rfind("heuristic:", 0) == 0) {
        const std::string depth = text.substr(10);
        std::size_t pos = 0;
        long d = -1;
        try {
            d = std::stol(depth, &pos);
        } catch (const std::exception&) {
        }
        if (pos == depth.size() && d >= 1 && d <= 4) return heuristic_domain(a, std::size_t(d));
    }
    throw Error(ErrorCode::BadSpecifier, "domain must be exact or heuristic:<1..4>, got '" + text + "'");
}

std::string domain_label(const CoefficientDomain& d) {
    return d.completeness == Completeness::Exact ? "exact" : "heuristic:" + std::to_string(d.depth);
}

std::string index_list(const std::vector<std::size_t>& idx) {
    std::string s = "[";
    for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k] + 1);
    return s + "]";
}

std::string det_fields(const Matrix& m) {
    auto d = det_doubled(m);
    const auto& A = m.alg();
    return "det_plus=" + A.format(d.plus) + " det_minus=" + A.format(d.minus) + " sum=" +
           A.format(A.add(d.plus, d.minus)) + " singular=" + (balances(A, d.plus, d.minus) ? "true" : "false");
}

void add_header(Report& r, const Matrix& a) {
    r.add("pair", a.alg().spec()).add("rows", a.rows()).add("cols", a.cols());
}

void combinations(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::size_t start,
                  const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (cur.size() == k) {
        f(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        combinations(n, k, cur, i + 1, f);
        cur.pop_back();
    }
}

int cmd_pairs(const Options& o, Report& r) {
    if (o.what != "list") throw Error(ErrorCode::BadSpecifier, "usage: pairs list");
    for (const auto& p : registered_pairs()) r.add(p.spec, p.description);
    return Ok;
}

int cmd_det(const Options& o, Report& r) {
    Matrix a = read_matrix_file(o.file);
    add_header(r, a);
    if (a.square()) {
        auto d = det_doubled(a);
        const auto& A = a.alg();
        r.add("det_plus", A.format(d.plus))
            .add("det_minus", A.format(d.minus))
            .add("permanent", A.format(A.add(d.plus, d.minus)))
            .add("det", det_context(A)->format(det_element(a)))
            .add("singular", is_singular(a));
        return Ok;
    }
    const std::size_t k = std::min(a.rows(), a.cols());
    std::vector<std::size_t> all_rows, all_cols, cur;
    for (std::size_t i = 0; i < a.rows(); ++i) all_rows.push_back(i);
    for (std::size_t j = 0; j < a.cols(); ++j) all_cols.push_back(j);
    const bool wide = a.cols() > a.rows();
    combinations(wide ? a.cols() : a.rows(), k, cur, 0, [&](const std::vector<std::size_t>& s) {
        Matrix m = wide ? a.submatrix(all_rows, s) : a.submatrix(s, all_cols);
        r.add(std::string(wide ? "minor cols=" : "minor rows=") + index_list(s), det_fields(m));
    });
    return Ok;
}

int cmd_rank(const Options& o, Report& r) {
    Matrix a = read_matrix_file(o.file);
    add_header(r, a);
    auto domain = domain_for(a, o.domain);
    auto rep = rank_report(a, domain);
    r.add("domain", domain_label(domain))
        .add("row_rank", rep.row_rank)
        .add("col_rank", rep.col_rank)
        .add("submatrix_rank", rep.submatrix_rank)
        .add("witness", rep.row_witness ? format_witness(a.alg(), *rep.row_witness) : std::string("none"));
    for (auto [name, v] : {std::pair{"a1", &rep.a1}, std::pair{"a2", &rep.a2}, std::pair{"a2prime", &rep.a2prime}})
        r.add(name, std::string(to_string(v->status))).add(std::string(name) + "_detail", v->detail);
    std::string defects;
    for (const auto& d : rank_defect(a)) defects += (defects.empty() ? "" : " ") + index_list(d.rows) + "/" + index_list(d.zero_cols);
    r.add("rank_defect", defects.empty() ? std::string("none") : defects);
    return Ok;
}

int cmd_check(const Options& o, Report& r) {
    Condition c;
    if (o.condition == "a1")
        c = Condition::A1;
    else if (o.condition == "a2")
        c = Condition::A2;
    else if (o.condition == "a2p")
        c = Condition::A2Prime;
    else
        throw Error(ErrorCode::BadSpecifier, "condition must be a1, a2 or a2p");
    Matrix a = read_matrix_file(o.file);
    add_header(r, a);
    auto domain = domain_for(a, o.domain);
    auto v = check_condition(a, c, domain);
    r.add("domain", domain_label(domain))
        .add(std::string(to_string(c)), std::string(to_string(v.status)))
        .add("detail", v.detail);
    if (v.witness) r.add("witness", format_witness(a.alg(), *v.witness));
    switch (v.status) {
        case VerdictStatus::Holds: return Ok;
        case VerdictStatus::Fails: return ClaimFailed;
        case VerdictStatus::Unknown: return CapOrUndecidable;
    }
    return Ok;
}

int cmd_solve(const Options& o, Report& r) {
    Matrix a = read_matrix_file(o.file);
    add_header(r, a);
    const auto& A = a.alg();
    Vector v = parse_vector(A, o.rhs);
    if (o.method == "cramer") {
        auto res = cramer_solve(a, v);
        auto ctx = det_context(A);
        r.add("det", ctx->format(res.det))
            .add("w", format_vector(*ctx, res.w))
            .add("balance_verified", res.balance_verified)
            .add("x", res.x ? format_vector(A, *res.x) : std::string("none"));
        if (res.x) r.add("x_balances", res.x_balances);
        if (res.unique) r.add("unique", *res.unique);
        if (!res.note.empty()) r.add("note", res.note);
        return res.balance_verified && (!res.x || res.x_balances) ? Ok : ClaimFailed;
    }
    if (o.method == "jacobi") {
        auto st = jacobi_solve(a, v, o.max_iter);
        for (std::size_t k = 0; k < st.iterates.size(); ++k)
            r.add("x" + std::to_string(k + 1), format_vector(A, st.iterates[k]));
        r.add("stabilized_at", *st.stabilized_at)
            .add("x", format_vector(A, st.iterates.back()))
            .add("balance_verified", st.balance_verified)
            .add("modulus_verified", st.modulus_verified);
        return st.balance_verified && st.modulus_verified ? Ok : ClaimFailed;
    }
    throw Error(ErrorCode::BadSpecifier, "solve method must be cramer or jacobi");
}

int cmd_audit(const Options& o, Report& r) {
    auto alg = make_pair(o.spec);
    auto rep = axiom_audit(*alg);
    auto ch = characteristic(*alg);
    r.add("pair", alg->spec())
        .add("sample_only", rep.sample_only)
        .add("detected_kind", std::string(to_string(rep.detected_kind)))
        .add("declared_kind", std::string(to_string(rep.declared_kind)))
        .add("kind_mismatch", rep.kind_mismatch)
        .add("dagger_multiplicity", rep.dagger_multiplicity)
        .add("characteristic", ch.finite ? "(" + std::to_string(ch.p) + "," + std::to_string(ch.q) + ")"
                                         : std::string(ch.capped ? "0 (capped)" : "0"));
    for (const auto& f : rep.flags) {
        r.add(f.name, f.holds);
        if (!f.holds && !f.witness.empty()) r.add(f.name + ".witness", f.witness);
    }
    return Ok;
}

int cmd_example(const Options& o, Report& r) {
    const auto& ex = find_example(o.name);
    auto outcome = ex.run();
    r.add("example", ex.name).add("claim", ex.citation).append(outcome.report).add("result", outcome.pass ? "PASS" : "FAIL");
    return outcome.pass ? Ok : ClaimFailed;
}

int cmd_verify(const Options& o, Report& r) {
    if (o.what != "all") throw Error(ErrorCode::BadSpecifier, "usage: verify all");
    r.add("seed", std::to_string(o.seed)).add("trials", o.trials);
    bool all = true;
    for (const auto& ex : named_examples()) {
        bool pass = false;
        try {
            pass = ex.run().pass;
        } catch (const Error&) {
        }
        all &= pass;
        r.add("example " + ex.name, pass ? "PASS" : "FAIL");
    }
    SuiteOptions so{o.seed, o.trials};
    for (const auto& name : suite_names()) {
        const auto t0 = std::chrono::steady_clock::now();
        SuiteOutcome s;
        try {
            s = run_suite(name, so);
        } catch (const Error& e) {
            s = {name, false, e.what()};
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        all &= s.pass;
        std::ostringstream line;
        line << (s.pass ? "PASS" : "FAIL") << " (" << s.detail << ", " << static_cast<long>(ms) << " ms)";
        r.add("suite " + name, line.str());
    }
    r.add("summary", all ? "PASS" : "FAIL");
    return all ? Ok : ClaimFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear algebra over pairs: determinants, ranks, solvers and audits", "pairlin"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Report encoding: kv or json-lines")->check(CLI::IsMember({"kv", "json-lines"}));

    auto* pairs = app.add_subcommand("pairs", "List registered pair specifiers");
    pairs->add_option("what", o.what, "list")->required();

    auto* det = app.add_subcommand("det", "Doubled determinant of a matrix file (all maximal minors when not square)");
    det->add_option("file", o.file)->required();

    auto* rank = app.add_subcommand("rank", "Row, column and submatrix ranks with condition verdicts");
    rank->add_option("file", o.file)->required();
    rank->add_option("--domain", o.domain, "exact | heuristic:<depth> (default: exact for finite T)");

    auto* check = app.add_subcommand("check", "Check condition a1, a2 or a2p");
    check->add_option("condition", o.condition)->required();
    check->add_option("file", o.file)->required();
    check->add_option("--domain", o.domain, "exact | heuristic:<depth>");

    auto* solve = app.add_subcommand("solve", "Solve A x ∇ v by Cramer's rule or Jacobi iteration");
    solve->add_option("method", o.method, "cramer | jacobi")->required();
    solve->add_option("file", o.file)->required();
    solve->add_option("--rhs", o.rhs, "Comma-separated element literals")->required();
    solve->add_option("--max-iter", o.max_iter, "Jacobi iteration limit (default 2n+4)");

    auto* audit = app.add_subcommand("audit", "Axiom audit of a pair");
    audit->add_option("spec", o.spec)->required();

    auto* example = app.add_subcommand("example", "Run a named reproduction");
    example->add_option("name", o.name)->required();

    auto* verify = app.add_subcommand("verify", "Run every example and property suite");
    verify->add_option("what", o.what, "all")->required();
    verify->add_option("--seed", o.seed, "Seed for the randomized suites");
    verify->add_option("--trials", o.trials, "Random draws per randomized family");

    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : InputError;
    }

    Report r;
    int code = Ok;
    try {
        if (*pairs) code = cmd_pairs(o, r);
        else if (*det) code = cmd_det(o, r);
        else if (*rank) code = cmd_rank(o, r);
        else if (*check) code = cmd_check(o, r);
        else if (*solve) code = cmd_solve(o, r);
        else if (*audit) code = cmd_audit(o, r);
        else if (*example) code = cmd_example(o, r);
        else if (*verify) code = cmd_verify(o, r);
    } catch (const Error& e) {
        out << r.render(parse_report_format(o.format));
        err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    out << r.render(parse_report_format(o.format));
    return code;
}

}  // namespace pairlin::cli
