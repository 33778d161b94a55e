#include "pairlin_cli/suites.hpp"

#include <functional>
#include <map>

#include "pairlin/determinant.hpp"
#include "pairlin/diagnostics.hpp"
#include "pairlin/error.hpp"
#include "pairlin/instances.hpp"
#include "pairlin/rank.hpp"
#include "pairlin/relations.hpp"
#include "pairlin/solvers.hpp"

namespace pairlin::cli {

namespace {

struct Tally {
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string first_failure;

    void check(bool ok, const std::function<std::string()>& what) {
        ++checked;
        if (ok) return;
        if (failed++ == 0) first_failure = what();
    }
    SuiteOutcome outcome(const std::string& name) const {
        std::string d = std::to_string(checked - failed) + "/" + std::to_string(checked) + " checks";
        if (failed) d += "; first failure: " + first_failure;
        return {name, failed == 0, d};
    }
};

// All n x n matrices with entries from `values`, row-major odometer.
void for_each_matrix(const AlgebraPtr& alg, std::size_t rows, std::size_t cols, const std::vector<Element>& values,
                     const std::function<void(const Matrix&)>& f) {
    std::vector<std::size_t> idx(rows * cols, 0);
    while (true) {
        std::vector<Element> entries;
        for (auto k : idx) entries.push_back(values[k]);
        f(Matrix(alg, rows, cols, std::move(entries)));
        std::size_t p = 0;
        while (p < idx.size() && ++idx[p] == values.size()) idx[p++] = 0;
        if (p == idx.size()) return;
    }
}

std::vector<Element> with_zero(const PairAlgebra& alg) {
    std::vector<Element> v{alg.zero()};
    auto ts = *alg.tangibles();
    v.insert(v.end(), ts.begin(), ts.end());
    return v;
}

std::string mat(const Matrix& m) { return "\n" + format_matrix(m); }

SuiteOutcome structure(const SuiteOptions&) {
    Tally t;
    for (const auto& e : flag_expectations()) {
        auto alg = make_pair(e.spec);
        auto report = axiom_audit(*alg);
        t.check(report.holds("admissible"), [&] { return e.spec + ": admissible"; });
        for (const auto& f : e.holds) t.check(report.holds(f), [&] { return e.spec + ": " + f + " should hold"; });
        for (const auto& f : e.fails) t.check(!report.holds(f), [&] { return e.spec + ": " + f + " should fail"; });
    }
    auto sb = make_pair("superboolean");
    auto ch = characteristic(*sb);
    t.check(ch.finite && ch.p == 1 && ch.q == 2, [] { return std::string("superboolean characteristic (1,2)"); });

    for (const auto& reg : registered_pairs()) {
        auto alg = make_pair(reg.spec);
        auto elems = alg->carrier();
        if (!elems || !axiom_audit(*alg).holds("metatangible")) continue;
        for (const auto& c : *elems) {
            if (c == alg->zero()) continue;
            bool ok = false;
            try {
                ok = reconstruct(*alg, uniform_presentation(*alg, c)) == c;
            } catch (const Error&) {
            }
            t.check(ok, [&] { return reg.spec + ": presentation of " + alg->format(c); });
        }
    }

    auto sign = make_pair("sign");
    auto db = make_pair("doubled:boolean");
    const auto& D = static_cast<const DoubledPair&>(*db);
    const Element b0 = make_pair("boolean")->zero(), b1 = make_pair("boolean")->one();
    std::map<std::string, Element> phi{{"0", D.pair(b0, b0)}, {"1", D.pair(b1, b0)}, {"-1", D.pair(b0, b1)}, {"inf", D.pair(b1, b1)}};
    for (const auto& [x, px] : phi) {
        const Element ex = sign->parse(x);
        t.check(sign->is_tangible(ex) == db->is_tangible(px) && sign->is_null(ex) == db->is_null(px),
                [&] { return "iso layers at " + x; });
        for (const auto& [y, py] : phi) {
            const Element ey = sign->parse(y);
            t.check(phi.at(sign->format(sign->add(ex, ey))) == db->add(px, py), [&] { return "iso add " + x + "+" + y; });
            t.check(phi.at(sign->format(sign->mul(ex, ey))) == db->mul(px, py), [&] { return "iso mul " + x + "*" + y; });
        }
    }
    return t.outcome("structure");
}

SuiteOutcome laplace(const SuiteOptions& o) {
    Tally t;
    Rng rng(o.seed);
    auto st = make_pair("supertropical");
    auto check_all = [&](const Matrix& a) {
        const Element det = det_element(a);
        const std::size_t n = a.rows();
        for (std::size_t i = 0; i < n; ++i) {
            t.check(laplace_expand(a, {i}) == det, [&] { return "row " + std::to_string(i + 1) + mat(a); });
            for (std::size_t j = i + 1; j < n; ++j)
                t.check(laplace_expand(a, {i, j}) == det, [&] { return "rows " + std::to_string(i + 1) + "," + std::to_string(j + 1) + mat(a); });
        }
    };
    for (std::size_t k = 0; k < o.trials; ++k) check_all(random_supertropical(st, 4, 4, rng));
    auto sign = make_pair("sign");
    for_each_matrix(sign, 3, 3, *sign->tangibles(), check_all);
    return t.outcome("laplace");
}

SuiteOutcome cayley_hamilton(const SuiteOptions& o) {
    Tally t;
    Rng rng(o.seed + 1);
    auto st = make_pair("supertropical");
    for (std::size_t k = 0; k < o.trials; ++k) {
        Matrix a = random_supertropical(st, 3, 3, rng);
        t.check(cayley_hamilton_check(a), [&] { return mat(a); });
    }
    auto sign = make_pair("sign");
    for_each_matrix(sign, 3, 3, *sign->tangibles(), [&](const Matrix& a) { t.check(cayley_hamilton_check(a), [&] { return mat(a); }); });
    return t.outcome("cayley-hamilton");
}

SuiteOutcome cramer(const SuiteOptions& o) {
    Tally t;
    Rng rng(o.seed + 2);
    auto st = make_pair("supertropical");
    auto check = [&](const Matrix& a, const Vector& v) {
        auto r = cramer_solve(a, v);
        t.check(r.balance_verified, [&] { return "|A|v vs Aw" + mat(a); });
        if (r.x) t.check(r.x_balances, [&] { return "Ax vs v" + mat(a); });
    };
    for (std::size_t k = 0; k < o.trials; ++k) {
        Matrix a = random_supertropical(st, 3, 3, rng);
        Matrix v = random_supertropical(st, 1, 3, rng);
        check(a, v.row(0));
    }
    auto sign = make_pair("sign");
    const auto vals = with_zero(*sign);
    for_each_matrix(sign, 2, 2, vals, [&](const Matrix& a) {
        for_each_matrix(sign, 1, 2, vals, [&](const Matrix& v) { check(a, v.row(0)); });
    });
    return t.outcome("cramer");
}

SuiteOutcome jacobi(const SuiteOptions& o) {
    Tally t;
    Rng rng(o.seed + 3);
    auto st = make_pair("supertropical");
    for (std::size_t k = 0; k < o.trials; ++k) {
        const std::size_t n = 2 + k % 3;
        Matrix a = random_jacobi_matrix(st, n, rng);
        Vector v = random_supertropical(st, 1, n, rng).row(0);
        try {
            auto s = jacobi_solve(a, v);
            t.check(*s.stabilized_at <= n && s.balance_verified && s.modulus_verified, [&] {
                return "stabilized_at=" + std::to_string(*s.stabilized_at) + mat(a);
            });
        } catch (const Error& e) {
            t.check(false, [&] { return std::string(e.what()) + mat(a); });
        }
    }
    return t.outcome("jacobi");
}

SuiteOutcome a2proved(const SuiteOptions& o) {
    Tally t;
    auto sign = make_pair("sign");
    const auto exact = exact_domain(*sign);
    for_each_matrix(sign, 3, 3, with_zero(*sign), [&](const Matrix& a) {
        if (!is_tangible_or_zero(a) || !is_singular(a)) return;
        t.check(find_dependence(*sign, a.row_vectors(), exact).has_value(), [&] { return mat(a); });
    });
    Rng rng(o.seed + 4);
    auto st = make_pair("supertropical");
    for (std::size_t k = 0; k < o.trials; ++k) {
        Matrix a = forced_singular_supertropical(st, 3, rng);
        t.check(find_dependence(*st, a.row_vectors(), heuristic_domain(a)).has_value(), [&] { return mat(a); });
    }
    return t.outcome("a2proved");
}

SuiteOutcome a1part(const SuiteOptions& o) {
    Tally t;
    Rng rng(o.seed + 5);
    for (const char* spec : {"supertropical", "doubled:boolean"}) {
        auto alg = make_pair(spec);
        for (std::size_t k = 0; k < o.trials; ++k) {
            const std::size_t n = 2 + k % 2;
            auto a = dependent_construction(alg, n, rng);
            if (!a) continue;
            const auto domain = default_domain(*a);
            if (!find_dependence(*alg, a->row_vectors(), domain)) continue;
            t.check(is_singular(*a), [&] { return std::string(spec) + mat(*a); });
        }
    }
    return t.outcome("a1part");
}

SuiteOutcome krasner(const SuiteOptions&) {
    Tally t;
    for (const char* spec : {"krasner:5:4", "krasner:7:2"}) {
        auto alg = make_pair(spec);
        const bool both = std::string(spec) == "krasner:5:4";
        const auto domain = exact_domain(*alg);
        for_each_matrix(alg, 2, 2, *alg->tangibles(), [&](const Matrix& a) {
            const bool dep = find_dependence(*alg, a.row_vectors(), domain).has_value();
            const bool zero = krasner_det_contains_zero(a);
            t.check(both ? dep == zero : (!dep || zero), [&] { return std::string(spec) + mat(a); });
        });
    }
    return t.outcome("krasner");
}

SuiteOutcome hyper_a2prime(const SuiteOptions&) {
    Tally t;
    for (const char* spec : {"hyper:hex1:2", "hyper:hex1:3"}) {
        auto alg = make_pair(spec);
        const auto domain = exact_domain(*alg);
        for_each_matrix(alg, 3, 2, *alg->tangibles(), [&](const Matrix& a) {
            t.check(find_dependence(*alg, a.row_vectors(), domain).has_value(), [&] { return std::string(spec) + mat(a); });
        });
    }
    return t.outcome("hyper-a2prime");
}

SuiteOutcome roundtrip(const SuiteOptions& o) {
    Tally t;
    Rng rng(o.seed + 6);
    std::vector<Matrix> ms{sign_a2_fixture(), doubled_boolean_fixture(), truncated_fixture(), powerset_fixture()};
    auto st = make_pair("supertropical");
    for (std::size_t k = 0; k < 10; ++k) ms.push_back(random_supertropical(st, 3, 4, rng));
    for (const auto& m : ms) {
        const std::string text = format_matrix(m);
        t.check(parse_matrix(text) == m && format_matrix(parse_matrix(text)) == text, [&] { return text; });
    }
    return t.outcome("roundtrip");
}

const std::map<std::string, std::function<SuiteOutcome(const SuiteOptions&)>>& suites() {
    static const std::map<std::string, std::function<SuiteOutcome(const SuiteOptions&)>> m{
        {"structure", structure}, {"laplace", laplace},   {"cayley-hamilton", cayley_hamilton},
        {"cramer", cramer},       {"jacobi", jacobi},     {"a2proved", a2proved},
        {"a1part", a1part},       {"krasner", krasner},   {"hyper-a2prime", hyper_a2prime},
        {"roundtrip", roundtrip},
    };
    return m;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"structure", "roundtrip", "laplace",  "cayley-hamilton", "cramer",
                                                "jacobi",    "a2proved",  "a1part",   "krasner",         "hyper-a2prime"};
    return names;
}

SuiteOutcome run_suite(const std::string& name, const SuiteOptions& options) {
    auto it = suites().find(name);
    if (it == suites().end()) throw Error(ErrorCode::UnknownExample, "unknown suite '" + name + "'");
    return it->second(options);
}

const std::vector<FlagExpectation>& flag_expectations() {
    static const std::vector<FlagExpectation> e{
        {"sign", {"second-kind", "strict-second-kind", "almost-regular", "a0-bipotent", "uniquely-negated"}, {"first-kind"}},
        {"boolean", {"second-kind", "idempotent-addition"}, {"property-n"}},
        {"superboolean", {"first-kind", "metatangible"}, {"second-kind"}},
        {"supertropical", {"first-kind", "tropical-type", "a0-bipotent"}, {}},
        {"minimal:first:3", {"first-kind", "a0-bipotent"}, {}},
        {"minimal:second:2", {"second-kind", "a0-bipotent"}, {}},
        {"doubled:boolean", {"second-kind", "a0-bipotent", "uniquely-negated"}, {}},
        {"doubled:sign", {"negation-map"}, {}},
        {"counting:5", {}, {"first-kind"}},
        {"npq:2:3", {}, {}},
        {"krasner:5:4", {"negation-map"}, {}},
        {"krasner:7:2", {"negation-map"}, {}},
        {"hyper:hex1:2", {}, {}},
        {"hyper:hex1:3", {}, {}},
        {"hyper:hex2:5", {}, {}},
        {"hyper:weaksign:2", {}, {}},
        {"powerset-symdiff:2", {"first-kind"}, {}},
    };
    return e;
}

}  // namespace pairlin::cli
