#include "pairlin_cli/examples.hpp"

#include "pairlin/determinant.hpp"
#include "pairlin/error.hpp"
#include "pairlin/instances.hpp"
#include "pairlin/rank.hpp"
#include "pairlin_cli/fixtures.hpp"

namespace pairlin::cli {

namespace {

std::string det_text(const Matrix& m) {
    auto d = det_doubled(m);
    const auto& A = m.alg();
    return "det_plus=" + A.format(d.plus) + " det_minus=" + A.format(d.minus) +
           " sum=" + A.format(A.add(d.plus, d.minus));
}

ExampleOutcome sign_a2() {
    ExampleOutcome out;
    Matrix a = sign_a2_fixture();
    const auto& A = a.alg();
    auto domain = exact_domain(A);
    const std::size_t rr = row_rank(a, domain);
    const std::size_t sr = submatrix_rank(a);
    out.report.add("row_rank", rr).add("submatrix_rank", sr);
    bool minors_ok = true;
    const Element inf = A.parse("inf");
    for (std::size_t skip = 0; skip < 4; ++skip) {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < 4; ++j)
            if (j != skip) cols.push_back(j);
        Matrix m = a.submatrix({0, 1, 2}, cols);
        auto d = det_doubled(m);
        const bool singular = is_singular(m);
        minors_ok &= singular && A.add(d.plus, d.minus) == inf;
        out.report.add("minor_without_col_" + std::to_string(skip + 1), det_text(m) + " singular=" + (singular ? "true" : "false"));
    }
    auto v = check_condition(a, Condition::A2, domain);
    out.report.add("a2", std::string(to_string(v.status)));
    out.pass = rr == 3 && sr == 2 && minors_ok && v.status == VerdictStatus::Fails;
    return out;
}

ExampleOutcome doubled_boolean_a2() {
    ExampleOutcome out;
    Matrix a = doubled_boolean_fixture();
    const auto& A = a.alg();
    auto d = det_doubled(a);
    const Element total = A.add(d.plus, d.minus);
    auto w = find_dependence(A, a.row_vectors(), exact_domain(A));
    out.report.add("det", det_text(a))
        .add("det_sum_null", A.is_null(total))
        .add("singular", is_singular(a))
        .add("dependence", w ? format_witness(A, *w) : std::string("none"));
    out.pass = A.is_null(total) && !w;
    return out;
}

ExampleOutcome truncated() {
    ExampleOutcome out;
    Matrix a = truncated_fixture();
    const auto& A = a.alg();
    std::size_t nonzero_tracks = 0;
    for_each_permutation(4, [&](const std::vector<std::size_t>& pi, bool) {
        bool ok = true;
        for (std::size_t j = 0; j < 4; ++j) ok &= a(pi[j], j) != A.zero();
        nonzero_tracks += ok;
    });
    const Element perm = permanent(a);
    auto w = find_dependence(A, a.row_vectors(), exact_domain(A));
    out.report.add("nonzero_tracks", nonzero_tracks)
        .add("permanent", A.format(perm))
        .add("permanent_null", A.is_null(perm))
        .add("dependence", w ? format_witness(A, *w) : std::string("none"));
    out.pass = nonzero_tracks == 11 && A.is_null(perm) && !w;
    return out;
}

ExampleOutcome powerset() {
    ExampleOutcome out;
    Matrix a = powerset_fixture();
    const auto& A = a.alg();
    auto domain = exact_domain(A);
    auto w = find_dependence(A, a.row_vectors(), domain);
    auto v = check_condition(a, Condition::A2Prime, domain);
    out.report.add("dependence", w ? format_witness(A, *w) : std::string("none"))
        .add("a2prime", std::string(to_string(v.status)));
    out.pass = !w && v.status == VerdictStatus::Fails;
    return out;
}

ExampleOutcome sign_comp() {
    ExampleOutcome out;
    auto sign = make_pair("sign");
    const Element one = sign->one(), neg = sign->parse("-1"), inf = sign->parse("inf");
    const Matrix m1 = Matrix::from_rows(sign, {{one, one, neg}, {one, neg, one}, {neg, one, one}});
    const Matrix m2 = Matrix::from_rows(sign, {{one, one, one}, {one, neg, one}, {neg, one, one}});
    bool ok = true;
    for (const auto* m : {&m1, &m2}) {
        auto d = det_doubled(*m);
        ok &= sign->add(d.plus, d.minus) == inf && is_singular(*m);
        out.report.add("det", det_text(*m));
    }
    out.pass = ok;
    return out;
}

ExampleOutcome krasner_2x2() {
    ExampleOutcome out;
    auto alg = make_pair("krasner:5:4");
    const auto& K = static_cast<const KrasnerPair&>(*alg);
    const Element c1 = K.coset_of(1);
    const Matrix ones = Matrix::from_rows(alg, {{c1, c1}, {c1, c1}});
    const bool contains = krasner_det_contains_zero(ones);
    const Matrix id = Matrix::identity(alg, 2);
    const bool id_contains = krasner_det_contains_zero(id);
    auto domain = exact_domain(K);
    std::size_t agree = 0, total = 0;
    auto ts = *K.tangibles();
    for (const auto& a : ts)
        for (const auto& b : ts)
            for (const auto& c : ts)
                for (const auto& d : ts) {
                    Matrix m = Matrix::from_rows(alg, {{a, b}, {c, d}});
                    const bool dep = find_dependence(K, m.row_vectors(), domain).has_value();
                    agree += dep == krasner_det_contains_zero(m);
                    ++total;
                }
    out.report.add("ones_det_contains_zero", contains)
        .add("identity_det_contains_zero", id_contains)
        .add("dependence_matches_det", std::to_string(agree) + "/" + std::to_string(total));
    out.pass = contains && !id_contains && agree == total;
    return out;
}

}  // namespace

const std::vector<NamedExample>& named_examples() {
    static const std::vector<NamedExample> examples{
        {"sign-a2-counterexample", "sign pair: row rank 3 while every 3x3 minor is singular", sign_a2},
        {"doubled-boolean-a2", "doubled Boolean: null determinant sum, independent rows", doubled_boolean_a2},
        {"truncated-quasiperiodic", "counting:5: null permanent, independent rows", truncated},
        {"powerset-a2prime", "power set of C2: three independent vectors of length 2", powerset},
        {"sign-comp", "sign pair: the two 3x3 minor shapes both have determinant sum inf", sign_comp},
        {"krasner-2x2", "F5/{1,4}: determinant contains 0 exactly when 2x2 rows are dependent", krasner_2x2},
    };
    return examples;
}

const NamedExample& find_example(const std::string& name) {
    for (const auto& e : named_examples())
        if (e.name == name) return e;
    throw Error(ErrorCode::UnknownExample, "unknown example '" + name + "'");
}

}  // namespace pairlin::cli
