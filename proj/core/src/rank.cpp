#include "pairlin/rank.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "pairlin/determinant.hpp"
#include "pairlin/error.hpp"
#include "pairlin/relations.hpp"

namespace pairlin {

namespace {

void for_each_combination(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (f(idx)) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void dedupe(std::vector<Element>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool all_null(const PairAlgebra& alg, const Vector& v) {
    return std::all_of(v.begin(), v.end(), [&](const Element& b) { return alg.is_null(b); });
}

void axpy(const PairAlgebra& alg, Vector& acc, const Element& c, const Vector& v) {
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = alg.add(acc[j], alg.mul(c, v[j]));
}

void check_vectors(const PairAlgebra& alg, const std::vector<Vector>& vectors) {
    for (const auto& v : vectors) {
        if (v.size() != vectors.front().size()) throw Error(ErrorCode::DimensionMismatch, "vectors differ in length");
        for (const auto& b : v) alg.require(b);
    }
}

struct Ranks {
    std::size_t row = 0, col = 0, sub = 0;
};

std::string ranks_text(const Ranks& r) {
    return "submatrix_rank=" + std::to_string(r.sub) + " row_rank=" + std::to_string(r.row) +
           " col_rank=" + std::to_string(r.col);
}

Verdict a1_verdict(const Ranks& r, Completeness c) {
    const std::size_t lo = std::min(r.row, r.col);
    if (r.sub > lo) return {VerdictStatus::Fails, ranks_text(r), std::nullopt};
    if (c == Completeness::Exact) return {VerdictStatus::Holds, ranks_text(r), std::nullopt};
    return {VerdictStatus::Unknown, ranks_text(r) + " (heuristic domain: ranks are upper bounds)", std::nullopt};
}

Verdict a2_verdict(const Ranks& r, Completeness c) {
    const std::size_t hi = std::max(r.row, r.col);
    if (r.sub >= hi) return {VerdictStatus::Holds, ranks_text(r), std::nullopt};
    if (c == Completeness::Exact) return {VerdictStatus::Fails, ranks_text(r), std::nullopt};
    return {VerdictStatus::Unknown, ranks_text(r) + " (heuristic domain: ranks are upper bounds)", std::nullopt};
}

Verdict a2prime_verdict(const Matrix& a, const CoefficientDomain& domain) {
    if (a.rows() <= a.cols()) return {VerdictStatus::Holds, "vacuous: rows <= cols", std::nullopt};
    auto w = find_dependence(a.alg(), a.row_vectors(), domain);
    if (w) return {VerdictStatus::Holds, "rows dependent: " + format_witness(a.alg(), *w), w};
    if (domain.completeness == Completeness::Exact)
        return {VerdictStatus::Fails,
                std::to_string(a.rows()) + " rows of length " + std::to_string(a.cols()) + " are independent",
                std::nullopt};
    return {VerdictStatus::Unknown, "no witness in heuristic domain", std::nullopt};
}

}  // namespace

CoefficientDomain exact_domain(const PairAlgebra& alg) {
    auto ts = alg.tangibles();
    if (!ts || ts->empty())
        throw Error(ErrorCode::DomainEmpty, alg.spec() + " has no finite tangible enumeration");
    return {*ts, Completeness::Exact, 0};
}

CoefficientDomain heuristic_domain(const Matrix& a, std::size_t depth) {
    const auto& A = a.alg();
    std::vector<Element> entries;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (A.is_tangible(a(i, j))) entries.push_back(a(i, j));
    dedupe(entries);
    std::vector<Element> gens{A.one()};
    for (const auto& x : entries) {
        gens.push_back(x);
        for (const auto& y : entries)
            if (auto inv = A.inverse(y)) gens.push_back(A.mul(x, *inv));
    }
    dedupe(gens);
    std::vector<Element> level = gens, all = gens;
    for (std::size_t d = 2; d <= depth; ++d) {
        std::vector<Element> next;
        for (const auto& x : level)
            for (const auto& g : gens) next.push_back(A.mul(x, g));
        dedupe(next);
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    dedupe(all);
    std::erase_if(all, [&](const Element& b) { return !A.is_tangible(b); });
    return {all, Completeness::Heuristic, std::max<std::size_t>(depth, 1)};
}

CoefficientDomain default_domain(const Matrix& a) {
    if (a.alg().tangibles()) return exact_domain(a.alg());
    return heuristic_domain(a, 2);
}

bool tangibles_form_group(const PairAlgebra& alg) {
    std::vector<Element> ts;
    if (auto t = alg.tangibles())
        ts = *t;
    else
        for (const auto& b : alg.sample())
            if (alg.is_tangible(b)) ts.push_back(b);
    for (const auto& a : ts) {
        auto inv = alg.inverse(a);
        if (!inv || alg.mul(a, *inv) != alg.one()) return false;
    }
    return true;
}

bool is_dependence_witness(const PairAlgebra& alg, const std::vector<Vector>& vectors, const DependenceWitness& w) {
    if (w.support.empty() || w.support.size() != w.coefficients.size()) return false;
    Vector acc(vectors.at(w.support.front()).size(), alg.zero());
    for (std::size_t k = 0; k < w.support.size(); ++k) {
        if (!alg.is_tangible(w.coefficients[k])) return false;
        axpy(alg, acc, w.coefficients[k], vectors.at(w.support[k]));
    }
    return all_null(alg, acc);
}

std::optional<DependenceWitness> find_dependence(const PairAlgebra& alg, const std::vector<Vector>& vectors,
                                                 const CoefficientDomain& domain) {
    if (domain.candidates.empty()) throw Error(ErrorCode::DomainEmpty, "coefficient domain is empty");
    if (vectors.empty()) return std::nullopt;
    check_vectors(alg, vectors);
    const bool normalize = tangibles_form_group(alg);
    const std::size_t len = vectors.front().size();
    std::optional<DependenceWitness> found;
    for (std::size_t s = 1; s <= vectors.size() && !found; ++s) {
        for_each_combination(vectors.size(), s, [&](const std::vector<std::size_t>& support) {
            std::vector<Element> coeffs(s, alg.one());
            std::vector<Vector> partial(s + 1, Vector(len, alg.zero()));
            std::function<bool(std::size_t)> dfs = [&](std::size_t k) {
                if (k == s) return all_null(alg, partial[s]);
                auto try_coeff = [&](const Element& c) {
                    coeffs[k] = c;
                    partial[k + 1] = partial[k];
                    axpy(alg, partial[k + 1], c, vectors[support[k]]);
                    return dfs(k + 1);
                };
                if (k == 0 && normalize) return try_coeff(alg.one());
                for (const auto& c : domain.candidates)
                    if (try_coeff(c)) return true;
                return false;
            };
            if (dfs(0)) {
                found = DependenceWitness{support, coeffs};
                return true;
            }
            return false;
        });
    }
    return found;
}

namespace {

std::size_t vector_rank(const PairAlgebra& alg, const std::vector<Vector>& vectors, const CoefficientDomain& domain) {
    for (std::size_t k = vectors.size(); k >= 1; --k) {
        bool independent = false;
        for_each_combination(vectors.size(), k, [&](const std::vector<std::size_t>& idx) {
            std::vector<Vector> sub;
            for (auto i : idx) sub.push_back(vectors[i]);
            independent = !find_dependence(alg, sub, domain);
            return independent;
        });
        if (independent) return k;
    }
    return 0;
}

}  // namespace

std::size_t row_rank(const Matrix& a, const CoefficientDomain& domain) {
    return vector_rank(a.alg(), a.row_vectors(), domain);
}

std::size_t col_rank(const Matrix& a, const CoefficientDomain& domain) {
    return vector_rank(a.alg(), a.col_vectors(), domain);
}

std::size_t submatrix_rank(const Matrix& a) {
    for (std::size_t k = std::min(a.rows(), a.cols()); k >= 1; --k) {
        bool found = false;
        for_each_combination(a.rows(), k, [&](const std::vector<std::size_t>& rs) {
            for_each_combination(a.cols(), k, [&](const std::vector<std::size_t>& cs) {
                found = !is_singular(a.submatrix(rs, cs));
                return found;
            });
            return found;
        });
        if (found) return k;
    }
    return 0;
}

std::string_view to_string(Condition c) {
    switch (c) {
        case Condition::A1: return "a1";
        case Condition::A2: return "a2";
        case Condition::A2Prime: return "a2prime";
    }
    return "?";
}

std::string_view to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Holds: return "HOLDS";
        case VerdictStatus::Fails: return "FAILS";
        case VerdictStatus::Unknown: return "UNKNOWN";
    }
    return "?";
}

Verdict check_condition(const Matrix& a, Condition which, const CoefficientDomain& domain) {
    if (which == Condition::A2Prime) return a2prime_verdict(a, domain);
    Ranks r{row_rank(a, domain), col_rank(a, domain), submatrix_rank(a)};
    Verdict v = which == Condition::A1 ? a1_verdict(r, domain.completeness) : a2_verdict(r, domain.completeness);
    if (v.status == VerdictStatus::Fails && which == Condition::A1) v.witness = find_dependence(a.alg(), a.row_vectors(), domain);
    return v;
}

std::vector<RankDefect> rank_defect(const Matrix& a) {
    const std::size_t m = std::min<std::size_t>(a.rows(), 20), n = a.cols();
    const auto& A = a.alg();
    std::vector<std::uint32_t> qualifying;
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << m); ++s) {
        std::size_t k = std::popcount(s), zeros = 0;
        for (std::size_t j = 0; j < n; ++j) {
            bool all_zero = true;
            for (std::size_t i = 0; i < m && all_zero; ++i)
                if ((s >> i & 1) && a(i, j) != A.zero()) all_zero = false;
            zeros += all_zero;
        }
        if (zeros + k >= n + 1) qualifying.push_back(s);
    }
    std::vector<RankDefect> out;
    for (auto s : qualifying) {
        bool maximal = std::none_of(qualifying.begin(), qualifying.end(),
                                    [&](std::uint32_t t) { return t != s && (t & s) == s; });
        if (!maximal) continue;
        RankDefect d;
        for (std::size_t i = 0; i < m; ++i)
            if (s >> i & 1) d.rows.push_back(i);
        for (std::size_t j = 0; j < n; ++j)
            if (std::all_of(d.rows.begin(), d.rows.end(), [&](std::size_t i) { return a(i, j) == A.zero(); }))
                d.zero_cols.push_back(j);
        out.push_back(std::move(d));
    }
    return out;
}

std::optional<SpanResult> preceq_spans(const PairAlgebra& alg, const std::vector<Vector>& vectors,
                                       const Vector& target, const CoefficientDomain& domain) {
    if (domain.candidates.empty()) throw Error(ErrorCode::DomainEmpty, "coefficient domain is empty");
    check_vectors(alg, vectors);
    for (const auto& v : vectors)
        if (v.size() != target.size()) throw Error(ErrorCode::DimensionMismatch, "target length differs");
    const std::size_t n = vectors.size();
    std::vector<Element> coeffs(n, alg.one());
    std::vector<Vector> partial(n + 1, Vector(target.size(), alg.zero()));
    std::function<bool(std::size_t)> dfs = [&](std::size_t k) {
        if (k == n) {
            for (std::size_t j = 0; j < target.size(); ++j)
                if (!surpasses0(alg, partial[n][j], target[j])) return false;
            return true;
        }
        for (const auto& c : domain.candidates) {
            coeffs[k] = c;
            partial[k + 1] = partial[k];
            axpy(alg, partial[k + 1], c, vectors[k]);
            if (dfs(k + 1)) return true;
        }
        return false;
    };
    if (!dfs(0)) return std::nullopt;
    SpanResult out{coeffs, std::nullopt};
    DependenceWitness w;
    std::vector<Vector> with_target = vectors;
    with_target.push_back(target);
    for (std::size_t k = 0; k < n; ++k) {
        auto d = alg.dagger(coeffs[k]);
        if (!d) return out;
        w.support.push_back(k);
        w.coefficients.push_back(*d);
    }
    w.support.push_back(n);
    w.coefficients.push_back(alg.one());
    if (is_dependence_witness(alg, with_target, w)) out.induced = std::move(w);
    return out;
}

RankReport rank_report(const Matrix& a, const CoefficientDomain& domain) {
    RankReport r;
    r.completeness = domain.completeness;
    Ranks ranks{row_rank(a, domain), col_rank(a, domain), submatrix_rank(a)};
    r.row_rank = ranks.row;
    r.col_rank = ranks.col;
    r.submatrix_rank = ranks.sub;
    r.row_witness = find_dependence(a.alg(), a.row_vectors(), domain);
    r.a1 = a1_verdict(ranks, domain.completeness);
    if (r.a1.status == VerdictStatus::Fails) r.a1.witness = r.row_witness;
    r.a2 = a2_verdict(ranks, domain.completeness);
    r.a2prime = a2prime_verdict(a, domain);
    return r;
}

std::string format_witness(const PairAlgebra& alg, const DependenceWitness& w) {
    std::string s = "support=[";
    for (std::size_t k = 0; k < w.support.size(); ++k) s += (k ? "," : "") + std::to_string(w.support[k] + 1);
    s += "] coeffs=[";
    for (std::size_t k = 0; k < w.coefficients.size(); ++k) s += (k ? "," : "") + alg.format(w.coefficients[k]);
    return s + "]";
}

}  // namespace pairlin
