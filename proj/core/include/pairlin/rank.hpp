#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pairlin/matrix.hpp"

namespace pairlin {

// Sum over the support of coefficients[k] * vectors[support[k]] is null in every component.
struct DependenceWitness {
    std::vector<std::size_t> support;  // 0-based
    std::vector<Element> coefficients;
};

enum class Completeness { Exact, Heuristic };

struct CoefficientDomain {
    std::vector<Element> candidates;
    Completeness completeness = Completeness::Exact;
    std::size_t depth = 0;
};

// Full tangible enumeration; DomainEmpty when T is infinite.
CoefficientDomain exact_domain(const PairAlgebra& alg);
// Tangible entries, their pairwise ratios and 1, closed under products up to depth.
CoefficientDomain heuristic_domain(const Matrix& a, std::size_t depth = 2);
// Exact when T is finite, otherwise the heuristic domain at depth 2.
CoefficientDomain default_domain(const Matrix& a);

// True when every tangible element has an inverse (checked on the sample over an infinite T).
bool tangibles_form_group(const PairAlgebra& alg);

bool is_dependence_witness(const PairAlgebra& alg, const std::vector<Vector>& vectors, const DependenceWitness& w);

// First witness by support size, then support order, then coefficient tuple in domain order.
// When T is a group the first coefficient is fixed to 1.
std::optional<DependenceWitness> find_dependence(const PairAlgebra& alg, const std::vector<Vector>& vectors,
                                                 const CoefficientDomain& domain);

std::size_t row_rank(const Matrix& a, const CoefficientDomain& domain);
std::size_t col_rank(const Matrix& a, const CoefficientDomain& domain);
std::size_t submatrix_rank(const Matrix& a);

enum class Condition { A1, A2, A2Prime };
enum class VerdictStatus { Holds, Fails, Unknown };

std::string_view to_string(Condition c);
std::string_view to_string(VerdictStatus s);

struct Verdict {
    VerdictStatus status = VerdictStatus::Unknown;
    std::string detail;
    std::optional<DependenceWitness> witness;
};

Verdict check_condition(const Matrix& a, Condition which, const CoefficientDomain& domain);

struct RankDefect {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> zero_cols;
};

// Maximal row sets of size k whose common zero columns number at least n + 1 - k.
std::vector<RankDefect> rank_defect(const Matrix& a);

struct SpanResult {
    std::vector<Element> coefficients;
    // Witness on vectors followed by the target (index vectors.size()).
    std::optional<DependenceWitness> induced;
};

// Tangible a_i with sum a_i v_i surpassing-below the target componentwise.
std::optional<SpanResult> preceq_spans(const PairAlgebra& alg, const std::vector<Vector>& vectors,
                                       const Vector& target, const CoefficientDomain& domain);

struct RankReport {
    std::size_t row_rank = 0;
    std::size_t col_rank = 0;
    std::size_t submatrix_rank = 0;
    Completeness completeness = Completeness::Exact;
    std::optional<DependenceWitness> row_witness;  // on all rows, when dependent
    Verdict a1, a2, a2prime;
};

RankReport rank_report(const Matrix& a, const CoefficientDomain& domain);

std::string format_witness(const PairAlgebra& alg, const DependenceWitness& w);

}  // namespace pairlin
