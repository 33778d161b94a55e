#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "pairlin/matrix.hpp"

namespace pairlin {

struct DoubledDet {
    Element plus;   // even tracks
    Element minus;  // odd tracks
};

struct Caps {
    std::size_t det = 8;
    std::size_t cayley_hamilton = 5;
    std::size_t krasner = 4;
};

// Defaults, with PAIRLIN_CAP_N overriding the determinant cap.
Caps current_caps();

// Visits permutations of {0..n-1} in lexicographic order; `odd` is the parity.
void for_each_permutation(std::size_t n, const std::function<void(const std::vector<std::size_t>&, bool odd)>& f);

// Track a_pi = prod_j a_{pi(j), j}.
Element track(const Matrix& a, const std::vector<std::size_t>& pi);

DoubledDet det_doubled(const Matrix& a);
Element permanent(const Matrix& a);
bool is_singular(const Matrix& a);

// Algebra where doubled determinants live: the matrix algebra itself when it is
// already doubled, otherwise its doubled pair. Negation there is the switch.
AlgebraPtr det_context(const PairAlgebra& alg);
Element to_context(const PairAlgebra& alg, const Element& b);
Element switch_sign(const PairAlgebra& ctx, const Element& b);
// det_plus (-) det_minus in det_context.
Element det_element(const Matrix& a);
// det_plus (-) det_minus in the base; needs a negation map.
Element signed_det(const Matrix& a);

// Entry (i,j) is the determinant of the (j,i) minor, switched when i+j is odd.
Matrix adjoint(const Matrix& a);
Matrix to_context(const Matrix& a);
// Projects a matrix over det_context back to the base through its negation map.
Matrix project(const PairAlgebra& base, const Matrix& m);
Element project(const PairAlgebra& base, const Element& b);

// Generalized Laplace expansion along the row set (0-based, nonempty, proper).
Element laplace_expand(const Matrix& a, const std::vector<std::size_t>& rows);

// Coefficients c_0..c_n of |lambda I (-) A| in det_context (c_n = 1).
std::vector<Element> characteristic_coefficients(const Matrix& a);
bool cayley_hamilton_check(const Matrix& a);

bool quasi_identity_check(const Matrix& m);

struct QuasiInverse {
    Element det;          // |A| in the base
    Matrix inverse;       // A'
    Matrix left;          // A A'
    Matrix right;         // A' A
    bool left_quasi_identity = false;
    bool right_quasi_identity = false;
    Matrix tilde;         // A' A A'
};

QuasiInverse quasi_inverse(const Matrix& a);

// Over a Krasner quotient: whether some choice of representatives makes the
// field determinant vanish.
bool krasner_det_contains_zero(const Matrix& a);

}  // namespace pairlin
