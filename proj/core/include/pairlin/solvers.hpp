#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pairlin/determinant.hpp"

namespace pairlin {

struct CramerResult {
    Vector w;                   // adj(A) v, over det_context
    Element det;                // |A| in det_context
    bool balance_verified = false;
    std::optional<Vector> x;    // |A|^-1 w projected, when tangible
    bool x_balances = false;    // A x ∇ v
    std::optional<bool> unique; // exhaustive check, n <= 2 over finite pairs with negation
    std::string note;           // why x is absent
};

CramerResult cramer_solve(const Matrix& a, const Vector& v);

struct DominantTrack {
    std::vector<std::size_t> permutation;
    bool odd = false;
    Element value;
};

struct DominantStructure {
    ModulusValue max;
    std::vector<DominantTrack> dominant;
    bool diagonal_dominant = false;
    bool unique = false;
    // Two dominant tracks of equal parity whose sum is null.
    bool same_parity_null_pair = false;
    // Unique dominant track, or all dominant tracks of one parity with tangible sum.
    bool strictly_nonsingular = false;
};

DominantStructure dominant_structure(const Matrix& a);

struct JacobiState {
    Matrix d;
    Matrix n;
    std::vector<Vector> iterates;  // x_1, x_2, ...
    std::optional<std::size_t> stabilized_at;
    bool balance_verified = false;
    bool modulus_verified = false;
};

// max_iter = 0 selects 2n + 4.
JacobiState jacobi_solve(const Matrix& a, const Vector& v, std::size_t max_iter = 0);

}  // namespace pairlin
