#include <gtest/gtest.h>

#include "pairlin/error.hpp"
#include "pairlin/instances.hpp"
#include "pairlin/solvers.hpp"

using namespace pairlin;

namespace {

Matrix mat(const char* text) { return parse_matrix(text); }

Matrix trop2() { return mat("pair supertropical\nrows 2\ncols 2\n2 0\n1 3\n"); }

Vector vec(const Matrix& a, const char* text) { return parse_vector(a.alg(), text); }

template <class F>
void expect_error(ErrorCode code, F&& f) {
    try {
        f();
        ADD_FAILURE() << "expected " << to_string(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

}  // namespace

TEST(Cramer, SupertropicalTwoByTwo) {
    auto a = trop2();
    auto r = cramer_solve(a, vec(a, "4,4"));
    EXPECT_TRUE(r.balance_verified);
    EXPECT_EQ(project(a.alg(), r.w[0]), a.alg().parse("7"));
    EXPECT_EQ(project(a.alg(), r.w[1]), a.alg().parse("6"));
    ASSERT_TRUE(r.x);
    EXPECT_EQ(*r.x, vec(a, "2,1"));
    EXPECT_EQ(pairlin::apply(a, *r.x), vec(a, "4,4"));
    EXPECT_TRUE(r.x_balances);
    EXPECT_FALSE(r.unique.has_value());
}

TEST(Cramer, IdentityReturnsRightHandSide) {
    auto alg = make_pair("sign");
    auto id = Matrix::identity(alg, 3);
    auto v = parse_vector(*alg, "1,-1,0");
    auto r = cramer_solve(id, v);
    EXPECT_TRUE(r.balance_verified);
    EXPECT_EQ(r.w, embed_doubled(*alg, v));
    ASSERT_TRUE(r.x);
    EXPECT_EQ(*r.x, v);
}

TEST(Cramer, SignDiagonal) {
    auto a = mat("pair sign\nrows 2\ncols 2\n1 0\n0 -1\n");
    auto r = cramer_solve(a, vec(a, "1,1"));
    ASSERT_TRUE(r.x);
    EXPECT_EQ(*r.x, vec(a, "1,-1"));
    EXPECT_EQ(pairlin::apply(a, *r.x), vec(a, "1,1"));
    ASSERT_TRUE(r.unique);
    EXPECT_TRUE(*r.unique);
}

TEST(Cramer, SingularHasNoTangibleSolution) {
    auto a = mat("pair sign\nrows 2\ncols 2\n1 1\n1 1\n");
    auto r = cramer_solve(a, vec(a, "1,-1"));
    EXPECT_TRUE(r.balance_verified);
    EXPECT_FALSE(r.x.has_value());
    EXPECT_FALSE(r.note.empty());
}

TEST(Cramer, DimensionMismatch) {
    auto a = trop2();
    expect_error(ErrorCode::DimensionMismatch, [&] { cramer_solve(a, vec(a, "1,2,3")); });
}

TEST(Dominant, Examples) {
    auto s = dominant_structure(trop2());
    EXPECT_TRUE(s.unique);
    EXPECT_TRUE(s.diagonal_dominant);
    EXPECT_TRUE(s.strictly_nonsingular);
    EXPECT_EQ(s.max, ModulusValue::of(5));

    auto id = dominant_structure(Matrix::identity(make_pair("supertropical"), 3));
    EXPECT_TRUE(id.unique);
    EXPECT_TRUE(id.diagonal_dominant);

    auto flat = dominant_structure(mat("pair supertropical\nrows 2\ncols 2\n0 0\n0 0\n"));
    EXPECT_EQ(flat.dominant.size(), 2u);
    EXPECT_FALSE(flat.unique);
    EXPECT_FALSE(flat.strictly_nonsingular);
}

TEST(Dominant, SameParityTie) {
    // identity and the two 3-cycles are even; diagonal and (0 1 2) tie at 0
    auto a = mat("pair supertropical\nrows 3\ncols 3\n0 -5 0\n0 0 -5\n-5 0 0\n");
    auto s = dominant_structure(a);
    EXPECT_EQ(s.dominant.size(), 2u);
    EXPECT_TRUE(s.same_parity_null_pair);
    EXPECT_FALSE(s.strictly_nonsingular);
}

TEST(Dominant, NeedsModulus) {
    expect_error(ErrorCode::NoModulus, [] { dominant_structure(Matrix::identity(make_pair("sign"), 2)); });
}

TEST(Jacobi, SupertropicalTwoByTwo) {
    auto a = trop2();
    auto st = jacobi_solve(a, vec(a, "4,4"));
    ASSERT_GE(st.iterates.size(), 2u);
    EXPECT_EQ(st.iterates[0], vec(a, "2,1"));
    EXPECT_EQ(st.iterates[1], vec(a, "2,1"));
    EXPECT_EQ(st.stabilized_at, 1u);
    EXPECT_TRUE(st.balance_verified);
    EXPECT_TRUE(st.modulus_verified);
}

TEST(Jacobi, DiagonalStabilizesImmediately) {
    auto a = mat("pair supertropical\nrows 3\ncols 3\n1 -inf -inf\n-inf 2 -inf\n-inf -inf -1/2\n");
    auto st = jacobi_solve(a, vec(a, "0,0,0"));
    EXPECT_EQ(st.stabilized_at, 1u);
    EXPECT_EQ(st.iterates.back(), vec(a, "-1,-2,1/2"));
}

TEST(Jacobi, Errors) {
    auto off = mat("pair supertropical\nrows 2\ncols 2\n0 5\n5 0\n");
    expect_error(ErrorCode::NotDominantDiagonal, [&] { jacobi_solve(off, vec(off, "0,0")); });
    auto tie = mat("pair supertropical\nrows 2\ncols 2\n1 1\n1 1\n");
    expect_error(ErrorCode::SingularInput, [&] { jacobi_solve(tie, vec(tie, "0,0")); });
    auto ghost = mat("pair supertropical\nrows 2\ncols 2\n3g 0\n0 3\n");
    expect_error(ErrorCode::NonInvertibleDiagonal, [&] { jacobi_solve(ghost, vec(ghost, "0,0")); });
}
