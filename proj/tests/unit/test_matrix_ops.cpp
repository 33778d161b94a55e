#include <gtest/gtest.h>

#include <random>

#include "pairlin/determinant.hpp"
#include "pairlin/error.hpp"
#include "pairlin/instances.hpp"
#include "pairlin/relations.hpp"

using namespace pairlin;

namespace {

Matrix mat(const char* text) { return parse_matrix(text); }

Matrix trop2() {
    return mat("pair supertropical\nrows 2\ncols 2\n2 0\n1 3\n");
}

Matrix sign_a2() {
    return mat("pair sign\nrows 3\ncols 4\n1 1 -1 1\n1 -1 1 1\n-1 1 1 1\n");
}

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

TEST(DetDoubled, Identity) {
    for (auto spec : {"sign", "supertropical", "counting:5", "doubled:boolean", "krasner:5:4"}) {
        auto alg = make_pair(spec);
        auto d = det_doubled(Matrix::identity(alg, 2));
        EXPECT_EQ(d.plus, alg->one()) << spec;
        EXPECT_EQ(d.minus, alg->zero()) << spec;
        EXPECT_FALSE(is_singular(Matrix::identity(alg, 3))) << spec;
    }
}

TEST(DetDoubled, SupertropicalTwoByTwo) {
    auto a = trop2();
    auto d = det_doubled(a);
    EXPECT_EQ(d.plus, a.alg().parse("5"));
    EXPECT_EQ(d.minus, a.alg().parse("1"));
    EXPECT_FALSE(is_singular(a));
}

TEST(DetDoubled, SignMinorsAreSingular) {
    auto a = sign_a2();
    for (std::size_t drop = 0; drop < 4; ++drop) {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < 4; ++j)
            if (j != drop) cols.push_back(j);
        auto m = a.submatrix({0, 1, 2}, cols);
        auto d = det_doubled(m);
        EXPECT_TRUE(is_singular(m));
        EXPECT_EQ(a.alg().add(d.plus, d.minus), a.alg().parse("inf"));
    }
}

TEST(DetDoubled, Errors) {
    expect_error(ErrorCode::DimensionMismatch, [] { det_doubled(sign_a2()); });
    auto big = Matrix::identity(make_pair("sign"), 9);
    expect_error(ErrorCode::CapExceeded, [&] { det_doubled(big); });
}

TEST(Adjoint, SupertropicalTwoByTwo) {
    auto a = trop2();
    auto adj = adjoint(a);
    const auto& d = adj.alg();
    EXPECT_EQ(adj(0, 0), d.parse("3|-inf"));
    EXPECT_EQ(adj(0, 1), d.parse("-inf|0"));
    EXPECT_EQ(adj(1, 0), d.parse("-inf|1"));
    EXPECT_EQ(adj(1, 1), d.parse("2|-inf"));
}

TEST(Adjoint, SignAllOnes) {
    auto a = mat("pair sign\nrows 2\ncols 2\n1 1\n1 1\n");
    auto adj = adjoint(a);
    const auto& d = adj.alg();
    EXPECT_EQ(adj(0, 0), d.parse("1|0"));
    EXPECT_EQ(adj(0, 1), d.parse("0|1"));
    EXPECT_EQ(adj(1, 0), d.parse("0|1"));
    EXPECT_EQ(adj(1, 1), d.parse("1|0"));
}

TEST(Adjoint, IdentityIsIdentity) {
    auto alg = make_pair("supertropical");
    for (std::size_t n = 1; n <= 4; ++n)
        EXPECT_EQ(adjoint(Matrix::identity(alg, n)), embed_doubled(Matrix::identity(alg, n)));
}

TEST(Laplace, SingleRowEqualsDeterminant) {
    auto a = mat("pair sign\nrows 3\ncols 3\n1 -1 1\n-1 -1 1\n1 1 -1\n");
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(laplace_expand(a, {i}), det_element(a));
}

TEST(Laplace, TwoByTwoSign) {
    auto a = mat("pair sign\nrows 2\ncols 2\n1 -1\n1 1\n");
    EXPECT_EQ(laplace_expand(a, {0}), laplace_expand(a, {1}));
    EXPECT_EQ(laplace_expand(a, {0}), det_element(a));
}

TEST(Laplace, RandomSupertropicalRowPairs) {
    auto alg = make_pair("supertropical");
    const auto& st = static_cast<const Supertropical&>(*alg);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> v(-6, 6);
    for (int t = 0; t < 50; ++t) {
        Matrix a(alg, 4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) a.set(i, j, st.tangible(Rational(v(rng), 2)));
        EXPECT_EQ(laplace_expand(a, {0, 1}), det_element(a));
        EXPECT_EQ(laplace_expand(a, {1, 3}), det_element(a));
    }
}

TEST(CayleyHamilton, OneByOne) {
    for (auto lit : {"1", "-1", "inf"}) {
        Matrix a(make_pair("sign"), 1, 1);
        a.set(0, 0, a.alg().parse(lit));
        EXPECT_TRUE(cayley_hamilton_check(a)) << lit;
    }
}

TEST(CayleyHamilton, CoefficientsLeadWithOne) {
    auto a = trop2();
    auto c = characteristic_coefficients(a);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[2], det_context(a.alg())->one());
    EXPECT_TRUE(cayley_hamilton_check(a));
}

TEST(CayleyHamilton, CapExceeded) {
    auto big = Matrix::identity(make_pair("sign"), 6);
    expect_error(ErrorCode::CapExceeded, [&] { cayley_hamilton_check(big); });
}

TEST(QuasiIdentity, Examples) {
    auto sign = make_pair("sign");
    EXPECT_TRUE(quasi_identity_check(Matrix::identity(sign, 3)));
    EXPECT_FALSE(quasi_identity_check(mat("pair sign\nrows 2\ncols 2\n1 1\n0 1\n")));
    EXPECT_TRUE(quasi_identity_check(mat("pair superboolean\nrows 2\ncols 2\n1 e\n0 1\n")));
}

TEST(QuasiInverse, Identity) {
    auto alg = make_pair("sign");
    auto q = quasi_inverse(Matrix::identity(alg, 3));
    EXPECT_EQ(q.inverse, Matrix::identity(alg, 3));
    EXPECT_TRUE(q.left_quasi_identity);
    EXPECT_TRUE(q.right_quasi_identity);
}

TEST(QuasiInverse, SupertropicalTwoByTwo) {
    auto a = trop2();
    const auto& A = a.alg();
    auto q = quasi_inverse(a);
    EXPECT_EQ(q.det, A.parse("5"));
    EXPECT_EQ(q.inverse, mat("pair supertropical\nrows 2\ncols 2\n-2 -5\n-4 -3\n"));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const auto& b = q.left(i, j);
            if (i == j)
                EXPECT_EQ(b, A.one());
            else
                EXPECT_TRUE(b == A.zero() || A.is_null(b)) << A.format(b);
        }
    EXPECT_TRUE(q.left_quasi_identity);
}

TEST(QuasiInverse, SignDiagonal) {
    auto a = mat("pair sign\nrows 2\ncols 2\n-1 0\n0 1\n");
    EXPECT_EQ(quasi_inverse(a).inverse, a);
}

TEST(QuasiInverse, Errors) {
    expect_error(ErrorCode::SingularInput, [] { quasi_inverse(mat("pair sign\nrows 2\ncols 2\n1 1\n1 1\n")); });
    // ghost entry on the dominant track makes |A| = 5g, which is null
    expect_error(ErrorCode::SingularInput,
                 [] { quasi_inverse(mat("pair supertropical\nrows 2\ncols 2\n2g 0\n1 3\n")); });
    // nonsingular with |A| = 2, which is not tangible in the counting pair
    expect_error(ErrorCode::NonInvertibleDeterminant, [] { quasi_inverse(mat("pair counting:5\nrows 1\ncols 1\n2\n")); });
}

TEST(Permanent, Examples) {
    auto c = mat("pair counting:5\nrows 4\ncols 4\n1 1 1 1\n1 1 0 1\n0 1 1 1\n1 0 1 1\n");
    EXPECT_EQ(permanent(c), c.alg().parse("5"));
    EXPECT_TRUE(c.alg().is_null(permanent(c)));
    EXPECT_EQ(permanent(Matrix::identity(make_pair("counting:5"), 4)), c.alg().one());
    auto t = trop2();
    EXPECT_EQ(permanent(t), t.alg().parse("5"));
}

TEST(Krasner, DeterminantContainsZero) {
    auto alg = make_pair("krasner:5:4");
    const auto& k = static_cast<const KrasnerPair&>(*alg);
    Matrix ones(alg, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) ones.set(i, j, k.coset_of(1));
    EXPECT_TRUE(krasner_det_contains_zero(ones));
    EXPECT_FALSE(krasner_det_contains_zero(Matrix::identity(alg, 2)));
    EXPECT_FALSE(krasner_det_contains_zero(Matrix::identity(alg, 3)));
}

TEST(Krasner, RejectsOtherPairs) {
    EXPECT_THROW(krasner_det_contains_zero(trop2()), Error);
}

TEST(MatrixIo, RoundTrip) {
    for (auto text : {"pair sign\nrows 3\ncols 4\n1 1 -1 1\n1 -1 1 1\n-1 1 1 1\n",
                      "pair supertropical\nrows 2\ncols 2\n2 -inf\n1/2 3g\n",
                      "pair doubled:boolean\nrows 1\ncols 3\n1|0 0|1 1|1\n"}) {
        auto a = mat(text);
        EXPECT_EQ(format_matrix(a), text);
        EXPECT_EQ(parse_matrix(format_matrix(a)), a);
    }
}

TEST(MatrixIo, CommentsAndErrors) {
    auto a = mat("# fixture\npair sign\nrows 1\ncols 2\n1 -1  # trailing\n");
    EXPECT_EQ(a(0, 1), a.alg().parse("-1"));
    expect_error(ErrorCode::BadLiteral, [] { mat("pair sign\nrows 1\ncols 2\n1 banana\n"); });
    expect_error(ErrorCode::BadSpecifier, [] { mat("pair nope\nrows 1\ncols 1\n1\n"); });
    expect_error(ErrorCode::DimensionMismatch, [] { mat("pair sign\nrows 2\ncols 2\n1 1\n"); });
}

TEST(MatrixIo, Vectors) {
    auto db = make_pair("doubled:boolean");
    auto v = parse_vector(*db, "1|0, 0|1,1|1");
    ASSERT_EQ(v.size(), 3u);
    EXPECT_EQ(format_vector(*db, v), "1|0,0|1,1|1");
    auto h = make_pair("hyper:hex1:3");
    EXPECT_EQ(parse_vector(*h, "{0,1},{2}").size(), 2u);
}
