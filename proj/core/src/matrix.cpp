#include "pairlin/matrix.hpp"

#include "pairlin/error.hpp"
#include "pairlin/instances.hpp"

namespace pairlin {

Matrix::Matrix(AlgebraPtr alg, std::size_t rows, std::size_t cols)
    : alg_(std::move(alg)), rows_(rows), cols_(cols), data_(rows * cols, alg_->zero()) {
    if (rows == 0 || cols == 0) throw Error(ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
}

Matrix::Matrix(AlgebraPtr alg, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : alg_(std::move(alg)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw Error(ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
    if (data_.size() != rows * cols)
        throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(rows * cols) + " entries");
    for (const auto& b : data_) alg_->require(b);
}

Matrix Matrix::identity(AlgebraPtr alg, std::size_t n) {
    Matrix m(alg, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, alg->one());
    return m;
}

Matrix Matrix::from_rows(AlgebraPtr alg, const std::vector<Vector>& rows) {
    if (rows.empty()) throw Error(ErrorCode::DimensionMismatch, "no rows");
    std::vector<Element> data;
    for (const auto& r : rows) {
        if (r.size() != rows.front().size()) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
        data.insert(data.end(), r.begin(), r.end());
    }
    return Matrix(std::move(alg), rows.size(), rows.front().size(), std::move(data));
}

void Matrix::set(std::size_t i, std::size_t j, Element b) {
    alg_->require(b);
    data_[i * cols_ + j] = std::move(b);
}

Vector Matrix::row(std::size_t i) const { return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

Vector Matrix::col(std::size_t j) const {
    Vector out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
}

std::vector<Vector> Matrix::row_vectors() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

std::vector<Vector> Matrix::col_vectors() const {
    std::vector<Vector> out;
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(alg_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, (*this)(i, j));
    return t;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix s(alg_, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s.set(i, j, (*this)(rows[i], cols[j]));
    return s;
}

Matrix Matrix::minor(std::size_t i, std::size_t j) const {
    std::vector<std::size_t> rs, cs;
    for (std::size_t r = 0; r < rows_; ++r)
        if (r != i) rs.push_back(r);
    for (std::size_t c = 0; c < cols_; ++c)
        if (c != j) cs.push_back(c);
    return submatrix(rs, cs);
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.alg_->id() == b.alg_->id() && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

void same_algebra(const Matrix& a, const Matrix& b) {
    if (a.alg().id() != b.alg().id())
        throw Error(ErrorCode::AlgebraMismatch, a.alg().spec() + " vs " + b.alg().spec());
}

}  // namespace

Matrix multiply(const Matrix& a, const Matrix& b) {
    same_algebra(a, b);
    if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
    const auto& A = a.alg();
    Matrix out(a.algebra(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Element acc = A.zero();
            for (std::size_t k = 0; k < a.cols(); ++k) acc = A.add(acc, A.mul(a(i, k), b(k, j)));
            out.set(i, j, acc);
        }
    return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
    same_algebra(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "shapes differ");
    Matrix out(a.algebra(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.alg().add(a(i, j), b(i, j)));
    return out;
}

Matrix scale(const Element& c, const Matrix& a) {
    Matrix out(a.algebra(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.alg().mul(c, a(i, j)));
    return out;
}

Vector apply(const Matrix& a, const Vector& v) {
    if (v.size() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "vector length differs from column count");
    const auto& A = a.alg();
    Vector out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Element acc = A.zero();
        for (std::size_t j = 0; j < a.cols(); ++j) acc = A.add(acc, A.mul(a(i, j), v[j]));
        out.push_back(acc);
    }
    return out;
}

Vector scale(const PairAlgebra& alg, const Element& c, const Vector& v) {
    Vector out;
    for (const auto& b : v) out.push_back(alg.mul(c, b));
    return out;
}

Matrix embed_doubled(const Matrix& a) {
    auto d = a.alg().doubled();
    const auto& D = static_cast<const DoubledPair&>(*d);
    Matrix out(d, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, D.embed(a(i, j)));
    return out;
}

Vector embed_doubled(const PairAlgebra& alg, const Vector& v) {
    auto d = alg.doubled();
    const auto& D = static_cast<const DoubledPair&>(*d);
    Vector out;
    for (const auto& b : v) out.push_back(D.embed(b));
    return out;
}

bool is_tangible_or_zero(const Matrix& a) {
    const auto& A = a.alg();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!A.is_tangible(a(i, j)) && a(i, j) != A.zero()) return false;
    return true;
}

}  // namespace pairlin
