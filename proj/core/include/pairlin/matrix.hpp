#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pairlin/algebra.hpp"

namespace pairlin {

using Vector = std::vector<Element>;

// Row-major grid of elements over one algebra.
class Matrix {
public:
    Matrix(AlgebraPtr alg, std::size_t rows, std::size_t cols);
    Matrix(AlgebraPtr alg, std::size_t rows, std::size_t cols, std::vector<Element> entries);

    static Matrix identity(AlgebraPtr alg, std::size_t n);
    static Matrix from_rows(AlgebraPtr alg, const std::vector<Vector>& rows);

    const AlgebraPtr& algebra() const { return alg_; }
    const PairAlgebra& alg() const { return *alg_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Element b);

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;
    std::vector<Vector> row_vectors() const;
    std::vector<Vector> col_vectors() const;

    Matrix transpose() const;
    Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    // Deletes row i and column j.
    Matrix minor(std::size_t i, std::size_t j) const;

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    AlgebraPtr alg_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix scale(const Element& c, const Matrix& a);
Vector apply(const Matrix& a, const Vector& v);
Vector scale(const PairAlgebra& alg, const Element& c, const Vector& v);
// Entrywise b -> (b, 0) into the doubled pair.
Matrix embed_doubled(const Matrix& a);
Vector embed_doubled(const PairAlgebra& alg, const Vector& v);
bool is_tangible_or_zero(const Matrix& a);

// Text format: `pair <spec>`, `rows <m>`, `cols <n>`, then m lines of n literals.
// `#` starts a comment.
Matrix parse_matrix(std::string_view text);
Matrix read_matrix_file(const std::string& path);
std::string format_matrix(const Matrix& a);
// Comma-separated element literals.
Vector parse_vector(const PairAlgebra& alg, std::string_view text);
std::string format_vector(const PairAlgebra& alg, const Vector& v);

}  // namespace pairlin
