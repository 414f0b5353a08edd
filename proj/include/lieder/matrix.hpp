#pragma once

#include "lieder/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace lieder {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
///
/// Linear maps follow one convention throughout the library: column j holds
/// the coordinates of the image of the j-th basis vector.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    Vector column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const Rational> values);

    Matrix transpose() const;
    bool is_zero() const;

    /// Matrix-vector product; throws std::invalid_argument on size mismatch.
    Vector apply(std::span<const Rational> v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// [a | b], row counts must agree.
Matrix hstack(const Matrix& a, const Matrix& b);
/// [a ; b], column counts must agree.
Matrix vstack(const Matrix& a, const Matrix& b);

/// Rank by fraction-free (Bareiss) elimination on denominator-cleared rows.
std::size_t rank(const Matrix& m);

struct EchelonForm {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan reduction with pivots normalized to 1 and cleared above and
/// below. Pivot columns are chosen left to right.
EchelonForm reduced_row_echelon(const Matrix& m);

/// Canonical kernel basis: one vector per free column in increasing column
/// order, with that free coordinate equal to 1 and the other free
/// coordinates 0.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Particular solution of m x = b with all free variables set to zero, or
/// nullopt when the system is inconsistent. Throws std::invalid_argument when
/// b.size() != m.rows().
std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b);

/// Inverse of a square matrix, nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Incrementally maintained span of vectors of a fixed length, kept in
/// reduced echelon form so membership tests cost one reduction pass.
class SpanBasis {
public:
    explicit SpanBasis(std::size_t length) : length_(length) {}

    std::size_t length() const { return length_; }
    std::size_t rank() const { return rows_.size(); }

    /// Remainder of v after elimination against the stored rows.
    Vector reduce(std::span<const Rational> v) const;
    bool contains(std::span<const Rational> v) const;
    /// Adds v; returns false (and changes nothing) when v is already in the span.
    bool add(std::span<const Rational> v);

private:
    std::size_t length_;
    std::vector<Vector> rows_;          // pivot entry 1, cleared in every other row
    std::vector<std::size_t> pivots_;
};

bool is_zero(std::span<const Rational> v);
Vector add(std::span<const Rational> a, std::span<const Rational> b);
Vector subtract(std::span<const Rational> a, std::span<const Rational> b);
Vector scale(const Rational& s, std::span<const Rational> v);
void axpy(const Rational& s, std::span<const Rational> x, std::span<Rational> y);

}  // namespace lieder
