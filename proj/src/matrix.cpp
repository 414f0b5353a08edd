#include "lieder/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace lieder {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_column(std::size_t c, std::span<const Rational> values) {
    if (values.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Vector Matrix::apply(std::span<const Rational> v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("matrix-vector size mismatch: " + std::to_string(cols_) +
                                    " columns, vector of " + std::to_string(v.size()));
    }
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& a = (*this)(r, c);
            if (sgn(a) != 0 && sgn(v[c]) != 0) acc += a * v[c];
        }
        out[r] = std::move(acc);
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sum size mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix difference size mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    out += b;
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    out -= b;
    return out;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix out = a;
    for (auto& x : out.data_) x *= s;
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    Matrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
    }
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    Matrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
    return out;
}

std::size_t rank(const Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    // Scale every row by the lcm of its denominators to work over Z.
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) {
            a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
        }
    }

    Integer prev_pivot = 1;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t p = rk;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rk]);
        const Integer pivot = a[rk][c];
        for (std::size_t r = rk + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                Integer v = pivot * a[r][k] - a[r][c] * a[rk][k];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
                a[r][k] = std::move(v);
            }
            a[r][c] = 0;
        }
        prev_pivot = pivot;
        ++rk;
    }
    return rk;
}

EchelonForm reduced_row_echelon(const Matrix& m) {
    EchelonForm out{m, {}};
    Matrix& a = out.reduced;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(a(p, c)) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t k = 0; k < cols; ++k) std::swap(a(p, k), a(r, k));
        }
        const Rational inv = 1 / a(r, c);
        for (std::size_t k = c; k < cols; ++k) a(r, k) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a(i, c)) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t k = c; k < cols; ++k) {
                if (sgn(a(r, k)) != 0) a(i, k) -= f * a(r, k);
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    const EchelonForm ef = reduced_row_echelon(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : ef.pivots) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < ef.pivots.size(); ++r) {
            v[ef.pivots[r]] = -ef.reduced(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b) {
    if (b.size() != m.rows()) {
        throw std::invalid_argument("solve: right-hand side has length " +
                                    std::to_string(b.size()) + ", expected " +
                                    std::to_string(m.rows()));
    }
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const EchelonForm ef = reduced_row_echelon(aug);
    if (!ef.pivots.empty() && ef.pivots.back() == m.cols()) return std::nullopt;

    Vector x(m.cols());
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) x[ef.pivots[r]] = ef.reduced(r, m.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    const EchelonForm ef = reduced_row_echelon(hstack(m, Matrix::identity(n)));
    if (ef.pivots.size() < n || (n > 0 && ef.pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = ef.reduced(r, n + c);
    return inv;
}

Vector SpanBasis::reduce(std::span<const Rational> v) const {
    if (v.size() != length_) throw std::invalid_argument("span membership: vector length mismatch");
    Vector r(v.begin(), v.end());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (sgn(r[pivots_[k]]) == 0) continue;
        const Rational f = r[pivots_[k]];
        axpy(-f, rows_[k], r);
    }
    return r;
}

bool SpanBasis::contains(std::span<const Rational> v) const { return is_zero(reduce(v)); }

bool SpanBasis::add(std::span<const Rational> v) {
    Vector r = reduce(v);
    std::size_t p = 0;
    while (p < length_ && sgn(r[p]) == 0) ++p;
    if (p == length_) return false;
    const Rational inv = 1 / r[p];
    for (auto& x : r) x *= inv;
    for (auto& row : rows_) {
        if (sgn(row[p]) == 0) continue;
        const Rational f = row[p];
        axpy(-f, r, row);
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Vector add(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector sum size mismatch");
    Vector out(a.begin(), a.end());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vector subtract(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector difference size mismatch");
    Vector out(a.begin(), a.end());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Vector scale(const Rational& s, std::span<const Rational> v) {
    Vector out(v.begin(), v.end());
    for (auto& x : out) x *= s;
    return out;
}

void axpy(const Rational& s, std::span<const Rational> x, std::span<Rational> y) {
    if (x.size() != y.size()) throw std::invalid_argument("axpy size mismatch");
    if (sgn(s) == 0) return;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) != 0) y[i] += s * x[i];
    }
}

}  // namespace lieder
