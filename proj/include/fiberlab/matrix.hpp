#pragma once

#include "fiberlab/field.hpp"

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fiberlab {

template <class K>
using Vec = std::vector<typename K::Element>;

// Dense row-major matrix over an exact field.
template <class K>
class Matrix {
public:
    using Element = typename K::Element;

    Matrix(K field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero())
    {
    }

    static Matrix identity(const K& field, std::size_t n)
    {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    // Builds a matrix whose columns are the given vectors (each of length rows).
    static Matrix from_columns(const K& field, std::size_t rows, const std::vector<Vec<K>>& columns)
    {
        Matrix m(field, rows, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
        }
        return m;
    }

    static Matrix from_rows(const K& field, std::size_t cols, const std::vector<Vec<K>>& rows)
    {
        Matrix m(field, rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    const K& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec<K> row(std::size_t r) const
    {
        return Vec<K>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }
    Vec<K> column(std::size_t c) const
    {
        Vec<K> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }

    bool is_zero() const
    {
        for (const auto& e : data_)
            if (!field_.is_zero(e)) return false;
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    Matrix transpose() const
    {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    K field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> data_;
};

template <class K>
Matrix<K> operator*(const Matrix<K>& a, const Matrix<K>& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    const K& f = a.field();
    Matrix<K> out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& aik = a(i, k);
            if (f.is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!f.is_zero(b(k, j))) out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
        }
    return out;
}

template <class K>
Matrix<K> operator+(const Matrix<K>& a, const Matrix<K>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum dimension mismatch");
    Matrix<K> out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.field().add(a(i, j), b(i, j));
    return out;
}

template <class K>
Vec<K> operator*(const Matrix<K>& a, const Vec<K>& v)
{
    if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
    const K& f = a.field();
    Vec<K> out(a.rows(), f.zero());
    for (std::size_t k = 0; k < a.cols(); ++k) {
        if (f.is_zero(v[k])) continue;
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (!f.is_zero(a(i, k))) out[i] = f.add(out[i], f.mul(a(i, k), v[k]));
    }
    return out;
}

template <class K>
Matrix<K> scale(const Matrix<K>& a, const typename K::Element& s)
{
    Matrix<K> out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.field().mul(s, a(i, j));
    return out;
}

template <class K>
bool is_zero_vector(const K& f, const Vec<K>& v)
{
    for (const auto& e : v)
        if (!f.is_zero(e)) return false;
    return true;
}

template <class K>
std::ostream& print(std::ostream& os, const Matrix<K>& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.field().to_string(m(i, j));
        os << '\n';
    }
    return os;
}

}  // namespace fiberlab
