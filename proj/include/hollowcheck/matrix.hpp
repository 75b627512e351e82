#pragma once

#include "hollowcheck/errors.hpp"
#include "hollowcheck/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hollowcheck {

template <Field T>
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : data_(dim, T(0)) {}
    Vector(std::initializer_list<T> values) : data_(values) {}
    explicit Vector(std::vector<T> values) : data_(std::move(values)) {}

    static Vector unit(std::size_t dim, std::size_t i) {
        Vector e(dim);
        e[i] = T(1);
        return e;
    }

    std::size_t dim() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    T& operator[](std::size_t i) { return data_[i]; }
    const T& operator[](std::size_t i) const { return data_[i]; }

    std::span<T> entries() { return data_; }
    std::span<const T> entries() const { return data_; }

    auto begin() { return data_.begin(); }
    auto end() { return data_.end(); }
    auto begin() const { return data_.begin(); }
    auto end() const { return data_.end(); }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == T(0); });
    }

    Vector operator-() const {
        Vector out(*this);
        for (auto& x : out.data_) x = -x;
        return out;
    }

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    std::vector<T> data_;
};

// Dense row-major matrix. Both dimensions are at least one.
template <Field T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
        if (rows == 0 || cols == 0) {
            throw InvalidDimension("matrix must be at least 1x1, got " + std::to_string(rows) +
                                   "x" + std::to_string(cols));
        }
        data_.assign(rows * cols, T(0));
    }

    Matrix(std::initializer_list<std::initializer_list<T>> rows)
        : Matrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != cols_) throw DimensionMismatch("ragged initializer");
            std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
            ++i;
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix I(n, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = T(1);
        return I;
    }

    static Matrix from_rows(const std::vector<Vector<T>>& rows) {
        if (rows.empty()) throw InvalidDimension("from_rows needs at least one row");
        Matrix M(rows.size(), rows.front().dim());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].dim() != M.cols_) throw DimensionMismatch("ragged rows");
            M.set_row(i, rows[i]);
        }
        return M;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row_span(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row_span(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    Vector<T> row(std::size_t i) const {
        auto r = row_span(i);
        return Vector<T>(std::vector<T>(r.begin(), r.end()));
    }

    Vector<T> col(std::size_t j) const {
        Vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void set_row(std::size_t i, const Vector<T>& v) {
        if (v.dim() != cols_) throw DimensionMismatch("set_row");
        std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
    }

    bool row_is_zero(std::size_t i) const {
        auto r = row_span(i);
        return std::all_of(r.begin(), r.end(), [](const T& x) { return x == T(0); });
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == T(0); });
    }

    T max_abs() const {
        T m(0);
        for (const auto& x : data_) m = std::max<T>(m, ScalarTraits<T>::abs(x));
        return m;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator-() const {
        Matrix out(*this);
        for (auto& x : out.data_) x = -x;
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

template <Field T>
std::ostream& operator<<(std::ostream& os, const Vector<T>& v) {
    os << '(';
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) os << ", ";
        os << ScalarTraits<T>::to_string(v[i]);
    }
    return os << ')';
}

template <Field T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& M) {
    os << '[';
    for (std::size_t i = 0; i < M.rows(); ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < M.cols(); ++j) {
            if (j) os << ' ';
            os << ScalarTraits<T>::to_string(M(i, j));
        }
    }
    return os << ']';
}

template <Field T>
std::string to_string(const Vector<T>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) out += ", ";
        out += ScalarTraits<T>::to_string(v[i]);
    }
    return out + ")";
}

}  // namespace hollowcheck
