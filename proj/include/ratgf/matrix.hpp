/*
   Copyright 2026 The ratgf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RATGF_MATRIX_HPP
#define RATGF_MATRIX_HPP

#include <ratgf/errors.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace ratgf {

/// Dense row-major matrix over a commutative ring T.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw ShapeError("ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Copy with the listed rows and columns removed (indices must be sorted-unique).
    Matrix without(const std::vector<std::size_t>& drop_rows, const std::vector<std::size_t>& drop_cols) const {
        auto keep = [](std::size_t n, const std::vector<std::size_t>& drop) {
            std::vector<std::size_t> k;
            std::size_t d = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (d < drop.size() && drop[d] == i) {
                    ++d;
                    continue;
                }
                k.push_back(i);
            }
            return k;
        };
        const auto kr = keep(rows_, drop_rows);
        const auto kc = keep(cols_, drop_cols);
        Matrix m(kr.size(), kc.size());
        for (std::size_t i = 0; i < kr.size(); ++i)
            for (std::size_t j = 0; j < kc.size(); ++j) m(i, j) = (*this)(kr[i], kc[j]);
        return m;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

}  // namespace ratgf

#endif  // RATGF_MATRIX_HPP
