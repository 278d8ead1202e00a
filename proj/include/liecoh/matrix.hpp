/*
   Copyright 2026 the liecoh authors

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

#ifndef LIECOH_MATRIX_HPP
#define LIECOH_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "liecoh/rational.hpp"

namespace liecoh {

/* Dense matrix over the rationals, row-major. Everything is by value;
 * matrices are small (desk scale) and exactness beats sharing. */
class Mat {
   public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<Rat> entries);

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator*(const Rat& s) const;
    Mat operator-() const;
    bool operator==(const Mat& o) const;

    Mat transpose() const;
    Mat pow(unsigned n) const;

    std::vector<Rat> col(std::size_t j) const;
    void set_col(std::size_t j, const std::vector<Rat>& v);

   private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

Mat commutator(const Mat& a, const Mat& b);  // ab - ba

/* Kronecker product, first factor major: (A (x) B)[ip+k][jq+l] = A[i][j]B[k][l]. */
Mat kron(const Mat& a, const Mat& b);

Mat direct_sum_mat(const Mat& a, const Mat& b);
Mat hstack(const Mat& a, const Mat& b);

Mat mat_apply(const class Poly& p, const Mat& a);  // p(a) for square a

}  // namespace liecoh

#endif
