// Copyright 2026 The dgrover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace dgrover {

/// Row-major dense complex matrix.
class DenseMatrix {
public:
    using value_type = std::complex<double>;

    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols);

    static DenseMatrix identity(std::size_t dim);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const value_type> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<value_type> data() { return data_; }
    std::span<const value_type> data() const { return data_; }

    value_type trace() const;
    /// max_ij |A_ij - conj(A_ji)|
    double max_hermitian_asymmetry() const;
    /// max_ij |A_ij - B_ij|
    double max_abs_diff(const DenseMatrix& other) const;

    DenseMatrix adjoint() const;
    DenseMatrix operator*(const DenseMatrix& rhs) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

}  // namespace dgrover
