#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace casekit {

/// Minimal dense row-major matrix. Dimensions here are tiny (tens), so plain
/// loops keep the gradient math transparent and the build dependency-free.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    double operator()(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// out = a * b, (m x k) * (k x n).
Matrix matmul(const Matrix& a, const Matrix& b);

/// out = a^T * b, (k x m)^T * (k x n) -> (m x n).
Matrix matmul_at_b(const Matrix& a, const Matrix& b);

/// out = a * b^T, (m x k) * (n x k)^T -> (m x n).
Matrix matmul_a_bt(const Matrix& a, const Matrix& b);

}  // namespace casekit
