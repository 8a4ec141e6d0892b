#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tsml {

/**
 * @brief Row-major dense matrix of finite reals; the tabular learners' input.
 */
class Matrix {
  public:
    Matrix(std::size_t rows, std::size_t cols);

    /// Validates a non-empty rectangular layout and finite entries.
    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace tsml
