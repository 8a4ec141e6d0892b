#include "tsml/matrix.hpp"

#include <cmath>
#include <string>

#include "tsml/errors.hpp"

namespace tsml {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
    if (rows == 0 || cols == 0) {
        throw EmptyInput("matrix needs at least one row and one column");
    }
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty() || rows.front().empty()) {
        throw EmptyInput("matrix needs at least one row and one column");
    }
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) {
            throw RaggedColumns("row " + std::to_string(i) + " has " +
                                std::to_string(rows[i].size()) + " entries, expected " +
                                std::to_string(m.cols_));
        }
        for (std::size_t j = 0; j < m.cols_; ++j) {
            if (!std::isfinite(rows[i][j])) {
                throw NonFiniteValue("matrix entries must be finite");
            }
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

}  // namespace tsml
