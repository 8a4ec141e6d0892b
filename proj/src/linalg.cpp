#include "tsml/linalg.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

#include "tsml/errors.hpp"

namespace tsml::linalg {

namespace {

struct LuFactors {
    std::vector<std::vector<double>> lu;
    std::vector<std::size_t> perm;
};

// Doolittle LU with partial pivoting; nullopt when a pivot is below tol.
std::optional<LuFactors> lu_factor(std::vector<std::vector<double>> a, double tol) {
    const std::size_t n = a.size();
    LuFactors f;
    f.perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        f.perm[i] = i;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        for (std::size_t i = col + 1; i < n; ++i) {
            if (std::fabs(a[i][col]) > std::fabs(a[pivot_row][col])) {
                pivot_row = i;
            }
        }
        if (std::fabs(a[pivot_row][col]) <= tol) {
            return std::nullopt;
        }
        std::swap(a[col], a[pivot_row]);
        std::swap(f.perm[col], f.perm[pivot_row]);
        for (std::size_t i = col + 1; i < n; ++i) {
            const double factor = a[i][col] / a[col][col];
            a[i][col] = factor;
            for (std::size_t j = col + 1; j < n; ++j) {
                a[i][j] -= factor * a[col][j];
            }
        }
    }
    f.lu = std::move(a);
    return f;
}

std::vector<double> lu_solve(const LuFactors& f, const std::vector<double>& b) {
    const std::size_t n = b.size();
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = b[f.perm[i]];
        for (std::size_t j = 0; j < i; ++j) {
            x[i] -= f.lu[i][j] * x[j];
        }
    }
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t j = ii + 1; j < n; ++j) {
            x[ii] -= f.lu[ii][j] * x[j];
        }
        x[ii] /= f.lu[ii][ii];
    }
    return x;
}

double max_abs_entry(const std::vector<std::vector<double>>& a) {
    double m = 0.0;
    for (const auto& row : a) {
        for (double v : row) {
            m = std::max(m, std::fabs(v));
        }
    }
    return m;
}

}  // namespace

std::optional<std::vector<double>> solve(std::vector<std::vector<double>> a,
                                         std::vector<double> b) {
    const double tol = 1e-12 * max_abs_entry(a);
    const auto factors = lu_factor(std::move(a), tol);
    if (!factors) {
        return std::nullopt;
    }
    return lu_solve(*factors, b);
}

std::vector<double> least_squares(const std::vector<std::vector<double>>& rows,
                                  const std::vector<double>& y) {
    const std::size_t n = rows.size();
    const std::size_t d = rows.front().size();

    std::vector<std::vector<double>> gram(d, std::vector<double>(d, 0.0));
    std::vector<double> moment(d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t p = 0; p < d; ++p) {
            moment[p] += rows[i][p] * y[i];
            for (std::size_t q = p; q < d; ++q) {
                gram[p][q] += rows[i][p] * rows[i][q];
            }
        }
    }
    for (std::size_t p = 0; p < d; ++p) {
        for (std::size_t q = 0; q < p; ++q) {
            gram[p][q] = gram[q][p];
        }
    }

    std::vector<double> beta;
    if (auto direct = solve(gram, moment)) {
        beta = std::move(*direct);
    } else {
        const double lambda = 1e-8;
        std::vector<std::vector<double>> ridge = gram;
        for (std::size_t p = 0; p < d; ++p) {
            ridge[p][p] += lambda;
        }
        const auto factors = lu_factor(std::move(ridge), 0.0);
        if (!factors) {
            throw DegenerateFit("least-squares system could not be factored");
        }
        beta = lu_solve(*factors, moment);
        // Refinement against the unregularized normal equations removes the
        // ridge bias on the attainable component.
        for (int pass = 0; pass < 3; ++pass) {
            std::vector<double> residual = moment;
            for (std::size_t p = 0; p < d; ++p) {
                for (std::size_t q = 0; q < d; ++q) {
                    residual[p] -= gram[p][q] * beta[q];
                }
            }
            const std::vector<double> delta = lu_solve(*factors, residual);
            for (std::size_t p = 0; p < d; ++p) {
                beta[p] += delta[p];
            }
        }
    }

    for (double v : beta) {
        if (!std::isfinite(v)) {
            throw DegenerateFit("least-squares coefficients are not finite");
        }
    }
    return beta;
}

}  // namespace tsml::linalg
