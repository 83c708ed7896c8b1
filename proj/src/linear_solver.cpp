#include "tridiff/linear_solver.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace tridiff {

std::vector<double> solve_dense(DenseMatrix a, std::vector<double> b,
                                const std::string& context,
                                const std::vector<std::string>& unknown_names) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) {
        throw InfeasibleError(context + ": system is not square (" +
                              std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + ", rhs " +
                              std::to_string(b.size()) + ")");
    }

    constexpr double kConditionLimit = 1e12;
    double max_pivot = 0.0;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        double pivot_mag = std::abs(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a(r, col)) > pivot_mag) {
                pivot_mag = std::abs(a(r, col));
                pivot_row = r;
            }
        }
        if (pivot_row != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(col, c), a(pivot_row, c));
            }
            std::swap(b[col], b[pivot_row]);
        }

        max_pivot = std::max(max_pivot, pivot_mag);
        if (pivot_mag == 0.0 || max_pivot / pivot_mag > kConditionLimit) {
            // Rows are swapped but columns are not, so `col` still names the
            // unknown the remaining equations cannot pin down.
            const std::string name = col < unknown_names.size()
                                         ? unknown_names[col]
                                         : "index " + std::to_string(col);
            throw InfeasibleError(context +
                                  ": singular or ill-conditioned system, "
                                  "unconstrained degree of freedom at unknown " +
                                  name);
        }

        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = a(r, col) / a(col, col);
            if (factor == 0.0) {
                continue;
            }
            a(r, col) = 0.0;
            for (std::size_t c = col + 1; c < n; ++c) {
                a(r, c) -= factor * a(col, c);
            }
            b[r] -= factor * b[col];
        }
    }

    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double sum = b[i];
        for (std::size_t c = i + 1; c < n; ++c) {
            sum -= a(i, c) * x[c];
        }
        x[i] = sum / a(i, i);
    }
    return x;
}

}  // namespace tridiff
