// Direct dense solve for the mechanism's small constraint systems.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tridiff/errors.hpp"

namespace tridiff {

// Row-major dense matrix; the constraint systems here stay below ~20 unknowns.
class DenseMatrix {
  public:
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

/// Solves A x = b by Gaussian elimination with partial pivoting. Throws
/// InfeasibleError when the pivot-ratio condition estimate exceeds 1e12
/// (singular or indeterminate system), naming `context` and — when
/// `unknown_names` is non-empty — the unconstrained unknown.
std::vector<double> solve_dense(DenseMatrix a, std::vector<double> b,
                                const std::string& context,
                                const std::vector<std::string>& unknown_names = {});

}  // namespace tridiff
