#pragma once

#include <functional>
#include <vector>

#include "efsqd/subspace.hpp"

namespace efsqd {

struct DavidsonResult {
    double eigenvalue = 0.0;
    std::vector<double> eigenvector;
    bool converged = false;
    int iterations = 0;
    double residual_norm = 0.0;
};

/// Lowest eigenpair of a symmetric operator by Davidson iteration with a
/// diagonal preconditioner (block size 1, restart dimension 32). Dimensions
/// up to 64 are solved densely.
DavidsonResult davidson_lowest(const std::function<void(const std::vector<double>&,
                                                        std::vector<double>&)>& apply,
                               const std::vector<double>& diag, double tol, int max_iter);

DavidsonResult diagonalize_subspace(const SubspaceOperator& op, double tol, int max_iter);

}  // namespace efsqd
