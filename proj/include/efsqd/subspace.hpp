#pragma once

#include <vector>

#include "efsqd/bits.hpp"
#include "efsqd/hamiltonian.hpp"

namespace efsqd {

/// Sparse symmetric matrix in CSR form. Rows are built in a fixed order so
/// that apply() is deterministic; the structure is immutable after build and
/// safe to share between threads.
struct SparseSymmetric {
    int dim = 0;
    std::vector<std::size_t> row_start;
    std::vector<int> col;
    std::vector<double> val;

    void apply(const double* x, double* y) const;
    std::vector<double> diagonal() const;
};

/// Projection of H + lambda * (S^2 - s_t(s_t+1)) onto an ordered set of
/// configurations. The apply contract is linear, Hermitian, and callable
/// concurrently.
class SubspaceOperator {
  public:
    SubspaceOperator(const ActiveSpaceHamiltonian& h, std::vector<Configuration> configs,
                     double penalty_lambda = 0.0, double spin_target = 0.0);

    int dimension() const { return static_cast<int>(configs_.size()); }
    const std::vector<Configuration>& configurations() const { return configs_; }
    double penalty_lambda() const { return lambda_; }
    double spin_target() const { return spin_target_; }

    /// y = (H + lambda (S^2 - st(st+1))) x
    void apply(const std::vector<double>& x, std::vector<double>& y) const;
    std::vector<double> diagonal() const;

    /// Bare Rayleigh quotient <x|H|x> / <x|x> (no penalty term).
    double hamiltonian_expectation(const std::vector<double>& x) const;
    double s2_expectation(const std::vector<double>& x) const;

    /// Dense penalized matrix; intended for small dimensions.
    std::vector<double> dense() const;

  private:
    std::vector<Configuration> configs_;
    double lambda_;
    double spin_target_;
    SparseSymmetric h_;
    SparseSymmetric s2_;
    bool has_s2_ = false;
};

SubspaceOperator build_subspace_operator(const ActiveSpaceHamiltonian& h,
                                         const std::vector<Configuration>& configs,
                                         double penalty_lambda = 0.0, double spin_target = 0.0);

}  // namespace efsqd
