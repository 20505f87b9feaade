#include "efsqd/subspace.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace efsqd {

void SparseSymmetric::apply(const double* x, double* y) const {
    for (int r = 0; r < dim; ++r) {
        double acc = 0.0;
        for (std::size_t k = row_start[static_cast<std::size_t>(r)];
             k < row_start[static_cast<std::size_t>(r) + 1]; ++k)
            acc += val[k] * x[col[k]];
        y[r] = acc;
    }
}

std::vector<double> SparseSymmetric::diagonal() const {
    std::vector<double> d(static_cast<std::size_t>(dim), 0.0);
    for (int r = 0; r < dim; ++r)
        for (std::size_t k = row_start[static_cast<std::size_t>(r)];
             k < row_start[static_cast<std::size_t>(r) + 1]; ++k)
            if (col[k] == r) d[static_cast<std::size_t>(r)] = val[k];
    return d;
}

namespace {

template <typename Element>
SparseSymmetric build_sparse(const std::vector<Configuration>& configs, Element&& element) {
    const int d = static_cast<int>(configs.size());
    SparseSymmetric s;
    s.dim = d;
    s.row_start.assign(static_cast<std::size_t>(d) + 1, 0);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            if (excitation_degree(configs[static_cast<std::size_t>(r)],
                                  configs[static_cast<std::size_t>(c)]) >= 3)
                continue;
            const double v = element(configs[static_cast<std::size_t>(r)],
                                     configs[static_cast<std::size_t>(c)]);
            if (r == c || std::abs(v) > 1e-15) {
                s.col.push_back(c);
                s.val.push_back(v);
            }
        }
        s.row_start[static_cast<std::size_t>(r) + 1] = s.col.size();
    }
    return s;
}

}  // namespace

SubspaceOperator::SubspaceOperator(const ActiveSpaceHamiltonian& h,
                                   std::vector<Configuration> configs, double penalty_lambda,
                                   double spin_target)
    : configs_(std::move(configs)), lambda_(penalty_lambda), spin_target_(spin_target) {
    if (configs_.empty()) throw std::invalid_argument("SubspaceOperator: empty configuration set");
    std::set<Configuration> seen;
    for (const auto& c : configs_) {
        if (c.n_alpha != configs_.front().n_alpha || c.n_beta != configs_.front().n_beta)
            throw std::invalid_argument("SubspaceOperator: mixed particle-number sectors");
        if (!seen.insert(c).second)
            throw std::invalid_argument("SubspaceOperator: duplicate configuration " +
                                        c.to_string());
    }
    h_ = build_sparse(configs_, [&h](const Configuration& a, const Configuration& b) {
        return slater_condon_element(h, a, b);
    });
    if (lambda_ != 0.0) {
        s2_ = build_sparse(configs_, [](const Configuration& a, const Configuration& b) {
            return s2_matrix_element(a, b);
        });
        has_s2_ = true;
    }
}

void SubspaceOperator::apply(const std::vector<double>& x, std::vector<double>& y) const {
    const std::size_t d = configs_.size();
    if (x.size() != d) throw std::invalid_argument("SubspaceOperator::apply: dimension mismatch");
    y.assign(d, 0.0);
    h_.apply(x.data(), y.data());
    if (has_s2_) {
        std::vector<double> t(d, 0.0);
        s2_.apply(x.data(), t.data());
        const double shift = spin_target_ * (spin_target_ + 1.0);
        for (std::size_t i = 0; i < d; ++i) y[i] += lambda_ * (t[i] - shift * x[i]);
    }
}

std::vector<double> SubspaceOperator::diagonal() const {
    std::vector<double> d = h_.diagonal();
    if (has_s2_) {
        const std::vector<double> ds = s2_.diagonal();
        const double shift = spin_target_ * (spin_target_ + 1.0);
        for (std::size_t i = 0; i < d.size(); ++i) d[i] += lambda_ * (ds[i] - shift);
    }
    return d;
}

double SubspaceOperator::hamiltonian_expectation(const std::vector<double>& x) const {
    std::vector<double> y(x.size());
    h_.apply(x.data(), y.data());
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += x[i] * y[i];
        den += x[i] * x[i];
    }
    return num / den;
}

double SubspaceOperator::s2_expectation(const std::vector<double>& x) const {
    SparseSymmetric s2 = has_s2_ ? s2_ : build_sparse(configs_, [](const Configuration& a,
                                                                   const Configuration& b) {
        return s2_matrix_element(a, b);
    });
    std::vector<double> y(x.size());
    s2.apply(x.data(), y.data());
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += x[i] * y[i];
        den += x[i] * x[i];
    }
    return num / den;
}

std::vector<double> SubspaceOperator::dense() const {
    const std::size_t d = configs_.size();
    std::vector<double> a(d * d, 0.0);
    std::vector<double> x(d, 0.0), y(d);
    for (std::size_t c = 0; c < d; ++c) {
        x[c] = 1.0;
        apply(x, y);
        for (std::size_t r = 0; r < d; ++r) a[r * d + c] = y[r];
        x[c] = 0.0;
    }
    return a;
}

SubspaceOperator build_subspace_operator(const ActiveSpaceHamiltonian& h,
                                         const std::vector<Configuration>& configs,
                                         double penalty_lambda, double spin_target) {
    return SubspaceOperator(h, configs, penalty_lambda, spin_target);
}

}  // namespace efsqd
