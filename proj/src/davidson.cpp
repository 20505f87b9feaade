#include "efsqd/davidson.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace efsqd {

namespace {

constexpr int kDenseCutoff = 64;
constexpr int kRestartDim = 32;

DavidsonResult dense_lowest(const std::function<void(const std::vector<double>&,
                                                     std::vector<double>&)>& apply,
                            std::size_t n) {
    Eigen::MatrixXd a(n, n);
    std::vector<double> x(n, 0.0), y(n);
    for (std::size_t c = 0; c < n; ++c) {
        x[c] = 1.0;
        apply(x, y);
        for (std::size_t r = 0; r < n; ++r) a(static_cast<Eigen::Index>(r),
                                              static_cast<Eigen::Index>(c)) = y[r];
        x[c] = 0.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (a + a.transpose()));
    DavidsonResult res;
    res.eigenvalue = es.eigenvalues()(0);
    res.eigenvector.assign(n, 0.0);
    for (std::size_t r = 0; r < n; ++r)
        res.eigenvector[r] = es.eigenvectors()(static_cast<Eigen::Index>(r), 0);
    res.converged = true;
    res.residual_norm = 0.0;
    return res;
}

}  // namespace

DavidsonResult davidson_lowest(const std::function<void(const std::vector<double>&,
                                                        std::vector<double>&)>& apply,
                               const std::vector<double>& diag, double tol, int max_iter) {
    const std::size_t n = diag.size();
    if (n == 0) throw std::invalid_argument("davidson_lowest: zero dimension");
    if (n <= kDenseCutoff) return dense_lowest(apply, n);

    using Vec = Eigen::VectorXd;
    std::vector<Vec> basis, sigma;

    // start on the smallest diagonal entry
    std::size_t imin = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (diag[i] < diag[imin]) imin = i;
    Vec v0 = Vec::Zero(static_cast<Eigen::Index>(n));
    v0(static_cast<Eigen::Index>(imin)) = 1.0;
    basis.push_back(v0);

    std::vector<double> xv(n), yv(n);
    auto apply_vec = [&](const Vec& v) {
        for (std::size_t i = 0; i < n; ++i) xv[i] = v(static_cast<Eigen::Index>(i));
        apply(xv, yv);
        Vec out(static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < n; ++i) out(static_cast<Eigen::Index>(i)) = yv[i];
        return out;
    };
    sigma.push_back(apply_vec(basis[0]));

    DavidsonResult res;
    double theta = 0.0;
    Vec ritz = basis[0];
    for (int it = 0; it < max_iter; ++it) {
        const int k = static_cast<int>(basis.size());
        Eigen::MatrixXd t(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                t(i, j) = basis[static_cast<std::size_t>(i)].dot(sigma[static_cast<std::size_t>(j)]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (t + t.transpose()));
        theta = es.eigenvalues()(0);
        const Eigen::VectorXd s = es.eigenvectors().col(0);

        ritz = Vec::Zero(static_cast<Eigen::Index>(n));
        Vec hritz = Vec::Zero(static_cast<Eigen::Index>(n));
        for (int i = 0; i < k; ++i) {
            ritz += s(i) * basis[static_cast<std::size_t>(i)];
            hritz += s(i) * sigma[static_cast<std::size_t>(i)];
        }
        Vec resid = hritz - theta * ritz;
        res.residual_norm = resid.norm();
        res.iterations = it + 1;
        if (res.residual_norm <= tol) {
            res.converged = true;
            break;
        }

        if (k >= kRestartDim) {
            basis.clear();
            sigma.clear();
            basis.push_back(ritz.normalized());
            sigma.push_back(apply_vec(basis[0]));
            continue;
        }

        // diagonal preconditioner with a level-shift guard
        Vec corr(static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < n; ++i) {
            double denom = diag[i] - theta;
            if (std::abs(denom) < 1e-8) denom = (denom < 0 ? -1e-8 : 1e-8);
            corr(static_cast<Eigen::Index>(i)) = resid(static_cast<Eigen::Index>(i)) / denom;
        }
        // orthogonalize twice against the current basis
        for (int pass = 0; pass < 2; ++pass)
            for (const Vec& b : basis) corr -= b.dot(corr) * b;
        const double cn = corr.norm();
        if (cn < 1e-12) {
            // correction collapsed onto the span; perturb along the residual
            corr = resid;
            for (int pass = 0; pass < 2; ++pass)
                for (const Vec& b : basis) corr -= b.dot(corr) * b;
            if (corr.norm() < 1e-14) {
                res.converged = true;
                break;
            }
        }
        corr.normalize();
        basis.push_back(corr);
        sigma.push_back(apply_vec(corr));
    }

    res.eigenvalue = theta;
    res.eigenvector.assign(n, 0.0);
    const double nrm = ritz.norm();
    for (std::size_t i = 0; i < n; ++i)
        res.eigenvector[i] = ritz(static_cast<Eigen::Index>(i)) / nrm;
    return res;
}

DavidsonResult diagonalize_subspace(const SubspaceOperator& op, double tol, int max_iter) {
    auto apply = [&op](const std::vector<double>& x, std::vector<double>& y) { op.apply(x, y); };
    return davidson_lowest(apply, op.diagonal(), tol, max_iter);
}

}  // namespace efsqd
