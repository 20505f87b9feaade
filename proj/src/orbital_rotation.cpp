#include "efsqd/orbital_rotation.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace efsqd {

namespace {

constexpr double kEliminationTol = 1e-14;

void trace_two_mode(CircuitTrace* trace, int p, Complex a, Complex b, Complex c, Complex d) {
    if (!trace) return;
    char buf[192];
    std::snprintf(buf, sizeof buf, "two_mode %d %.12g %.12g %.12g %.12g %.12g %.12g %.12g %.12g",
                  p, a.real(), a.imag(), b.real(), b.imag(), c.real(), c.imag(), d.real(),
                  d.imag());
    trace->record(buf);
}

void trace_phase(CircuitTrace* trace, int p, Complex f) {
    if (!trace) return;
    char buf[96];
    std::snprintf(buf, sizeof buf, "mode_phase %d %.12g %.12g", p, f.real(), f.imag());
    trace->record(buf);
}

}  // namespace

OrbitalRotationSpec::OrbitalRotationSpec(Eigen::MatrixXcd u, double unitarity_tol)
    : u_(std::move(u)) {
    if (u_.rows() != u_.cols() || u_.rows() < 1)
        throw std::invalid_argument("OrbitalRotationSpec: matrix must be square");
    const double dev = (u_.adjoint() * u_ - Eigen::MatrixXcd::Identity(u_.rows(), u_.cols()))
                           .cwiseAbs()
                           .maxCoeff();
    if (dev > unitarity_tol)
        throw std::invalid_argument("OrbitalRotationSpec: matrix is not unitary (deviation " +
                                    std::to_string(dev) + ")");
}

OrbitalRotationSpec OrbitalRotationSpec::from_generator(const Eigen::MatrixXcd& x) {
    return OrbitalRotationSpec(x.exp());
}

OrbitalRotationSpec OrbitalRotationSpec::identity(int m) {
    return OrbitalRotationSpec(Eigen::MatrixXcd::Identity(m, m));
}

GivensNetwork givens_decompose(const Eigen::MatrixXcd& u) {
    const int m = static_cast<int>(u.rows());
    Eigen::MatrixXcd a = u;
    GivensNetwork net;
    for (int c = 0; c < m - 1; ++c) {
        for (int r = m - 1; r > c; --r) {
            const Complex x = a(r - 1, c), y = a(r, c);
            if (std::abs(y) < kEliminationTol) continue;
            const double n = std::sqrt(std::norm(x) + std::norm(y));
            GivensStep g{r - 1, std::conj(x) / n, std::conj(y) / n, -y / n, x / n};
            Eigen::Matrix2cd gm;
            gm << g.a, g.b, g.c, g.d;
            a.middleRows(r - 1, 2) = gm * a.middleRows(r - 1, 2);
            net.steps.push_back(g);
        }
    }
    net.phases.resize(static_cast<std::size_t>(m));
    for (int p = 0; p < m; ++p) net.phases[static_cast<std::size_t>(p)] = a(p, p);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            if (r != c && std::abs(a(r, c)) > 1e-10)
                throw std::logic_error("givens_decompose: elimination left a residual");
    return net;
}

void apply_orbital_rotation(SpinStatevector& state, const OrbitalRotationSpec& rotation,
                            CircuitTrace* trace) {
    if (rotation.size() != state.num_orbitals())
        throw std::invalid_argument("apply_orbital_rotation: dimension mismatch");
    const GivensNetwork net = givens_decompose(rotation.matrix());
    state.apply_occupation_phases(net.phases);
    if (trace)
        for (int p = 0; p < state.num_orbitals(); ++p)
            trace_phase(trace, p, net.phases[static_cast<std::size_t>(p)]);
    for (auto it = net.steps.rbegin(); it != net.steps.rend(); ++it) {
        // daggered step
        const Complex a = std::conj(it->a), b = std::conj(it->c), c = std::conj(it->b),
                      d = std::conj(it->d);
        state.apply_two_mode_gate(it->p, a, b, c, d);
        trace_two_mode(trace, it->p, a, b, c, d);
    }
}

SpinStatevector prepare_slater(const OrbitalRotationSpec& rotation, Bits reference,
                               CircuitTrace* trace) {
    const int m = rotation.size();
    if (reference >> m)
        throw std::invalid_argument("prepare_slater: reference has bits beyond orbital count");
    const auto occ = occupied_list(reference, m);
    const int n = static_cast<int>(occ.size());
    if (n == 0) return SpinStatevector::basis_state(m, 0);

    Eigen::MatrixXcd q(m, n);
    for (int c = 0; c < n; ++c) q.col(c) = rotation.matrix().col(occ[static_cast<std::size_t>(c)]);

    // right canonicalization: zero q(r, c) for c > r with det-1 column Givens
    for (int r = 0; r < n - 1; ++r) {
        for (int c = n - 1; c > r; --c) {
            const Complex x = q(r, c - 1), y = q(r, c);
            if (std::abs(y) < kEliminationTol) continue;
            const double nn = std::sqrt(std::norm(x) + std::norm(y));
            Eigen::Matrix2cd rot;
            rot << std::conj(x) / nn, -y / nn, std::conj(y) / nn, x / nn;
            q.middleCols(c - 1, 2) = q.middleCols(c - 1, 2) * rot;
        }
    }

    // staircase reduction to the packed reference
    std::vector<GivensStep> steps;
    for (int c = 0; c < n; ++c) {
        for (int r = m - 1; r > c; --r) {
            const Complex x = q(r - 1, c), y = q(r, c);
            if (std::abs(y) < kEliminationTol) continue;
            const double nn = std::sqrt(std::norm(x) + std::norm(y));
            GivensStep g{r - 1, std::conj(x) / nn, std::conj(y) / nn, -y / nn, x / nn};
            Eigen::Matrix2cd gm;
            gm << g.a, g.b, g.c, g.d;
            q.middleRows(r - 1, 2) = gm * q.middleRows(r - 1, 2);
            steps.push_back(g);
        }
    }

    Complex packed_phase = 1.0;
    for (int c = 0; c < n; ++c) {
        packed_phase *= q(c, c);
        if (std::abs(std::abs(q(c, c)) - 1.0) > 1e-10)
            throw std::logic_error("prepare_slater: staircase reduction failed");
    }

    SpinStatevector state(m);
    state[low_mask(n)] = packed_phase;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        const Complex a = std::conj(it->a), b = std::conj(it->c), c = std::conj(it->b),
                      d = std::conj(it->d);
        state.apply_two_mode_gate(it->p, a, b, c, d);
        trace_two_mode(trace, it->p, a, b, c, d);
    }
    return state;
}

}  // namespace efsqd
