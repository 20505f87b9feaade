#pragma once

#include <Eigen/Dense>

#include "efsqd/statevector.hpp"

namespace efsqd {

/// One-body basis rotation. The Fock-space action satisfies
/// U a+_q U^dag = sum_p matrix(p, q) a+_p.
class OrbitalRotationSpec {
  public:
    explicit OrbitalRotationSpec(Eigen::MatrixXcd u, double unitarity_tol = 1e-8);

    /// exp of an anti-Hermitian generator.
    static OrbitalRotationSpec from_generator(const Eigen::MatrixXcd& x);
    static OrbitalRotationSpec identity(int m);

    int size() const { return static_cast<int>(u_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return u_; }

  private:
    Eigen::MatrixXcd u_;
};

/// One step of the adjacent-mode Givens network: the 2x2 single-particle
/// block [[a, b], [c, d]] acting on modes (p, p+1).
struct GivensStep {
    int p;
    Complex a, b, c, d;
};

struct GivensNetwork {
    // u = g_1^dag g_2^dag ... g_K^dag diag(phases), with steps recorded in
    // elimination order g_1 ... g_K.
    std::vector<GivensStep> steps;
    std::vector<Complex> phases;
};

/// Adjacent-rotation decomposition of a unitary by column-wise elimination.
GivensNetwork givens_decompose(const Eigen::MatrixXcd& u);

/// Full one-body rotation on an arbitrary state via the compiled network.
void apply_orbital_rotation(SpinStatevector& state, const OrbitalRotationSpec& rotation,
                            CircuitTrace* trace = nullptr);

/// Prepares exp(X)|reference> through the economical determinant circuit:
/// the occupied columns are right-canonicalized (column Givens, det 1) and
/// reduced to the packed reference by a staircase of adjacent-mode gates.
SpinStatevector prepare_slater(const OrbitalRotationSpec& rotation, Bits reference,
                               CircuitTrace* trace = nullptr);

}  // namespace efsqd
