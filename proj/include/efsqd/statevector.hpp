#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "efsqd/bits.hpp"
#include "efsqd/rng.hpp"

namespace efsqd {

using Complex = std::complex<double>;

/// Optional line-oriented record of applied gates, for debugging circuit
/// construction. One line per gate: "<name> <operands...> <parameters...>".
struct CircuitTrace {
    std::vector<std::string> lines;
    void record(const std::string& line) { lines.push_back(line); }
    std::string str() const {
        std::string out;
        for (const auto& l : lines) { out += l; out += '\n'; }
        return out;
    }
};

/// State of M qubits in the Jordan-Wigner encoding of M fermionic modes.
/// Bit p of a basis index is the occupation of orbital p; creation strings
/// are ordered by ascending orbital index. Desk-scale cap: M <= 16
/// (2^M complex amplitudes, 16 bytes each).
class SpinStatevector {
  public:
    SpinStatevector() = default;
    explicit SpinStatevector(int m) : m_(m), amp_(std::size_t{1} << m, Complex{0.0, 0.0}) {
        if (m < 1 || m > 16) throw std::invalid_argument("SpinStatevector: M must be in [1, 16]");
    }

    static SpinStatevector basis_state(int m, Bits z) {
        SpinStatevector s(m);
        s.amp_[z] = 1.0;
        return s;
    }

    int num_orbitals() const { return m_; }
    std::size_t dim() const { return amp_.size(); }
    Complex& operator[](std::size_t z) { return amp_[z]; }
    const Complex& operator[](std::size_t z) const { return amp_[z]; }
    const std::vector<Complex>& amplitudes() const { return amp_; }
    std::vector<Complex>& amplitudes() { return amp_; }

    double norm() const;
    void check_normalized(double tol = 1e-8) const;

    /// Two-mode particle-conserving gate on adjacent modes (p, p+1), given as
    /// a 2x2 single-particle matrix [[a, b], [c, d]] (columns are source
    /// modes). The doubly-occupied amplitude picks up det = ad - bc.
    void apply_two_mode_gate(int p, Complex a, Complex b, Complex c, Complex d);

    /// Multiplies the amplitude of z by prod_{p occupied in z} phases[p].
    void apply_occupation_phases(const std::vector<Complex>& phases);

  private:
    int m_ = 0;
    std::vector<Complex> amp_;
};

Complex overlap(const SpinStatevector& a, const SpinStatevector& b);

/// i.i.d. bitstring draws from |amplitudes|^2; deterministic under a fixed
/// stream. Throws if the state norm deviates from 1 by more than 1e-8.
std::map<Bits, std::uint64_t> sample_counts(const SpinStatevector& state, std::uint64_t shots,
                                            RngStream& rng);

}  // namespace efsqd
