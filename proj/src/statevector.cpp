#include "efsqd/statevector.hpp"

#include <cmath>
#include <stdexcept>

namespace efsqd {

double SpinStatevector::norm() const {
    double s = 0.0;
    for (const Complex& a : amp_) s += std::norm(a);
    return std::sqrt(s);
}

void SpinStatevector::check_normalized(double tol) const {
    if (std::abs(norm() - 1.0) > tol)
        throw std::runtime_error("statevector is not normalized (|norm - 1| = " +
                                 std::to_string(std::abs(norm() - 1.0)) + ")");
}

void SpinStatevector::apply_two_mode_gate(int p, Complex a, Complex b, Complex c, Complex d) {
    const std::size_t bit_p = std::size_t{1} << p;
    const std::size_t bit_q = std::size_t{1} << (p + 1);
    const Complex det = a * d - b * c;
    const std::size_t n = amp_.size();
    for (std::size_t z = 0; z < n; ++z) {
        const bool zp = z & bit_p, zq = z & bit_q;
        if (zp && !zq) {
            const std::size_t z01 = (z ^ bit_p) | bit_q;
            const Complex a10 = amp_[z], a01 = amp_[z01];
            amp_[z] = a * a10 + b * a01;
            amp_[z01] = c * a10 + d * a01;
        } else if (zp && zq) {
            amp_[z] *= det;
        }
    }
}

void SpinStatevector::apply_occupation_phases(const std::vector<Complex>& phases) {
    if (static_cast<int>(phases.size()) != m_)
        throw std::invalid_argument("apply_occupation_phases: need one phase per orbital");
    const std::size_t n = amp_.size();
    for (std::size_t z = 0; z < n; ++z) {
        Complex f = 1.0;
        for (int p = 0; p < m_; ++p)
            if ((z >> p) & 1) f *= phases[static_cast<std::size_t>(p)];
        amp_[z] *= f;
    }
}

Complex overlap(const SpinStatevector& a, const SpinStatevector& b) {
    if (a.num_orbitals() != b.num_orbitals())
        throw std::invalid_argument("overlap: dimension mismatch");
    Complex s = 0.0;
    for (std::size_t z = 0; z < a.dim(); ++z) s += std::conj(a[z]) * b[z];
    return s;
}

std::map<Bits, std::uint64_t> sample_counts(const SpinStatevector& state, std::uint64_t shots,
                                            RngStream& rng) {
    state.check_normalized();
    std::vector<double> cdf;
    std::vector<Bits> support;
    cdf.reserve(state.dim());
    double acc = 0.0;
    for (std::size_t z = 0; z < state.dim(); ++z) {
        const double p = std::norm(state[z]);
        if (p > 0.0) {
            acc += p;
            cdf.push_back(acc);
            support.push_back(z);
        }
    }
    std::map<Bits, std::uint64_t> counts;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const std::size_t i = rng.from_cdf(cdf, acc);
        ++counts[support[i]];
    }
    return counts;
}

}  // namespace efsqd
