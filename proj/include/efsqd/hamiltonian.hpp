#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "efsqd/bits.hpp"

namespace efsqd {

/// Active-space electronic Hamiltonian in a basis of M real orthonormal
/// spatial orbitals. Two-electron integrals use chemists' notation (pq|rs)
/// and are stored with all 8 permutation images populated. Orbital indices
/// are 1-based in FCIDUMP files and 0-based everywhere in code.
///
/// Fermionic sign convention (fixed project-wide): spin-orbitals are ordered
/// spin-major with the alpha block first, i.e. (0a, 1a, ..., (M-1)a, 0b, ...,
/// (M-1)b), and determinants are creation strings in ascending spin-orbital
/// order.
class ActiveSpaceHamiltonian {
  public:
    ActiveSpaceHamiltonian(int num_orbitals, int n_alpha, int n_beta, double core_energy,
                           std::vector<double> h1, std::vector<double> eri);

    int num_orbitals() const { return m_; }
    int n_alpha() const { return n_alpha_; }
    int n_beta() const { return n_beta_; }
    double core_energy() const { return core_; }

    double h1(int p, int q) const { return h1_[static_cast<std::size_t>(p) * m_ + q]; }
    /// (pq|rs), chemists' notation.
    double eri(int p, int q, int r, int s) const {
        const std::size_t m = static_cast<std::size_t>(m_);
        return eri_[((static_cast<std::size_t>(p) * m + q) * m + r) * m + s];
    }

    /// Hartree-Fock reference: lowest n_sigma orbitals occupied per spin.
    Configuration hf_configuration() const {
        return Configuration(packed_reference(n_alpha_), packed_reference(n_beta_), m_);
    }

    /// Diagonal orbital energies of the (spin-averaged) Fock operator built
    /// from the packed reference occupation.
    std::vector<double> orbital_energies() const;

  private:
    int m_;
    int n_alpha_;
    int n_beta_;
    double core_;
    std::vector<double> h1_;
    std::vector<double> eri_;
};

/// Parses the FCIDUMP namelist format: &FCI NORB=...,NELEC=...,MS2=... &END
/// followed by "value i j k l" records. Indices (i,j,0,0) are one-electron
/// integrals, (0,0,0,0) is the core energy, anything else with four nonzero
/// indices is (ij|kl). Errors carry the 1-based line number.
ActiveSpaceHamiltonian parse_fcidump(std::istream& in);
ActiveSpaceHamiltonian parse_fcidump_string(const std::string& text);
ActiveSpaceHamiltonian parse_fcidump_file(const std::string& path);

/// Writes unique canonical integrals; parse(write(H)) reproduces every
/// integral bit-identically.
void write_fcidump(const ActiveSpaceHamiltonian& h, std::ostream& out);

/// Number of spin-orbitals in which a and b differ, divided by two
/// (0 = identical, 1 = single excitation, 2 = double, 3 = more).
int excitation_degree(const Configuration& a, const Configuration& b);

/// <m|H|n> by the Slater-Condon rules. Throws if particle numbers differ.
double slater_condon_element(const ActiveSpaceHamiltonian& h, const Configuration& m,
                             const Configuration& n);

/// <m|S^2|n>. Diagonal: (Na-Nb)^2/4 + (Na+Nb)/2 - sum_p n_pa n_pb.
/// Off-diagonal elements connect determinants related by an ab<->ba exchange.
double s2_matrix_element(const Configuration& m, const Configuration& n);

}  // namespace efsqd
