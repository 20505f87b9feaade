#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace efsqd {

using Bits = std::uint64_t;

inline int popcount(Bits b) { return std::popcount(b); }

/// Mask with the lowest n bits set.
inline Bits low_mask(int n) { return n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1; }

/// Bitstring with orbitals 0..n-1 occupied.
inline Bits packed_reference(int n) { return low_mask(n); }

/// Occupied orbital indices in ascending order.
inline std::vector<int> occupied_list(Bits b, int m) {
    std::vector<int> occ;
    for (int p = 0; p < m; ++p)
        if ((b >> p) & 1) occ.push_back(p);
    return occ;
}

/// Orbital p is the p-th character, so "1100" occupies orbitals 0 and 1.
inline std::string bits_to_string(Bits b, int m) {
    std::string s(static_cast<std::size_t>(m), '0');
    for (int p = 0; p < m; ++p)
        if ((b >> p) & 1) s[static_cast<std::size_t>(p)] = '1';
    return s;
}

inline Bits bits_from_string(const std::string& s) {
    if (s.size() > 63) throw std::invalid_argument("bitstring longer than 63 characters");
    Bits b = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') b |= Bits{1} << i;
        else if (s[i] != '0') throw std::invalid_argument("bitstring must contain only 0/1: " + s);
    }
    return b;
}

/// Pair of per-spin occupation bitstrings labeling a Slater determinant.
///
/// Spin-orbital ordering convention used for all fermionic signs in this
/// project: spin-major, alpha block first. Spin-orbital index of (p, alpha)
/// is p and of (p, beta) is M + p. With this ordering a two-register state
/// with the alpha register first factors as u(x) * v(y) with no compensating
/// phases, which the forged-state assembly relies on.
struct Configuration {
    Bits alpha = 0;
    Bits beta = 0;
    std::uint8_t m = 0;
    std::uint8_t n_alpha = 0;
    std::uint8_t n_beta = 0;

    Configuration() = default;
    Configuration(Bits a, Bits b, int num_orbitals)
        : alpha(a), beta(b), m(static_cast<std::uint8_t>(num_orbitals)),
          n_alpha(static_cast<std::uint8_t>(popcount(a))),
          n_beta(static_cast<std::uint8_t>(popcount(b))) {
        if (num_orbitals <= 0 || num_orbitals > 63)
            throw std::invalid_argument("Configuration: orbital count out of range");
        if ((a | b) >> num_orbitals)
            throw std::invalid_argument("Configuration: bits set beyond orbital count");
    }

    bool operator==(const Configuration& o) const { return alpha == o.alpha && beta == o.beta; }
    bool operator!=(const Configuration& o) const { return !(*this == o); }
    bool operator<(const Configuration& o) const {
        return alpha != o.alpha ? alpha < o.alpha : beta < o.beta;
    }

    /// Canonical packed key for hashing and ordering (valid for m <= 32).
    std::uint64_t key() const { return (alpha << 32) | beta; }

    std::string to_string() const {
        return bits_to_string(alpha, m) + " " + bits_to_string(beta, m);
    }
};

struct ConfigurationHash {
    std::size_t operator()(const Configuration& c) const noexcept {
        std::uint64_t k = c.key();
        k ^= k >> 33; k *= 0xff51afd7ed558ccdULL;
        k ^= k >> 33; k *= 0xc4ceb9fe1a85ec53ULL;
        k ^= k >> 33;
        return static_cast<std::size_t>(k);
    }
};

/// All m-bit strings with the given popcount, in ascending integer order.
inline std::vector<Bits> sector_strings(int m, int n) {
    if (n < 0 || n > m) throw std::invalid_argument("sector_strings: bad popcount");
    std::vector<Bits> out;
    if (n == 0) { out.push_back(0); return out; }
    Bits v = low_mask(n);
    const Bits limit = Bits{1} << m;
    while (v < limit) {
        out.push_back(v);
        Bits t = v | (v - 1);  // next lexicographic permutation of set bits
        v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
    }
    return out;
}

/// Full (n_alpha, n_beta) determinant sector, beta index fastest.
inline std::vector<Configuration> sector_configurations(int m, int n_alpha, int n_beta) {
    auto as = sector_strings(m, n_alpha);
    auto bs = sector_strings(m, n_beta);
    std::vector<Configuration> out;
    out.reserve(as.size() * bs.size());
    for (Bits a : as)
        for (Bits b : bs) out.emplace_back(a, b, m);
    return out;
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
    return r;
}

}  // namespace efsqd
