#include "efsqd/hamiltonian.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace efsqd {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::runtime_error("FCIDUMP parse error at line " + std::to_string(line) + ": " + what);
}

// "NORB=4," tokens may be glued together or span lines; normalize to a single
// uppercase string and scan key=value pairs.
struct Header {
    int norb = -1;
    int nelec = -1;
    int ms2 = 0;
};

Header parse_header(const std::string& text, int& line_no, std::size_t& pos) {
    Header hd;
    std::string buf;
    int start_line = line_no;
    bool terminated = false;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string line = text.substr(pos, eol - pos);
        pos = eol < text.size() ? eol + 1 : eol;
        ++line_no;
        for (char& c : line) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        buf += " " + line;
        std::size_t end = buf.find("&END");
        if (end == std::string::npos) end = buf.find('/');
        if (end != std::string::npos) {
            buf = buf.substr(0, end);
            terminated = true;
            break;
        }
    }
    if (!terminated) parse_fail(start_line, "namelist not terminated by &END or /");
    const std::size_t amp = buf.find("&FCI");
    if (amp == std::string::npos) parse_fail(start_line, "missing &FCI namelist");
    buf = buf.substr(amp + 4);

    auto read_int_after = [&](const std::string& key, int& out) {
        std::size_t k = buf.find(key);
        while (k != std::string::npos) {
            const std::size_t eq = buf.find('=', k + key.size());
            if (eq == std::string::npos) parse_fail(start_line, key + " has no value");
            std::size_t v = eq + 1;
            while (v < buf.size() && std::isspace(static_cast<unsigned char>(buf[v]))) ++v;
            std::size_t e = v;
            while (e < buf.size() && (std::isdigit(static_cast<unsigned char>(buf[e])) ||
                                      buf[e] == '+' || buf[e] == '-'))
                ++e;
            if (e == v) parse_fail(start_line, key + " has a non-integer value");
            int val = 0;
            auto [p, ec] = std::from_chars(buf.data() + v, buf.data() + e, val);
            if (ec != std::errc()) parse_fail(start_line, key + " has a non-integer value");
            out = val;
            return;
        }
    };
    read_int_after("NORB", hd.norb);
    read_int_after("NELEC", hd.nelec);
    read_int_after("MS2", hd.ms2);
    if (hd.norb <= 0) parse_fail(start_line, "NORB missing or not positive");
    if (hd.nelec < 0) parse_fail(start_line, "NELEC missing or negative");
    if ((hd.nelec + hd.ms2) % 2 != 0)
        parse_fail(start_line, "NELEC and MS2 have inconsistent parity");
    if (std::abs(hd.ms2) > hd.nelec) parse_fail(start_line, "|MS2| exceeds NELEC");
    return hd;
}

}  // namespace

ActiveSpaceHamiltonian::ActiveSpaceHamiltonian(int num_orbitals, int n_alpha, int n_beta,
                                               double core_energy, std::vector<double> h1,
                                               std::vector<double> eri)
    : m_(num_orbitals), n_alpha_(n_alpha), n_beta_(n_beta), core_(core_energy),
      h1_(std::move(h1)), eri_(std::move(eri)) {
    if (m_ <= 0 || m_ > 32) throw std::invalid_argument("orbital count out of supported range");
    if (n_alpha_ < 0 || n_beta_ < 0 || n_alpha_ > m_ || n_beta_ > m_)
        throw std::invalid_argument("electron counts must lie in [0, M]");
    const std::size_t m = static_cast<std::size_t>(m_);
    if (h1_.size() != m * m) throw std::invalid_argument("h1 has wrong size");
    if (eri_.size() != m * m * m * m) throw std::invalid_argument("eri has wrong size");
    for (int p = 0; p < m_; ++p)
        for (int q = 0; q < p; ++q)
            if (std::abs(h1(p, q) - h1(q, p)) > 1e-12)
                throw std::invalid_argument("h1 is not symmetric");
    for (int p = 0; p < m_; ++p)
        for (int q = 0; q <= p; ++q)
            for (int r = 0; r < m_; ++r)
                for (int s = 0; s <= r; ++s) {
                    const double v = eri(p, q, r, s);
                    const double images[7] = {eri(q, p, r, s), eri(p, q, s, r), eri(q, p, s, r),
                                              eri(r, s, p, q), eri(s, r, p, q), eri(r, s, q, p),
                                              eri(s, r, q, p)};
                    for (double w : images)
                        if (std::abs(v - w) > 1e-12)
                            throw std::invalid_argument("eri violates 8-fold permutation symmetry");
                }
}

std::vector<double> ActiveSpaceHamiltonian::orbital_energies() const {
    std::vector<double> eps(static_cast<std::size_t>(m_));
    for (int p = 0; p < m_; ++p) {
        double e = h1(p, p);
        for (int i = 0; i < n_alpha_; ++i) e += eri(p, p, i, i) - eri(p, i, i, p);
        for (int i = 0; i < n_beta_; ++i) e += eri(p, p, i, i);
        eps[static_cast<std::size_t>(p)] = e;
    }
    return eps;
}

ActiveSpaceHamiltonian parse_fcidump(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_fcidump_string(ss.str());
}

ActiveSpaceHamiltonian parse_fcidump_string(const std::string& text) {
    int line_no = 0;
    std::size_t pos = 0;
    const Header hd = parse_header(text, line_no, pos);
    const int m = hd.norb;
    const std::size_t ms = static_cast<std::size_t>(m);
    std::vector<double> h1(ms * ms, 0.0);
    std::vector<double> eri(ms * ms * ms * ms, 0.0);
    double core = 0.0;

    auto set_h1 = [&](int p, int q, double v) {
        h1[static_cast<std::size_t>(p) * ms + q] = v;
        h1[static_cast<std::size_t>(q) * ms + p] = v;
    };
    auto set_eri = [&](int p, int q, int r, int s, double v) {
        auto at = [&](int a, int b, int c, int d) -> double& {
            return eri[((static_cast<std::size_t>(a) * ms + b) * ms + c) * ms + d];
        };
        at(p, q, r, s) = v; at(q, p, r, s) = v; at(p, q, s, r) = v; at(q, p, s, r) = v;
        at(r, s, p, q) = v; at(s, r, p, q) = v; at(r, s, q, p) = v; at(s, r, q, p) = v;
    };

    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string line = text.substr(pos, eol - pos);
        pos = eol < text.size() ? eol + 1 : eol;
        ++line_no;
        std::istringstream ls(line);
        double value;
        if (!(ls >> value)) {
            std::string probe;
            std::istringstream(line) >> probe;
            if (probe.empty()) continue;  // blank line
            parse_fail(line_no, "expected a numeric value");
        }
        long idx[4];
        std::string tok;
        for (int k = 0; k < 4; ++k) {
            if (!(ls >> tok)) parse_fail(line_no, "record has fewer than 4 indices");
            std::size_t consumed = 0;
            try {
                idx[k] = std::stol(tok, &consumed);
            } catch (const std::exception&) {
                parse_fail(line_no, "non-integer index '" + tok + "'");
            }
            if (consumed != tok.size()) parse_fail(line_no, "non-integer index '" + tok + "'");
            if (idx[k] < 0 || idx[k] > m)
                parse_fail(line_no, "index " + std::to_string(idx[k]) + " out of range [0, " +
                                        std::to_string(m) + "]");
        }
        const int i = static_cast<int>(idx[0]), j = static_cast<int>(idx[1]),
                  k = static_cast<int>(idx[2]), l = static_cast<int>(idx[3]);
        if (i == 0 && j == 0 && k == 0 && l == 0) {
            core = value;
        } else if (i > 0 && j > 0 && k == 0 && l == 0) {
            set_h1(i - 1, j - 1, value);
        } else if (i > 0 && j > 0 && k > 0 && l > 0) {
            set_eri(i - 1, j - 1, k - 1, l - 1, value);
        } else {
            parse_fail(line_no, "unsupported index pattern (" + std::to_string(i) + "," +
                                    std::to_string(j) + "," + std::to_string(k) + "," +
                                    std::to_string(l) + ")");
        }
    }

    const int n_alpha = (hd.nelec + hd.ms2) / 2;
    const int n_beta = (hd.nelec - hd.ms2) / 2;
    if (n_alpha > m || n_beta > m || n_beta < 0)
        throw std::runtime_error("FCIDUMP parse error: electron counts inconsistent with NORB");
    return ActiveSpaceHamiltonian(m, n_alpha, n_beta, core, std::move(h1), std::move(eri));
}

ActiveSpaceHamiltonian parse_fcidump_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open FCIDUMP file: " + path);
    return parse_fcidump(in);
}

void write_fcidump(const ActiveSpaceHamiltonian& h, std::ostream& out) {
    const int m = h.num_orbitals();
    const int nelec = h.n_alpha() + h.n_beta();
    const int ms2 = h.n_alpha() - h.n_beta();
    out << "&FCI NORB=" << m << ",NELEC=" << nelec << ",MS2=" << ms2 << ",\n&END\n";
    char buf[64];
    auto emit = [&](double v, int i, int j, int k, int l) {
        std::snprintf(buf, sizeof buf, " %.17g %3d %3d %3d %3d\n", v, i, j, k, l);
        out << buf;
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= i; ++j)
            for (int k = 0; k <= i; ++k) {
                const int lmax = (k == i) ? j : k;
                for (int l = 0; l <= lmax; ++l) {
                    const double v = h.eri(i, j, k, l);
                    if (v != 0.0) emit(v, i + 1, j + 1, k + 1, l + 1);
                }
            }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= i; ++j)
            if (h.h1(i, j) != 0.0) emit(h.h1(i, j), i + 1, j + 1, 0, 0);
    emit(h.core_energy(), 0, 0, 0, 0);
}

int excitation_degree(const Configuration& a, const Configuration& b) {
    const int d = (popcount(a.alpha ^ b.alpha) + popcount(a.beta ^ b.beta)) / 2;
    return d > 2 ? 3 : d;
}

namespace {

// Combined 2M-bit occupation word, alpha block in bits [0, M), beta in [M, 2M).
inline Bits combined_word(const Configuration& c) {
    return c.alpha | (c.beta << c.m);
}

// Phase of moving one electron from spin-orbital `from` to `to` on word w
// (which must occupy `from` and not `to`), counting occupied spin-orbitals
// strictly between the two positions. Updates w in place.
inline int move_phase(Bits& w, int from, int to) {
    const int lo = std::min(from, to), hi = std::max(from, to);
    const Bits between = (low_mask(hi) & ~low_mask(lo + 1));
    const int crossings = popcount(w & between);
    w ^= (Bits{1} << from) | (Bits{1} << to);
    return (crossings & 1) ? -1 : 1;
}

}  // namespace

double slater_condon_element(const ActiveSpaceHamiltonian& h, const Configuration& cm,
                             const Configuration& cn) {
    if (cm.n_alpha != cn.n_alpha || cm.n_beta != cn.n_beta)
        throw std::invalid_argument("slater_condon_element: particle-number mismatch");
    const int m = h.num_orbitals();
    const int deg = excitation_degree(cm, cn);
    if (deg >= 3) return 0.0;

    if (deg == 0) {
        double e = h.core_energy();
        const auto occ_a = occupied_list(cm.alpha, m);
        const auto occ_b = occupied_list(cm.beta, m);
        for (int p : occ_a) e += h.h1(p, p);
        for (int p : occ_b) e += h.h1(p, p);
        for (int p : occ_a)
            for (int q : occ_a) e += 0.5 * (h.eri(p, p, q, q) - h.eri(p, q, q, p));
        for (int p : occ_b)
            for (int q : occ_b) e += 0.5 * (h.eri(p, p, q, q) - h.eri(p, q, q, p));
        for (int p : occ_a)
            for (int q : occ_b) e += h.eri(p, p, q, q);
        return e;
    }

    if (deg == 1) {
        // single excitation within one spin: n -> m moves q -> p
        const bool in_alpha = (cm.alpha != cn.alpha);
        const Bits xm = in_alpha ? cm.alpha : cm.beta;
        const Bits xn = in_alpha ? cn.alpha : cn.beta;
        const int p = std::countr_zero(xm & ~xn);  // occupied in m only
        const int q = std::countr_zero(xn & ~xm);  // occupied in n only
        Bits w = combined_word(cn);
        const int off = in_alpha ? 0 : m;
        const int sign = move_phase(w, q + off, p + off);
        double e = h.h1(p, q);
        const auto occ_a = occupied_list(cn.alpha & cm.alpha, m);
        const auto occ_b = occupied_list(cn.beta & cm.beta, m);
        const auto& occ_same = in_alpha ? occ_a : occ_b;
        const auto& occ_other = in_alpha ? occ_b : occ_a;
        for (int r : occ_same) e += h.eri(p, q, r, r) - h.eri(p, r, r, q);
        for (int r : occ_other) e += h.eri(p, q, r, r);
        return sign * e;
    }

    // double excitation: holes in n, particles in m, combined indices sorted
    const Bits wm = combined_word(cm), wn = combined_word(cn);
    Bits only_m = wm & ~wn, only_n = wn & ~wm;
    const int p1 = std::countr_zero(only_m);
    only_m &= only_m - 1;
    const int p2 = std::countr_zero(only_m);
    const int q1 = std::countr_zero(only_n);
    only_n &= only_n - 1;
    const int q2 = std::countr_zero(only_n);

    Bits w = wn;
    int sign = move_phase(w, q1, p1);
    sign *= move_phase(w, q2, p2);

    auto spatial = [m](int so) { return so < m ? so : so - m; };
    auto spin = [m](int so) { return so < m ? 0 : 1; };
    double direct = 0.0, exchange = 0.0;
    if (spin(p1) == spin(q1) && spin(p2) == spin(q2))
        direct = h.eri(spatial(p1), spatial(q1), spatial(p2), spatial(q2));
    if (spin(p1) == spin(q2) && spin(p2) == spin(q1))
        exchange = h.eri(spatial(p1), spatial(q2), spatial(p2), spatial(q1));
    return sign * (direct - exchange);
}

double s2_matrix_element(const Configuration& cm, const Configuration& cn) {
    if (cm.n_alpha != cn.n_alpha || cm.n_beta != cn.n_beta)
        throw std::invalid_argument("s2_matrix_element: particle-number mismatch");
    const int m = cm.m;
    if (cm == cn) {
        const double na = cm.n_alpha, nb = cm.n_beta;
        double paired = static_cast<double>(popcount(cm.alpha & cm.beta));
        return 0.25 * (na - nb) * (na - nb) + 0.5 * (na + nb) - paired;
    }
    // S-S+ exchange term: (alpha_p, beta_q) in n -> (alpha_q, beta_p) in m.
    const Bits da = cm.alpha ^ cn.alpha, db = cm.beta ^ cn.beta;
    if (popcount(da) != 2 || popcount(db) != 2) return 0.0;
    const int q = std::countr_zero(cm.alpha & ~cn.alpha);
    const int p = std::countr_zero(cn.alpha & ~cm.alpha);
    if (!((cm.beta >> p) & 1) || ((cn.beta >> p) & 1)) return 0.0;
    if (((cm.beta >> q) & 1) || !((cn.beta >> q) & 1)) return 0.0;
    // matrix element of -a+_{q,a} a_{p,a} a+_{p,b} a_{q,b} with JW phases
    Bits w = cn.alpha | (cn.beta << m);
    int sign = move_phase(w, q + m, p + m);  // beta q -> p
    sign *= move_phase(w, p, q);             // alpha p -> q
    return -1.0 * sign;
}

}  // namespace efsqd
