#!/usr/bin/env python3
"""One-time generator for the FCIDUMP test fixtures in this directory.

Computes STO-3G integrals for small hydrogen systems (s-type Gaussians only,
closed-form formulas), runs a closed-shell RHF, transforms to the canonical
MO basis, writes FCIDUMP files, and records reference energies obtained by
dense diagonalization of the second-quantized Hamiltonian on the full Fock
space (built with numpy kron, independent of any CI code in this repo).

Run:  python3 generate_reference.py
"""

import json
import math

import numpy as np
from scipy.linalg import eigh
from scipy.special import erf

# STO-3G hydrogen: exponents/coefficients for zeta = 1.24 (published values).
H_EXPS = np.array([3.42525091, 0.62391373, 0.16885540])
H_COEFS = np.array([0.15432897, 0.53532814, 0.44463454])

BOHR_PER_ANGSTROM = 1.0 / 0.529177210903


def boys0(t):
    if t < 1e-12:
        return 1.0 - t / 3.0
    return 0.5 * math.sqrt(math.pi / t) * erf(math.sqrt(t))


class SFunction:
    def __init__(self, center):
        self.center = np.asarray(center, dtype=float)
        norms = (2.0 * H_EXPS / math.pi) ** 0.75
        self.coefs = H_COEFS * norms
        self.exps = H_EXPS
        # renormalize the contracted function
        s = self_overlap(self)
        self.coefs /= math.sqrt(s)


def prim_overlap(a, ra, b, rb):
    p = a + b
    r2 = float(np.dot(ra - rb, ra - rb))
    return (math.pi / p) ** 1.5 * math.exp(-a * b / p * r2)


def self_overlap(f):
    s = 0.0
    for ca, a in zip(f.coefs, f.exps):
        for cb, b in zip(f.coefs, f.exps):
            s += ca * cb * prim_overlap(a, f.center, b, f.center)
    return s


def overlap(fa, fb):
    s = 0.0
    for ca, a in zip(fa.coefs, fa.exps):
        for cb, b in zip(fb.coefs, fb.exps):
            s += ca * cb * prim_overlap(a, fa.center, b, fb.center)
    return s


def kinetic(fa, fb):
    t = 0.0
    for ca, a in zip(fa.coefs, fa.exps):
        for cb, b in zip(fb.coefs, fb.exps):
            p = a + b
            mu = a * b / p
            r2 = float(np.dot(fa.center - fb.center, fa.center - fb.center))
            t += ca * cb * mu * (3.0 - 2.0 * mu * r2) * prim_overlap(a, fa.center, b, fb.center)
    return t


def nuclear(fa, fb, centers, charges):
    v = 0.0
    for ca, a in zip(fa.coefs, fa.exps):
        for cb, b in zip(fb.coefs, fb.exps):
            p = a + b
            rp = (a * fa.center + b * fb.center) / p
            r2 = float(np.dot(fa.center - fb.center, fa.center - fb.center))
            pre = -2.0 * math.pi / p * math.exp(-a * b / p * r2)
            for rc, z in zip(centers, charges):
                t = p * float(np.dot(rp - rc, rp - rc))
                v += ca * cb * pre * z * boys0(t)
    return v


def eri(fa, fb, fc, fd):
    val = 0.0
    for ca, a in zip(fa.coefs, fa.exps):
        for cb, b in zip(fb.coefs, fb.exps):
            p = a + b
            rp = (a * fa.center + b * fb.center) / p
            kab = math.exp(-a * b / p * float(np.dot(fa.center - fb.center, fa.center - fb.center)))
            for cc, c in zip(fc.coefs, fc.exps):
                for cd, d in zip(fd.coefs, fd.exps):
                    q = c + d
                    rq = (c * fc.center + d * fd.center) / q
                    kcd = math.exp(-c * d / q * float(np.dot(fc.center - fd.center, fc.center - fd.center)))
                    t = p * q / (p + q) * float(np.dot(rp - rq, rp - rq))
                    val += (ca * cb * cc * cd * 2.0 * math.pi ** 2.5
                            / (p * q * math.sqrt(p + q)) * kab * kcd * boys0(t))
    return val


def build_system(positions_angstrom):
    centers = [np.array([0.0, 0.0, z * BOHR_PER_ANGSTROM]) for z in positions_angstrom]
    charges = [1.0] * len(centers)
    funcs = [SFunction(c) for c in centers]
    n = len(funcs)
    S = np.array([[overlap(funcs[i], funcs[j]) for j in range(n)] for i in range(n)])
    T = np.array([[kinetic(funcs[i], funcs[j]) for j in range(n)] for i in range(n)])
    V = np.array([[nuclear(funcs[i], funcs[j], centers, charges) for j in range(n)] for i in range(n)])
    g = np.zeros((n, n, n, n))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    g[i, j, k, l] = eri(funcs[i], funcs[j], funcs[k], funcs[l])
    e_nuc = 0.0
    for i in range(len(centers)):
        for j in range(i + 1, len(centers)):
            e_nuc += charges[i] * charges[j] / np.linalg.norm(centers[i] - centers[j])
    return S, T + V, g, e_nuc


def rhf(S, hcore, g, e_nuc, nelec, iters=200):
    n = S.shape[0]
    nocc = nelec // 2
    F = hcore.copy()
    C = None
    e_old = 0.0
    for _ in range(iters):
        eps, C = eigh(F, S)
        D = 2.0 * C[:, :nocc] @ C[:, :nocc].T
        J = np.einsum("ijkl,kl->ij", g, D)
        K = np.einsum("ikjl,kl->ij", g, D)
        F = hcore + J - 0.5 * K
        e = 0.5 * np.sum(D * (hcore + F)) + e_nuc
        if abs(e - e_old) < 1e-13:
            break
        e_old = e
    return e, eps, C


def mo_transform(hcore, g, C):
    h1 = C.T @ hcore @ C
    g1 = np.einsum("pi,pqrs->iqrs", C, g)
    g2 = np.einsum("qj,iqrs->ijrs", C, g1)
    g3 = np.einsum("rk,ijrs->ijks", C, g2)
    g4 = np.einsum("sl,ijks->ijkl", C, g3)
    return h1, g4


def fock_space_fci(h1, g, e_core, nalpha, nbeta):
    """Lowest eigenvalue in the (nalpha, nbeta) sector via dense kron-built
    creation/annihilation operators. Independent of any determinant code."""
    m = h1.shape[0]
    nso = 2 * m
    dim = 2 ** nso
    iden = np.eye(2)
    z = np.diag([1.0, -1.0])
    cr = np.array([[0.0, 0.0], [1.0, 0.0]])  # |1><0|
    ops = []
    for p in range(nso):
        mats = [z] * p + [cr] + [iden] * (nso - p - 1)
        full = np.array([[1.0]])
        for mmat in mats:
            full = np.kron(full, mmat)
        ops.append(full)
    # spin-orbital s = p for alpha, m + p for beta
    H = np.zeros((dim, dim))
    for p in range(m):
        for q in range(m):
            if abs(h1[p, q]) < 1e-15:
                continue
            for sp in (0, m):
                H += h1[p, q] * ops[p + sp] @ ops[q + sp].T
    for p in range(m):
        for q in range(m):
            for r in range(m):
                for s in range(m):
                    val = g[p, q, r, s]
                    if abs(val) < 1e-15:
                        continue
                    for sp in (0, m):
                        for sq in (0, m):
                            H += 0.5 * val * (ops[p + sp] @ ops[r + sq]
                                              @ ops[s + sq].T @ ops[q + sp].T)
    num = [ops[s] @ ops[s].T for s in range(nso)]
    na = sum(num[:m])
    nb = sum(num[m:])
    diag_a = np.diag(na)
    diag_b = np.diag(nb)
    mask = (np.abs(diag_a - nalpha) < 1e-9) & (np.abs(diag_b - nbeta) < 1e-9)
    idx = np.where(mask)[0]
    Hs = H[np.ix_(idx, idx)]
    w = np.linalg.eigvalsh(Hs)
    return float(w[0] + e_core)


def write_fcidump(path, h1, g, e_core, nelec, ms2):
    n = h1.shape[0]
    with open(path, "w") as f:
        f.write(f"&FCI NORB={n},NELEC={nelec},MS2={ms2},\n")
        f.write("  ORBSYM=" + "1," * n + "\n")
        f.write("  ISYM=1,\n")
        f.write("&END\n")
        for i in range(n):
            for j in range(i + 1):
                for k in range(i + 1):
                    lmax = j + 1 if k == i else k + 1
                    for l in range(lmax):
                        v = g[i, j, k, l]
                        if abs(v) > 1e-14:
                            f.write(f" {v:23.16E} {i+1:3d} {j+1:3d} {k+1:3d} {l+1:3d}\n")
        for i in range(n):
            for j in range(i + 1):
                if abs(h1[i, j]) > 1e-14:
                    f.write(f" {h1[i, j]:23.16E} {i+1:3d} {j+1:3d}   0   0\n")
        f.write(f" {e_core:23.16E}   0   0   0   0\n")


def make(name, positions, nelec, out):
    S, hcore, g, e_nuc = build_system(positions)
    e_hf, eps, C = rhf(S, hcore, g, e_nuc, nelec)
    h1, gmo = mo_transform(hcore, g, C)
    write_fcidump(f"{name}.fcidump", h1, gmo, e_nuc, nelec, 0)
    e_fci = fock_space_fci(h1, gmo, e_nuc, nelec // 2, nelec // 2)
    out[name] = {
        "positions_angstrom": positions,
        "e_hf": e_hf,
        "e_fci": e_fci,
        "orbital_energies": [float(x) for x in eps],
    }
    print(f"{name}: E_HF = {e_hf:.10f}  E_FCI = {e_fci:.10f}")


def main():
    out = {}
    make("h2_sto3g_0735", [0.0, 0.735], 2, out)
    make("h2_sto3g_1500", [0.0, 1.500], 2, out)
    make("h4_r", [0.0, 0.75, 2.25, 3.00], 4, out)
    make("h4_ts", [0.0, 1.00, 2.00, 3.00], 4, out)
    make("h4_p", [0.0, 0.90, 2.10, 3.00], 4, out)
    with open("reference.json", "w") as f:
        json.dump(out, f, indent=2)


if __name__ == "__main__":
    main()
