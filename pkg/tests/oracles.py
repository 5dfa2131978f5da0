"""Independent reference computations used only by the tests.

Dense numpy matrices built straight from the defining formulas, and
polynomial arithmetic delegated to sympy.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
import sympy

from vnbasis.algebra import BlockMatrix, embed

X = sympy.Symbol("x")


def dense(x: BlockMatrix) -> np.ndarray:
    return np.array([[complex(e) for e in row] for row in embed(x)], dtype=complex)


def block_dense(blk) -> np.ndarray:
    return np.array([[complex(e) for e in row] for row in blk], dtype=complex)


def fourier_dense(n: int) -> np.ndarray:
    w = cmath.exp(2j * math.pi / n)
    return np.array([[w ** (j * t) for t in range(n)] for j in range(n)]) / math.sqrt(n)


def uv_dense(ks, ns):
    """U and V as D x D numpy arrays, assembled from Kronecker products."""
    d = sum(n * n for n in ns)
    w = cmath.exp(2j * math.pi / d)
    us, vs, s = [], [], 0
    for k, n in zip(ks, ns):
        Di = np.diag([w ** (j * n) for j in range(n)])
        F = fourier_dense(n)
        Ci = F @ np.diag([w**p for p in range(n)]) @ F.conj().T
        us.append(np.kron(np.eye(k), w**s * Di))
        vs.append(np.kron(np.eye(k), Ci))
        s += n * n
    return _direct_sum(us), _direct_sum(vs)


def _direct_sum(mats) -> np.ndarray:
    D = sum(m.shape[0] for m in mats)
    out = np.zeros((D, D), dtype=complex)
    pos = 0
    for m in mats:
        r = m.shape[0]
        out[pos : pos + r, pos : pos + r] = m
        pos += r
    return out


def dense_gram(mats, D: int) -> np.ndarray:
    """Normalized trace Gram: tr(A B*) / D."""
    N = len(mats)
    return np.array([[np.trace(mats[i] @ mats[j].conj().T) / D for j in range(N)] for i in range(N)])


def rem_mod_cyclotomic(coeffs, L: int) -> sympy.Poly:
    """sum coeffs[t] x**t reduced modulo Phi_L, by sympy polynomial division."""
    p = sympy.Poly(sum(sympy.Rational(c) * X**t for t, c in enumerate(coeffs)), X, domain="QQ")
    return p.rem(sympy.Poly(sympy.cyclotomic_poly(L, X), X, domain="QQ"))


def brute_cyclotomic(L: int) -> list[int]:
    """prod_{gcd(t,L)=1} (x - e^{2 pi i t/L}) in floating point, rounded; constant term first."""
    poly = np.array([1.0 + 0j])
    for t in range(1, L + 1):
        if math.gcd(t, L) == 1:
            poly = np.convolve(poly, np.array([1.0, -cmath.exp(2j * math.pi * t / L)]))
    # np.convolve built highest degree first
    return [int(round(c.real)) for c in poly[::-1]]
