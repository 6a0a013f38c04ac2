"""Weyl quantization of torus symbols into N x N operators.

Two routes are provided and must agree: the Fourier route sums group
elements weighted by the Fourier coefficients of a trigonometric
polynomial, while the sampled route reads the matrix elements directly off
the lattice grid through a 2N-point discrete Fourier transform.  The DFT is
evaluated by direct summation; for the dimensions this package targets
(N <= 16) no fast transform is needed.
"""
from __future__ import annotations

import numpy as np

from ._phases import phases
from .errors import DimensionError
from .rep import Representation, heisenberg
from .symbols import SampledSymbol, TrigPolynomial

__all__ = [
    "quantize_fourier",
    "quantize_sampled",
    "adjoint_symbol",
    "operator_from_reduced",
]


def quantize_fourier(tp: TrigPolynomial, rep: Representation) -> np.ndarray:
    """Operator sum_n c[n] T(n1, n2) built from the Fourier coefficients of tp."""
    out = np.zeros((rep.dim, rep.dim), dtype=complex)
    for (n1, n2), c in tp.items():
        out += c * heisenberg(rep, n1, n2)
    return out


def quantize_sampled(sym: SampledSymbol) -> np.ndarray:
    """Operator with matrix elements read off the sampled grid.

    With F2 a(m, r) = sum_l a(m, l) exp(-2 i pi r l / 2N), the matrix element
    in row n, column j is

        (1 / 2N) [ F2 a(j + n, j - n) + F2 a(j + n + N, j - n + N) ]

    with both grid indices taken mod 2N.
    """
    n = sym.rep.dim
    side = 2 * n
    idx = np.arange(side)
    # Direct-summation DFT of every grid row: f2[m, r] = sum_l grid[m, l] w^(r l).
    f2 = sym.grid @ phases(np.outer(idx, idx), n)
    row = np.arange(n)[:, None]
    col = np.arange(n)[None, :]
    first = f2[row + col, (col - row) % side]
    second = f2[(row + col + n) % side, (col - row + n) % side]
    return (first + second) / side


def adjoint_symbol(sym: SampledSymbol) -> SampledSymbol:
    """Symbol of the adjoint operator: the entrywise conjugate grid."""
    return SampledSymbol(np.conj(sym.grid), sym.rep)


def operator_from_reduced(reduced: np.ndarray) -> np.ndarray:
    """Invert the reduced symbol into the operator it quantizes to.

    The matrix element in row m, column l is

        (1 / 2N) sum_s red[(m+l) % N, s] (-1)^(s w) exp(i pi s (m-l) / N)

    where w = 1 when m + l wraps past N and 0 otherwise.  The wrap sign
    comes from folding the 2N-point row index down to N points; without it
    the inversion only holds on the entries with m + l < N.  The input is
    the N x N output of the fold operator; composing with it reproduces
    quantize_sampled exactly.
    """
    red = np.asarray(reduced, dtype=complex)
    if red.ndim != 2 or red.shape[0] != red.shape[1]:
        raise DimensionError(f"reduced symbol must be square, got shape {red.shape}")
    n = red.shape[0]
    m = np.arange(n)[:, None, None]
    l = np.arange(n)[None, :, None]
    s = np.arange(n)[None, None, :]
    wrap = (m + l) >= n
    kernel = phases(-s * (m - l) + n * s * wrap, n)
    rows = red[(m[..., 0] + l[..., 0]) % n]
    return np.einsum("mls,mls->ml", rows, kernel) / (2 * n)
