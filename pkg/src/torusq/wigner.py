"""Discrete Wigner transform on the doubled 2N x 2N phase space lattice.

The table of a state pair (psi, phi) or of an operator lives on the same
lattice as a sampled symbol.  Only the principal N x N block is free: the
three symmetries

    S1:  W(m + N, l) = (-1)^l W(m, l)
    S2:  W(m, l + N) = (-1)^m W(m, l)
    S3:  W(m + N, l + N) = (-1)^(m + l + N) W(m, l)

propagate it to the rest of the grid (the ghost copies).  All kernels here
are indexed through the shared exact phase table, so S1 to S3 hold bit for
bit on every table this module produces.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._phases import phases
from .errors import DimensionError, DomainError
from .rep import Representation, heisenberg
from .symbols import SampledSymbol

__all__ = [
    "KIND_STATE_PAIR",
    "KIND_OPERATOR",
    "WignerTable",
    "fourier_wigner",
    "wigner_state",
    "wigner_operator",
    "marginal_x",
    "marginal_p",
    "pairing",
    "check_symmetries",
    "symmetric_extension",
]

KIND_STATE_PAIR = "state-pair"
KIND_OPERATOR = "operator"


@dataclass(frozen=True, eq=False)
class WignerTable:
    """2N x 2N Wigner table together with its representation and source kind."""

    grid: np.ndarray
    rep: Representation
    kind: str

    def __post_init__(self):
        if self.kind not in (KIND_STATE_PAIR, KIND_OPERATOR):
            raise DomainError(f"unknown Wigner table kind {self.kind!r}")
        g = np.array(self.grid, dtype=complex)
        side = 2 * self.rep.dim
        if g.shape != (side, side):
            raise DimensionError(
                f"Wigner table must be {side} x {side} for dim {self.rep.dim}, got {g.shape}"
            )
        if not np.all(np.isfinite(g)):
            raise DomainError("Wigner table entries must be finite")
        g.setflags(write=False)
        object.__setattr__(self, "grid", g)


def _check_state(rep: Representation, psi: np.ndarray, name: str) -> np.ndarray:
    vec = np.asarray(psi, dtype=complex)
    if vec.shape != (rep.dim,):
        raise DimensionError(f"{name} must be a length-{rep.dim} vector, got shape {vec.shape}")
    return vec


def _core(coeff: np.ndarray, n: int) -> np.ndarray:
    # coeff[r, l] with r over the doubled lattice, l over Z_N; the table keeps
    # the (2l - r) s phases exact mod 2N.
    side = 2 * n
    r = np.arange(side)[:, None, None]
    l = np.arange(n)[None, :, None]
    s = np.arange(side)[None, None, :]
    kernel = phases((2 * l - r) * s, n)
    return np.einsum("rl,rls->rs", coeff, kernel) / side


def fourier_wigner(rep: Representation, psi, phi, n1: int, n2: int) -> complex:
    """Matrix coefficient <psi, T(n1, n2) phi>, antilinear in the first slot."""
    psi = _check_state(rep, psi, "psi")
    phi = _check_state(rep, phi, "phi")
    return complex(np.vdot(psi, heisenberg(rep, n1, n2) @ phi))


def wigner_state(rep: Representation, psi, phi) -> WignerTable:
    """Wigner table of a state pair.

    W(r, s) = (1/2N) sum_{l in Z_N} conj(psi[r - l]) phi[l] exp(-i pi (2l - r) s / N),
    state indices mod N.
    """
    psi = _check_state(rep, psi, "psi")
    phi = _check_state(rep, phi, "phi")
    n = rep.dim
    r = np.arange(2 * n)[:, None]
    l = np.arange(n)[None, :]
    coeff = np.conj(psi[(r - l) % n]) * phi[l]
    return WignerTable(_core(coeff, n), rep, KIND_STATE_PAIR)


def wigner_operator(rep: Representation, operator) -> WignerTable:
    """Wigner table of an operator.

    W(r, s) = (1/2N) sum_{l in Z_N} A[l, r - l] exp(-i pi (2l - r) s / N).
    """
    a = np.asarray(operator, dtype=complex)
    if a.shape != (rep.dim, rep.dim):
        raise DimensionError(
            f"operator must be {rep.dim} x {rep.dim}, got shape {a.shape}"
        )
    n = rep.dim
    r = np.arange(2 * n)[:, None]
    l = np.arange(n)[None, :]
    coeff = a[l, (r - l) % n]
    return WignerTable(_core(coeff, n), rep, KIND_OPERATOR)


def marginal_x(table: WignerTable) -> np.ndarray:
    """Row sums of the table.  For a state pair, slot 2j holds conj(psi_j) phi_j
    and the odd slots vanish."""
    return table.grid.sum(axis=1)


def marginal_p(table: WignerTable) -> np.ndarray:
    """Column sums of the table.  For a state pair, slot 2j holds
    (1/N) conj(psihat_j) phihat_j in the forward DFT normalization, odd slots vanish."""
    return table.grid.sum(axis=0)


def pairing(sym: SampledSymbol, psi, phi) -> complex:
    """Lattice pairing sum_{r,s} sym(r, s) W(psi, phi)(r, s).

    Equals the matrix element <psi, Op(sym) phi> of the quantized symbol.
    """
    table = wigner_state(sym.rep, psi, phi)
    return complex(np.sum(sym.grid * table.grid))


def check_symmetries(table: WignerTable) -> float:
    """Largest elementwise residual of the S1, S2, S3 symmetries."""
    g = table.grid
    n = table.rep.dim
    side = 2 * n
    sl = np.where(np.arange(side) % 2 == 0, 1.0, -1.0)[None, :]
    sm = np.where(np.arange(side) % 2 == 0, 1.0, -1.0)[:, None]
    sign_n = 1.0 if n % 2 == 0 else -1.0
    r1 = np.roll(g, -n, axis=0) - sl * g
    r2 = np.roll(g, -n, axis=1) - sm * g
    r3 = np.roll(np.roll(g, -n, axis=0), -n, axis=1) - sign_n * sm * sl * g
    return float(max(np.max(np.abs(r1)), np.max(np.abs(r2)), np.max(np.abs(r3))))


def symmetric_extension(block: np.ndarray) -> np.ndarray:
    """Extend an N x N principal block to the full 2N x 2N grid via S1 to S3."""
    b = np.asarray(block, dtype=complex)
    if b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise DimensionError(f"principal block must be square, got shape {b.shape}")
    n = b.shape[0]
    sj = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)[:, None]
    sk = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)[None, :]
    sign_n = 1.0 if n % 2 == 0 else -1.0
    out = np.empty((2 * n, 2 * n), dtype=complex)
    out[:n, :n] = b
    out[n:, :n] = sk * b
    out[:n, n:] = sj * b
    out[n:, n:] = sign_n * sj * sk * b
    return out
