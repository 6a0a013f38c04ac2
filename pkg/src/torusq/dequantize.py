"""Dequantization: symbols of operators, and the Pauli dictionaries.

Every N x N operator is N times its own Wigner table when read as a
sampled symbol; quantizing that symbol returns the operator, which makes
dequantize a right inverse of the sampled quantization.  The canonical
class picks the distinguished representative 4N times the principal block.

For N = 2 the construction reproduces the Pauli matrices, and for general N
the matrices B[r, s] built here form a generalized Pauli basis of the full
matrix algebra.
"""
from __future__ import annotations

import numpy as np

from ._phases import phases
from .errors import DimensionError
from .rep import Representation, heisenberg
from .symbols import SampledSymbol, TrigPolynomial, delta
from .wigner import wigner_operator

__all__ = [
    "dequantize",
    "canonical_class",
    "pauli",
    "pauli_symbols",
    "big_pauli",
    "big_pauli_symbol",
]


def dequantize(rep: Representation, operator) -> SampledSymbol:
    """Canonical symbol of an operator: N times its Wigner table."""
    table = wigner_operator(rep, operator)
    return SampledSymbol(rep.dim * table.grid, rep)


def canonical_class(rep: Representation, operator) -> np.ndarray:
    """Distinguished reduced symbol of an operator.

    Computed as the fold of the dequantized grid, which equals 4N times the
    principal block of the operator's Wigner table.
    """
    return delta(dequantize(rep, operator))


def pauli(rep: Representation):
    """The Pauli matrices (identity, sigma_x, sigma_y, sigma_z) for dim 2.

    Also cross-checks the group element dictionary
        sigma_z = exp(-i pi theta1) T(1, 0)
        sigma_x = exp(-i pi theta2) T(0, 1)
        sigma_y = exp(-i pi (theta1 + theta2 + 1)) T(1, 1)
    which holds for every theta.  The +1 in the sigma_y phase is forced:
    the cocycle gives T(1, 1) = i T(1, 0) T(0, 1), the first two relations
    then yield i sigma_z sigma_x, and i sigma_z sigma_x = -sigma_y.
    """
    if rep.dim != 2:
        raise DimensionError(f"Pauli matrices require dim 2, got {rep.dim}")
    identity = np.eye(2, dtype=complex)
    sigma_x = np.array([[0, 1], [1, 0]], dtype=complex)
    sigma_y = np.array([[0, -1j], [1j, 0]], dtype=complex)
    sigma_z = np.array([[1, 0], [0, -1]], dtype=complex)
    checks = (
        (sigma_z, np.exp(-1j * np.pi * rep.theta1) * heisenberg(rep, 1, 0)),
        (sigma_x, np.exp(-1j * np.pi * rep.theta2) * heisenberg(rep, 0, 1)),
        (sigma_y, np.exp(-1j * np.pi * (rep.theta1 + rep.theta2 + 1.0)) * heisenberg(rep, 1, 1)),
    )
    for standard, built in checks:
        assert np.max(np.abs(standard - built)) < 1e-12
    return identity, sigma_x, sigma_y, sigma_z


def pauli_symbols(rep: Representation):
    """Trig polynomial symbols quantizing to (identity, sigma_x, sigma_y, sigma_z)."""
    if rep.dim != 2:
        raise DimensionError(f"Pauli symbols require dim 2, got {rep.dim}")
    alpha_i = TrigPolynomial({(0, 0): 1.0})
    alpha_x = TrigPolynomial({(0, 1): np.exp(-1j * np.pi * rep.theta2)})
    alpha_y = TrigPolynomial({(1, 1): np.exp(-1j * np.pi * (rep.theta1 + rep.theta2 + 1.0))})
    alpha_z = TrigPolynomial({(1, 0): np.exp(-1j * np.pi * rep.theta1)})
    return alpha_i, alpha_x, alpha_y, alpha_z


def big_pauli(rep: Representation, r: int, s: int) -> np.ndarray:
    """Generalized Pauli matrix B[r, s] with entry exp(-i pi (r - 2j) s / N) at (j, r - j mod N).

    Indices run over the doubled range 0..2N-1; the N-shifted matrices differ
    from the principal ones only by signs, and those sign laws hold exactly
    because the phases come from the shared table.
    """
    n = rep.dim
    if not (0 <= r < 2 * n and 0 <= s < 2 * n):
        raise ValueError(f"indices must lie in 0..{2 * n - 1}, got ({r}, {s})")
    j = np.arange(n)
    out = np.zeros((n, n), dtype=complex)
    out[j, (r - j) % n] = phases((r - 2 * j) * s, n)
    return out


def big_pauli_symbol(rep: Representation, r: int, s: int) -> TrigPolynomial:
    """Trig polynomial quantizing to big_pauli(rep, r, s).

    The coefficient at frequency (k, m), for k, m in 0..2N-1, is
    (1/2N) exp(-2 i pi k x_r) exp(-2 i pi m p_s) with (x_r, p_s) the lattice
    point of (r, s); its sampling is the 2N-scaled indicator of that point.
    """
    n = rep.dim
    if not (0 <= r < 2 * n and 0 <= s < 2 * n):
        raise ValueError(f"indices must lie in 0..{2 * n - 1}, got ({r}, {s})")
    x = r / (2 * n) + rep.theta1 / n
    p = s / (2 * n) + rep.theta2 / n
    coeffs = {}
    for k in range(2 * n):
        for m in range(2 * n):
            coeffs[(k, m)] = np.exp(-2j * np.pi * (k * x + m * p)) / (2 * n)
    return TrigPolynomial(coeffs)
