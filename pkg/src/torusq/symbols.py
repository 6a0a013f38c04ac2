"""Classical symbols on the torus and their samplings on the phase space lattice.

A trigonometric polynomial is a finite Fourier sum on the torus.  Sampling
it on the 2N x 2N lattice attached to a representation produces a
SampledSymbol; the fold operator delta compresses such a grid to the N x N
reduced symbol that determines the quantized operator.  Two grids quantize
to the same operator exactly when their reduced symbols agree.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DomainError
from .rep import Representation

__all__ = [
    "TrigPolynomial",
    "SampledSymbol",
    "evaluate",
    "sample",
    "delta",
    "equivalent",
    "kernel_element",
]


class TrigPolynomial:
    """Finite Fourier sum  sum_n c[n] exp(2 i pi (n1 x + n2 p))  on the torus.

    Coefficients are stored in a frequency -> amplitude map; exact zeros are
    dropped so the support is always finite and minimal.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        data = {}
        for key, value in dict(coeffs).items():
            k1, k2 = key
            c = complex(value)
            if c != 0:
                data[(int(k1), int(k2))] = c
        self._coeffs = data

    def coefficients(self) -> dict:
        """Copy of the frequency -> amplitude map."""
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def __len__(self):
        return len(self._coeffs)

    def __add__(self, other):
        if not isinstance(other, TrigPolynomial):
            return NotImplemented
        merged = dict(self._coeffs)
        for key, c in other.items():
            merged[key] = merged.get(key, 0j) + c
        return TrigPolynomial(merged)

    def __sub__(self, other):
        if not isinstance(other, TrigPolynomial):
            return NotImplemented
        return self + (-1.0) * other

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, float, complex)):
            return NotImplemented
        return TrigPolynomial({key: scalar * c for key, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return (-1.0) * self

    def conjugate(self) -> "TrigPolynomial":
        """Complex conjugate symbol, with frequencies negated."""
        return TrigPolynomial({(-k1, -k2): c.conjugate() for (k1, k2), c in self._coeffs.items()})

    def __repr__(self):
        return f"TrigPolynomial({len(self._coeffs)} terms)"


@dataclass(frozen=True, eq=False)
class SampledSymbol:
    """Values of a symbol on the 2N x 2N lattice of a representation.

    Row index r runs over the x direction, column index s over p; the lattice
    point behind entry (r, s) is (r/2N + theta1/N, s/2N + theta2/N).  The
    grid is copied and frozen on construction.
    """

    grid: np.ndarray
    rep: Representation

    def __post_init__(self):
        g = np.array(self.grid, dtype=complex)
        side = 2 * self.rep.dim
        if g.shape != (side, side):
            raise DimensionError(
                f"sampled symbol grid must be {side} x {side} for dim {self.rep.dim}, "
                f"got shape {g.shape}"
            )
        if not np.all(np.isfinite(g)):
            raise DomainError("sampled symbol entries must be finite")
        g.setflags(write=False)
        object.__setattr__(self, "grid", g)

    def _require_same_rep(self, other):
        if self.rep != other.rep:
            raise DimensionError("sampled symbols live in different representations")

    def __add__(self, other):
        if not isinstance(other, SampledSymbol):
            return NotImplemented
        self._require_same_rep(other)
        return SampledSymbol(self.grid + other.grid, self.rep)

    def __sub__(self, other):
        if not isinstance(other, SampledSymbol):
            return NotImplemented
        self._require_same_rep(other)
        return SampledSymbol(self.grid - other.grid, self.rep)

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, float, complex)):
            return NotImplemented
        return SampledSymbol(scalar * self.grid, self.rep)

    __rmul__ = __mul__


def evaluate(tp: TrigPolynomial, x: float, p: float) -> complex:
    """Value of the Fourier sum at (x mod 1, p mod 1)."""
    x = float(x) % 1.0
    p = float(p) % 1.0
    total = 0j
    for (n1, n2), c in tp.items():
        total += c * cmath.exp(2j * cmath.pi * (n1 * x + n2 * p))
    return total


def sample(tp: TrigPolynomial, rep: Representation) -> SampledSymbol:
    """Sample tp on the lattice of rep: grid[r, s] = tp(r/2N + theta1/N, s/2N + theta2/N)."""
    side = 2 * rep.dim
    x = (np.arange(side) / side + rep.theta1 / rep.dim) % 1.0
    p = (np.arange(side) / side + rep.theta2 / rep.dim) % 1.0
    grid = np.zeros((side, side), dtype=complex)
    for (n1, n2), c in tp.items():
        grid += c * np.exp(2j * np.pi * (n1 * x[:, None] + n2 * p[None, :]))
    return SampledSymbol(grid, rep)


def _signs(count: int) -> np.ndarray:
    return np.where(np.arange(count) % 2 == 0, 1.0, -1.0)


def _fold_tail(grid: np.ndarray, n: int) -> np.ndarray:
    """Signed sum of the three non-principal blocks entering the fold.

    Kept as a single expression with a fixed association so kernel_element
    can cancel it bit for bit.
    """
    sj = _signs(n)[:, None]
    sk = _signs(n)[None, :]
    sign_n = 1.0 if n % 2 == 0 else -1.0
    return sk * grid[n:, :n] + sj * grid[:n, n:] + (sign_n * sj * sk) * grid[n:, n:]


def delta(sym: SampledSymbol) -> np.ndarray:
    """Fold a 2N x 2N grid to the N x N reduced symbol.

    delta(A)[j, k] = A[j, k] + (-1)^k A[j+N, k] + (-1)^j A[j, k+N]
                     + (-1)^(j+k+N) A[j+N, k+N].
    Linear, rank N^2, nullity 3 N^2.
    """
    n = sym.rep.dim
    return sym.grid[:n, :n] + _fold_tail(sym.grid, n)


def equivalent(a: SampledSymbol, b: SampledSymbol, tol: float | None = None) -> bool:
    """Whether a and b quantize to the same operator, i.e. their folds agree.

    The default tolerance is 1e-10 relative to the largest grid magnitude.
    Raises DimensionError when the two symbols carry different representations.
    """
    if a.rep != b.rep:
        raise DimensionError("cannot compare symbols from incompatible representations")
    if tol is None:
        scale = max(float(np.max(np.abs(a.grid))), float(np.max(np.abs(b.grid))))
        tol = 1e-10 * scale
    return float(np.max(np.abs(delta(a) - delta(b)))) <= tol


def kernel_element(rep: Representation, seed: int) -> SampledSymbol:
    """A grid in the kernel of delta, drawn from the seeded generator.

    The three non-principal blocks are free standard normal draws and the
    principal block is solved to cancel them, so delta of the result is the
    zero matrix bit for bit.  Seed 0 returns the zero grid.
    """
    n = rep.dim
    side = 2 * n
    grid = np.zeros((side, side), dtype=complex)
    if seed != 0:
        rng = np.random.default_rng(seed)
        free = rng.standard_normal((3, n, n)) + 1j * rng.standard_normal((3, n, n))
        grid[n:, :n] = free[0]
        grid[:n, n:] = free[1]
        grid[n:, n:] = free[2]
        grid[:n, :n] = -_fold_tail(grid, n)
    return SampledSymbol(grid, rep)
