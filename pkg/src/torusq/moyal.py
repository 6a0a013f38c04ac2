"""Moyal product and bracket on the lattice, and Heisenberg dynamics.

The noncommutative product of two sampled symbols is a four-fold sum over
lattice shifts with a quadratic phase kernel:

    (a # b)(j, k) = (1/(2N)^2) sum_{r,s,u,v} a(j+r, k+s) b(j+u, k+v)
                    exp(i pi (r v - u s) / N)

with all grid indices mod 2N.  Quantization turns # into the operator
product and the bracket into the commutator, exactly, for arbitrary grids.
The kernels do not involve theta, so equal grids give equal results in any
representation of the same dimension.

The four-fold sums are evaluated with the phase factored into two rank-one
kernels, which turns the O(N^6) direct sum into a chain of O(N^5)
contractions; the test suite pins this factored form against the literal
sum.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._phases import phases
from .errors import DimensionError, DomainError
from .quantize import quantize_sampled
from .rep import Representation
from .symbols import SampledSymbol, TrigPolynomial, sample

__all__ = [
    "HamiltonianSystem",
    "moyal_product",
    "moyal_bracket",
    "poisson_bracket",
    "semiclassical_residual",
    "evolve_operator",
    "evolve_symbol",
]


def _shifted_stack(grid: np.ndarray) -> np.ndarray:
    """S[j, k, r, s] = grid[(j + r) mod 2N, (k + s) mod 2N]."""
    side = grid.shape[0]
    idx = (np.arange(side)[:, None] + np.arange(side)[None, :]) % side
    return grid[idx[:, None, :, None], idx[None, :, None, :]]


@lru_cache(maxsize=64)
def _product_kernels(n: int):
    side = 2 * n
    u = np.arange(side)
    plus = phases(-np.outer(u, u), n)   # exp(+i pi x y / N)
    minus = phases(np.outer(u, u), n)   # exp(-i pi x y / N)
    return plus, minus


@lru_cache(maxsize=64)
def _bracket_kernels(n: int):
    # Sine and cosine tables with the exact N-shift antisymmetry, matching
    # the phase table construction.
    side = 2 * n
    t = np.arange(n)
    sin_half = np.sin(np.pi * t / n)
    cos_half = np.cos(np.pi * t / n)
    sin_table = np.concatenate([sin_half, -sin_half])
    cos_table = np.concatenate([cos_half, -cos_half])
    prod = np.mod(np.outer(np.arange(side), np.arange(side)), side)
    return sin_table[prod], cos_table[prod]


def _product_grids(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    side = 2 * n
    plus, minus = _product_kernels(n)
    a4 = _shifted_stack(a)
    b4 = _shifted_stack(b)
    t1 = np.einsum("us,jkuv->jksv", minus, b4, optimize=True)
    m1 = np.einsum("rv,jksv->jkrs", plus, t1, optimize=True)
    return np.einsum("jkrs,jkrs->jk", a4, m1, optimize=True) / side**2


def _bracket_grids(a4: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    # a4 is the precomputed shifted stack of the first argument; the sine
    # kernel sin(pi (r v - u s)/N) is expanded over the exact tables.
    side = 2 * n
    sin_k, cos_k = _bracket_kernels(n)
    b4 = _shifted_stack(b)
    t1 = np.einsum("us,jkuv->jksv", cos_k, b4, optimize=True)
    m1 = np.einsum("rv,jksv->jkrs", sin_k, t1, optimize=True)
    t2 = np.einsum("us,jkuv->jksv", sin_k, b4, optimize=True)
    m2 = np.einsum("rv,jksv->jkrs", cos_k, t2, optimize=True)
    return 2j * np.einsum("jkrs,jkrs->jk", a4, m1 - m2, optimize=True) / side**2


def _require_same_rep(a: SampledSymbol, b: SampledSymbol):
    if a.rep != b.rep:
        raise DimensionError("Moyal operations need both symbols in the same representation")


def moyal_product(a: SampledSymbol, b: SampledSymbol) -> SampledSymbol:
    """Noncommutative product a # b; quantizes to the operator product."""
    _require_same_rep(a, b)
    return SampledSymbol(_product_grids(a.grid, b.grid, a.rep.dim), a.rep)


def moyal_bracket(a: SampledSymbol, b: SampledSymbol) -> SampledSymbol:
    """Moyal bracket {a, b}, the four-fold sum with the sine kernel
    (2i/(2N)^2) sum a b sin(pi (r v - u s)/N); equals a # b - b # a and
    quantizes to the commutator."""
    _require_same_rep(a, b)
    return SampledSymbol(_bracket_grids(_shifted_stack(a.grid), b.grid, a.rep.dim), a.rep)


def poisson_bracket(a: TrigPolynomial, b: TrigPolynomial) -> TrigPolynomial:
    """Classical bracket da/dx db/dp - da/dp db/dx on trig polynomials.

    The coefficient picked up at frequency n + m is
    -4 pi^2 (n1 m2 - n2 m1) a_n b_m.
    """
    out = {}
    for (n1, n2), ca in a.items():
        for (m1, m2), cb in b.items():
            wedge = n1 * m2 - n2 * m1
            if wedge:
                key = (n1 + m1, n2 + m2)
                out[key] = out.get(key, 0j) - 4 * np.pi**2 * wedge * ca * cb
    return TrigPolynomial(out)


def semiclassical_residual(a: TrigPolynomial, b: TrigPolynomial, rep: Representation) -> float:
    """Max lattice deviation between 2 pi N / i times the Moyal bracket and
    the Poisson bracket.

    Decays like 1/N^2; for a = exp(2 i pi x), b = exp(2 i pi p) it equals
    4 pi^2 |1 - sinc(pi / N)| exactly.
    """
    scaled = -2j * np.pi * rep.dim * moyal_bracket(sample(a, rep), sample(b, rep)).grid
    classical = sample(poisson_bracket(a, b), rep).grid
    return float(np.max(np.abs(scaled - classical)))


@dataclass(frozen=True, eq=False)
class HamiltonianSystem:
    """A real Hamiltonian grid on the lattice of a representation.

    The grid must be real up to 1e-12 relative to its magnitude, which makes
    the quantized Hamiltonian Hermitian.
    """

    hamiltonian: SampledSymbol
    rep: Representation = None

    def __post_init__(self):
        if self.rep is None:
            object.__setattr__(self, "rep", self.hamiltonian.rep)
        elif self.rep != self.hamiltonian.rep:
            raise DimensionError("system representation differs from the Hamiltonian grid's")
        grid = self.hamiltonian.grid
        scale = max(1.0, float(np.max(np.abs(grid))))
        if float(np.max(np.abs(grid.imag))) > 1e-12 * scale:
            raise DomainError("Hamiltonian grid must be real")

    def operator(self) -> np.ndarray:
        """Quantized Hamiltonian (Hermitian)."""
        return quantize_sampled(self.hamiltonian)


def evolve_operator(system: HamiltonianSystem, operator, t: float) -> np.ndarray:
    """Heisenberg evolution A(t) = exp(+2 i pi N t H) A exp(-2 i pi N t H).

    Uses the eigendecomposition of the quantized Hamiltonian, so the result
    is exact up to diagonalization error at any t.
    """
    a = np.asarray(operator, dtype=complex)
    n = system.rep.dim
    if a.shape != (n, n):
        raise DimensionError(f"operator must be {n} x {n}, got shape {a.shape}")
    energies, vectors = np.linalg.eigh(system.operator())
    propagator = (vectors * np.exp(2j * np.pi * n * t * energies)) @ vectors.conj().T
    return propagator @ a @ propagator.conj().T


def evolve_symbol(system: HamiltonianSystem, start: SampledSymbol, t: float, steps: int) -> SampledSymbol:
    """Integrate the symbol evolution d a / dt = 2 i pi N {H, a} with fixed-step RK4.

    The sign matches evolve_operator: quantizing the result approximates
    evolve_operator of the quantized start with O(step^4) global error.
    """
    if system.rep != start.rep:
        raise DimensionError("starting symbol lives in a different representation")
    steps = int(steps)
    if steps < 1:
        raise ValueError(f"steps must be a positive integer, got {steps}")
    n = system.rep.dim
    h_stack = _shifted_stack(system.hamiltonian.grid)
    rate = 2j * np.pi * n

    def rhs(grid):
        return rate * _bracket_grids(h_stack, grid, n)

    dt = t / steps
    grid = np.array(start.grid)
    for _ in range(steps):
        k1 = rhs(grid)
        k2 = rhs(grid + 0.5 * dt * k1)
        k3 = rhs(grid + 0.5 * dt * k2)
        k4 = rhs(grid + dt * k3)
        grid = grid + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return SampledSymbol(grid, system.rep)
