import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torusq import (
    DimensionError,
    DomainError,
    Representation,
    SampledSymbol,
    TrigPolynomial,
    delta,
    equivalent,
    evaluate,
    kernel_element,
    sample,
)

finite_coeff = st.complex_numbers(
    min_magnitude=0, max_magnitude=10, allow_nan=False, allow_infinity=False
)


def test_trig_drops_exact_zeros():
    tp = TrigPolynomial({(1, 0): 0.0, (0, 1): 1.0, (2, 2): 0j})
    assert len(tp) == 1
    assert tp.coefficients() == {(0, 1): 1.0 + 0j}


def test_trig_arithmetic():
    a = TrigPolynomial({(1, 0): 1.0, (0, 1): 2.0})
    b = TrigPolynomial({(1, 0): -1.0, (2, 2): 1j})
    s = a + b
    assert s.coefficients() == {(0, 1): 2.0 + 0j, (2, 2): 1j}
    d = a - a
    assert len(d) == 0
    scaled = 2.0 * a
    assert scaled.coefficients()[(0, 1)] == 4.0 + 0j
    neg = -a
    assert neg.coefficients()[(1, 0)] == -1.0 + 0j


def test_trig_multiplication_is_scalar_only():
    a = TrigPolynomial({(1, 0): 2.0})
    b = TrigPolynomial({(0, 1): 3.0, (1, 0): 1.0})
    with pytest.raises(TypeError):
        a * b
    scaled = 1.5j * a
    assert abs(evaluate(scaled, 0.2, 0.7) - 1.5j * evaluate(a, 0.2, 0.7)) < 1e-14


def test_trig_conjugate_negates_frequencies():
    a = TrigPolynomial({(1, -2): 1 + 2j})
    c = a.conjugate().coefficients()
    assert c == {(-1, 2): 1 - 2j}
    # conjugation is an involution and matches pointwise conjugation
    assert a.conjugate().conjugate().coefficients() == a.coefficients()
    z = evaluate(a, 0.3, 0.4)
    assert abs(np.conj(z) - evaluate(a.conjugate(), 0.3, 0.4)) < 1e-14


@settings(max_examples=40, deadline=None)
@given(
    x=st.floats(min_value=-3, max_value=3, allow_nan=False),
    p=st.floats(min_value=-3, max_value=3, allow_nan=False),
    c=finite_coeff,
)
def test_evaluate_periodic(x, p, c):
    tp = TrigPolynomial({(2, -1): c, (0, 3): 1.0})
    assert evaluate(tp, x + 1.0, p) == pytest.approx(evaluate(tp, x, p), abs=1e-10)
    assert evaluate(tp, x, p + 1.0) == pytest.approx(evaluate(tp, x, p), abs=1e-10)


def test_sample_matches_pointwise_evaluation():
    rep = Representation(0.21, 0.84, 3)
    tp = TrigPolynomial({(1, 0): 0.5, (-2, 3): 1j, (0, -1): 2.0})
    grid = sample(tp, rep).grid
    side = 2 * rep.dim
    for r in range(side):
        for s in range(side):
            x = r / side + rep.theta1 / rep.dim
            p = s / side + rep.theta2 / rep.dim
            assert abs(grid[r, s] - evaluate(tp, x, p)) < 1e-12


def test_sample_constant():
    rep = Representation(0.4, 0.6, 2)
    grid = sample(TrigPolynomial({(0, 0): 3.5}), rep).grid
    assert np.array_equal(grid, np.full((4, 4), 3.5 + 0j))


def test_sampled_symbol_validation():
    rep = Representation(0.0, 0.0, 2)
    with pytest.raises(DimensionError):
        SampledSymbol(np.zeros((3, 3)), rep)
    bad = np.zeros((4, 4))
    bad[1, 2] = np.nan
    with pytest.raises(DomainError):
        SampledSymbol(bad, rep)


def test_sampled_symbol_grid_is_read_only():
    rep = Representation(0.0, 0.0, 1)
    sym = SampledSymbol(np.ones((2, 2)), rep)
    with pytest.raises(ValueError):
        sym.grid[0, 0] = 2.0


def test_sampled_arithmetic_requires_same_rep():
    a = SampledSymbol(np.ones((2, 2)), Representation(0.0, 0.0, 1))
    b = SampledSymbol(np.ones((2, 2)), Representation(0.5, 0.0, 1))
    with pytest.raises(DimensionError):
        a + b


def test_delta_explicit_fold():
    rng = np.random.default_rng(2)
    n = 3
    rep = Representation(0.1, 0.9, n)
    g = rng.standard_normal((2 * n, 2 * n)) + 1j * rng.standard_normal((2 * n, 2 * n))
    out = delta(SampledSymbol(g, rep))
    for j in range(n):
        for k in range(n):
            direct = (
                g[j, k]
                + (-1.0) ** k * g[j + n, k]
                + (-1.0) ** j * g[j, k + n]
                + (-1.0) ** (j + k + n) * g[j + n, k + n]
            )
            assert abs(out[j, k] - direct) < 1e-12


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**31 - 1), dim=st.integers(min_value=1, max_value=5))
def test_delta_linear(seed, dim):
    rng = np.random.default_rng(seed)
    rep = Representation(rng.uniform(), rng.uniform(), dim)
    side = 2 * dim
    a = SampledSymbol(rng.standard_normal((side, side)), rep)
    b = SampledSymbol(rng.standard_normal((side, side)), rep)
    lhs = delta(a + b)
    rhs = delta(a) + delta(b)
    assert np.max(np.abs(lhs - rhs)) < 1e-12


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(min_value=1, max_value=2**31 - 1), dim=st.integers(min_value=1, max_value=6))
def test_kernel_element_folds_to_zero_bitwise(seed, dim):
    rep = Representation(0.3, 0.8, dim)
    ghost = kernel_element(rep, seed)
    assert np.all(delta(ghost) == 0.0)


def test_kernel_element_seed_zero_is_zero_grid():
    rep = Representation(0.2, 0.5, 3)
    assert np.all(kernel_element(rep, 0).grid == 0.0)


def test_kernel_element_nontrivial():
    rep = Representation(0.2, 0.5, 3)
    assert np.max(np.abs(kernel_element(rep, 7).grid)) > 1e-3


def test_equivalent_ignores_kernel_directions():
    rng = np.random.default_rng(9)
    rep = Representation(0.25, 0.75, 3)
    sym = SampledSymbol(rng.standard_normal((6, 6)), rep)
    assert equivalent(sym, sym + kernel_element(rep, 123))
    # a one-hot grid survives the fold, so it must break equivalence
    # (the 2N x 2N identity would not: its fold vanishes for odd N)
    spike = np.zeros((6, 6))
    spike[0, 0] = 1.0
    assert not equivalent(sym, sym + SampledSymbol(spike, rep))


def test_equivalent_rejects_rep_mismatch():
    a = SampledSymbol(np.zeros((6, 6)), Representation(0.25, 0.75, 3))
    b = SampledSymbol(np.zeros((4, 4)), Representation(0.25, 0.75, 2))
    c = SampledSymbol(np.zeros((6, 6)), Representation(0.1, 0.75, 3))
    with pytest.raises(DimensionError):
        equivalent(a, b)
    with pytest.raises(DimensionError):
        equivalent(a, c)
