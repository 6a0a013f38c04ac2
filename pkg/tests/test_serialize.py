import numpy as np
import pytest

from torusq import (
    DimensionError,
    FormatError,
    KIND_OPERATOR,
    KIND_STATE_PAIR,
    Representation,
    SampledSymbol,
    TrigPolynomial,
    WignerTable,
)
from torusq.serialize import (
    dumps,
    lattice_csv,
    loads,
    operator_from_json,
    operator_to_json,
    sampled_from_json,
    sampled_to_json,
    state_from_json,
    state_to_json,
    trig_from_json,
    trig_to_json,
    wigner_from_json,
    wigner_to_json,
)


def test_dumps_is_deterministic():
    doc = {"N": 2, "grid": [[0.5, -1.0]], "name": "x"}
    assert dumps(doc) == dumps(doc)
    assert dumps(doc) == '{"N":2,"grid":[[0.5,-1]],"name":"x"}'


def test_dumps_round_trips_doubles():
    assert dumps(0.1) == "0.10000000000000001"
    assert dumps([1.0 / 3.0]) == "[0.33333333333333331]"
    for x in (0.1, 1e-300, 1234.5678e21, -7.25):
        assert float(dumps(x)) == x


def test_dumps_rejects_non_finite():
    with pytest.raises(ValueError):
        dumps(float("nan"))
    with pytest.raises(ValueError):
        dumps([float("inf")])


def test_loads_rejects_non_finite_and_garbage():
    with pytest.raises(FormatError):
        loads("NaN")
    with pytest.raises(FormatError):
        loads("[1, Infinity]")
    with pytest.raises(FormatError):
        loads("{not json")


def test_trig_round_trip():
    tp = TrigPolynomial({(1, 0): 0.5 - 0.25j, (-2, 3): 1.75, (0, 0): -1.0})
    back = trig_from_json(trig_to_json(tp))
    assert back.coefficients() == tp.coefficients()


def test_trig_duplicate_rows_accumulate():
    text = (
        '[{"n1":1,"n2":0,"re":0.5,"im":0.0},'
        '{"n1":1,"n2":0,"re":0.25,"im":-1.0}]'
    )
    tp = trig_from_json(text)
    assert tp.coefficients() == {(1, 0): 0.75 - 1.0j}


def test_trig_schema_errors():
    with pytest.raises(FormatError):
        trig_from_json('{"n1":1}')
    with pytest.raises(FormatError):
        trig_from_json('[{"n1":1,"n2":0,"re":0.5}]')
    with pytest.raises(FormatError):
        trig_from_json('[{"n1":1.5,"n2":0,"re":0.5,"im":0.0}]')
    with pytest.raises(FormatError):
        trig_from_json('[{"n1":true,"n2":0,"re":0.5,"im":0.0}]')


def test_sampled_round_trip_is_bit_exact():
    rng = np.random.default_rng(51)
    rep = Representation(0.1234567890123456, 0.9876543210987654, 3)
    sym = SampledSymbol(rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6)), rep)
    back = sampled_from_json(sampled_to_json(sym))
    assert back.rep == sym.rep
    assert np.array_equal(back.grid, sym.grid)


def test_sampled_schema_errors():
    good = sampled_to_json(SampledSymbol(np.zeros((2, 2), dtype=complex), Representation(0, 0, 1)))
    obj = loads(good)
    for key in ("theta1", "theta2", "N", "grid"):
        broken = {k: v for k, v in obj.items() if k != key}
        with pytest.raises(FormatError):
            sampled_from_json(broken)
    with pytest.raises(DimensionError):
        sampled_from_json({**obj, "grid": obj["grid"][:3]})
    with pytest.raises(FormatError):
        sampled_from_json({**obj, "N": 0})
    with pytest.raises(FormatError):
        sampled_from_json({**obj, "theta1": True})


def test_sampled_ignores_unknown_keys():
    rep = Representation(0.25, 0.75, 1)
    sym = SampledSymbol(np.arange(4, dtype=complex).reshape(2, 2), rep)
    obj = loads(sampled_to_json(sym, extra={"comment": "anything"}))
    back = sampled_from_json(obj)
    assert np.array_equal(back.grid, sym.grid)


def test_operator_round_trip():
    rng = np.random.default_rng(52)
    a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    assert np.array_equal(operator_from_json(operator_to_json(a)), a)


def test_operator_errors():
    with pytest.raises(DimensionError):
        operator_to_json(np.zeros((2, 3)))
    with pytest.raises(DimensionError):
        operator_from_json('{"N":2,"entries":[[0,0],[0,0]]}')
    with pytest.raises(FormatError):
        operator_from_json('{"entries":[]}')
    with pytest.raises(FormatError):
        operator_from_json('{"N":2,"entries":[[0,0],[0,0],[0,0],"x"]}')


def test_wigner_round_trip_and_kind_check():
    rng = np.random.default_rng(53)
    rep = Representation(0.4, 0.6, 2)
    grid = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    for kind in (KIND_STATE_PAIR, KIND_OPERATOR):
        table = WignerTable(grid, rep, kind)
        back = wigner_from_json(wigner_to_json(table))
        assert back.kind == kind
        assert np.array_equal(back.grid, table.grid)
    obj = loads(wigner_to_json(WignerTable(grid, rep, KIND_OPERATOR)))
    with pytest.raises(FormatError):
        wigner_from_json({**obj, "kind": "mystery"})


def test_state_round_trip():
    psi = np.array([0.5 + 0.25j, -1.0, 0.0, 3.5j])
    assert np.array_equal(state_from_json(state_to_json(psi)), psi)
    with pytest.raises(FormatError):
        state_from_json("[]")
    with pytest.raises(FormatError):
        state_from_json('{"a":1}')
    with pytest.raises(DimensionError):
        state_to_json(np.zeros((2, 2)))


def test_lattice_csv_layout():
    rep = Representation(0.5, 0.25, 1)
    grid = np.array([[1.0, 2.0], [3.0 - 1.0j, 4.0]], dtype=complex)
    text = lattice_csv(grid, rep)
    lines = text.strip().split("\n")
    assert lines[0] == "x,p,re,im"
    assert len(lines) == 1 + 4
    # row 0: x = 0/2 + 0.5/1 = 0.5, p = 0/2 + 0.25/1 = 0.25
    first = lines[1].split(",")
    assert float(first[0]) == 0.5
    assert float(first[1]) == 0.25
    assert float(first[2]) == 1.0
    # coordinates stay inside [0, 1)
    for line in lines[1:]:
        x, p = map(float, line.split(",")[:2])
        assert 0.0 <= x < 1.0
        assert 0.0 <= p < 1.0
    third = lines[3].split(",")
    assert float(third[2]) == 3.0
    assert float(third[3]) == -1.0


def test_lattice_csv_shape_checked():
    with pytest.raises(DimensionError):
        lattice_csv(np.zeros((3, 3)), Representation(0, 0, 1))
