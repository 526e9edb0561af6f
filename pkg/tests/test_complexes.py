"""Chain complexes: homology, tensor, dual, shift and table serialization."""
import pytest
from hypothesis import given, settings

from fachom.complexes import (
    BettiTable,
    BigradedSpace,
    ChainComplex,
    dual,
    euler_characteristics,
    homology,
    shift,
    tensor,
    unit_complex,
)
from fachom.errors import DifferentialSquareNonzero
from fachom.linalg import SparseMatrix
from strategies import complexes, tables


def point(w, d, label="v"):
    return ChainComplex(BigradedSpace({(w, d): [label]}))


def interval(w=1):
    """Q at (w, 0) --1--> Q at (w, -1)."""
    return ChainComplex(BigradedSpace({(w, 0): ["a"], (w, -1): ["b"]}),
                        {(w, 0): SparseMatrix.from_dense([[1]])})


def test_zero_differential_gives_dimensions():
    c = ChainComplex(BigradedSpace({(1, 0): ["a", "b"], (2, 3): ["c"]}))
    assert homology(c) == BettiTable(c.dimension_table().entries)


def test_acyclic_pair():
    assert homology(interval()) == BettiTable()


def test_koszul_weight_one_is_acyclic():
    # Sym(x) ⊗ Λ(ξ) with d ξ = x: weight 1 is ξ -> x
    c = ChainComplex.from_basis([("x", 1, 0, "x"), ("xi", 1, 1, "ξ"), ("1", 0, 0, "1")],
                                lambda k: {"x": 1} if k == "xi" else {})
    assert homology(c) == BettiTable({(0, 0): 1})


def test_d_squared_is_checked():
    c = ChainComplex(BigradedSpace({(0, 1): ["a"], (0, 0): ["b"], (0, -1): ["c"]}),
                     {(0, 1): SparseMatrix.from_dense([[1]]), (0, 0): SparseMatrix.from_dense([[1]])})
    with pytest.raises(DifferentialSquareNonzero) as info:
        homology(c)
    assert info.value.slot == (0, 1)


def test_from_basis_rejects_wrong_slot():
    with pytest.raises(ValueError):
        ChainComplex.from_basis([("a", 1, 1, "a"), ("b", 2, 0, "b")], lambda k: {"b": 1} if k == "a" else {})


def test_tensor_examples():
    c = interval()
    assert homology(tensor(c, unit_complex())) == homology(c)
    assert tensor(c, unit_complex()).dimension_table() == c.dimension_table()
    t = tensor(point(1, 0, "x"), point(1, 1, "y"))
    assert t.dimension_table().entries == {(2, 1): 1}
    assert t.labels((2, 1)) == ["(x,y)"]


def test_dual_examples():
    assert homology(dual(unit_complex())) == BettiTable({(0, 0): 1})
    assert homology(dual(interval())) == BettiTable()
    assert dual(point(3, 2)).dimension_table().entries == {(-3, -2): 1}


def test_shift_examples():
    c = interval()
    assert shift(c, 0).dimension_table() == c.dimension_table()
    back = shift(shift(c, 1), -1)
    assert back.dimension_table() == c.dimension_table()
    assert back.diff[(1, 0)].entries == c.diff[(1, 0)].entries
    assert shift(point(1, 0), 2).dimension_table().entries == {(1, 2): 1}


@given(complexes())
def test_homology_matches_construction(data):
    c, betti = data
    assert homology(c) == BettiTable(betti)


@given(complexes())
def test_euler_characteristic_is_conserved(data):
    c, _ = data
    h = homology(c)
    chi = euler_characteristics(c)
    for w in c.weights():
        assert chi[w] == h.euler(w)


@given(complexes())
def test_dual_reflects_homology(data):
    c, _ = data
    assert homology(dual(c)) == homology(c).reflect()
    assert homology(dual(dual(c))) == homology(c)


@given(complexes(), complexes(weights=(0, 1), degrees=(0, 1, 2)))
@settings(max_examples=25)
def test_kunneth(a, b):
    ca, cb = a[0], b[0]
    ha, hb = homology(ca), homology(cb)
    assert homology(tensor(ca, cb)) == ha.convolve(hb)
    assert homology(tensor(cb, ca)) == homology(tensor(ca, cb))


@given(complexes(), complexes(weights=(1,), degrees=(0, 1)), complexes(weights=(0,), degrees=(0, 1)))
@settings(max_examples=15)
def test_tensor_associative_on_betti(a, b, c):
    left = tensor(tensor(a[0], b[0]), c[0])
    right = tensor(a[0], tensor(b[0], c[0]))
    assert homology(left) == homology(right)


@given(complexes())
def test_shift_moves_homology(data):
    c, _ = data
    for k in (-2, 1, 3):
        assert homology(shift(c, k)) == homology(c).shifted(k)


@given(tables)
def test_json_round_trip(entries):
    t = BettiTable(entries)
    assert BettiTable.from_json(t.to_json()) == t


@given(tables)
def test_csv_round_trip(entries):
    t = BettiTable(entries)
    assert BettiTable.from_csv(t.to_csv()) == t
    assert t.to_csv().splitlines()[0] == "weight,degree,dim"


def test_grid_csv_layout():
    t = BettiTable({(1, 0): 1, (1, 1): 1, (2, 1): 2})
    assert t.to_grid_csv().splitlines() == ["weight,0,1", "1,1,1", "2,0,2"]


def test_first_difference_is_lowest_slot():
    a = BettiTable({(1, 0): 1, (2, 0): 1})
    b = BettiTable({(1, 0): 1, (2, 0): 2, (3, 3): 1})
    assert a.first_difference(b) == (2, 0)
    assert a.first_difference(a) is None


def test_negative_entries_rejected():
    with pytest.raises(ValueError):
        BettiTable({(0, 0): -1})
