"""Free n-disk algebra dimensions, the Lie-model route, splittings and bar of free."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fachom import presets
from fachom.algebra import GradedSpacePresentation, Generator, tensor_algebra
from fachom.bar import cyclic_bar
from fachom.complexes import homology
from fachom.errors import InvalidCodim
from fachom.freeconf import check_bar_free, check_splits, conf_labeled_homology, free_en_dims
from fachom.lie import circle_model, rn_model
from oracles import BRAID_BETTI, free_en_series

P = GradedSpacePresentation.of
x = P(("x", 0, 1))


def test_free_e1_is_tensor_algebra():
    assert free_en_dims(1, x, 5).entries == {(w, 0): 1 for w in range(6)}
    for name in ("xy", "xe", "ef"):
        v = presets.space(name)
        assert free_en_dims(1, v, 4) == tensor_algebra(v, 4).dimension_table()


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_planar_configurations_match_braid_groups(k):
    t = free_en_dims(2, x, 5)
    assert {d: n for d, n in t.at_weight(k).items()} == BRAID_BETTI[k]


gens = st.lists(st.tuples(st.integers(0, 1), st.integers(1, 2)), min_size=1, max_size=2)


@given(gens, st.integers(1, 4))
@settings(max_examples=30)
def test_free_en_matches_generating_function(gs, n):
    v = GradedSpacePresentation([Generator(f"g{i}", d, w) for i, (d, w) in enumerate(gs)])
    assert free_en_dims(n, v, 4).entries == free_en_series(n, gs, 4)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("gens", ["x", "xy", "e", "xe"])
def test_lie_model_on_rn_is_free(n, gens):
    v = presets.space(gens)
    assert conf_labeled_homology(rn_model(n), n, v, 4) == free_en_dims(n, v, 4)


def test_circle_model_is_hochschild_of_polynomials():
    t = conf_labeled_homology(circle_model(), 1, x, 4)
    assert t == homology(cyclic_bar(tensor_algebra(x, 4), 4), (-4, 4))
    assert all(t.at_weight(w) == {0: 1, 1: 1} for w in range(1, 5))


def test_empty_generators_give_unit():
    assert conf_labeled_homology(rn_model(2), 2, P(), 3).entries == {(0, 0): 1}


@pytest.mark.parametrize("n,m,W", [(1, 0, 4), (2, 1, 3), (2, 0, 3), (3, 1, 3), (3, 2, 3)])
def test_splits(n, m, W):
    r = check_splits(n, m, x, W)
    assert r.passed, r.summary()


def test_splits_two_lines_is_tensor_square():
    r = check_splits(1, 0, x, 4)
    t = tensor_algebra(x, 4).dimension_table()
    assert r.tables[0] == t.convolve(t, 4)


@pytest.mark.parametrize("m,n", [(2, 2), (3, 2), (-1, 2)])
def test_invalid_codimension(m, n):
    with pytest.raises(InvalidCodim):
        check_splits(n, m, x, 3)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("gens", ["x", "xy", "xe"])
def test_bar_of_free(n, gens):
    r = check_bar_free(n, presets.space(gens), 4)
    assert r.passed, r.summary()


def test_bar_of_free_n1_table():
    r = check_bar_free(1, presets.space("xy"), 4)
    assert r.tables[0].entries == {(0, 0): 1, (1, 1): 2}
