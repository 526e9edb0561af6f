"""Simplicial models and the tensor X ⊗ A."""
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fachom import presets
from fachom.algebra import GradedSpacePresentation, Generator, sym_algebra
from fachom.bar import cyclic_bar
from fachom.complexes import euler_characteristics, homology
from fachom.errors import LevelCapTooSmall, UnknownModel, ValidationError
from fachom.higher_hh import builtin_model, check_simplicial_identities, load_simplicial, space_tensor
from fachom.verify import SPACE_BETTI
from oracles import sym_homology_tensor

P = GradedSpacePresentation.of


def H(c, w):
    return homology(c, (-w, w))


def as_json(x, top):
    levels = []
    for k in range(top + 1):
        lv = {"simplices": x.simplices(k)}
        if k:
            lv["faces"] = [x.face(k, i) for i in range(k + 1)]
        if k < top:
            lv["degeneracies"] = [x.degeneracy(k, j) for j in range(k + 1)]
        levels.append(lv)
    return json.dumps({"name": x.name + "-json", "dimension": x.dimension, "levels": levels})


def test_level_counts():
    circle = builtin_model("circle")
    assert [len(circle.simplices(k)) for k in range(3)] == [1, 2, 3]
    assert [len(builtin_model("point").simplices(k)) for k in range(4)] == [1, 1, 1, 1]
    assert len(builtin_model("torus").simplices(1)) == 4
    assert len(builtin_model("interval").simplices(0)) == 2


@pytest.mark.parametrize("name", ["point", "circle", "sphere2", "torus", "interval"])
def test_simplicial_identities(name):
    check_simplicial_identities(builtin_model(name), 4)


def test_broken_face_is_caught():
    x = load_simplicial(as_json(builtin_model("interval"), 2))
    x.level(1)[1][0] = list(reversed(x.level(1)[1][0]))
    with pytest.raises(ValidationError):
        check_simplicial_identities(x, 1)


def test_unknown_model():
    with pytest.raises(UnknownModel):
        builtin_model("klein")


@pytest.mark.parametrize("name", ["point", "interval"])
@pytest.mark.parametrize("alg", ["poly", "sym01", "trunc3"])
def test_contractible_spaces_give_a(name, alg):
    a = presets.algebra(alg, 4)
    assert H(space_tensor(builtin_model(name), a, 4), 4) == H(a.carrier(), 4)


@pytest.mark.parametrize("alg", ["poly", "exterior", "trunc3", "sym01"])
def test_circle_is_hochschild(alg):
    a = presets.algebra(alg, 4)
    assert H(space_tensor(builtin_model("circle"), a, 4), 4) == H(cyclic_bar(a, 4), 4)


def test_sphere2_polynomial():
    t = H(space_tensor(builtin_model("sphere2"), presets.algebra("poly", 4), 4), 4)
    assert t.entries == sym_homology_tensor({0: 1, 2: 1}, [(0, 1)], 4)


def test_noncommutative_rejected():
    with pytest.raises(ValidationError):
        space_tensor(builtin_model("circle"), presets.algebra("tensor2", 2), 2)


def test_level_cap_too_small():
    with pytest.raises(LevelCapTooSmall):
        space_tensor(builtin_model("circle"), presets.algebra("poly", 3), 3, level_cap=1)
    with pytest.raises(LevelCapTooSmall):
        space_tensor(builtin_model("sphere2"), presets.algebra("poly", 2), 2, level_cap=3)


def test_level_cap_can_be_raised():
    a = presets.algebra("poly", 2)
    x = builtin_model("circle")
    assert H(space_tensor(x, a, 2, level_cap=4), 2) == H(space_tensor(x, a, 2), 2)


def test_json_model_round_trip():
    a = presets.algebra("sym01", 2)
    x = load_simplicial(as_json(builtin_model("circle"), 3))
    check_simplicial_identities(x, 1)  # uses degeneracies one level up
    assert H(space_tensor(x, a, 2), 2) == H(space_tensor(builtin_model("circle"), a, 2), 2)


def test_json_model_too_short():
    x = load_simplicial(as_json(builtin_model("circle"), 2))
    with pytest.raises(LevelCapTooSmall):
        space_tensor(x, presets.algebra("poly", 2), 2)


def test_torus_diagonal_agrees_with_product_route():
    a = presets.algebra("sym01", 2)
    x = builtin_model("torus")
    assert H(space_tensor(x, a, 2, method="diagonal"), 2) == H(space_tensor(x, a, 2), 2)


gens = st.lists(st.tuples(st.integers(0, 1), st.integers(1, 2)), min_size=1, max_size=2)


@given(gens, st.sampled_from(["point", "circle", "sphere2"]))
@settings(max_examples=20)
def test_euler_characteristic_matches_closed_form(gs, space):
    W = 3
    v = GradedSpacePresentation([Generator(f"g{i}", d, w) for i, (d, w) in enumerate(gs)])
    c = space_tensor(builtin_model(space), sym_algebra(v, W), W)
    chi = euler_characteristics(c)
    formula = sym_homology_tensor(SPACE_BETTI[space], gs, W)
    for w in range(W + 1):
        assert chi.get(w, 0) == sum((-1) ** (d % 2) * n for (ww, d), n in formula.items() if ww == w)
    assert H(c, W).entries == formula
