"""Weight-graded algebras: constructors, structure checks and PBW."""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fachom import presets
from fachom.algebra import (
    GradedSpacePresentation,
    Generator,
    WgAlgebra,
    algebra_tensor,
    enveloping,
    enveloping_n,
    ground_field,
    opposite,
    sym_algebra,
    sym_dimension_table,
    tensor_algebra,
    truncated_polynomial,
    validate,
)
from fachom.errors import MixedWeightSigns, ValidationError
from fachom.lie import WgLieAlgebra, abelian, ce_cochains, heisenberg
from oracles import sym_series, tensor_series

P = GradedSpacePresentation.of


def dims(a):
    return a.dimension_table().entries


def test_tensor_algebra_examples():
    assert dims(tensor_algebra(P(("x", 0, 1)), 3))[(3, 0)] == 1
    assert dims(tensor_algebra(P(("x", 0, 1), ("y", 0, 1)), 2))[(2, 0)] == 4
    assert dims(tensor_algebra(P(), 3)) == {(0, 0): 1}


def test_sym_algebra_examples():
    x = sym_algebra(P(("x", 0, 1)), 4)
    assert dims(x) == {(w, 0): 1 for w in range(5)}
    assert (2, 2) not in dims(sym_algebra(P(("e", 1, 1)), 3))
    assert dims(sym_algebra(P(("e", 1, 1)), 3)) == {(0, 0): 1, (1, 1): 1}
    both = dims(sym_algebra(P(("x", 0, 1), ("e", 1, 1)), 2))
    assert (both.get((2, 0)), both.get((2, 1)), both.get((2, 2))) == (1, 1, None)


def test_odd_generator_squares_to_zero():
    a = sym_algebra(P(("e", 1, 1), ("f", 1, 1)), 2)
    e, f = a.labels.index("e"), a.labels.index("f")
    assert a.mul(e, e) == {}
    ef = a.mul(e, f)
    assert {k: -v for k, v in ef.items()} == a.mul(f, e)


def test_mixed_signs_rejected():
    with pytest.raises(MixedWeightSigns):
        P(("x", 0, 1), ("y", 0, -1))
    with pytest.raises(MixedWeightSigns):
        P(("x", 0, 0))


def test_heisenberg_enveloping_weight_two():
    u = enveloping(heisenberg(), 3)
    assert dims(u)[(2, 0)] == 4
    assert dims(u)[(1, 0)] == 2
    validate(u)


def test_enveloping_of_abelian_is_sym():
    g = abelian(2)
    assert dims(enveloping(g, 4)) == dims(sym_algebra(P(("x0", 0, 1), ("x1", 0, 1)), 4))


@pytest.mark.parametrize("name", list(presets.LIE))
def test_pbw_dimensions(name):
    g = presets.lie(name)
    gens = [Generator(g.labels[i], g.degrees[i], g.weights[i]) for i in range(len(g))]
    assert dims(enveloping(g, 5)) == sym_dimension_table(gens, 5).dimension_table().entries


def test_enveloping_n_examples():
    g = abelian(1)
    assert enveloping_n(g, 1, 3).dimension_table() == sym_algebra(P(("x", 0, 1)), 3).dimension_table()
    two = enveloping_n(g, 2, 4).dimension_table().entries
    assert two == {(0, 0): 1, (1, -1): 1}
    three = enveloping_n(g, 3, 4).dimension_table().entries
    assert three == {(w, -2 * w): 1 for w in range(5)}


def test_opposite_and_tensor_units():
    a = presets.algebra("sym01", 3)
    op = opposite(a)
    for i in range(len(a)):
        for j in range(len(a)):
            assert op.mul(i, j) == a.mul(i, j)
    t = presets.algebra("tensor2", 3)
    opop = opposite(opposite(t))
    assert all(opop.mul(i, j) == t.mul(i, j) for i in range(len(t)) for j in range(len(t)))
    q = algebra_tensor(ground_field(), t)
    assert q.dimension_table() == t.dimension_table()
    validate(algebra_tensor(t, opposite(t)))


def test_truncated_polynomial():
    a = truncated_polynomial("x", 0, 1, 3, 5)
    assert dims(a) == {(0, 0): 1, (1, 0): 1, (2, 0): 1}
    assert a.commutative
    validate(a)


def test_relations_must_be_homogeneous():
    with pytest.raises(MixedWeightSigns):
        tensor_algebra(P(("x", 0, 1), ("y", 0, 2)), 4, relations=[{(0,): 1, (1,): 1}])


@pytest.mark.parametrize("name", list(presets.ALGEBRAS))
def test_corpus_algebras_validate(name):
    validate(presets.algebra(name, 4))


@pytest.mark.parametrize("name", list(presets.LIE))
def test_ce_cochains_validate(name):
    c = ce_cochains(presets.lie(name), 4)
    validate(c)
    assert all(w <= 0 for w in c.weights)
    for i in range(len(c)):
        for k in c.d(i):
            assert c.weights[k] == c.weights[i]


def test_ce_cochains_of_abelian_line():
    c = ce_cochains(abelian(1), 3)
    assert dims(c) == {(0, 0): 1, (-1, -1): 1}
    assert not any(c.d(i) for i in range(len(c)))


def test_validate_names_the_failing_tuple():
    # x * x^2 = 2 x^3 while x^2 * x = x^3: associativity fails on (x, x, x)
    def mul(i, j):
        if i == 0 or j == 0:
            return {i + j: 1}
        return {i + j: 2 if (i, j) == (1, 2) else 1} if i + j <= 3 else {}

    bad = WgAlgebra(["1", "x", "x2", "x3"], [0, 1, 2, 3], [0, 0, 0, 0], mul, max_weight=3, name="bad")
    with pytest.raises(ValidationError) as info:
        validate(bad)
    assert info.value.witness == ("x", "x", "x")


def test_weight_zero_must_be_unit():
    with pytest.raises(MixedWeightSigns):
        WgAlgebra(["1", "y"], [0, 0], [0, 0], lambda i, j: {}, name="two units")


def test_sl2_is_rejected():
    # [e,f] = h, [h,e] = 2e, [h,f] = -2f with weight(h) = 0
    with pytest.raises(MixedWeightSigns):
        WgLieAlgebra(["e", "f", "h"], [1, -1, 0], [0, 0, 0],
                     {(0, 1): {2: 1}, (2, 0): {0: 2}, (2, 1): {1: -2}}, name="sl2")


generator_lists = st.lists(st.tuples(st.integers(0, 2), st.integers(1, 2)), min_size=0, max_size=3)


@given(generator_lists)
def test_sym_dimensions_match_generating_function(gens):
    v = GradedSpacePresentation([Generator(f"g{i}", d, w) for i, (d, w) in enumerate(gens)])
    assert dims(sym_algebra(v, 4)) == sym_series(gens, 4)


@given(generator_lists)
def test_tensor_dimensions_match_generating_function(gens):
    v = GradedSpacePresentation([Generator(f"g{i}", d, w) for i, (d, w) in enumerate(gens)])
    assert dims(tensor_algebra(v, 4)) == tensor_series(gens, 4)
