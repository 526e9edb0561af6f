"""Gluing expressions: parsing, role checks, evaluation and independence reports."""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fachom import presets
from fachom.bar import augmentation_module, cyclic_bar, regular
from fachom.complexes import BettiTable, homology, shift
from fachom.errors import GluingSyntaxError, RoleMismatch
from fachom.excision import Circle, Glue, Leaf, check_independence, evaluate, parse_gluing, unparse

W = 3


def strip(e):
    """Drop source offsets so trees compare structurally."""
    if isinstance(e, Leaf):
        return Leaf(e.name)
    if isinstance(e, Circle):
        return Circle(strip(e.algebra))
    return Glue(strip(e.left), strip(e.middle), strip(e.right))


def test_parse_examples():
    assert strip(parse_gluing("circle(A)")) == Circle(Leaf("A"))
    assert strip(parse_gluing("glue(M1; A; M2)")) == Glue(Leaf("M1"), Leaf("A"), Leaf("M2"))
    assert strip(parse_gluing("  glue( glue(L;A;A) ;A; R )")) == Glue(Glue(Leaf("L"), Leaf("A"), Leaf("A")),
                                                                        Leaf("A"), Leaf("R"))


def test_leaf_offsets():
    e = parse_gluing("glue(M1; A; M2)")
    assert (e.left.offset, e.middle.offset, e.right.offset) == (6, 10, 13)


@pytest.mark.parametrize("text,offset", [
    ("glue(M1; A", 11),
    ("circle(A", 9),
    ("glue(M1, A; B)", 8),
    ("circle(A) B", 11),
    ("frob(A)", 1),
    ("", 1),
    ("circle(#)", 8),
])
def test_syntax_errors_carry_offsets(text, offset):
    with pytest.raises(GluingSyntaxError) as info:
        parse_gluing(text)
    assert info.value.offset == offset


names = st.from_regex(r"[A-Z][a-z0-9]{0,2}", fullmatch=True)
exprs = st.recursive(
    names.map(Leaf),
    lambda inner: st.one_of(inner.map(Circle), st.tuples(inner, inner, inner).map(lambda t: Glue(*t))),
    max_leaves=8,
)


@given(exprs)
def test_unparse_round_trip(e):
    assert strip(parse_gluing(unparse(e))) == e


@given(exprs)
def test_unparse_is_stable(e):
    text = unparse(e)
    assert unparse(parse_gluing(text)) == text


@pytest.fixture(scope="module")
def poly():
    return presets.algebra("poly", W)


def test_circle_is_hkr(poly):
    t = evaluate("circle(A)", {"A": poly}, W)
    assert t == BettiTable({(0, 0): 1, **{(w, d): 1 for w in range(1, W + 1) for d in (0, 1)}})


def test_interval_from_two_halves(poly):
    assert evaluate("glue(A; A; A)", {"A": poly}, W) == homology(poly.carrier())


def test_circle_of_tensor_algebra():
    t = evaluate("circle(T)", {"T": presets.algebra("tensor2", 2)}, 2)
    assert t.at_weight(2) == {0: 3, 1: 3}


@pytest.mark.parametrize("name", list(presets.ALGEBRAS))
def test_circle_equals_cyclic_bar(name):
    a = presets.algebra(name, W)
    assert evaluate("circle(A)", {"A": a}, W) == homology(cyclic_bar(a, W), (-W, W))


@pytest.mark.parametrize("name", ["poly", "tensor2", "sym01"])
def test_reassociation(name):
    a = presets.algebra(name, W)
    c = {"A": a, "K": augmentation_module(a)}
    left = evaluate("glue(glue(K; A; A); A; A)", c, W)
    right = evaluate("glue(K; A; glue(A; A; A))", c, W)
    assert left == right == BettiTable({(0, 0): 1})
    assert evaluate("glue(glue(A; A; A); A; K)", c, W) == evaluate("glue(A; A; glue(A; A; K))", c, W)


def test_unit_gluings_are_idempotent(poly):
    c = {"A": poly}
    base = evaluate("A", c, W)
    assert evaluate("glue(A; A; A)", c, W) == base
    assert evaluate("glue(glue(A; A; A); A; glue(A; A; A))", c, W) == base


def test_explicit_module_binding(poly):
    c = {"A": poly, "M": regular(poly)}
    assert evaluate("glue(M; A; M)", c, W) == homology(poly.carrier())


def test_role_errors(poly):
    with pytest.raises(RoleMismatch):
        evaluate("circle(B)", {"A": poly}, W)
    with pytest.raises(RoleMismatch):
        evaluate("circle(K)", {"K": augmentation_module(poly)}, W)
    with pytest.raises(RoleMismatch):
        evaluate("glue(A; K; A)", {"A": poly, "K": augmentation_module(poly)}, W)
    with pytest.raises(RoleMismatch):
        evaluate("glue(circle(A); A; A)", {"A": poly}, W)


def test_module_over_the_wrong_algebra(poly):
    other = presets.algebra("sym01", W)
    with pytest.raises(RoleMismatch):
        evaluate("glue(K; B; B)", {"B": other, "K": augmentation_module(poly)}, W)


def test_independence_pass(poly):
    from fachom.bar import hochschild_via_bimodule
    r = check_independence([("cyclic", homology(cyclic_bar(poly, W))),
                            ("bimodule", lambda: homology(hochschild_via_bimodule(poly, W)))], W)
    assert r.passed
    assert "PASS" in r.summary()


def test_independence_negative_control(poly):
    c = poly.carrier()
    r = check_independence([("A", homology(c)), ("A[1]", homology(shift(c, 1)))], W)
    assert not r.passed
    assert r.comparisons[0][2] == (0, 0)
    assert r.to_dict()["comparisons"][0]["result"] == {"first_difference": [0, 0]}


def test_independence_needs_two_routes(poly):
    with pytest.raises(ValueError):
        check_independence([("only", homology(poly.carrier()))], W)
