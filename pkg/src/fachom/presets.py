"""The fixed corpus: algebras, Lie algebras, manifold models, by name."""
import re

from .algebra import GradedSpacePresentation, WgAlgebra, sym_algebra, tensor_algebra, truncated_polynomial
from .errors import UnknownModel
from .lie import (
    CommutativeModel,
    WgLieAlgebra,
    abelian,
    circle_model,
    filiform4,
    heisenberg,
    point_model,
    rn_model,
    sphere_cochains,
    sphere_times_rn_model,
)

P = GradedSpacePresentation.of

ALGEBRAS = {
    "poly": ("Q[x], x at (weight 1, degree 0)", lambda W: sym_algebra(P(("x", 0, 1)), W, name="Q[x]")),
    "exterior": ("Λ(ξ), ξ at (1, 1)", lambda W: sym_algebra(P(("e", 1, 1)), W, name="Λ(e)")),
    "trunc3": ("Q[x]/x³", lambda W: truncated_polynomial("x", 0, 1, 3, W)),
    "tensor1": ("T(Q)", lambda W: tensor_algebra(P(("x", 0, 1)), W, name="T(Q)")),
    "tensor2": ("T(Q²)", lambda W: tensor_algebra(P(("x", 0, 1), ("y", 0, 1)), W, name="T(Q^2)")),
    "sym01": ("Sym(Q ⊕ Q[1])", lambda W: sym_algebra(P(("x", 0, 1), ("e", 1, 1)), W, name="Sym(Q+Q[1])")),
}

LIE = {
    "ab1": ("abelian, dim 1", lambda: abelian(1)),
    "ab2": ("abelian, dim 2", lambda: abelian(2)),
    "ab3": ("abelian, dim 3", lambda: abelian(3)),
    "heisenberg": ("[x,y] = z, weights (1,1,2)", heisenberg),
    "filiform": ("3-dim filiform [x,y] = z, weights (1,1,2)", lambda: heisenberg("filiform")),
    "filiform4": ("[x,y] = z, [x,z] = t, weights (1,1,2,3)", filiform4),
}

# generator sets used where a GradedSpacePresentation is wanted
SPACES = {
    "x": P(("x", 0, 1)),
    "xy": P(("x", 0, 1), ("y", 0, 1)),
    "xyz": P(("x", 0, 1), ("y", 0, 1), ("z", 0, 1)),
    "e": P(("e", 1, 1)),
    "xe": P(("x", 0, 1), ("e", 1, 1)),
    "ef": P(("e", 1, 1), ("f", 1, 1)),
}


def algebra(name: str, max_weight: int) -> WgAlgebra:
    try:
        return ALGEBRAS[name][1](max_weight)
    except KeyError:
        raise UnknownModel(f"unknown algebra preset {name!r}; known: {', '.join(ALGEBRAS)}") from None


def lie(name: str) -> WgLieAlgebra:
    try:
        return LIE[name][1]()
    except KeyError:
        raise UnknownModel(f"unknown Lie preset {name!r}; known: {', '.join(LIE)}") from None


def space(name: str) -> GradedSpacePresentation:
    try:
        return SPACES[name]
    except KeyError:
        raise UnknownModel(f"unknown generator set {name!r}; known: {', '.join(SPACES)}") from None


def model(name: str) -> CommutativeModel:
    """``point``, ``R<n>``, ``S<m>`` (closed sphere) or ``S<m>xR<k>`` (compact support)."""
    if name == "point":
        return point_model()
    if name == "circle":
        return circle_model()
    m = re.fullmatch(r"R(\d+)", name)
    if m:
        return rn_model(int(m.group(1)))
    m = re.fullmatch(r"S(\d+)", name)
    if m:
        return sphere_cochains(int(m.group(1)))
    m = re.fullmatch(r"S(\d+)xR(\d+)", name)
    if m:
        s, k = int(m.group(1)), int(m.group(2))
        return sphere_times_rn_model(s, s + k)
    raise UnknownModel(f"unknown manifold model {name!r}")
