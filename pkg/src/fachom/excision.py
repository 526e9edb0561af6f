"""Gluing expressions for decomposed 1-manifolds and their evaluation by bar constructions.

Grammar::

    expr := NAME | "circle" "(" expr ")" | "glue" "(" expr ";" expr ";" expr ")"

``glue(L; A; R)`` is the relative tensor product L ⊗_A R, computed as the
two-sided bar construction; its value keeps the outer actions of L and R,
so gluings nest.  ``circle(A)`` is A ⊗_{A⊗A^op} A.

The closed interval is ``glue(A; A; A)``: both half-open ends are A as a
module, tensored over the algebra of the open interval (not over a
half-open piece), and the value is A again.
"""
import re
from dataclasses import dataclass, field
from typing import Callable, Union

from .algebra import WgAlgebra
from .bar import WgModule, bar_module, enveloping_pair, hochschild_module, regular
from .complexes import BettiTable, ChainComplex, homology
from .errors import GluingSyntaxError, RoleMismatch


@dataclass(frozen=True)
class Leaf:
    name: str
    offset: int = 0


@dataclass(frozen=True)
class Glue:
    left: "GluingExpr"
    middle: "GluingExpr"
    right: "GluingExpr"


@dataclass(frozen=True)
class Circle:
    algebra: "GluingExpr"


GluingExpr = Union[Leaf, Glue, Circle]

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<punct>[();]))")


def _tokens(text):
    pos = 0
    out = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise GluingSyntaxError(f"unexpected character {text[pos]!r}", text, pos + 1)
        kind = "name" if m.group("name") else m.group("punct")
        value = m.group("name") or m.group("punct")
        out.append((kind, value, m.start(kind if kind == "name" else "punct") + 1))
        pos = m.end()
    out.append(("end", "", len(text) + 1))
    return out


def parse_gluing(text: str) -> GluingExpr:
    toks = _tokens(text)
    pos = 0

    def expect(kind):
        nonlocal pos
        k, v, off = toks[pos]
        if k != kind:
            what = "end of input" if k == "end" else repr(v)
            raise GluingSyntaxError(f"expected {kind!r}, found {what}", text, off)
        pos += 1
        return v, off

    def expr():
        nonlocal pos
        name, off = expect("name")
        if toks[pos][0] != "(":
            return Leaf(name, off)
        if name == "circle":
            expect("(")
            inner = expr()
            expect(")")
            return Circle(inner)
        if name == "glue":
            expect("(")
            left = expr()
            expect(";")
            middle = expr()
            expect(";")
            right = expr()
            expect(")")
            return Glue(left, middle, right)
        raise GluingSyntaxError(f"unknown combinator {name!r}", text, off)

    tree = expr()
    if toks[pos][0] != "end":
        raise GluingSyntaxError(f"trailing input {toks[pos][1]!r}", text, toks[pos][2])
    return tree


def unparse(e: GluingExpr) -> str:
    if isinstance(e, Leaf):
        return e.name
    if isinstance(e, Circle):
        return f"circle({unparse(e.algebra)})"
    return f"glue({unparse(e.left)}; {unparse(e.middle)}; {unparse(e.right)})"


# ------------------------------------------------------------ evaluation

CoefficientAssignment = dict  # name -> WgAlgebra | WgModule


@dataclass
class _Value:
    algebra: WgAlgebra = None
    module: WgModule = None
    complex: ChainComplex = None

    def as_module(self, memo):
        if self.module is not None:
            return self.module
        if self.algebra is not None:
            key = id(self.algebra)
            if key not in memo:
                memo[key] = regular(self.algebra)
            return memo[key]
        return None


def check_roles(e: GluingExpr, c: CoefficientAssignment):
    """Raise RoleMismatch if a name is unbound or used in a role its value cannot play."""
    if isinstance(e, Leaf):
        if e.name not in c:
            raise RoleMismatch(f"unbound piece {e.name!r}")
        return "algebra" if isinstance(c[e.name], WgAlgebra) else "module"
    if isinstance(e, Circle):
        if check_roles(e.algebra, c) != "algebra":
            raise RoleMismatch(f"circle needs an algebra, got {unparse(e.algebra)}")
        return "closed"
    if check_roles(e.middle, c) != "algebra":
        raise RoleMismatch(f"middle of a gluing must be an algebra, got {unparse(e.middle)}")
    for side in (e.left, e.right):
        if check_roles(side, c) == "closed":
            raise RoleMismatch(f"{unparse(side)} carries no module structure")
    return "module"


def evaluate_complex(e: GluingExpr, c: CoefficientAssignment, max_weight: int) -> ChainComplex:
    check_roles(e, c)
    memo = {}

    def ev(node) -> _Value:
        if isinstance(node, Leaf):
            v = c[node.name]
            if isinstance(v, WgAlgebra):
                if v.max_weight < max_weight:
                    raise ValueError(f"{node.name} is truncated at weight {v.max_weight} < {max_weight}")
                return _Value(algebra=v)
            return _Value(module=v)
        if isinstance(node, Circle):
            a = ev(node.algebra).algebra
            ae = enveloping_pair(a)
            m = hochschild_module(a, ae)
            b = bar_module(m, ae, m, max_weight)
            return _Value(complex=_checked(b))
        a = ev(node.middle).algebra
        left = ev(node.left).as_module(memo)
        right = ev(node.right).as_module(memo)
        if left.right is not a:
            raise RoleMismatch(f"{unparse(node.left)} is not a right module over {unparse(node.middle)}")
        if right.left is not a:
            raise RoleMismatch(f"{unparse(node.right)} is not a left module over {unparse(node.middle)}")
        return _Value(module=bar_module(left, a, right, max_weight))

    v = ev(e)
    if v.complex is not None:
        return v.complex
    if v.module is not None:
        return _checked(v.module)
    return v.algebra.carrier()


def _checked(m: WgModule) -> ChainComplex:
    cx = m.carrier()
    cx.check_d_squared()
    return cx


def evaluate(e: Union[GluingExpr, str], c: CoefficientAssignment, max_weight: int) -> BettiTable:
    if isinstance(e, str):
        e = parse_gluing(e)
    return homology(evaluate_complex(e, c, max_weight), (-max_weight, max_weight))


# ------------------------------------------------- independence reports

@dataclass
class Report:
    routes: list
    tables: list
    comparisons: list = field(default_factory=list)  # (i, j, first differing slot or None)
    window: tuple = ()

    @property
    def passed(self):
        return all(slot is None for _, _, slot in self.comparisons)

    def to_dict(self):
        return {
            "status": "PASS" if self.passed else "FAIL",
            "window": list(self.window),
            "routes": [{"name": r, "table": t.to_dict()["entries"]} for r, t in zip(self.routes, self.tables)],
            "comparisons": [{"routes": [self.routes[i], self.routes[j]],
                             "result": "PASS" if s is None else {"first_difference": list(s)}}
                            for i, j, s in self.comparisons],
        }

    def summary(self):
        lines = []
        for i, j, s in self.comparisons:
            verdict = "PASS" if s is None else f"FAIL at (weight, degree) = {s}"
            lines.append(f"{self.routes[i]} vs {self.routes[j]}: {verdict}")
        return "\n".join(lines)


def check_independence(routes: list, max_weight: int, degree_window=None) -> Report:
    """Compare BettiTables from ``(description, producer)`` routes slot by slot."""
    if len(routes) < 2:
        raise ValueError("independence needs at least two routes")
    names, tables = [], []
    for name, producer in routes:
        t = producer() if isinstance(producer, Callable) else producer
        names.append(name)
        tables.append(t.restrict(max_weight, degree_window))
    comps = [(i, j, tables[i].first_difference(tables[j]))
             for i in range(len(tables)) for j in range(i + 1, len(tables))]
    return Report(names, tables, comps, (max_weight,) + (tuple(degree_window) if degree_window else ()))
