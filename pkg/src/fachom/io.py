"""JSON presentations of algebras, Lie algebras, models and gluing bindings.

A presentation looks like::

    {"type": "tensor",
     "generators": [{"name": "x", "degree": 0, "weight": 1}],
     "relations": [{"x x x": "1"}],
     "brackets": [{"pair": ["x", "y"], "value": {"z": "1"}}]}

``type`` is ``tensor``, ``sym`` or ``lie``.  Coefficients are strings
"p/q" (plain integers are accepted too).  ``{"preset": "poly"}`` names a
built-in instead.
"""
import json
from fractions import Fraction
from pathlib import Path

from . import presets
from .algebra import GradedSpacePresentation, sym_algebra, tensor_algebra
from .bar import augmentation_module, regular
from .errors import PresentationError
from .lie import CommutativeModel, lie_from_presentation


def rational(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise PresentationError(f"coefficient {x!r} must be a string 'p/q' or an integer")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as e:
        raise PresentationError(f"bad rational {x!r}") from e


def rational_str(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _load(source):
    if isinstance(source, dict):
        return source
    text = Path(source).read_text() if not str(source).lstrip().startswith("{") else source
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise PresentationError(f"malformed JSON at line {e.lineno}, column {e.colno}: {e.msg}") from e


def parse_presentation(data) -> tuple:
    """Return ``(type, GradedSpacePresentation)`` from a dict."""
    if not isinstance(data, dict) or "generators" not in data:
        raise PresentationError("presentation needs a 'generators' list")
    try:
        gens = [(g["name"], int(g["degree"]), int(g["weight"])) for g in data["generators"]]
    except (KeyError, TypeError, ValueError) as e:
        raise PresentationError(f"bad generator entry: {e}") from e
    names = {g[0]: i for i, g in enumerate(gens)}

    def gen_index(name):
        if name not in names:
            raise PresentationError(f"unknown generator {name!r}")
        return names[name]

    relations = []
    for rel in data.get("relations", []):
        relations.append({tuple(gen_index(s) for s in word.split()): rational(c) for word, c in rel.items()})
    brackets = []
    for br in data.get("brackets", []):
        try:
            i, j = (gen_index(s) for s in br["pair"])
            value = {gen_index(k): rational(c) for k, c in br["value"].items()}
        except (KeyError, TypeError, ValueError) as e:
            raise PresentationError(f"bad bracket entry {br!r}") from e
        brackets.append((i, j, value))
    kind = data.get("type", "lie" if brackets else "tensor")
    if kind not in ("tensor", "sym", "lie"):
        raise PresentationError(f"unknown presentation type {kind!r}")
    return kind, GradedSpacePresentation(gens, relations, brackets)


def load_algebra(source, max_weight: int):
    data = _load(source)
    if "preset" in data:
        return presets.algebra(data["preset"], max_weight)
    kind, p = parse_presentation(data)
    if kind == "lie":
        raise PresentationError("expected an algebra presentation, got a Lie algebra")
    name = data.get("name", "")
    if kind == "sym":
        if p.relations:
            raise PresentationError("relations are only supported for tensor presentations")
        return sym_algebra(p, max_weight, name=name or "Sym(V)")
    return tensor_algebra(p, max_weight, name=name or "T(V)/I")


def load_lie(source):
    data = _load(source)
    if "preset" in data:
        return presets.lie(data["preset"])
    kind, p = parse_presentation(data)
    if kind != "lie":
        raise PresentationError(f"expected a Lie presentation, got type {kind!r}")
    return lie_from_presentation(p, name=data.get("name", ""))


def load_model(source) -> CommutativeModel:
    """``{"labels", "degrees", "products": [{"pair": [a, b], "value": {c: "1"}}]}`` or a preset name."""
    data = _load(source)
    if "preset" in data:
        return presets.model(data["preset"])
    try:
        labels = list(data["labels"])
        degrees = [int(d) for d in data["degrees"]]
        idx = {l: i for i, l in enumerate(labels)}
        products = {}
        for p in data.get("products", []):
            a, b = (idx[s] for s in p["pair"])
            products[(a, b)] = {idx[k]: rational(c) for k, c in p["value"].items()}
    except (KeyError, TypeError, ValueError) as e:
        raise PresentationError(f"bad model: {e}") from e
    m = CommutativeModel(labels, degrees, products, name=data.get("name", "model"))
    m.check()
    return m


def load_bindings(source, max_weight: int) -> dict:
    """Names to values for gluing expressions.

    Each entry is an algebra (presentation or preset), or
    ``{"module": "regular" | "augmentation", "over": <name>}``.
    """
    data = _load(source)
    if not isinstance(data, dict):
        raise PresentationError("bindings must be a JSON object")
    out = {}
    for name, spec in data.items():
        if isinstance(spec, str):
            spec = {"preset": spec}
        if "module" not in spec:
            out[name] = load_algebra(spec, max_weight)
    for name, spec in data.items():
        if isinstance(spec, dict) and "module" in spec:
            over = out.get(spec.get("over"))
            if over is None:
                raise PresentationError(f"module {name!r} is over unknown algebra {spec.get('over')!r}")
            kind = spec["module"]
            if kind == "regular":
                out[name] = regular(over)
            elif kind == "augmentation":
                out[name] = augmentation_module(over)
            else:
                raise PresentationError(f"unknown module kind {kind!r}")
    return out
