"""Registry of theorem checks, each comparing Betti tables from independent routes."""
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import presets
from .algebra import Generator, enveloping, sym_algebra, sym_dimension_table
from .bar import bar, cyclic_bar, hochschild_via_bimodule
from .complexes import DimTable, dual, homology
from .excision import Report, check_independence
from .freeconf import check_bar_free, check_splits, conf_labeled_homology, free_en_dims
from .higher_hh import builtin_model, space_tensor
from .lie import ce_chains, ce_cochains, circle_model, mapping_lie, rn_model

SPACE_BETTI = {
    "point": {0: 1},
    "interval": {0: 1},
    "circle": {0: 1, 1: 1},
    "sphere2": {0: 1, 2: 1},
    "torus": {0: 1, 1: 2, 2: 1},
}


def sym_tensor_formula(betti: dict, v, max_weight: int) -> DimTable:
    """Monomial count of Sym(H_*(X) ⊗ V) from the Betti numbers of X."""
    gens = [Generator(f"{g.name}{i}_{k}", g.degree + i, g.weight)
            for g in v.generators for i, n in sorted(betti.items()) for k in range(n)]
    return sym_dimension_table(gens, max_weight).dimension_table()


@dataclass
class TheoremCheck:
    id: str
    routes: list
    window: dict
    status: str
    first_divergence: list = None
    tables: dict = field(default_factory=dict)
    comparisons: list = field(default_factory=list)

    @property
    def passed(self):
        return self.status == "PASS"

    @classmethod
    def from_report(cls, id, report: Report, max_weight):
        first = next((list(s) for _, _, s in report.comparisons if s is not None), None)
        return cls(id, list(report.routes), {"max_weight": max_weight, "degrees": None},
                   "PASS" if report.passed else "FAIL", first,
                   {r: t.to_dict()["entries"] for r, t in zip(report.routes, report.tables)},
                   report.to_dict()["comparisons"])

    def to_dict(self):
        return {"id": self.id, "routes": self.routes, "window": self.window, "status": self.status,
                "first_divergence": self.first_divergence, "tables": self.tables,
                "comparisons": self.comparisons}


def _routes(*pairs):
    return list(pairs)


def _window(W):
    return (-W, W)


# ------------------------------------------------------------ named checks

def run_hoch_duality(g, max_weight: int) -> TheoremCheck:
    """dual(HH(Ug)) against HH(C*_Lie g)."""
    W = max_weight
    routes = [("dual HH(Ug)", lambda: homology(dual(cyclic_bar(enveloping(g, W), W)), _window(W))),
              ("HH(C*(g))", lambda: homology(cyclic_bar(ce_cochains(g, W), W), _window(W)))]
    return TheoremCheck.from_report(f"hoch-duality:{g.name}", check_independence(routes, W), W)


def run_env_circle(g, max_weight: int) -> TheoremCheck:
    """HH(Ug) against CE chains of Map(S¹, g)."""
    W = max_weight
    routes = [("HH(Ug)", lambda: homology(cyclic_bar(enveloping(g, W), W), _window(W))),
              ("C_*(Map(S1, g))", lambda: homology(ce_chains(mapping_lie(circle_model(), g), W), _window(W)))]
    return TheoremCheck.from_report(f"env-circle:{g.name}", check_independence(routes, W), W)


def run_coh_circle(g, max_weight: int) -> TheoremCheck:
    """HH(C*(g)) against C*(g ⊕ g[-1])."""
    W = max_weight
    routes = [("HH(C*(g))", lambda: homology(cyclic_bar(ce_cochains(g, W), W), _window(W))),
              ("C*(Map(S1, g))",
               lambda: homology(ce_cochains(mapping_lie(circle_model(), g), W).carrier(), _window(W)))]
    return TheoremCheck.from_report(f"coh-circle:{g.name}", check_independence(routes, W), W)


def run_circle_hochschild(name, max_weight: int) -> TheoremCheck:
    W = max_weight
    a = presets.algebra(name, W)
    routes = [("cyclic bar", lambda: homology(cyclic_bar(a, W), _window(W))),
              ("A ⊗_{A⊗A^op} A", lambda: homology(hochschild_via_bimodule(a, W), _window(W)))]
    if a.commutative:
        routes.append(("S1 ⊗ A", lambda: homology(space_tensor(builtin_model("circle"), a, W), _window(W))))
    return TheoremCheck.from_report(f"circle-hochschild:{name}", check_independence(routes, W), W)


def run_sym_tensor(space, gens, max_weight: int) -> TheoremCheck:
    W = max_weight
    v = presets.space(gens)
    routes = [(f"{space} ⊗ Sym(V)", lambda: homology(space_tensor(builtin_model(space), sym_algebra(v, W), W), _window(W))),
              ("Sym(H_*(X) ⊗ V)", lambda: sym_tensor_formula(SPACE_BETTI[space], v, W))]
    return TheoremCheck.from_report(f"sym-tensor:{space}:{gens}", check_independence(routes, W), W)


def run_bar_sym(gens, max_weight: int) -> TheoremCheck:
    W = max_weight
    v = presets.space(gens)
    routes = [("B Sym(V)", lambda: homology(bar(sym_algebra(v, W), W), _window(W))),
              ("Sym(V[1])", lambda: sym_dimension_table(v.shifted(1).generators, W).dimension_table())]
    return TheoremCheck.from_report(f"bar-sym:{gens}", check_independence(routes, W), W)


def run_bar_free(n, gens, max_weight: int) -> TheoremCheck:
    return TheoremCheck.from_report(f"bar-free:{n}:{gens}", check_bar_free(n, presets.space(gens), max_weight),
                                    max_weight)


def run_splits(n, m, gens, max_weight: int) -> TheoremCheck:
    return TheoremCheck.from_report(f"splits-{n}-{m}:{gens}", check_splits(n, m, presets.space(gens), max_weight),
                                    max_weight)


def run_splitting_free(n, gens, max_weight: int) -> TheoremCheck:
    W = max_weight
    v = presets.space(gens)
    routes = [(f"Lie model on R^{n}", lambda: conf_labeled_homology(rn_model(n), n, v, W)),
              (f"Free_{n}(V)", lambda: free_en_dims(n, v, W))]
    return TheoremCheck.from_report(f"splitting-free:{n}:{gens}", check_independence(routes, W), W)


def _registry():
    reg = {}
    for name in presets.ALGEBRAS:
        reg[f"circle-hochschild:{name}"] = (run_circle_hochschild, (name,))
    for space in ("point", "circle", "sphere2", "torus"):
        for gens in ("x", "e", "xy", "xe"):
            reg[f"sym-tensor:{space}:{gens}"] = (run_sym_tensor, (space, gens))
    for gens in ("x", "xy", "xe"):
        reg[f"bar-sym:{gens}"] = (run_bar_sym, (gens,))
    for n in (1, 2, 3):
        for gens in ("x", "xy"):
            reg[f"bar-free:{n}:{gens}"] = (run_bar_free, (n, gens))
    for n, m in ((1, 0), (2, 1), (3, 1), (3, 2)):
        reg[f"splits-{n}-{m}:x"] = (run_splits, (n, m, "x"))
    for n in (1, 2, 3):
        for gens in ("x", "xy"):
            reg[f"splitting-free:{n}:{gens}"] = (run_splitting_free, (n, gens))
    for fam, fn in (("hoch-duality", run_hoch_duality), ("env-circle", run_env_circle),
                    ("coh-circle", run_coh_circle)):
        for name in presets.LIE:
            reg[f"{fam}:{name}"] = (_lie_check, (fn.__name__, name))
    return reg


def _lie_check(fn_name, lie_name, max_weight):
    return globals()[fn_name](presets.lie(lie_name), max_weight)


REGISTRY = _registry()


def select(selector) -> list:
    """``all``, an exact id, a family prefix such as ``hoch-duality``, or a comma list of those."""
    if selector in (None, "", "all"):
        return list(REGISTRY)
    out = []
    for part in str(selector).split(","):
        part = part.strip()
        hits = [k for k in REGISTRY if k == part or k.startswith(part + ":") or k.startswith(part + "-")]
        if not hits:
            raise KeyError(f"no check matches {part!r}")
        out.extend(h for h in hits if h not in out)
    return out


def run_check(check_id: str, max_weight: int) -> TheoremCheck:
    fn, args = REGISTRY[check_id]
    return fn(*args, max_weight)


def _run_one(args):
    return run_check(*args)


@dataclass
class VerifyConfig:
    max_weight: int = 3
    selector: str = "all"
    jobs: int = 1
    ids: list = None  # overrides the selector when given


def run_all(config: VerifyConfig) -> list:
    ids = config.ids if config.ids is not None else select(config.selector)
    work = [(i, config.max_weight) for i in ids]
    if config.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            return list(pool.map(_run_one, work))
    return [_run_one(w) for w in work]


def report_json(checks: list, max_weight: int) -> str:
    body = {"max_weight": max_weight,
            "status": "PASS" if all(c.passed for c in checks) else "FAIL",
            "checks": [c.to_dict() for c in checks]}
    return json.dumps(body, sort_keys=True, indent=2, ensure_ascii=False)
