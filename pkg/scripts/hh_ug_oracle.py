"""Independent oracle: HH_*(Ug) from Lie homology with adjoint coefficients.

Shares no code with fachom; PBW straightening and ranks (sympy) live in
tests/oracles.py.  Prints the Betti table as JSON, or compares it with the
engine's cyclic bar when --compare is given.

    python scripts/hh_ug_oracle.py heisenberg -w 4 --compare
"""
import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from oracles import hh_enveloping_cartan_eilenberg  # noqa: E402

# structure constants for i < j, written out independently of the presets
CORPUS = {
    "ab1": ([1], {}),
    "ab2": ([1, 1], {}),
    "ab3": ([1, 1, 1], {}),
    "heisenberg": ([1, 1, 2], {(0, 1): {2: 1}}),
    "filiform": ([1, 1, 2], {(0, 1): {2: 1}}),
    "filiform4": ([1, 1, 2, 3], {(0, 1): {2: 1}, (0, 2): {3: 1}}),
}


@dataclass
class OracleConfig:
    lie: str = "heisenberg"
    max_weight: int = 4
    compare: bool = False


def oracle_table(cfg: OracleConfig) -> dict:
    weights, bracket = CORPUS[cfg.lie]
    return hh_enveloping_cartan_eilenberg(weights, bracket, cfg.max_weight)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("lie", choices=sorted(CORPUS))
    p.add_argument("-w", "--max-weight", type=int, default=4)
    p.add_argument("--compare", action="store_true", help="check against fachom's cyclic bar of Ug")
    cfg = OracleConfig(**{k: v for k, v in vars(p.parse_args(argv)).items()})
    table = oracle_table(cfg)
    print(json.dumps({"lie": cfg.lie, "max_weight": cfg.max_weight,
                      "entries": [{"weight": w, "degree": d, "dim": n} for (w, d), n in sorted(table.items())]},
                     indent=2))
    if not cfg.compare:
        return 0
    from fachom import presets
    from fachom.algebra import enveloping
    from fachom.bar import cyclic_bar
    from fachom.complexes import homology

    W = cfg.max_weight
    engine = homology(cyclic_bar(enveloping(presets.lie(cfg.lie), W), W), (-W, W)).entries
    ok = engine == table
    print("agree" if ok else f"DISAGREE: engine {sorted(engine.items())}", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
