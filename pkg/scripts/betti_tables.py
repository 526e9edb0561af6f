"""Print Hochschild Betti tables for every preset algebra, as a weight x degree grid."""
import argparse
from dataclasses import dataclass

from fachom import presets
from fachom.bar import cyclic_bar
from fachom.complexes import homology


@dataclass
class TablesConfig:
    max_weight: int = 4


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("-w", "--max-weight", type=int, default=TablesConfig.max_weight)
    cfg = TablesConfig(**vars(p.parse_args(argv)))
    W = cfg.max_weight
    for name, (desc, _) in presets.ALGEBRAS.items():
        t = homology(cyclic_bar(presets.algebra(name, W), W), (-W, W))
        print(f"# HH_*({desc})")
        print(t.to_text())
        print()


if __name__ == "__main__":
    main()
