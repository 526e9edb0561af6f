"""Run the theorem-check registry and write a JSON report.

    python scripts/run_verify.py --max-weight 4 --jobs 4 --out verify_w4.json
"""
import argparse
import sys
import time
from dataclasses import dataclass

from fachom.verify import VerifyConfig, report_json, run_all, select


@dataclass
class RunConfig:
    max_weight: int = 3
    selector: str = "all"
    jobs: int = 1
    out: str = ""


def main(argv=None):
    p = argparse.ArgumentParser(description="run fachom theorem checks")
    p.add_argument("--max-weight", type=int, default=RunConfig.max_weight)
    p.add_argument("--selector", default=RunConfig.selector)
    p.add_argument("--jobs", type=int, default=RunConfig.jobs)
    p.add_argument("--out", default=RunConfig.out)
    cfg = RunConfig(**vars(p.parse_args(argv)))

    start = time.perf_counter()
    checks = run_all(VerifyConfig(cfg.max_weight, ids=select(cfg.selector), jobs=cfg.jobs))
    for c in checks:
        extra = f" (first divergence at {tuple(c.first_divergence)})" if c.first_divergence else ""
        print(f"{c.status} {c.id}{extra}")
    print(f"{sum(c.passed for c in checks)}/{len(checks)} passed in {time.perf_counter() - start:.1f}s")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(report_json(checks, cfg.max_weight))
    return 0 if all(c.passed for c in checks) else 1


if __name__ == "__main__":
    sys.exit(main())
