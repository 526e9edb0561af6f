"""The theorem-check registry."""
import json

import pytest

from fachom import lie
from fachom.errors import DifferentialSquareNonzero
from fachom.lie import abelian, heisenberg
from fachom.verify import (
    REGISTRY,
    VerifyConfig,
    report_json,
    run_all,
    run_check,
    run_coh_circle,
    run_env_circle,
    run_hoch_duality,
    select,
)

FAMILIES = ["circle-hochschild", "sym-tensor", "bar-sym", "bar-free", "splits", "splitting-free",
            "hoch-duality", "env-circle", "coh-circle"]


def test_registry_covers_every_family():
    for fam in FAMILIES:
        assert select(fam), fam


def test_select():
    assert select("all") == list(REGISTRY)
    assert select("hoch-duality:heisenberg") == ["hoch-duality:heisenberg"]
    assert select("splits-2-1") == ["splits-2-1:x"]
    both = select("bar-sym:x,hoch-duality:ab1")
    assert both == ["bar-sym:x", "hoch-duality:ab1"]
    with pytest.raises(KeyError):
        select("nonexistent-check")


def test_abelian_line_duality_tables():
    c = run_hoch_duality(abelian(1), 3)
    assert c.passed
    route_a = c.tables[c.routes[0]]
    for w in range(1, 4):
        assert {e["degree"]: e["dim"] for e in route_a if e["weight"] == -w} == {0: 1, -1: 1}


@pytest.mark.parametrize("fn", [run_hoch_duality, run_env_circle, run_coh_circle])
@pytest.mark.parametrize("g", [abelian(1), abelian(2), heisenberg()], ids=["ab1", "ab2", "heis"])
def test_lie_checks(fn, g):
    c = fn(g, 3)
    assert c.passed and len(c.routes) >= 2


def test_report_is_self_describing():
    c = run_check("circle-hochschild:poly", 3)
    d = c.to_dict()
    assert d["window"]["max_weight"] == 3
    assert set(d["tables"]) == set(d["routes"])
    assert d["status"] == "PASS" and d["first_divergence"] is None


def test_default_corpus_quick():
    checks = run_all(VerifyConfig(max_weight=3))
    assert len(checks) == len(REGISTRY)
    failed = [c.id for c in checks if not c.passed]
    assert not failed


def test_reports_are_deterministic():
    ids = select("hoch-duality:heisenberg,sym-tensor:circle:xe,splits-2-1")
    a = report_json(run_all(VerifyConfig(3, ids=ids)), 3)
    b = report_json(run_all(VerifyConfig(3, ids=ids)), 3)
    assert a == b
    assert json.loads(a)["status"] == "PASS"


def test_parallel_matches_serial():
    ids = select("bar-sym,circle-hochschild:trunc3")
    serial = report_json(run_all(VerifyConfig(3, ids=ids)), 3)
    parallel = report_json(run_all(VerifyConfig(3, ids=ids, jobs=2)), 3)
    assert serial == parallel


def test_empty_registry():
    assert run_all(VerifyConfig(3, ids=[])) == []
    assert json.loads(report_json([], 3)) == {"checks": [], "max_weight": 3, "status": "PASS"}


def test_injected_sign_error_is_caught(monkeypatch):
    original = lie._CEData._boundary

    def broken(self, e):
        out = original(self, e)
        if sum(e) == 3:
            out = {k: -c if k % 2 else c for k, c in out.items()}
        return out

    monkeypatch.setattr(lie._CEData, "_boundary", broken)
    with pytest.raises(DifferentialSquareNonzero):
        run_check("env-circle:filiform4", 4)
    with pytest.raises(DifferentialSquareNonzero):
        run_check("hoch-duality:filiform4", 4)
