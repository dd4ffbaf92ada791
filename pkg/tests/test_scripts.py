import json
import subprocess
import sys
from pathlib import Path

import pytest

from paramodular.config import LedgerSweepConfig, TreeCensusConfig

ROOT = Path(__file__).resolve().parent.parent


def run_script(name, *args):
    proc = subprocess.run([sys.executable, str(ROOT / "scripts" / name), *args], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    return proc.stdout


def test_tree_census_json():
    rows = json.loads(run_script("tree_census.py", "--primes", "2", "--max-radius", "2", "--json"))
    assert len(rows) == 6
    assert all(r["interior_violations"] == 0 for r in rows)
    assert all(r["sigma_size"] == r["components"] for r in rows)


def test_ledger_sweep_runs():
    out = run_script("ledger_sweep.py")
    assert "LevelLoweringForced" in out and "HypothesisFail" in out


def test_configs():
    assert LedgerSweepConfig().to_dict()["prime_p"] == 3
    with pytest.raises(ValueError):
        TreeCensusConfig(max_radius=-1)
