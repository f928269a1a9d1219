#!/usr/bin/env python3
"""Tour of the randomized verification harness.

Configures seeded suites over the scalar and operator families, runs the
grid-based comparison claims, demonstrates byte-identical reports for a
fixed seed, and shows how a recorded trial replays without randomness.
"""

import json
import tempfile

from meanbound import SuiteConfig, run_all, run_comparison_suite, run_scalar_suite
from meanbound.harness import SCALAR_ROWS, replay_scalar_failure
from meanbound.reporting import dumps

cfg = SuiteConfig(seed=42, trials=250, grid_points=25)
print("=" * 72)
print(f"Suite configuration: seed={cfg.seed}, trials/row={cfg.trials}, "
      f"v in {list(cfg.v_range)}, operands in {list(cfg.scalar_range)}")
print("=" * 72)

report = run_scalar_suite(cfg)
print(f"scalar suite: {len(report.rows)} rows, "
      f"{sum(r.trials for r in report.rows)} trials, "
      f"{report.total_failures} failures, {report.wall_time_s:.2f}s")
for row in report.rows[:6]:
    print(f"  {row.key:28s} passes={row.passes:4d} worst_gap={row.worst_gap:.4g}")
print("  ...")
print()

comparison = run_comparison_suite(SuiteConfig(trials=1, grid_points=30))
print(f"comparison suite: {len(comparison.rows)} claims, "
      f"{sum(r.trials for r in comparison.rows)} grid cells, "
      f"{comparison.total_failures} violations")
print()

print("Determinism: identical configurations serialize byte-identically")
doc_a = dumps(run_all(SuiteConfig(seed=7, trials=40, grid_points=10))
              .to_doc(include_wall_time=False))
doc_b = dumps(run_all(SuiteConfig(seed=7, trials=40, grid_points=10))
              .to_doc(include_wall_time=False))
print(f"  report bytes equal: {doc_a == doc_b} ({len(doc_a)} bytes)")
print()

print("Every trial is replayable from its recorded inputs, no RNG needed:")
record = {"row": "theorem-main-reverse/i", "a": 1.0, "b": 16.0, "v": 0.125, "n": 2}
replayed = replay_scalar_failure(record)
print(f"  {record} -> gap={replayed.gap:.12f}")
print()

with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as handle:
    handle.write(dumps(report.to_doc()))
    path = handle.name
doc = json.loads(open(path).read())
print(f"JSON report written to {path}")
print(f"  top-level keys: {sorted(doc)}")
print(f"  coverage spans {len(doc['coverage'])} operations, for example "
      f"theorem_main_reverse x{doc['coverage']['theorem_main_reverse']}")
