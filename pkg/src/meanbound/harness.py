"""Seeded randomized verification suites for the scalar and operator bounds.

Every trial derives its own generator substream from (seed, row key, trial
index), so identical configurations replay byte-identically and trials are
order-independent.  Suites never abort on a failing trial; every failure
is recorded with the full inputs needed to replay it without randomness.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import scalar
from .matrices import SpdMatrix
from .operators import OPERATOR_FAMILIES, OPERATOR_MIN_DEPTH
from .rng import Xoshiro256StarStar, derive_seed, fnv1a64
from .scalar import (
    BoundReport,
    window_dyadic_high,
    window_dyadic_low,
    window_sc_high,
    window_sc_low,
)


class ConfigError(ValueError):
    """Invalid suite configuration."""


class EmptyRegionError(ValueError):
    """A sampling region is empty after clipping to the configured range."""


# ---------------------------------------------------------------------------
# Weight-sampling regions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Region:
    """Admissible weight set: the inside or the complement of a closed window."""

    kind: str  # "inside" or "outside"
    lo: float
    hi: float

    def intervals(self, v_range: tuple, margin: float) -> list:
        """Clip to v_range, keeping samples `margin` away from window endpoints."""
        vlo, vhi = v_range
        if self.kind == "inside":
            pieces = [(max(vlo, self.lo + margin), min(vhi, self.hi - margin))]
        elif self.kind == "outside":
            pieces = [(vlo, min(vhi, self.lo - margin)),
                      (max(vlo, self.hi + margin), vhi)]
        else:
            raise ConfigError(f"unknown region kind {self.kind!r}")
        return [(lo, hi) for lo, hi in pieces if hi > lo]


def sample_weight(region: Region, v_range: tuple, margin: float,
                  rng: Xoshiro256StarStar) -> float:
    """Uniform draw over the clipped admissible set (up to two intervals)."""
    pieces = region.intervals(v_range, margin)
    total = sum(hi - lo for lo, hi in pieces)
    if total <= 0.0:
        raise EmptyRegionError(
            f"region {region.kind} [{region.lo}, {region.hi}] is empty after "
            f"clipping to {list(v_range)} with margin {margin}"
        )
    x = rng.random() * total
    for lo, hi in pieces:
        width = hi - lo
        if x < width or (lo, hi) == pieces[-1]:
            return lo + min(x, width)
        x -= width
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# Random SPD instances
# ---------------------------------------------------------------------------

def random_spd(dim: int, cond_max: float, rng: Xoshiro256StarStar) -> SpdMatrix:
    """Random SPD matrix Q diag(lam) Q^T with log-uniform spectrum.

    Q comes from the QR orthogonalization of a standard-Gaussian matrix
    (sign-normalized so the factorization is unique); the eigenvalues are
    log-uniform in [cond_max^-1/2, cond_max^1/2].  Fully determined by the
    generator state.
    """
    if dim < 1:
        raise ConfigError(f"dim must be >= 1, got {dim}")
    if cond_max < 1.0:
        raise ConfigError(f"cond_max must be >= 1, got {cond_max}")
    lo, hi = cond_max ** -0.5, cond_max ** 0.5
    if dim == 1:
        entries = np.array([[rng.log_uniform(lo, hi)]])
        entries.setflags(write=False)
        return SpdMatrix._trusted(entries)
    values = []
    while len(values) < dim * dim:
        values.extend(rng.gauss_pair())
    gauss = np.array(values[: dim * dim]).reshape(dim, dim)
    q, r = np.linalg.qr(gauss)
    signs = np.sign(np.diag(r))
    signs[signs == 0.0] = 1.0
    q = q * signs
    lam = np.array([rng.log_uniform(lo, hi) for _ in range(dim)])
    entries = (q * lam) @ q.T
    entries = 0.5 * (entries + entries.T)
    entries.setflags(write=False)
    # the factorization is recomputed from the entries on first use, so a
    # matrix rebuilt from a failure record replays through the same path
    return SpdMatrix._trusted(entries)


# ---------------------------------------------------------------------------
# Suite configuration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 42
    trials: int = 1000
    scalar_range: tuple = (1e-3, 1e3)
    v_range: tuple = (-6.0, 6.0)
    dims: tuple = (1, 2, 4, 8)
    cond_max: float = 1e4
    depths: tuple = (1, 2, 3, 4, 5, 6)
    families: tuple = ("all",)
    margin: float = 1e-6
    rel_tol: float = scalar.REL_TOL
    loewner_rel: float = 1e-8
    grid_points: int = 50
    boundary_probe: bool = False

    def validate(self) -> None:
        if not isinstance(self.seed, int) or self.seed < 0 or self.seed >= 2 ** 64:
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if not isinstance(self.trials, int) or self.trials < 1:
            raise ConfigError(f"trials must be >= 1, got {self.trials!r}")
        lo, hi = self.scalar_range
        if not (0.0 < lo < hi) or not math.isfinite(hi):
            raise ConfigError(f"scalar_range must satisfy 0 < lo < hi, got {self.scalar_range}")
        vlo, vhi = self.v_range
        if not (vlo < vhi) or not (math.isfinite(vlo) and math.isfinite(vhi)):
            raise ConfigError(f"v_range must satisfy lo < hi, got {self.v_range}")
        if not self.dims or any((not isinstance(d, int)) or d < 1 for d in self.dims):
            raise ConfigError(f"dims must be positive integers, got {self.dims}")
        if self.cond_max < 1.0:
            raise ConfigError(f"cond_max must be >= 1, got {self.cond_max}")
        if not self.depths or any(
            (not isinstance(n, int)) or n < 1 or n > scalar.MAX_DEPTH for n in self.depths
        ):
            raise ConfigError(f"depths must lie in 1..{scalar.MAX_DEPTH}, got {self.depths}")
        if self.margin < 0.0:
            raise ConfigError(f"margin must be >= 0, got {self.margin}")
        if self.rel_tol < 0.0 or self.loewner_rel < 0.0:
            raise ConfigError("tolerances must be >= 0")
        if self.grid_points < 2:
            raise ConfigError(f"grid_points must be >= 2, got {self.grid_points}")
        unknown = [f for f in self.families if f not in _KNOWN_FAMILY_SELECTORS]
        if unknown:
            raise ConfigError(f"unknown families: {unknown}; known: "
                              f"{sorted(_KNOWN_FAMILY_SELECTORS)}")

    def as_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "scalar_range": list(self.scalar_range),
            "v_range": list(self.v_range),
            "dims": list(self.dims),
            "cond_max": self.cond_max,
            "depths": list(self.depths),
            "families": list(self.families),
            "margin": self.margin,
            "rel_tol": self.rel_tol,
            "loewner_rel": self.loewner_rel,
            "grid_points": self.grid_points,
            "boundary_probe": self.boundary_probe,
        }


# ---------------------------------------------------------------------------
# Family registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyRow:
    key: str
    family: str
    branch: str
    min_depth: Optional[int]  # None: the family takes no depth
    region: Callable
    probe: Callable
    evaluate: Callable
    ops: tuple


def _rows_scalar() -> list:
    s = scalar
    base = ("young_lhs", "weighted_geometric")
    idx = ("sababheh_indices", "refinement_sum_S")
    rows = [
        FamilyRow("reverse-young-basic", "reverse-young-basic", "", None,
                  lambda n: Region("outside", 0.0, 1.0),
                  lambda n: (0.0, 1.0),
                  lambda a, b, v, n: s.reverse_young_basic(a, b, v),
                  ("reverse_young_basic",) + base),
        FamilyRow("corollary-one-term/i", "corollary-one-term", "i", None,
                  lambda n: Region("outside", 0.0, 0.5),
                  lambda n: (0.0, 0.5),
                  lambda a, b, v, n: s.corollary_one_term(a, b, v, "i"),
                  ("corollary_one_term",) + base),
        FamilyRow("corollary-one-term/ii", "corollary-one-term", "ii", None,
                  lambda n: Region("outside", 0.5, 1.0),
                  lambda n: (0.5, 1.0),
                  lambda a, b, v, n: s.corollary_one_term(a, b, v, "ii"),
                  ("corollary_one_term",) + base),
        FamilyRow("theorem-main-reverse/i", "theorem-main-reverse", "i", 1,
                  lambda n: Region("outside", *window_dyadic_high(n)),
                  lambda n: window_dyadic_high(n),
                  lambda a, b, v, n: s.theorem_main_reverse(a, b, v, n, "i"),
                  ("theorem_main_reverse",) + base),
        FamilyRow("theorem-main-reverse/ii", "theorem-main-reverse", "ii", 1,
                  lambda n: Region("outside", *window_dyadic_low(n)),
                  lambda n: window_dyadic_low(n),
                  lambda a, b, v, n: s.theorem_main_reverse(a, b, v, n, "ii"),
                  ("theorem_main_reverse",) + base),
        FamilyRow("lemma-sm-reverse/i", "lemma-sm-reverse", "i", 1,
                  lambda n: Region("inside", 0.0, 0.5),
                  lambda n: (0.5,),
                  lambda a, b, v, n: s.lemma_sm_reverse(a, b, v, n, "i"),
                  ("lemma_sm_reverse",) + idx + base),
        FamilyRow("lemma-sm-reverse/ii", "lemma-sm-reverse", "ii", 1,
                  lambda n: Region("inside", 0.5, 1.0),
                  lambda n: (0.5,),
                  lambda a, b, v, n: s.lemma_sm_reverse(a, b, v, n, "ii"),
                  ("lemma_sm_reverse",) + idx + base),
        FamilyRow("kittaneh-manasrah", "kittaneh-manasrah", "", None,
                  lambda n: Region("inside", 0.0, 1.0),
                  lambda n: (0.0, 1.0),
                  lambda a, b, v, n: s.kittaneh_manasrah(a, b, v),
                  ("kittaneh_manasrah",) + base),
        FamilyRow("zhao-wu-forward", "zhao-wu-forward", "", None,
                  lambda n: Region("inside", 0.0, 1.0),
                  lambda n: (0.0, 1.0),
                  lambda a, b, v, n: s.zhao_wu_forward(a, b, v),
                  ("zhao_wu_forward",) + base),
        FamilyRow("zhao-wu-reverse/lemma", "zhao-wu-reverse", "lemma", None,
                  lambda n: Region("inside", 0.0, 1.0),
                  lambda n: (),
                  lambda a, b, v, n: s.zhao_wu_reverse(a, b, v, "lemma"),
                  ("zhao_wu_reverse",) + base),
        FamilyRow("zhao-wu-reverse/proposition", "zhao-wu-reverse", "proposition", None,
                  lambda n: Region("inside", 0.0, 1.0),
                  lambda n: (),
                  lambda a, b, v, n: s.zhao_wu_reverse(a, b, v, "proposition"),
                  ("zhao_wu_reverse",) + base),
        FamilyRow("sababheh-choi-forward", "sababheh-choi-forward", "", 1,
                  lambda n: Region("inside", 0.0, 1.0),
                  lambda n: (0.0, 1.0),
                  lambda a, b, v, n: s.sababheh_choi_forward(a, b, v, n),
                  ("sababheh_choi_forward",) + idx + base),
        FamilyRow("theorem-extended-sc/i", "theorem-extended-sc", "i", 1,
                  lambda n: Region("outside", *window_sc_low(n)),
                  lambda n: window_sc_low(n),
                  lambda a, b, v, n: s.theorem_extended_sc(a, b, v, n, "i"),
                  ("theorem_extended_sc",) + base),
        FamilyRow("theorem-extended-sc/ii", "theorem-extended-sc", "ii", 1,
                  lambda n: Region("outside", *window_sc_high(n)),
                  lambda n: window_sc_high(n),
                  lambda a, b, v, n: s.theorem_extended_sc(a, b, v, n, "ii"),
                  ("theorem_extended_sc",) + base),
        FamilyRow("heinz-reverse-main/i", "heinz-reverse-main", "i", 2,
                  lambda n: Region("outside", *window_dyadic_high(n)),
                  lambda n: window_dyadic_high(n),
                  lambda a, b, v, n: s.heinz_reverse_main(a, b, v, n, "i"),
                  ("heinz_reverse_main", "heinz_scalar") + base),
        FamilyRow("heinz-reverse-main/ii", "heinz-reverse-main", "ii", 2,
                  lambda n: Region("outside", *window_dyadic_low(n)),
                  lambda n: window_dyadic_low(n),
                  lambda a, b, v, n: s.heinz_reverse_main(a, b, v, n, "ii"),
                  ("heinz_reverse_main", "heinz_scalar") + base),
        FamilyRow("heinz-reverse-sc/i", "heinz-reverse-sc", "i", 1,
                  lambda n: Region("outside", *window_sc_low(n)),
                  lambda n: window_sc_low(n),
                  lambda a, b, v, n: s.heinz_reverse_sc(a, b, v, n, "i"),
                  ("heinz_reverse_sc", "heinz_scalar") + base),
        FamilyRow("heinz-reverse-sc/ii", "heinz-reverse-sc", "ii", 1,
                  lambda n: Region("outside", *window_sc_high(n)),
                  lambda n: window_sc_high(n),
                  lambda a, b, v, n: s.heinz_reverse_sc(a, b, v, n, "ii"),
                  ("heinz_reverse_sc", "heinz_scalar") + base),
    ]
    return rows


def _rows_operator() -> list:
    windows = {
        ("t6", "i"): window_dyadic_high, ("t6", "ii"): window_dyadic_low,
        ("t66", "i"): window_sc_low, ("t66", "ii"): window_sc_high,
        ("c3", "i"): window_dyadic_high, ("c3", "ii"): window_dyadic_low,
        ("c33", "i"): window_sc_low, ("c33", "ii"): window_sc_high,
    }
    op_names = {"t6": "theorem_t6", "t66": "theorem_t66",
                "c3": "corollary_c3", "c33": "corollary_c33"}
    rows = []
    for fam in ("t6", "t66", "c3", "c33"):
        for branch in ("i", "ii"):
            window = windows[(fam, branch)]
            rows.append(FamilyRow(
                f"{fam}/{branch}", fam, branch, OPERATOR_MIN_DEPTH[fam],
                lambda n, _w=window: Region("outside", *_w(n)),
                lambda n, _w=window: _w(n),
                lambda a, b, v, n, _fn=OPERATOR_FAMILIES[fam], _br=branch:
                    _fn(a, b, v, n, _br),
                (op_names[fam],),
            ))
    return rows


SCALAR_ROWS = _rows_scalar()
OPERATOR_ROWS = _rows_operator()

_SCALAR_FAMILY_NAMES = {row.family for row in SCALAR_ROWS}
_OPERATOR_FAMILY_NAMES = {row.family for row in OPERATOR_ROWS} | {
    "theorem-t6", "theorem-t66", "corollary-c3", "corollary-c33"}
_KNOWN_FAMILY_SELECTORS = (
    {"all", "scalar", "operator", "comparison"}
    | _SCALAR_FAMILY_NAMES | _OPERATOR_FAMILY_NAMES
    | {row.key for row in SCALAR_ROWS} | {row.key for row in OPERATOR_ROWS}
)

_OPERATOR_ALIASES = {"theorem-t6": "t6", "theorem-t66": "t66",
                     "corollary-c3": "c3", "corollary-c33": "c33"}


def _selected(cfg: SuiteConfig, rows: list, kind: str) -> list:
    wanted = {_OPERATOR_ALIASES.get(name, name) for name in cfg.families}
    if "all" in wanted:
        return rows
    return [row for row in rows
            if kind in wanted or row.family in wanted or row.key in wanted]


def _comparison_selected(cfg: SuiteConfig) -> bool:
    return bool({"all", "comparison"} & set(cfg.families))


# ---------------------------------------------------------------------------
# Results
# ---------------------------------------------------------------------------

@dataclass
class RowResult:
    key: str
    family: str
    branch: str
    trials: int
    passes: int
    failures: int
    skipped: int
    worst_gap: Optional[float]
    failure_records: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "key": self.key,
            "family": self.family,
            "branch": self.branch,
            "trials": self.trials,
            "passes": self.passes,
            "failures": self.failures,
            "skipped": self.skipped,
            "worst_gap": self.worst_gap,
        }


@dataclass
class SuiteReport:
    kind: str
    config: dict
    rows: list
    coverage: dict
    wall_time_s: float

    @property
    def total_failures(self) -> int:
        return sum(row.failures for row in self.rows)

    def all_failure_records(self) -> list:
        records = []
        for row in self.rows:
            records.extend(row.failure_records)
        return records

    def to_doc(self, include_wall_time: bool = True) -> dict:
        from . import __version__

        doc = {
            "tool_version": __version__,
            "kind": self.kind,
            "config": self.config,
            "results": [row.as_dict() for row in self.rows],
            "failures": self.all_failure_records(),
            "coverage": {key: self.coverage[key] for key in sorted(self.coverage)},
        }
        if include_wall_time:
            doc["wall_time_s"] = self.wall_time_s
        return doc


def merge_reports(kind: str, reports: list) -> SuiteReport:
    rows, coverage = [], {}
    config = reports[0].config if reports else {}
    wall = 0.0
    for rep in reports:
        rows.extend(rep.rows)
        wall += rep.wall_time_s
        for op, count in rep.coverage.items():
            coverage[op] = coverage.get(op, 0) + count
    return SuiteReport(kind, config, rows, coverage, wall)


# ---------------------------------------------------------------------------
# Suite runners
# ---------------------------------------------------------------------------

def _depth_candidates(cfg: SuiteConfig, row: FamilyRow) -> list:
    if row.min_depth is None:
        return [None]
    candidates = [n for n in cfg.depths if n >= row.min_depth]
    if not candidates:
        raise ConfigError(
            f"row {row.key} requires depth >= {row.min_depth}; none in {cfg.depths}")
    return candidates


def run_scalar_suite(cfg: SuiteConfig) -> SuiteReport:
    """Sample each scalar row inside its hypothesis region and collect verdicts.

    A trial fails iff the hypothesis held and the oriented gap fell below
    -rel_tol * (|lhs| + |rhs|); evaluation errors are failures with a cause.
    """
    cfg.validate()
    start = time.perf_counter()
    rows_out, coverage = [], {}
    for row in _selected(cfg, SCALAR_ROWS, "scalar"):
        result = _run_scalar_row(cfg, row, coverage)
        rows_out.append(result)
    return SuiteReport("scalar", cfg.as_dict(), rows_out, coverage,
                       time.perf_counter() - start)


def _run_scalar_row(cfg: SuiteConfig, row: FamilyRow, coverage: dict) -> RowResult:
    depths = _depth_candidates(cfg, row)
    row_hash = fnv1a64("scalar/" + row.key)
    lo, hi = cfg.scalar_range
    passes = failures = skipped = 0
    worst: Optional[float] = None
    records: list = []
    probing = cfg.boundary_probe
    for trial in range(cfg.trials):
        rng = Xoshiro256StarStar(derive_seed(cfg.seed, row_hash, trial))
        n = depths[rng.randint(len(depths))] if len(depths) > 1 else depths[0]
        a = rng.log_uniform(lo, hi)
        b = rng.log_uniform(lo, hi)
        if probing:
            points = row.probe(n)
            if not points:
                skipped += 1
                continue
            v = points[rng.randint(len(points))] if len(points) > 1 else points[0]
        else:
            try:
                v = sample_weight(row.region(n), cfg.v_range, cfg.margin, rng)
            except EmptyRegionError:
                # hypothesis region unreachable in the configured v range
                skipped += 1
                continue
        try:
            rep = row.evaluate(a, b, v, n)
        except Exception as exc:  # recorded, never fatal
            failures += 1
            records.append({"row": row.key, "trial": trial, "a": a, "b": b,
                            "v": v, "n": n, "gap": None,
                            "cause": f"{type(exc).__name__}: {exc}"})
            continue
        tau = cfg.rel_tol * (abs(rep.lhs) + abs(rep.rhs))
        if probing:
            ok = abs(rep.gap) <= tau
        elif not rep.hypothesis_ok:
            skipped += 1
            continue
        else:
            ok = rep.gap >= -tau
        if ok:
            passes += 1
            worst = rep.gap if worst is None else min(worst, rep.gap)
        else:
            failures += 1
            records.append({"row": row.key, "trial": trial, "a": a, "b": b,
                            "v": v, "n": n, "gap": rep.gap, "cause": "gap below tolerance"})
    for op in row.ops:
        coverage[op] = coverage.get(op, 0) + cfg.trials
    return RowResult(row.key, row.family, row.branch, cfg.trials, passes,
                     failures, skipped, worst, records)


def run_operator_suite(cfg: SuiteConfig) -> SuiteReport:
    """Sample random SPD pairs for each operator row and collect Loewner verdicts."""
    cfg.validate()
    start = time.perf_counter()
    rows_out, coverage = [], {}
    for row in _selected(cfg, OPERATOR_ROWS, "operator"):
        result = _run_operator_row(cfg, row, coverage)
        rows_out.append(result)
    return SuiteReport("operator", cfg.as_dict(), rows_out, coverage,
                       time.perf_counter() - start)


def _run_operator_row(cfg: SuiteConfig, row: FamilyRow, coverage: dict) -> RowResult:
    depths = _depth_candidates(cfg, row)
    row_hash = fnv1a64("operator/" + row.key)
    passes = failures = skipped = 0
    worst: Optional[float] = None
    records: list = []
    probing = cfg.boundary_probe
    for trial in range(cfg.trials):
        rng = Xoshiro256StarStar(derive_seed(cfg.seed, row_hash, trial))
        dim = cfg.dims[rng.randint(len(cfg.dims))] if len(cfg.dims) > 1 else cfg.dims[0]
        n = depths[rng.randint(len(depths))] if len(depths) > 1 else depths[0]
        if probing:
            points = row.probe(n)
            if not points:
                skipped += 1
                continue
            v = points[rng.randint(len(points))] if len(points) > 1 else points[0]
        else:
            try:
                v = sample_weight(row.region(n), cfg.v_range, cfg.margin, rng)
            except EmptyRegionError:
                skipped += 1
                continue
        mat_a = random_spd(dim, cfg.cond_max, rng)
        mat_b = random_spd(dim, cfg.cond_max, rng)
        try:
            rep = row.evaluate(mat_a, mat_b, v, n)
        except Exception as exc:
            failures += 1
            records.append({"row": row.key, "trial": trial, "dim": dim, "v": v,
                            "n": n, "min_eig_gap": None,
                            "matrix_a": mat_a.entries.tolist(),
                            "matrix_b": mat_b.entries.tolist(),
                            "cause": f"{type(exc).__name__}: {exc}"})
            continue
        tol = rep.tol * (cfg.loewner_rel / 1e-8)
        if probing:
            ok = rep.degenerate or abs(rep.min_eig_gap) <= tol
        elif not rep.hypothesis_ok:
            skipped += 1
            continue
        else:
            ok = rep.degenerate or rep.min_eig_gap >= -tol
        if ok:
            passes += 1
            worst = rep.min_eig_gap if worst is None else min(worst, rep.min_eig_gap)
        else:
            failures += 1
            records.append({"row": row.key, "trial": trial, "dim": dim, "v": v,
                            "n": n, "min_eig_gap": rep.min_eig_gap,
                            "matrix_a": mat_a.entries.tolist(),
                            "matrix_b": mat_b.entries.tolist(),
                            "cause": "min eigenvalue below tolerance"})
    for op in row.ops:
        coverage[op] = coverage.get(op, 0) + cfg.trials
    return RowResult(row.key, row.family, row.branch, cfg.trials, passes,
                     failures, skipped, worst, records)


def replay_scalar_failure(record: dict) -> BoundReport:
    """Re-run a recorded scalar failure from its inputs alone (no randomness)."""
    row = next(r for r in SCALAR_ROWS if r.key == record["row"])
    return row.evaluate(record["a"], record["b"], record["v"], record["n"])


def replay_operator_failure(record: dict):
    """Re-run a recorded operator failure from its recorded matrices."""
    row = next(r for r in OPERATOR_ROWS if r.key == record["row"])
    mat_a = SpdMatrix.from_entries(record["matrix_a"])
    mat_b = SpdMatrix.from_entries(record["matrix_b"])
    return row.evaluate(mat_a, mat_b, record["v"], record["n"])


# ---------------------------------------------------------------------------
# Grid-based comparison suite
# ---------------------------------------------------------------------------

def _log_grid(lo: float, hi: float, count: int) -> list:
    llo, lhi = math.log10(lo), math.log10(hi)
    return [10.0 ** (llo + (lhi - llo) * i / (count - 1)) for i in range(count)]


def _lin_grid(lo: float, hi: float, count: int) -> list:
    return [lo + (hi - lo) * i / (count - 1) for i in range(count)]


def _claim_dominance(key, tighter, looser, v_window, ops):
    """Grid claim: tighter(t, v) <= looser(t, v) on the ratio grid x v window."""

    def runner(cfg: SuiteConfig):
        for t in _log_grid(*cfg.scalar_range, cfg.grid_points):
            for v in _lin_grid(*v_window, cfg.grid_points):
                low = tighter(1.0, t, v)
                high = looser(1.0, t, v)
                margin = high - low
                ok = margin >= -1e-9 * (abs(low) + abs(high))
                yield ok, margin, {"ratio": t, "v": v, "tighter": low, "looser": high}

    return key, ops, runner


def _poly_grid_claim(key, poly, op):
    """Nonnegativity of a comparison polynomial, with its minimum pinned at x=1."""

    def runner(cfg: SuiteConfig):
        xs = sorted(set(_log_grid(1e-2, 1e2, cfg.grid_points - 1)) | {1.0})
        for v in _lin_grid(0.75, 1.0, cfg.grid_points):
            values = [poly(x, v) for x in xs]
            best = min(range(len(xs)), key=lambda i: values[i])
            for x, val in zip(xs, values):
                scale = _poly_scale(x, v)
                yield val >= -1e-12 * scale, val, {"x": x, "v": v, "value": val}
            at_one = values[xs.index(1.0)]
            ok = xs[best] == 1.0 and abs(at_one) <= 1e-12
            yield ok, at_one, {"x": 1.0, "v": v, "min_at": xs[best], "value_at_one": at_one}

    return key, (op,), runner


def _poly_scale(x: float, v: float) -> float:
    return 20.0 * max(1.0, x) ** 6 * max(1.0, abs(v))


def _claim_quartic(cfg: SuiteConfig):
    # (4v-3) + (3-8v) t^(1/2) + (4-4v) t^(1/4) + (8v-4) t^(5/8) >= 0,
    # t > 0, v in [3/4, 1] (the ratio form of the quintic comparison check)
    for t in _log_grid(*cfg.scalar_range, cfg.grid_points):
        for v in _lin_grid(0.75, 1.0, cfg.grid_points):
            terms = ((4.0 * v - 3.0), (3.0 - 8.0 * v) * t ** 0.5,
                     (4.0 - 4.0 * v) * t ** 0.25, (8.0 * v - 4.0) * t ** 0.625)
            value = sum(terms)
            scale = sum(abs(term) for term in terms)
            yield value >= -1e-9 * (scale + 1.0), value, {"t": t, "v": v, "value": value}


def _claim_factorizations(cfg: SuiteConfig):
    xs = sorted(set(_log_grid(1e-2, 1e2, cfg.grid_points - 1)) | {1.0})
    for x in xs:
        f_val = scalar.comparison_poly_f(x, 0.75)
        f_ref = x * x * (x - 1.0) ** 2 * (2.0 * x + 1.0)
        ok = abs(f_val - f_ref) <= 1e-12 * _poly_scale(x, 0.75)
        yield ok, f_val - f_ref, {"poly": "f", "x": x, "value": f_val, "reference": f_ref}
        g_val = scalar.comparison_poly_g(x, 0.75)
        g_ref = (x - 1.0) ** 2 * (x ** 4 + x ** 3 + 1.5 * x * x + x + 0.5)
        ok = abs(g_val - g_ref) <= 1e-12 * _poly_scale(x, 0.75)
        yield ok, g_val - g_ref, {"poly": "g", "x": x, "value": g_val, "reference": g_ref}


def _claim_limit_delta(cfg: SuiteConfig):
    # Halving rate of the dyadic-root gap, plus the standard remainder bound.
    for exponent in _lin_grid(-2.0, 2.0, 8):
        ratio = 10.0 ** exponent
        log_ratio = math.log(ratio)
        deltas = {n: scalar.log_limit_gap(1.0, ratio, n) for n in range(5, 21)}
        for n in range(5, 20):
            rate = deltas[n] / deltas[n + 1]
            ok = rate >= 1.9 and deltas[n] <= log_ratio ** 2 * 2.0 ** (1 - n)
            yield ok, rate, {"ratio": ratio, "n": n, "delta": deltas[n], "rate": rate}


def _claim_limit_log(cfg: SuiteConfig):
    xs = sorted(set(_log_grid(1e-2, 1e2, cfg.grid_points - 1))
                | {1.0, 1.0 - 1e-9, 1.0 + 1e-9})
    for x in xs:
        slack = scalar.fundamental_log_slack(x)
        ok = slack >= 0.0 and (slack >= 1e-12 or abs(x - 1.0) < 1e-6)
        yield ok, slack, {"x": x, "slack": slack}
    for exponent in _lin_grid(-2.0, 2.0, 8):
        ratio = 10.0 ** exponent
        for v in _lin_grid(-6.0, 6.0, 25):
            slack = scalar.limit_inequality_slack(1.0, ratio, v)
            x = math.exp((v - 0.5) * math.log(ratio))
            ok = slack >= 0.0 and (slack >= 1e-12 or abs(x - 1.0) < 1e-6)
            yield ok, slack, {"ratio": ratio, "v": v, "slack": slack}


def _claim_bound_validity(cfg: SuiteConfig):
    # Every hypothesis-valid gap bound must dominate the true gap, and the
    # reported dominance pairs must be internally consistent.
    for t in _log_grid(*cfg.scalar_range, 20):
        for v in _lin_grid(0.0, 1.0, 21):
            rep = scalar.compare_gap_bounds(1.0, t, v, n=3)
            ok = True
            worst = math.inf
            for bound in rep.bounds:
                if not bound.hypothesis_ok:
                    continue
                slack = bound.value - rep.true_gap
                worst = min(worst, slack)
                if slack < (-1e-9 * (abs(bound.value) + abs(rep.true_gap))
                            - 1e-13 * (1.0 + t)):
                    ok = False
            values = {g.label: g.value for g in rep.bounds}
            for tighter, looser, margin in rep.dominance:
                if values[looser] - values[tighter] < -1e-12 * (
                        abs(values[looser]) + abs(values[tighter])):
                    ok = False
            yield ok, (None if worst is math.inf else worst), {"ratio": t, "v": v}


def _gb_t2(branch: str, depth: int):
    if branch == "i":
        return lambda a, b, v: scalar.gap_bound_main_reverse(a, b, v, depth)
    return lambda a, b, v: scalar.gap_bound_main_reverse(b, a, 1.0 - v, depth)


def _gb_sm(branch: str, depth: int):
    if branch == "i":
        return lambda a, b, v: scalar.gap_bound_sm_reverse(a, b, v, depth)
    return lambda a, b, v: scalar.gap_bound_sm_reverse(b, a, 1.0 - v, depth)


def _comparison_claims() -> list:
    gb_prop = lambda a, b, v: scalar.gap_bound_zw_proposition(a, b, v)
    t2_ops = ("theorem_main_reverse", "compare_gap_bounds")
    zw_ops = ("zhao_wu_reverse",)
    sm_ops = ("lemma_sm_reverse", "refinement_sum_S", "sababheh_indices")
    claims = [
        _claim_dominance("dominance/a1-low", _gb_t2("i", 3), gb_prop, (0.0, 0.25),
                         t2_ops + zw_ops),
        _claim_dominance("dominance/a1-high", _gb_t2("i", 3), gb_prop, (0.25, 0.5),
                         t2_ops + zw_ops),
        _claim_dominance("dominance/a2", _gb_t2("i", 3), gb_prop, (0.625, 0.75),
                         t2_ops + zw_ops),
        _claim_dominance("dominance/a3", _gb_t2("i", 3), gb_prop, (0.75, 1.0),
                         t2_ops + zw_ops),
        _claim_dominance("dominance/b1", _gb_t2("ii", 3), gb_prop, (0.0, 0.25),
                         t2_ops + zw_ops),
        _claim_dominance("dominance/b2", _gb_t2("ii", 3), gb_prop, (0.25, 0.375),
                         t2_ops + zw_ops),
        _claim_dominance("dominance/b3-low", _gb_t2("ii", 3), gb_prop, (0.5, 0.75),
                         t2_ops + zw_ops),
        _claim_dominance("dominance/b3-high", _gb_t2("ii", 3), gb_prop, (0.75, 1.0),
                         t2_ops + zw_ops),
        _claim_dominance("dominance/sm-refines-dyadic", _gb_sm("i", 2),
                         _gb_t2("i", 2), (0.25, 0.5), t2_ops + sm_ops),
        _claim_dominance("dominance/dyadic-recovers-sm", _gb_t2("i", 2),
                         _gb_sm("ii", 2), (0.75, 1.0), t2_ops + sm_ops),
        _poly_grid_claim("poly/f-grid", scalar.comparison_poly_f, "comparison_poly_f"),
        _poly_grid_claim("poly/g-grid", scalar.comparison_poly_g, "comparison_poly_g"),
        ("poly/ratio-quartic", ("comparison_poly_f",), _claim_quartic),
        ("poly/factorizations", ("comparison_poly_f", "comparison_poly_g"),
         _claim_factorizations),
        ("limit/delta-decay", ("log_limit_gap",), _claim_limit_delta),
        ("limit/log-inequality", ("log_limit_gap",), _claim_limit_log),
        ("compare/bound-validity",
         ("compare_gap_bounds", "theorem_main_reverse", "lemma_sm_reverse",
          "zhao_wu_reverse", "corollary_one_term", "refinement_sum_S",
          "sababheh_indices", "young_lhs", "weighted_geometric"),
         _claim_bound_validity),
    ]
    return claims


def run_comparison_suite(cfg: SuiteConfig) -> SuiteReport:
    """Grid checks of the stated orderings between bound families, the
    comparison polynomials, and the logarithmic limit behavior."""
    cfg.validate()
    start = time.perf_counter()
    rows_out, coverage = [], {}
    for key, ops, runner in _comparison_claims():
        trials = passes = failures = 0
        worst: Optional[float] = None
        records: list = []
        for ok, margin, cell in runner(cfg):
            trials += 1
            if ok:
                passes += 1
                if margin is not None:
                    worst = margin if worst is None else min(worst, margin)
            else:
                failures += 1
                record = {"row": key, "trial": trials - 1}
                record.update(cell)
                record["cause"] = "claim violated"
                records.append(record)
        for op in ops:
            coverage[op] = coverage.get(op, 0) + trials
        rows_out.append(RowResult(key, "comparison", "", trials, passes,
                                  failures, 0, worst, records))
    return SuiteReport("comparison", cfg.as_dict(), rows_out, coverage,
                       time.perf_counter() - start)


def run_all(cfg: SuiteConfig) -> SuiteReport:
    """Run the scalar, operator, and comparison suites selected by cfg.families."""
    cfg.validate()
    reports = []
    if _selected(cfg, SCALAR_ROWS, "scalar"):
        reports.append(run_scalar_suite(cfg))
    if _selected(cfg, OPERATOR_ROWS, "operator"):
        reports.append(run_operator_suite(cfg))
    if _comparison_selected(cfg):
        reports.append(run_comparison_suite(cfg))
    merged = merge_reports("all", reports)
    merged.config = cfg.as_dict()
    return merged
