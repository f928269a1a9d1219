"""Reverse Young and Heinz inequalities in Loewner order on SPD pairs.

Each family builds the two sides of an operator inequality from weighted
means of one SPD pair and compares them through the smallest eigenvalue
of RHS - LHS.  The correction sums use exact dyadic weights such as
(2^(k-1)+1)/2^k, representable without rounding, and are accumulated from
k = n down to the first term before the dominant weighted-geometric-mean
term is added, so results are reproducible bit for bit.

The first correction term of the dyadic families is the operator image of
(1-v)(sqrt a - sqrt b)^2, namely 2(1-v)(A nabla B - A # B) with the
unweighted arithmetic mean; using the v-weighted mean there is provably
wrong (the 1x1 case already fails), so the unweighted form is used.

Note the weighted geometric mean of an SPD pair with v outside [0, 1] can
exceed both operands in Loewner order; no clamping is applied anywhere.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .matrices import (
    LOEWNER_REL_TOL,
    MatrixError,
    MeanCalculator,
    SpdMatrix,
    jacobi_eigh,
)
from .scalar import (
    _require_depth,
    _require_weight,
    _outside,
    window_dyadic_high,
    window_dyadic_low,
    window_sc_high,
    window_sc_low,
)

DEGENERATE_REL_TOL = 1e-13  # ||A - B||_F below this of ||A||_F short-circuits


@dataclass(frozen=True)
class OperatorBoundReport:
    """Loewner verdict for one operator bound instance."""

    family: str
    branch: str
    dim: int
    v: float
    n: int
    min_eig_gap: float
    tol: float
    hypothesis_ok: bool
    holds: bool
    degenerate: bool
    fingerprint_a: str
    fingerprint_b: str

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "branch": self.branch,
            "dim": self.dim,
            "v": self.v,
            "n": self.n,
            "min_eig_gap": self.min_eig_gap,
            "tol": self.tol,
            "hypothesis_ok": self.hypothesis_ok,
            "holds": self.holds,
            "degenerate": self.degenerate,
            "fingerprint_a": self.fingerprint_a,
            "fingerprint_b": self.fingerprint_b,
        }


def matrix_fingerprint(m: SpdMatrix) -> str:
    digest = hashlib.sha256()
    digest.update(str(m.dim).encode())
    digest.update(np.ascontiguousarray(m.entries).tobytes())
    return digest.hexdigest()[:16]


def _require_branch(branch: str) -> None:
    if branch not in ("i", "ii"):
        raise MatrixError(f"branch must be 'i' or 'ii', got {branch!r}")


def _finish(family, branch, a, b, v, n, lhs, rhs, hypothesis_ok) -> OperatorBoundReport:
    tol = LOEWNER_REL_TOL * (float(np.linalg.norm(lhs)) + float(np.linalg.norm(rhs)))
    diff = rhs - lhs
    gap = float(jacobi_eigh(diff).lam[0])
    return OperatorBoundReport(family, branch, a.dim, v, n, gap, tol,
                               hypothesis_ok, gap >= -tol, False,
                               matrix_fingerprint(a), matrix_fingerprint(b))


def _degenerate(family, branch, a, b, v, n, hypothesis_ok) -> Optional[OperatorBoundReport]:
    if not isinstance(a, SpdMatrix) or not isinstance(b, SpdMatrix):
        raise MatrixError("operator bounds require SpdMatrix operands")
    if a.dim != b.dim:
        raise MatrixError(f"dimension mismatch: {a.dim} vs {b.dim}")
    if float(np.linalg.norm(a.entries - b.entries)) <= DEGENERATE_REL_TOL * a.fro():
        tol = LOEWNER_REL_TOL * 2.0 * a.fro()
        return OperatorBoundReport(family, branch, a.dim, v, n, 0.0, tol,
                                   hypothesis_ok, True, True,
                                   matrix_fingerprint(a), matrix_fingerprint(b))
    return None


def theorem_t6(a: SpdMatrix, b: SpdMatrix, v: float, n: int,
               branch: str) -> OperatorBoundReport:
    """Dyadic-sum reverse bound: A nabla_v B <= A natural_v B + corrections.

    Branch "i" (v outside [1/2, (2^(n-1)+1)/2^n]) uses the high dyadic
    weights (2^(k-1)+1)/2^k; branch "ii" (v outside [(2^(n-1)-1)/2^n, 1/2])
    the low ones.  Requires n >= 2.
    """
    _require_weight(v)
    _require_depth(n, 2)
    _require_branch(branch)
    window = window_dyadic_high(n) if branch == "i" else window_dyadic_low(n)
    hyp = _outside(v, window)
    short = _degenerate("t6", branch, a, b, v, n, hyp)
    if short is not None:
        return short
    mc = MeanCalculator(a, b)
    sharp_half = mc.sharp_entries(0.5)
    nabla = mc.nabla_entries(0.5)
    corr = np.zeros_like(sharp_half)
    for k in range(n, 1, -1):
        if branch == "i":
            w_in = (2.0 ** (k - 1) + 1.0) / 2.0 ** k
            w_out = (2.0 ** (k - 2) + 1.0) / 2.0 ** (k - 1)
        else:
            w_in = (2.0 ** (k - 1) - 1.0) / 2.0 ** k
            w_out = (2.0 ** (k - 2) - 1.0) / 2.0 ** (k - 1)
        corr += 2.0 ** (k - 2) * (sharp_half - 2.0 * mc.sharp_entries(w_in)
                                  + mc.sharp_entries(w_out))
    lead = 2.0 * (1.0 - v) if branch == "i" else 2.0 * v
    sign = (2.0 * v - 1.0) if branch == "i" else (1.0 - 2.0 * v)
    rhs = lead * (nabla - sharp_half) + sign * corr
    rhs = rhs + mc.sharp_entries(v)
    lhs = mc.nabla_entries(v)
    return _finish("t6", branch, a, b, v, n, lhs, rhs, hyp)


def theorem_t66(a: SpdMatrix, b: SpdMatrix, v: float, n: int,
                branch: str) -> OperatorBoundReport:
    """One-sided reverse bound: A nabla_v B <= A natural_v B + weighted sum.

    Branch "i" (v outside [0, 1/2^n]) uses weights 1/2^k anchored at A;
    branch "ii" (v outside [(2^n-1)/2^n, 1]) the mirrored weights anchored
    at B.
    """
    _require_weight(v)
    _require_depth(n, 1)
    _require_branch(branch)
    window = window_sc_low(n) if branch == "i" else window_sc_high(n)
    hyp = _outside(v, window)
    short = _degenerate("t66", branch, a, b, v, n, hyp)
    if short is not None:
        return short
    mc = MeanCalculator(a, b)
    anchor = a.entries if branch == "i" else b.entries
    corr = np.zeros_like(anchor)
    for k in range(n, 0, -1):
        if branch == "i":
            w_in, w_out = 0.5 ** k, 0.5 ** (k - 1)
        else:
            w_in = (2.0 ** k - 1.0) / 2.0 ** k
            w_out = (2.0 ** (k - 1) - 1.0) / 2.0 ** (k - 1)
        corr += 2.0 ** (k - 1) * (anchor - 2.0 * mc.sharp_entries(w_in)
                                  + mc.sharp_entries(w_out))
    coef = v if branch == "i" else (1.0 - v)
    rhs = coef * corr + mc.sharp_entries(v)
    lhs = mc.nabla_entries(v)
    return _finish("t66", branch, a, b, v, n, lhs, rhs, hyp)


def corollary_c3(a: SpdMatrix, b: SpdMatrix, v: float, n: int,
                 branch: str) -> OperatorBoundReport:
    """Heinz form of the dyadic-sum bound: A nabla B <= Hhat_v + corrections.

    Hypothesis windows match theorem_t6; the correction replaces the
    geometric means with Heinz means at the same dyadic weights.
    Requires n >= 2.
    """
    _require_weight(v)
    _require_depth(n, 2)
    _require_branch(branch)
    window = window_dyadic_high(n) if branch == "i" else window_dyadic_low(n)
    hyp = _outside(v, window)
    short = _degenerate("c3", branch, a, b, v, n, hyp)
    if short is not None:
        return short
    mc = MeanCalculator(a, b)
    sharp_half = mc.sharp_entries(0.5)
    nabla = mc.nabla_entries(0.5)
    corr = np.zeros_like(sharp_half)
    for k in range(n, 1, -1):
        if branch == "i":
            w_in = (2.0 ** (k - 1) + 1.0) / 2.0 ** k
            w_out = (2.0 ** (k - 2) + 1.0) / 2.0 ** (k - 1)
        else:
            w_in = (2.0 ** (k - 1) - 1.0) / 2.0 ** k
            w_out = (2.0 ** (k - 2) - 1.0) / 2.0 ** (k - 1)
        corr += 2.0 ** (k - 2) * (sharp_half - 2.0 * mc.heinz_entries(w_in)
                                  + mc.heinz_entries(w_out))
    lead = 2.0 * (1.0 - v) if branch == "i" else 2.0 * v
    sign = (2.0 * v - 1.0) if branch == "i" else (1.0 - 2.0 * v)
    rhs = lead * (nabla - sharp_half) + sign * corr
    rhs = rhs + mc.heinz_entries(v)
    return _finish("c3", branch, a, b, v, n, nabla, rhs, hyp)


def corollary_c33(a: SpdMatrix, b: SpdMatrix, v: float, n: int,
                  branch: str) -> OperatorBoundReport:
    """Heinz form of the one-sided bound: A nabla B <= Hhat_v + weighted sum.

    Hypothesis windows match theorem_t66; the anchors are the unweighted
    arithmetic mean and the Heinz means at the mirrored dyadic weights.
    """
    _require_weight(v)
    _require_depth(n, 1)
    _require_branch(branch)
    window = window_sc_low(n) if branch == "i" else window_sc_high(n)
    hyp = _outside(v, window)
    short = _degenerate("c33", branch, a, b, v, n, hyp)
    if short is not None:
        return short
    mc = MeanCalculator(a, b)
    nabla = mc.nabla_entries(0.5)
    corr = np.zeros_like(nabla)
    for k in range(n, 0, -1):
        if branch == "i":
            w_in, w_out = 0.5 ** k, 0.5 ** (k - 1)
        else:
            w_in = (2.0 ** k - 1.0) / 2.0 ** k
            w_out = (2.0 ** (k - 1) - 1.0) / 2.0 ** (k - 1)
        corr += 2.0 ** (k - 1) * (nabla - 2.0 * mc.heinz_entries(w_in)
                                  + mc.heinz_entries(w_out))
    coef = v if branch == "i" else (1.0 - v)
    rhs = coef * corr + mc.heinz_entries(v)
    return _finish("c33", branch, a, b, v, n, nabla, rhs, hyp)


OPERATOR_FAMILIES = {
    "t6": theorem_t6,
    "t66": theorem_t66,
    "c3": corollary_c3,
    "c33": corollary_c33,
}

OPERATOR_MIN_DEPTH = {"t6": 2, "t66": 1, "c3": 2, "c33": 1}
