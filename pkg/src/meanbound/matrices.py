"""Symmetric positive-definite matrices: spectral factorization by cyclic
Jacobi rotations, fractional powers, weighted operator means, and the
Loewner partial order.

The eigensolver is a plain cyclic Jacobi iteration.  At the desk scales
this library targets (dim <= 64) it is unconditionally stable, preserves
symmetry exactly, and resolves small eigenvalues with high relative
accuracy, which is what Loewner verdicts are sensitive to.

All matrices are dense float64.  Every operation that returns a matrix
symmetrizes its result and asserts the pre-symmetrization residual is
within 1e-10 of the Frobenius norm; freshly parsed input is held to the
tighter 1e-12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .scalar import DomainError, _require_weight

SYM_INPUT_TOL = 1e-12      # constructor / parser symmetry tolerance
SYM_OP_TOL = 1e-10         # internal operation symmetry tolerance
SPD_MIN_EIG_FACTOR = 1e-14  # from_entries rejects min eig <= dim * factor * ||A||_2
EIGH_REL_TOL = 1e-13       # Jacobi off-diagonal convergence target
EIGH_MAX_SWEEPS = 30
LOEWNER_REL_TOL = 1e-8     # default Loewner tolerance factor


class MatrixError(ValueError):
    """Bad matrix input: shape, symmetry, or positive definiteness."""


class JacobiConvergenceError(RuntimeError):
    """Jacobi sweeps exhausted; carries the remaining off-diagonal residual."""

    def __init__(self, residual: float, sweeps: int):
        super().__init__(
            f"jacobi eigensolver did not converge after {sweeps} sweeps "
            f"(off-diagonal residual {residual:.3e})"
        )
        self.residual = residual
        self.sweeps = sweeps


def _as_square(entries) -> np.ndarray:
    m = np.array(entries, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise MatrixError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise MatrixError("matrix entries must be finite")
    return m


def _symmetrize(m: np.ndarray, rel_tol: float) -> tuple[np.ndarray, float]:
    """Return ((M + M^T)/2, residual) and reject asymmetry beyond rel_tol."""
    residual = 0.5 * float(np.linalg.norm(m - m.T))
    scale = float(np.linalg.norm(m))
    if residual > rel_tol * scale:
        raise MatrixError(
            f"asymmetry residual {residual:.3e} exceeds {rel_tol:.0e} * ||M||_F "
            f"= {rel_tol * scale:.3e}"
        )
    return 0.5 * (m + m.T), residual


class SymMatrix:
    """Dense symmetric matrix; construction symmetrizes and records the residual."""

    __slots__ = ("entries", "asym_residual")

    def __init__(self, entries, rel_tol: float = SYM_INPUT_TOL):
        m = _as_square(entries)
        sym, residual = _symmetrize(m, rel_tol)
        sym.setflags(write=False)
        self.entries = sym
        self.asym_residual = residual

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def fro(self) -> float:
        return float(np.linalg.norm(self.entries))


@dataclass(frozen=True)
class EigenDecomp:
    """Spectral factorization A = Q diag(lam) Q^T, eigenvalues ascending."""

    q: np.ndarray
    lam: np.ndarray


def jacobi_eigh(entries: np.ndarray,
                max_sweeps: int = EIGH_MAX_SWEEPS,
                rel_tol: float = EIGH_REL_TOL) -> EigenDecomp:
    """Cyclic Jacobi eigendecomposition of a symmetric matrix.

    Sweeps rotate every superdiagonal pair in row order until the
    off-diagonal Frobenius norm falls below rel_tol * ||A||_F, and raises
    JacobiConvergenceError when the sweep budget is exhausted first.
    """
    a = np.array(entries, dtype=float)
    dim = a.shape[0]
    if dim == 1:
        return EigenDecomp(np.ones((1, 1)), a[0, :1].copy())
    norm = float(np.linalg.norm(a))
    vec = np.eye(dim)

    def _off_norm() -> float:
        return math.sqrt(2.0) * float(np.linalg.norm(np.triu(a, 1)))

    converged = False
    off = _off_norm()
    for _ in range(max_sweeps):
        if off <= rel_tol * norm:
            converged = True
            break
        for p in range(dim - 1):
            for q_ in range(p + 1, dim):
                apq = a[p, q_]
                if apq == 0.0:
                    continue
                theta = (a[q_, q_] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q_].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q_] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q_, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q_, :] = s * row_p + c * row_q
                a[p, q_] = 0.0
                a[q_, p] = 0.0
                vp = vec[:, p].copy()
                vq = vec[:, q_].copy()
                vec[:, p] = c * vp - s * vq
                vec[:, q_] = s * vp + c * vq
        off = _off_norm()
    if not converged and off > rel_tol * norm:
        raise JacobiConvergenceError(off, max_sweeps)
    lam = np.diag(a).copy()
    order = np.argsort(lam, kind="stable")
    return EigenDecomp(np.ascontiguousarray(vec[:, order]), lam[order])


def eigh(matrix: "SymMatrix | SpdMatrix | np.ndarray") -> EigenDecomp:
    """Spectral factorization of a symmetric matrix (ascending eigenvalues)."""
    if isinstance(matrix, SpdMatrix):
        return matrix.decomp
    entries = matrix.entries if isinstance(matrix, SymMatrix) else _as_square(matrix)
    return jacobi_eigh(entries)


class SpdMatrix:
    """Symmetric positive-definite matrix with a cached spectral factorization.

    Use :meth:`from_entries` for untrusted input: it factorizes eagerly and
    rejects matrices whose smallest eigenvalue is not safely positive.
    Results of internal operations that are positive definite by
    construction carry a lazy factorization instead.
    """

    __slots__ = ("entries", "_decomp")

    def __init__(self, entries, rel_tol: float = SYM_INPUT_TOL):
        sym = SymMatrix(entries, rel_tol=rel_tol)
        decomp = jacobi_eigh(sym.entries)
        spectral_norm = float(np.max(np.abs(decomp.lam)))
        floor = sym.dim * SPD_MIN_EIG_FACTOR * spectral_norm
        if decomp.lam[0] <= floor:
            raise MatrixError(
                f"matrix is not safely positive definite: min eigenvalue "
                f"{decomp.lam[0]:.6e} <= {floor:.6e}"
            )
        self.entries = sym.entries
        self._decomp = decomp

    @classmethod
    def from_entries(cls, entries, rel_tol: float = SYM_INPUT_TOL) -> "SpdMatrix":
        return cls(entries, rel_tol=rel_tol)

    @classmethod
    def _trusted(cls, sym_entries: np.ndarray,
                 decomp: Optional[EigenDecomp] = None) -> "SpdMatrix":
        # positive definiteness guaranteed by the caller's construction
        obj = object.__new__(cls)
        sym_entries = np.ascontiguousarray(sym_entries, dtype=float)
        sym_entries.setflags(write=False)
        obj.entries = sym_entries
        obj._decomp = decomp
        return obj

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def decomp(self) -> EigenDecomp:
        if self._decomp is None:
            decomp = jacobi_eigh(self.entries)
            if decomp.lam[0] <= 0.0:
                raise MatrixError(
                    f"matrix lost positive definiteness: min eigenvalue "
                    f"{decomp.lam[0]:.6e}"
                )
            self._decomp = decomp
        return self._decomp

    @property
    def certified_min_eig(self) -> float:
        return float(self.decomp.lam[0])

    def fro(self) -> float:
        return float(np.linalg.norm(self.entries))

    def sym(self) -> SymMatrix:
        out = object.__new__(SymMatrix)
        out.entries = self.entries
        out.asym_residual = 0.0
        return out


def _rebuild(decomp: EigenDecomp, lam: np.ndarray) -> np.ndarray:
    m = (decomp.q * lam) @ decomp.q.T
    return 0.5 * (m + m.T)


def spd_power(a: SpdMatrix, p: float) -> SpdMatrix:
    """Real matrix power Q diag(lam^p) Q^T; defined for any real p."""
    if not isinstance(a, SpdMatrix):
        raise MatrixError("spd_power requires an SpdMatrix")
    if not math.isfinite(p):
        raise DomainError(f"exponent must be finite, got {p!r}")
    d = a.decomp
    with np.errstate(over="ignore"):
        lam_p = d.lam ** p
    if not np.all(np.isfinite(lam_p)):
        raise MatrixError(f"eigenvalue power overflows floating range for p={p}")
    return SpdMatrix._trusted(_rebuild(d, lam_p),
                              EigenDecomp(d.q, lam_p) if p >= 0 else None)


def _check_dims(a, b) -> None:
    if a.dim != b.dim:
        raise MatrixError(f"dimension mismatch: {a.dim} vs {b.dim}")


def arithmetic_mean(a: SpdMatrix, b: SpdMatrix, v: float) -> SymMatrix:
    """Entrywise (1-v)A + vB; positive definiteness is not certified here."""
    _check_dims(a, b)
    _require_weight(v)
    out = object.__new__(SymMatrix)
    entries = (1.0 - v) * a.entries + v * b.entries
    entries.setflags(write=False)
    out.entries = entries
    out.asym_residual = 0.0
    return out


class MeanCalculator:
    """Weighted geometric and Heinz means of one SPD pair.

    All weights share the congruence T = A^(-1/2) B A^(-1/2) and its single
    factorization, so evaluating a family of dyadic weights costs one
    Jacobi run plus a reconstruction per weight.
    """

    def __init__(self, a: SpdMatrix, b: SpdMatrix):
        _check_dims(a, b)
        self.a = a
        self.b = b
        d = a.decomp
        self._root = _rebuild(d, np.sqrt(d.lam))
        self._iroot = _rebuild(d, 1.0 / np.sqrt(d.lam))
        inner, _ = _symmetrize(self._iroot @ b.entries @ self._iroot, SYM_OP_TOL)
        self._inner = jacobi_eigh(inner)
        self._cache: dict[float, np.ndarray] = {}

    def sharp_entries(self, w: float) -> np.ndarray:
        """Entries of A #_w B = A^(1/2) T^w A^(1/2)."""
        cached = self._cache.get(w)
        if cached is not None:
            return cached
        with np.errstate(over="ignore"):
            lam_w = self._inner.lam ** w
        if not np.all(np.isfinite(lam_w)):
            raise MatrixError(f"inner eigenvalue power overflows for weight {w}")
        mid = _rebuild(self._inner, lam_w)
        out, _ = _symmetrize(self._root @ mid @ self._root, SYM_OP_TOL)
        self._cache[w] = out
        return out

    def heinz_entries(self, w: float) -> np.ndarray:
        return 0.5 * (self.sharp_entries(w) + self.sharp_entries(1.0 - w))

    def nabla_entries(self, w: float) -> np.ndarray:
        return (1.0 - w) * self.a.entries + w * self.b.entries

    def sharp(self, w: float) -> SpdMatrix:
        return SpdMatrix._trusted(self.sharp_entries(w))

    def heinz(self, w: float) -> SpdMatrix:
        return SpdMatrix._trusted(self.heinz_entries(w))


def geometric_mean(a: SpdMatrix, b: SpdMatrix, v: float) -> SpdMatrix:
    """Weighted operator geometric mean A^(1/2) (A^(-1/2) B A^(-1/2))^v A^(1/2).

    Defined for every real v; for v in [0, 1] it is the familiar operator
    mean lying below the weighted arithmetic mean in Loewner order.
    """
    _require_weight(v)
    return MeanCalculator(a, b).sharp(v)


def heinz_mean(a: SpdMatrix, b: SpdMatrix, v: float) -> SpdMatrix:
    """Operator Heinz mean: average of the geometric means at v and 1-v."""
    _require_weight(v)
    return MeanCalculator(a, b).heinz(v)


@dataclass(frozen=True)
class LoewnerVerdict:
    """Result of an A <= B test: smallest eigenvalue of B - A vs a tolerance."""

    min_eig_diff: float
    tol: float
    holds: bool

    def as_dict(self) -> dict:
        return {"min_eig_diff": self.min_eig_diff, "tol": self.tol, "holds": self.holds}


def loewner_leq(a, b, tol: Optional[float] = None) -> LoewnerVerdict:
    """Loewner comparison A <= B via the smallest eigenvalue of B - A.

    The default tolerance is LOEWNER_REL_TOL * (||A||_F + ||B||_F).
    """
    ea = a.entries if hasattr(a, "entries") else _as_square(a)
    eb = b.entries if hasattr(b, "entries") else _as_square(b)
    if ea.shape != eb.shape:
        raise MatrixError(f"dimension mismatch: {ea.shape} vs {eb.shape}")
    if tol is None:
        tol = LOEWNER_REL_TOL * (float(np.linalg.norm(ea)) + float(np.linalg.norm(eb)))
    elif tol < 0.0:
        raise MatrixError(f"tolerance must be >= 0, got {tol!r}")
    diff = eb - ea
    lam_min = float(jacobi_eigh(diff).lam[0])
    return LoewnerVerdict(lam_min, tol, lam_min >= -tol)


# ---------------------------------------------------------------------------
# Plain-text matrix files: first line "dim", then dim rows of dim decimals
# ---------------------------------------------------------------------------

def parse_matrix_text(text: str) -> SymMatrix:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise MatrixError("empty matrix file")
    try:
        dim = int(lines[0])
    except ValueError:
        raise MatrixError(f"first line must be the dimension, got {lines[0]!r}") from None
    if dim < 1:
        raise MatrixError(f"dimension must be >= 1, got {dim}")
    if len(lines) != dim + 1:
        raise MatrixError(f"expected {dim} rows after the dimension line, got {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        try:
            row = [float(tok) for tok in line.split()]
        except ValueError:
            raise MatrixError(f"non-numeric entry in row {line!r}") from None
        if len(row) != dim:
            raise MatrixError(f"expected {dim} entries per row, got {len(row)}")
        rows.append(row)
    return SymMatrix(rows, rel_tol=SYM_INPUT_TOL)


def load_sym_matrix(path) -> SymMatrix:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_matrix_text(handle.read())


def load_spd_matrix(path) -> SpdMatrix:
    return SpdMatrix.from_entries(load_sym_matrix(path).entries)


def format_matrix_text(matrix) -> str:
    entries = matrix.entries if hasattr(matrix, "entries") else _as_square(matrix)
    lines = [str(entries.shape[0])]
    for row in entries:
        lines.append(" ".join("%.17g" % x for x in row))
    return "\n".join(lines) + "\n"
