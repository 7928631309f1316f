"""Vertex partitions, quotient matrices, and the block-spectrum engine.

A partition of the index set turns a square matrix into a block matrix; the
quotient holds each block's average row sum. When every block has constant
row sums (an equitable partition), quotient eigenvalues lift to the full
matrix, and for matrices whose blocks are J/I combinations the full spectrum
splits into the quotient spectrum plus explicitly known repeated values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    DimensionMismatch,
    NotEquitable,
    NotNonnegative,
    NotSymmetric,
    ParseError,
)
from .linalg import (
    ExactMatrix,
    Scalar,
    Spectrum,
    _normalize_scalar,
    as_numeric,
    eigenvalues,
    spectral_radius,
)


class Partition:
    """Ordered list of disjoint, sorted cells covering {0..n-1}."""

    __slots__ = ("cells",)

    def __init__(self, cells):
        cells = tuple(tuple(sorted(int(i) for i in cell)) for cell in cells)
        if not cells or any(not cell for cell in cells):
            raise ValueError("cells must be nonempty")
        flat = [i for cell in cells for i in cell]
        if len(set(flat)) != len(flat):
            raise ValueError("cells must be disjoint")
        if sorted(flat) != list(range(len(flat))):
            raise ValueError("cells must cover 0..n-1 exactly")
        self.cells = cells

    @classmethod
    def from_sizes(cls, sizes) -> "Partition":
        """Consecutive cells of the given sizes (the natural block layout)."""
        cells = []
        start = 0
        for s in sizes:
            cells.append(range(start, start + s))
            start += s
        return cls(cells)

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls([[i] for i in range(n)])

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cells)

    @property
    def t(self) -> int:
        return len(self.cells)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cells)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __repr__(self):
        return f"Partition({[list(c) for c in self.cells]!r})"


def parse_partition(text: str) -> Partition:
    """Parse ``{0,1,2|3,4|5}``: cells split by ``|``, indices by commas."""
    s = text.strip()
    if s.startswith("{") and s.endswith("}"):
        s = s[1:-1]
    cells = []
    for chunk in s.split("|"):
        items = [piece.strip() for piece in chunk.split(",") if piece.strip()]
        if not items:
            raise ParseError(f"empty cell in partition {text!r}")
        try:
            cells.append([int(piece) for piece in items])
        except ValueError:
            raise ParseError(f"non-integer index in partition {text!r}") from None
    try:
        return Partition(cells)
    except ValueError as exc:
        raise ParseError(f"invalid partition {text!r}: {exc}") from None


def format_partition(part: Partition) -> str:
    return "{" + "|".join(",".join(str(i) for i in cell) for cell in part.cells) + "}"


def _check_ground_set(m, part: Partition) -> None:
    n = m.n if isinstance(m, ExactMatrix) else as_numeric(m).shape[0]
    if n != part.n:
        raise DimensionMismatch(
            f"matrix order {n} does not match partition ground set {part.n}"
        )


def quotient_matrix(m, part: Partition):
    """Average block row sums: b_ij = (sum of block (i,j) entries) / |cell i|.

    Exact input yields an exact quotient (Fraction entries collapse to int
    when integral); numeric input yields a float matrix.
    """
    _check_ground_set(m, part)
    if isinstance(m, ExactMatrix):
        rows = []
        for ci in part.cells:
            size = len(ci)
            rows.append(
                [
                    _normalize_scalar(
                        Fraction(sum(m[u, v] for u in ci for v in cj), size)
                    )
                    for cj in part.cells
                ]
            )
        return ExactMatrix(rows)
    a = as_numeric(m)
    t = part.t
    out = np.empty((t, t), dtype=a.dtype if a.dtype.kind == "c" else float)
    for i, ci in enumerate(part.cells):
        for j, cj in enumerate(part.cells):
            out[i, j] = a[np.ix_(ci, cj)].sum() / len(ci)
    return out


def is_equitable(m, part: Partition, tol: float = 1e-12) -> bool:
    """True iff every block of m under the partition has constant row sums.

    Exact inputs are tested exactly; floats within an absolute tolerance
    that only absorbs representation noise on integer-valued data.
    """
    _check_ground_set(m, part)
    if isinstance(m, ExactMatrix):
        for ci in part.cells:
            for cj in part.cells:
                sums = {sum(m[u, v] for v in cj) for u in ci}
                if len(sums) > 1:
                    return False
        return True
    a = as_numeric(m)
    for ci in part.cells:
        for cj in part.cells:
            sums = a[np.ix_(ci, cj)].sum(axis=1)
            if np.max(sums) - np.min(sums) > tol:
                return False
    return True


# ---------------------------------------------------------------------------
# structured block matrices


@dataclass(frozen=True)
class BlockSpec:
    """Block structure: diagonal blocks l_i*J + p_i*I, off-diagonal s_ij*J.

    ``s`` is a full t x t table whose diagonal is ignored. Coefficients may
    be rational, which keeps realization exact.
    """

    sizes: tuple[int, ...]
    l: tuple[Scalar, ...]
    p: tuple[Scalar, ...]
    s: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        t = len(self.sizes)
        if t < 1:
            raise ValueError("BlockSpec needs at least one block")
        if any(sz < 1 for sz in self.sizes):
            raise ValueError("block sizes must be at least 1")
        if len(self.l) != t or len(self.p) != t or len(self.s) != t:
            raise ValueError("coefficient lists must match the block count")
        if any(len(row) != t for row in self.s):
            raise ValueError("s must be a t x t table")
        object.__setattr__(self, "sizes", tuple(int(x) for x in self.sizes))
        object.__setattr__(self, "l", tuple(_normalize_scalar(x) for x in self.l))
        object.__setattr__(self, "p", tuple(_normalize_scalar(x) for x in self.p))
        object.__setattr__(
            self,
            "s",
            tuple(tuple(_normalize_scalar(x) for x in row) for row in self.s),
        )

    @property
    def t(self) -> int:
        return len(self.sizes)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def partition(self) -> Partition:
        return Partition.from_sizes(self.sizes)

    def quotient(self) -> ExactMatrix:
        """The t x t equitable quotient: b_ii = l_i*n_i + p_i, b_ij = s_ij*n_j."""
        t = self.t
        rows = [
            [
                self.l[i] * self.sizes[i] + self.p[i]
                if i == j
                else self.s[i][j] * self.sizes[j]
                for j in range(t)
            ]
            for i in range(t)
        ]
        return ExactMatrix(rows)

    def to_json(self) -> dict:
        def enc(x):
            return str(x) if isinstance(x, Fraction) else x

        return {
            "sizes": list(self.sizes),
            "l": [enc(x) for x in self.l],
            "p": [enc(x) for x in self.p],
            "s": [[enc(x) for x in row] for row in self.s],
        }

    @classmethod
    def from_json(cls, payload: dict) -> "BlockSpec":
        def dec(x):
            return Fraction(x) if isinstance(x, str) else x

        return cls(
            sizes=tuple(payload["sizes"]),
            l=tuple(dec(x) for x in payload["l"]),
            p=tuple(dec(x) for x in payload["p"]),
            s=tuple(tuple(dec(x) for x in row) for row in payload["s"]),
        )


def realize_block_matrix(spec: BlockSpec) -> ExactMatrix:
    """Expand a BlockSpec to the full n x n matrix it describes."""
    n = spec.n
    offsets = []
    start = 0
    for sz in spec.sizes:
        offsets.append(start)
        start += sz
    rows = [[0] * n for _ in range(n)]
    for i, sz_i in enumerate(spec.sizes):
        oi = offsets[i]
        for j, sz_j in enumerate(spec.sizes):
            oj = offsets[j]
            if i == j:
                for a in range(sz_i):
                    for b in range(sz_i):
                        rows[oi + a][oj + b] = spec.l[i] + (spec.p[i] if a == b else 0)
            else:
                val = spec.s[i][j]
                for a in range(sz_i):
                    for b in range(sz_j):
                        rows[oi + a][oj + b] = val
    return ExactMatrix(rows)


def block_spectrum(spec: BlockSpec) -> Spectrum:
    """Full spectrum of the realized matrix without building it.

    Quotient eigenvalues plus p_i repeated (n_i - 1) times; total
    multiplicity is the matrix order.
    """
    pairs = list(eigenvalues(spec.quotient().to_numpy(), cluster_tol=0.0).pairs)
    for p_i, sz in zip(spec.p, spec.sizes):
        if sz > 1:
            pairs.append((complex(float(Fraction(p_i)), 0.0), sz - 1))
    return Spectrum.from_pairs(pairs)


# ---------------------------------------------------------------------------
# checks


@dataclass(frozen=True)
class QuotientReport:
    """Quotient matrix with the equitable flag and the eigenvalue-lift verdict."""

    B: np.ndarray
    equitable: bool
    lifted: bool


def lift_check(m, part: Partition, tol: float = 1e-7) -> QuotientReport:
    """Verify that every quotient eigenvalue appears in the full spectrum.

    Requires an equitable partition; the lift then holds structurally, so
    ``lifted=False`` would indicate a numerical pathology worth reporting.
    """
    if not is_equitable(m, part):
        raise NotEquitable("lift_check requires an equitable partition")
    a = as_numeric(m)
    b = quotient_matrix(a, part)
    lifted = eigenvalues(a, cluster_tol=0.0).contains(
        eigenvalues(b, cluster_tol=0.0), tol=tol
    )
    return QuotientReport(B=b, equitable=True, lifted=lifted)


@dataclass(frozen=True)
class InterlacingReport:
    interlaces: bool
    tight: bool
    tight_implies_equitable_ok: bool


def interlacing_check(m, part: Partition, tol: float = 1e-9) -> InterlacingReport:
    """Quotient/full eigenvalue interlacing for a symmetric matrix.

    With eigenvalues sorted descending, checks lam_i >= mu_i >= lam_{n-m+i}.
    The interlacing is tight when some split index k makes the first k mu's
    equal the top lam's and the rest equal the bottom lam's; tightness must
    imply equitability, which is cross-checked here.
    """
    a = as_numeric(m)
    if not np.array_equal(a, a.T):
        raise NotSymmetric("interlacing_check requires a symmetric matrix")
    _check_ground_set(a, part)
    lam = np.sort(np.linalg.eigvalsh(a))[::-1]
    # the quotient is similar to S^T M S with S the orthonormal indicator
    # matrix, so take the symmetric form (the raw quotient is asymmetric
    # whenever cell sizes differ)
    s = np.zeros((part.n, part.t))
    for j, cell in enumerate(part.cells):
        s[list(cell), j] = 1.0 / math.sqrt(len(cell))
    mu = np.sort(np.linalg.eigvalsh(s.T @ a @ s))[::-1]
    n, t = len(lam), len(mu)
    interlaces = all(
        lam[i] >= mu[i] - tol and mu[i] >= lam[n - t + i] - tol for i in range(t)
    )
    tight = False
    for k in range(1, t + 1):
        head = all(abs(lam[i] - mu[i]) <= tol for i in range(k))
        tail = all(abs(lam[n - t + i] - mu[i]) <= tol for i in range(k, t))
        if head and tail:
            tight = True
            break
    ok = (not tight) or is_equitable(a, part)
    return InterlacingReport(interlaces=interlaces, tight=tight, tight_implies_equitable_ok=ok)


@dataclass(frozen=True)
class ProbeReport:
    """Evidence record comparing the quotient's top eigenvalue with rho(M)."""

    holds: bool
    rho_B: float
    rho_M: float


def conjecture_probe(m, part: Partition, tol: float = 1e-7) -> ProbeReport:
    """Test whether the equitable quotient's largest eigenvalue equals rho(M).

    For nonnegative M the quotient is nonnegative, so its Perron root is the
    eigenvalue of maximum real part; a verified instance with holds=False is
    a counterexample candidate and should be serialized in full by callers.
    """
    a = as_numeric(m)
    if np.any(a < 0):
        raise NotNonnegative("conjecture_probe requires a nonnegative matrix")
    if not is_equitable(a, part):
        raise NotEquitable("conjecture_probe requires an equitable partition")
    b = quotient_matrix(a, part)
    rho_b = float(np.max(np.linalg.eigvals(b).real))
    rho_m = spectral_radius(a)
    return ProbeReport(holds=abs(rho_b - rho_m) <= tol, rho_B=rho_b, rho_M=rho_m)
