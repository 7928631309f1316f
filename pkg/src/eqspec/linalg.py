"""Exact and numeric dense linear algebra.

Exact side: arbitrary-precision integer/rational matrices, monic
characteristic polynomials (Faddeev-LeVerrier, exact divisions), polynomial
arithmetic with gcd-based square-free factorization.

Numeric side: full spectra through LAPACK, Perron roots through power
iteration with Collatz-Wielandt bracketing, entrywise matrix comparison,
and a tolerance-aware eigenvalue multiset (``Spectrum``).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    ConvergenceFailure,
    DimensionMismatch,
    NotIrreducible,
    NotNonnegative,
    ZeroPolynomial,
)

Scalar = int | Fraction


def _normalize_scalar(x) -> Scalar:
    """Coerce to int when possible, keep Fraction otherwise. Floats are rejected."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    raise TypeError(f"exact scalar expected, got {type(x).__name__}")


class ExactMatrix:
    """Square matrix with exact integer or rational entries."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(_normalize_scalar(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise DimensionMismatch("ExactMatrix must be square and nonempty")
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "ExactMatrix":
        return cls([[0] * n for _ in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_order(other)
        return ExactMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_order(other)
        return ExactMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_order(other)
        cols = list(zip(*other.rows))
        return ExactMatrix(
            [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in self.rows]
        )

    def _check_same_order(self, other: "ExactMatrix") -> None:
        if self.n != other.n:
            raise DimensionMismatch(f"order mismatch: {self.n} vs {other.n}")

    def trace(self) -> Scalar:
        return sum(self.rows[i][i] for i in range(self.n))

    def row_sums(self) -> tuple:
        return tuple(sum(row) for row in self.rows)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.rows)))

    def is_symmetric(self) -> bool:
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.rows], dtype=float)

    def __repr__(self):
        return f"ExactMatrix({[list(r) for r in self.rows]!r})"


NumericMatrix = np.ndarray


def as_numeric(m) -> np.ndarray:
    """Coerce ExactMatrix / array-like input to a square float (or complex) array."""
    if isinstance(m, ExactMatrix):
        a = m.to_numpy()
    else:
        a = np.asarray(m)
        if a.dtype.kind not in "fc":
            a = a.astype(float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"square matrix expected, got shape {a.shape}")
    return a


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Dense polynomial with exact coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [_normalize_scalar(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0]
        self.coeffs = tuple(cs)

    @classmethod
    def linear(cls, root: Scalar) -> "Polynomial":
        """The monic factor (x - root)."""
        return cls([-root, 1])

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    @property
    def degree(self) -> int:
        return -1 if self.is_zero else len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.coeffs[-1] == 1

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial([0])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: Scalar) -> "Polynomial":
        return Polynomial([c * x for x in self.coeffs])

    def evaluate(self, x):
        """Horner evaluation; exact for int/Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        if self.degree < 1:
            return Polynomial([0])
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Polynomial":
        if self.is_zero:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return Polynomial([Fraction(c, 1) / lead for c in self.coeffs])

    def float_coeffs(self) -> list[float]:
        """Coefficients as floats, jointly scaled to avoid overflow.

        The common scaling leaves the roots unchanged.
        """
        scale = max(abs(Fraction(c)) for c in self.coeffs)
        if scale == 0:
            return [0.0] * len(self.coeffs)
        return [float(Fraction(c) / scale) for c in self.coeffs]

    def coefficient_strings(self) -> list[str]:
        """Decimal coefficient strings, constant term first (CLI wire format)."""
        return [str(c) for c in self.coeffs]

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"


def _poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Exact division over the rationals."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in a.coeffs]
    div = [Fraction(c) for c in b.coeffs]
    dq = len(rem) - len(div)
    if dq < 0:
        return Polynomial([0]), a
    quo = [Fraction(0)] * (dq + 1)
    lead = div[-1]
    for k in range(dq, -1, -1):
        factor = rem[k + len(div) - 1] / lead
        quo[k] = factor
        if factor:
            for i, d in enumerate(div):
                rem[k + i] -= factor * d
    return Polynomial(quo), Polynomial(rem[: len(div) - 1] or [0])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over the rationals (Euclid)."""
    x, y = a, b
    while not y.is_zero:
        _, r = _poly_divmod(x, y)
        x, y = y, r
    if x.is_zero:
        return x
    return x.monic()


def squarefree_factors(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's square-free decomposition: monic factors with multiplicities.

    The product of factor**multiplicity equals p up to the leading
    coefficient.
    """
    if p.is_zero:
        raise ZeroPolynomial("square-free decomposition of the zero polynomial")
    p = p.monic()
    if p.degree < 1:
        return []
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return [(p, 1)]
    c, _ = _poly_divmod(p, g)
    dp, _ = _poly_divmod(p.derivative(), g)
    d = dp - c.derivative()
    factors = []
    i = 1
    while c.degree > 0:
        a = poly_gcd(c, d)
        if a.degree > 0:
            factors.append((a, i))
        c, _ = _poly_divmod(c, a)
        dq, _ = _poly_divmod(d, a)
        d = dq - c.derivative()
        i += 1
    return factors


def char_poly(m: ExactMatrix) -> Polynomial:
    """Exact monic characteristic polynomial det(xI - M).

    Faddeev-LeVerrier recurrence; every division is exact (integer inputs
    stay integer, rational inputs stay rational). Arbitrary-precision
    coefficients: no overflow at any order.
    """
    n = m.n
    a = [list(row) for row in m.rows]
    all_int = all(isinstance(x, int) for row in a for x in row)
    work = [row[:] for row in a]
    coeffs: list[Scalar] = [1]
    c = -sum(work[i][i] for i in range(n))
    coeffs.append(c)
    for k in range(2, n + 1):
        for i in range(n):
            work[i][i] += c
        cols = list(zip(*work))
        work = [
            [sum(x * y for x, y in zip(row, col)) for col in cols] for row in a
        ]
        tr = sum(work[i][i] for i in range(n))
        if all_int:
            q, r = divmod(-tr, k)
            if r:  # pragma: no cover - exactness is a theorem for integer input
                raise ArithmeticError("inexact division in Faddeev-LeVerrier")
            c = q
        else:
            c = _normalize_scalar(Fraction(-tr) / k)
        coeffs.append(c)
    return Polynomial(tuple(reversed(coeffs)))


# ---------------------------------------------------------------------------
# spectra


def _sort_key(v: complex):
    return (-v.real, -v.imag)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset: (value, multiplicity) pairs.

    Values are stored sorted by (real, imaginary) descending so reports are
    deterministic. Multiset comparison expands multiplicities, sorts both
    sides the same way (real parts tying within 1e-6 are grouped before the
    imaginary ordering applies) and pairs entries positionally; this is
    stable and adequate for well-separated spectra but can mispair
    eigenvalue clusters tighter than the tolerance.
    """

    pairs: tuple[tuple[complex, int], ...]

    @classmethod
    def from_pairs(cls, pairs) -> "Spectrum":
        merged: dict[complex, int] = {}
        for value, mult in pairs:
            if mult < 0:
                raise ValueError("negative multiplicity")
            if mult == 0:
                continue
            value = complex(value)
            merged[value] = merged.get(value, 0) + mult
        ordered = tuple(sorted(merged.items(), key=lambda kv: _sort_key(kv[0])))
        return cls(ordered)

    @classmethod
    def from_values(cls, values, cluster_tol: float = 1e-6) -> "Spectrum":
        """Cluster raw numeric eigenvalues into (value, multiplicity) pairs.

        Chained clustering: consecutive values (in (re, im) order) closer
        than cluster_tol join the current cluster; the reported value is the
        cluster mean.
        """
        vs = sorted((complex(v) for v in values), key=_sort_key)
        pairs = []
        i = 0
        while i < len(vs):
            j = i + 1
            while j < len(vs) and abs(vs[j] - vs[j - 1]) <= cluster_tol:
                j += 1
            chunk = vs[i:j]
            mean = sum(chunk) / len(chunk)
            pairs.append((mean, len(chunk)))
            i = j
        return cls(tuple(pairs))

    @property
    def order(self) -> int:
        return sum(m for _, m in self.pairs)

    def values(self) -> list[complex]:
        """Expanded eigenvalue list (multiplicities repeated), sorted descending."""
        out = []
        for v, m in self.pairs:
            out.extend([v] * m)
        return out

    def _canonical_values(self, re_tie: float = 1e-6) -> list[complex]:
        """Expansion ordered for cross-list pairing.

        Real parts within re_tie of each other are grouped (chain rule)
        before the imaginary ordering applies, so a conjugate pair and a
        real eigenvalue sharing a real part line up identically on both
        sides of a comparison despite 1-ulp noise.
        """
        vs = sorted(self.values(), key=lambda v: -v.real)
        out: list[complex] = []
        i = 0
        while i < len(vs):
            j = i + 1
            while j < len(vs) and vs[j - 1].real - vs[j].real <= re_tie:
                j += 1
            out.extend(sorted(vs[i:j], key=lambda v: -v.imag))
            i = j
        return out

    def radius(self) -> float:
        return max(abs(v) for v, _ in self.pairs)

    def max_real(self) -> float:
        return max(v.real for v, _ in self.pairs)

    def isclose(self, other: "Spectrum", tol: float = 1e-7) -> bool:
        """Multiset equality: positional pairing of both sorted expansions."""
        return self.deviation(other) < tol

    def deviation(self, other: "Spectrum") -> float:
        """Largest positional pairing distance (inf when the orders differ)."""
        a, b = self._canonical_values(), other._canonical_values()
        if len(a) != len(b):
            return math.inf
        if not a:
            return 0.0
        return max(abs(x - y) for x, y in zip(a, b))

    def contains(self, other: "Spectrum", tol: float = 1e-7) -> bool:
        """One-sided multiset inclusion with multiplicity accounting."""
        mine = self.values()
        used = [False] * len(mine)
        for target in other.values():
            best = None
            best_dist = tol
            for idx, v in enumerate(mine):
                if used[idx]:
                    continue
                d = abs(v - target)
                if d < best_dist:
                    best, best_dist = idx, d
            if best is None:
                return False
            used[best] = True
        return True

    def to_json(self) -> list[dict]:
        return [
            {"re": v.real, "im": v.imag, "mult": m} for v, m in self.pairs
        ]

    def __iter__(self):
        return iter(self.pairs)


def eigenvalues(m, cluster_tol: float = 1e-6) -> Spectrum:
    """All eigenvalues of a dense matrix as a Spectrum.

    Symmetric input is routed to the symmetric solver (real output);
    general input may yield complex values.
    """
    a = as_numeric(m)
    try:
        if a.dtype.kind != "c" and np.array_equal(a, a.T):
            vals = np.linalg.eigvalsh(a)
        else:
            vals = np.linalg.eigvals(a)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - pathological input
        raise ConvergenceFailure(str(exc)) from exc
    return Spectrum.from_values(vals, cluster_tol)


def spectral_radius(m) -> float:
    """Largest eigenvalue modulus."""
    a = as_numeric(m)
    try:
        if a.dtype.kind != "c" and np.array_equal(a, a.T):
            vals = np.linalg.eigvalsh(a)
        else:
            vals = np.linalg.eigvals(a)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise ConvergenceFailure(str(exc)) from exc
    return float(np.max(np.abs(vals)))


def _support_strongly_connected(a: np.ndarray) -> bool:
    n = a.shape[0]
    support = a > 0
    for adj in (support, support.T):
        seen = np.zeros(n, dtype=bool)
        stack = [0]
        seen[0] = True
        while stack:
            u = stack.pop()
            for v in np.nonzero(adj[u])[0]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(int(v))
        if not seen.all():
            return False
    return True


def row_sum_bounds(m) -> tuple[float, float]:
    """(min, max) row sum of a nonnegative matrix; brackets the Perron root."""
    a = as_numeric(m)
    if np.any(a < 0):
        raise NotNonnegative("row_sum_bounds requires a nonnegative matrix")
    sums = a.sum(axis=1)
    return float(sums.min()), float(sums.max())


def perron_root(m, tol: float = 1e-11) -> float:
    """Perron eigenvalue of a nonnegative irreducible matrix.

    Power iteration on M + I (guarantees primitivity) with Collatz-Wielandt
    bracketing; the first iterate's bracket is exactly the row-sum bounds.
    Independent of the LAPACK path used by ``spectral_radius``.
    """
    a = as_numeric(m)
    n = a.shape[0]
    if np.any(a < 0):
        raise NotNonnegative("perron_root requires a nonnegative matrix")
    if n == 1:
        return float(a[0, 0])
    if not _support_strongly_connected(a):
        raise NotIrreducible("perron_root requires an irreducible matrix")
    shifted = a + np.eye(n)
    x = np.ones(n)
    cap = 100 * n * n + 1000
    for _ in range(cap):
        y = shifted @ x
        ratios = y / x
        lo, hi = float(ratios.min()), float(ratios.max())
        if hi - lo <= tol * max(1.0, hi):
            return (lo + hi) / 2.0 - 1.0
        x = y / np.linalg.norm(y)
    raise ConvergenceFailure(f"perron_root: no convergence in {cap} iterations")


class MatrixOrder(enum.Enum):
    """Entrywise comparison classes: <= / < (not equal) / << (strict everywhere)."""

    EQ = "EQ"
    LESS = "LESS"  # A < B: entrywise <=, not equal
    MUCH_LESS = "MUCH_LESS"  # A << B: entrywise <
    GREATER = "GREATER"
    MUCH_GREATER = "MUCH_GREATER"
    INCOMPARABLE = "INCOMPARABLE"


def matrix_order(a, b) -> MatrixOrder:
    """Classify the entrywise order of two same-order matrices."""
    x, y = as_numeric(a), as_numeric(b)
    if x.shape != y.shape:
        raise DimensionMismatch(f"shape mismatch: {x.shape} vs {y.shape}")
    if np.array_equal(x, y):
        return MatrixOrder.EQ
    if np.all(x < y):
        return MatrixOrder.MUCH_LESS
    if np.all(x <= y):
        return MatrixOrder.LESS
    if np.all(x > y):
        return MatrixOrder.MUCH_GREATER
    if np.all(x >= y):
        return MatrixOrder.GREATER
    return MatrixOrder.INCOMPARABLE


# ---------------------------------------------------------------------------
# polynomial roots


def _horner(coeffs: list[float], x: complex) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _float_derivative(coeffs: list[float]) -> list[float]:
    """Derivative of float coefficients; keeps the caller's scaling."""
    return [i * c for i, c in enumerate(coeffs)][1:] or [0.0]


def _newton_polish(coeffs: list[float], x: complex) -> complex:
    dcoeffs = _float_derivative(coeffs)
    for _ in range(40):
        fx = _horner(coeffs, x)
        dfx = _horner(dcoeffs, x)
        if dfx == 0:
            break
        step = fx / dfx
        x -= step
        if abs(step) <= 1e-15 * max(1.0, abs(x)):
            break
    return x


def poly_roots(p: Polynomial) -> Spectrum:
    """All complex roots with exact multiplicities.

    Square-free factorization over the rationals first, so every root handed
    to the numeric stage is simple: companion-matrix roots followed by Newton
    polishing converge quadratically, and multiplicities are exact by
    construction rather than inferred from clustering.
    """
    if p.is_zero:
        raise ZeroPolynomial("roots of the zero polynomial are undefined")
    if p.degree < 1:
        return Spectrum.from_pairs([])
    pairs = []
    for factor, mult in squarefree_factors(p):
        fc = factor.float_coeffs()
        if factor.degree == 1:
            a0, a1 = factor.coeffs
            roots = [complex(-Fraction(a0) / Fraction(a1))]
        else:
            roots = list(np.roots(list(reversed(fc))))
            roots = [_newton_polish(fc, complex(r)) for r in roots]
        for r in roots:
            if abs(r.imag) <= 1e-10 * max(1.0, abs(r.real)):
                r = complex(r.real, 0.0)
            pairs.append((r, mult))
    return Spectrum.from_pairs(pairs)


def cubic_real_roots(p: Polynomial) -> list[float]:
    """Real roots of a cubic with real (exact) coefficients, ascending.

    Closed form (trigonometric branch for three real roots, Cardano
    otherwise) with one Newton polish against the exact polynomial; avoids
    branch-selection ambiguity when picking the largest root.
    """
    if p.degree != 3:
        raise ValueError("cubic expected")
    a3, a2, a1, a0 = (float(Fraction(c)) for c in reversed(p.coeffs))
    b, c, d = a2 / a3, a1 / a3, a0 / a3
    # depressed cubic t^3 + pt + q with x = t - b/3
    pp = c - b * b / 3.0
    qq = 2.0 * b**3 / 27.0 - b * c / 3.0 + d
    disc = (qq / 2.0) ** 2 + (pp / 3.0) ** 3
    roots: list[float]
    if disc <= 0:
        # three real roots
        r = math.sqrt(max(-(pp**3) / 27.0, 0.0))
        theta = math.acos(max(-1.0, min(1.0, -qq / (2.0 * r)))) if r > 0 else 0.0
        m = 2.0 * math.sqrt(max(-pp / 3.0, 0.0))
        roots = [m * math.cos((theta + 2.0 * math.pi * k) / 3.0) for k in range(3)]
    else:
        s = math.sqrt(disc)
        u = math.copysign(abs(-qq / 2.0 + s) ** (1.0 / 3.0), -qq / 2.0 + s)
        v = math.copysign(abs(-qq / 2.0 - s) ** (1.0 / 3.0), -qq / 2.0 - s)
        roots = [u + v]
    fc = p.float_coeffs()
    out = []
    for t in roots:
        x = t - b / 3.0
        x = _newton_polish(fc, complex(x, 0.0)).real
        out.append(x)
    return sorted(out)


def largest_real_root(p: Polynomial) -> float:
    """Largest real root; closed form for cubics, generic solver otherwise."""
    if p.degree == 3:
        return cubic_real_roots(p)[-1]
    spec = poly_roots(p)
    reals = [v.real for v, _ in spec.pairs if abs(v.imag) <= 1e-9 * max(1.0, abs(v))]
    if not reals:
        raise ValueError("polynomial has no real root")
    return max(reals)
