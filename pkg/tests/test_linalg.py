"""Exact/numeric linear algebra tests against independent oracles."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import numpy as np
import pytest

from eqspec.errors import (
    DimensionMismatch,
    NotIrreducible,
    NotNonnegative,
    ZeroPolynomial,
)
from eqspec.families import (
    BidirectedComplete,
    CompleteMultipartite,
    DirectedCycle,
    KnkpDigraph,
    Petersen,
    build,
)
from eqspec.graphs import build_matrix
from eqspec.linalg import (
    ExactMatrix,
    MatrixOrder,
    Polynomial,
    Spectrum,
    char_poly,
    eigenvalues,
    matrix_order,
    perron_root,
    poly_roots,
    row_sum_bounds,
    spectral_radius,
    squarefree_factors,
)

from oracles import (
    bisection_largest_root,
    charpoly_by_interpolation,
    det_xi_minus_m,
)


def _random_exact(rng, n, lo=-3, hi=3):
    return ExactMatrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


# ---------------------------------------------------------------------------
# characteristic polynomial


def test_char_poly_zero_matrix():
    assert char_poly(ExactMatrix.zeros(2)).coeffs == (0, 0, 1)


def test_char_poly_multipartite_factorization():
    # complete bipartite on parts (2,3): x^(n-t) * det(xI - B)
    a = build_matrix(build(CompleteMultipartite((2, 3))), "A")
    quotient_factor = Polynomial([-6, 0, 1])  # det(xI - [[0,3],[2,0]])
    assert char_poly(a) == Polynomial([0, 1]) ** 3 * quotient_factor


def test_char_poly_against_interpolation_oracle():
    rng = random.Random(12)
    for _ in range(25):
        m = _random_exact(rng, rng.randint(1, 5))
        assert char_poly(m) == charpoly_by_interpolation(m)


def test_char_poly_evaluation_matches_exact_determinant():
    rng = random.Random(13)
    for _ in range(10):
        m = _random_exact(rng, rng.randint(2, 6))
        poly = char_poly(m)
        for _ in range(5):
            x = rng.randint(-10, 10)
            assert poly.evaluate(x) == det_xi_minus_m(m, x)


def test_char_poly_rational_entries():
    m = ExactMatrix([[Fraction(1, 2), 1], [1, Fraction(1, 2)]])
    assert char_poly(m) == Polynomial([Fraction(-3, 4), -1, 1])


def test_char_poly_monic_and_degree():
    rng = random.Random(14)
    m = _random_exact(rng, 7)
    poly = char_poly(m)
    assert poly.is_monic and poly.degree == 7


# ---------------------------------------------------------------------------
# eigenvalues / spectral radius


def test_eigenvalues_identity():
    assert eigenvalues(np.eye(3)).pairs == ((1 + 0j, 3),)


def test_eigenvalues_petersen_adjacency():
    a = build_matrix(build(Petersen()), "A")
    spec = eigenvalues(a)
    expected = Spectrum.from_pairs([(3, 1), (1, 5), (-2, 4)])
    assert spec.isclose(expected, tol=1e-9)
    # cross-check the multiplicities exactly through the char poly
    factored = Polynomial.linear(3) * Polynomial.linear(1) ** 5 * Polynomial.linear(-2) ** 4
    assert char_poly(a) == factored


def test_eigenvalues_directed_triangle_roots_of_unity():
    a = build_matrix(build(DirectedCycle(3)), "A")
    spec = eigenvalues(a.to_numpy())
    expected = Spectrum.from_pairs(
        [(1, 1), (complex(-0.5, math.sqrt(3) / 2), 1), (complex(-0.5, -math.sqrt(3) / 2), 1)]
    )
    assert spec.isclose(expected, tol=1e-9)


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_spectral_radius_directed_cycle(n):
    assert spectral_radius(build_matrix(build(DirectedCycle(n)), "A")) == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_spectral_radius_complete_signless_laplacian(n):
    q = build_matrix(build(BidirectedComplete(n)), "Q")
    assert spectral_radius(q) == pytest.approx(2 * (n - 1), abs=1e-9)


def test_spectral_radius_petersen_distance_signless():
    dq = build_matrix(build(Petersen()), "DQ")
    assert spectral_radius(dq) == pytest.approx(30.0, abs=1e-9)


def test_eigenvalue_residuals_in_char_poly():
    rng = random.Random(15)
    for _ in range(5):
        n = rng.randint(2, 12)
        m = _random_exact(rng, n, -2, 2)
        poly = char_poly(m)
        scale = max(abs(c) for c in poly.coeffs)
        fc = [float(c) for c in poly.coeffs]
        for value in eigenvalues(m.to_numpy(), cluster_tol=0.0).values():
            acc = 0j
            for c in reversed(fc):
                acc = acc * value + c
            assert abs(acc) <= 1e-6 * max(1.0, scale)


# ---------------------------------------------------------------------------
# Perron root and row sums


def test_perron_root_all_ones():
    for n in (2, 3, 6):
        assert perron_root(np.ones((n, n))) == pytest.approx(n, abs=1e-9)


def test_perron_root_distance_of_directed_cycle():
    d = build_matrix(build(DirectedCycle(4)), "D")
    assert perron_root(d) == pytest.approx(6.0, abs=1e-9)


def test_perron_root_matches_eigensolver_on_random_irreducible():
    rng = np.random.default_rng(7)
    for _ in range(20):
        n = 8
        m = rng.uniform(0, 1, (n, n))
        m[rng.uniform(0, 1, (n, n)) < 0.5] = 0.0
        for i in range(n):  # a directed Hamilton cycle keeps it irreducible
            m[i, (i + 1) % n] = max(m[i, (i + 1) % n], 0.1)
        assert perron_root(m) == pytest.approx(spectral_radius(m), abs=1e-8)


def test_perron_root_rejects_bad_input():
    with pytest.raises(NotNonnegative):
        perron_root(np.array([[1.0, -0.1], [1.0, 1.0]]))
    with pytest.raises(NotIrreducible):
        perron_root(np.array([[1.0, 1.0], [0.0, 1.0]]))


def test_row_sum_bounds_examples():
    for n in (3, 5):
        dq = build_matrix(build(DirectedCycle(n)), "DQ")
        assert row_sum_bounds(dq) == (n * (n - 1), n * (n - 1))
        assert spectral_radius(dq) == pytest.approx(n * (n - 1), abs=1e-9)
    assert row_sum_bounds(np.eye(2)) == (1.0, 1.0)


def test_row_sum_bounds_knkp_digraph_distance():
    # distance row sums of the (6,2,1) digraph family member: p/k rows see
    # everything at distance 1, the q-cell reaches the p-cell at distance 2
    d = build_matrix(build(KnkpDigraph(6, 2, 1)), "D")
    assert row_sum_bounds(d) == (5.0, 6.0)
    with pytest.raises(NotNonnegative):
        row_sum_bounds(np.array([[0.0, -1.0], [1.0, 0.0]]))


def test_row_sums_bracket_perron_root_randomized():
    # min row sum <= perron root <= max row sum, with equality on either
    # side exactly when all row sums agree (irreducible case)
    rng = np.random.default_rng(8)
    for trial in range(200):
        n = int(rng.integers(2, 9))
        if trial % 4 == 0:
            # circulant: constant row sums force equality on both sides
            row = rng.uniform(0, 2, n)
            row[1 % n] = max(row[1 % n], 0.05)
            m = np.array([np.roll(row, shift) for shift in range(n)])
        else:
            m = rng.uniform(0, 2, (n, n)) * (rng.uniform(0, 1, (n, n)) < 0.7)
            for i in range(n):
                m[i, (i + 1) % n] = max(m[i, (i + 1) % n], 0.05)
        lo, hi = row_sum_bounds(m)
        rho = perron_root(m)
        assert lo - 1e-9 <= rho <= hi + 1e-9
        if hi - lo <= 1e-9:
            assert rho == pytest.approx(hi, abs=1e-9)
        else:
            assert lo + 1e-9 < rho < hi - 1e-9


def test_lemma_monotonicity_of_spectral_radius():
    # 0 <= A <= B gives rho(A) <= rho(B); strict when A < B and B irreducible
    rng = np.random.default_rng(9)
    strict_seen = 0
    for _ in range(1000):
        n = int(rng.integers(2, 7))
        b = rng.uniform(0, 1, (n, n)) * (rng.uniform(0, 1, (n, n)) < 0.8)
        for i in range(n):
            b[i, (i + 1) % n] = max(b[i, (i + 1) % n], 0.1)
        mask = rng.uniform(0, 1, (n, n)) < 0.3
        a = np.where(mask, b * rng.uniform(0, 1, (n, n)), b)
        assert spectral_radius(a) <= spectral_radius(b) + 1e-9
        if (a < b).any():
            strict_seen += 1
            assert spectral_radius(a) < spectral_radius(b)
    assert strict_seen > 100


# ---------------------------------------------------------------------------
# matrix order


def test_matrix_order_classes():
    a = build_matrix(build(DirectedCycle(4)), "A").to_numpy()
    b = build_matrix(build(BidirectedComplete(4)), "A").to_numpy()
    assert matrix_order(a, a) is MatrixOrder.EQ
    assert matrix_order(a, b) is MatrixOrder.LESS
    assert matrix_order(b, a) is MatrixOrder.GREATER
    assert matrix_order(np.zeros((3, 3)), np.ones((3, 3))) is MatrixOrder.MUCH_LESS
    assert matrix_order(np.ones((3, 3)), np.zeros((3, 3))) is MatrixOrder.MUCH_GREATER
    c = np.array([[0.0, 1.0], [-1.0, 0.0]])
    assert matrix_order(c, np.zeros((2, 2))) is MatrixOrder.INCOMPARABLE
    with pytest.raises(DimensionMismatch):
        matrix_order(np.zeros((2, 2)), np.zeros((3, 3)))


# ---------------------------------------------------------------------------
# polynomial roots


def test_poly_roots_simple():
    spec = poly_roots(Polynomial([-1, 0, 1]))
    assert spec.isclose(Spectrum.from_pairs([(1, 1), (-1, 1)]), tol=1e-12)


def test_poly_roots_triple_root_exact_multiplicity():
    spec = poly_roots(Polynomial.linear(2) ** 3)
    assert spec.pairs == ((2 + 0j, 3),)


def test_poly_roots_connectivity_cubic_vs_bisection():
    # x^3 - 3x^2 - 6x + 4, the adjacency bound cubic at (n, k) = (6, 2)
    cubic = Polynomial([4, -6, -3, 1])
    largest = max(v.real for v, _ in poly_roots(cubic).pairs)
    oracle = bisection_largest_root(cubic, 0, 10)
    assert largest == pytest.approx(oracle, abs=1e-10)
    assert largest == pytest.approx(4.2014723382, abs=1e-9)


def test_poly_roots_zero_polynomial():
    with pytest.raises(ZeroPolynomial):
        poly_roots(Polynomial([0]))


def test_squarefree_factors_mixed_multiplicities():
    p = Polynomial.linear(1) ** 2 * Polynomial.linear(-3) * Polynomial.linear(Fraction(1, 2)) ** 4
    factors = {(tuple(f.coeffs), m) for f, m in squarefree_factors(p)}
    assert ((3, 1), 1) in factors
    assert ((-1, 1), 2) in factors
    assert ((Fraction(-1, 2), 1), 4) in factors


def test_poly_roots_random_against_residuals():
    rng = random.Random(16)
    for _ in range(20):
        coeffs = [rng.randint(-5, 5) for _ in range(rng.randint(2, 7))] + [1]
        poly = Polynomial(coeffs)
        spec = poly_roots(poly)
        assert spec.order == poly.degree
        for value in spec.values():
            acc = 0j
            for c in reversed([float(x) for x in poly.coeffs]):
                acc = acc * value + c
            assert abs(acc) < 1e-8 * max(1.0, max(abs(c) for c in coeffs))


# ---------------------------------------------------------------------------
# Spectrum semantics


def _random_spectrum(rng):
    pairs = []
    for _ in range(rng.randint(1, 5)):
        pairs.append((complex(rng.uniform(-5, 5), rng.uniform(-5, 5)), rng.randint(1, 3)))
    return Spectrum.from_pairs(pairs)


def test_spectrum_equality_reflexive_symmetric_monotone():
    rng = random.Random(17)
    for _ in range(200):
        a = _random_spectrum(rng)
        b = _random_spectrum(rng)
        assert a.isclose(a, tol=1e-12)
        assert a.isclose(b, tol=1e-7) == b.isclose(a, tol=1e-7)
        if a.isclose(b, tol=1e-7):
            assert a.isclose(b, tol=1e-5)


def test_spectrum_multiplicities_and_order():
    spec = Spectrum.from_values([1.0, 1.0 + 1e-9, 3.0, -2.0], cluster_tol=1e-6)
    assert spec.order == 4
    assert spec.pairs[0][0].real == pytest.approx(3.0)
    assert dict((round(v.real), m) for v, m in spec.pairs)[1] == 2


def test_spectrum_containment_with_multiplicity():
    big = Spectrum.from_pairs([(3, 1), (1, 5), (-2, 4)])
    assert big.contains(Spectrum.from_pairs([(3, 1), (1, 1)]))
    assert big.contains(Spectrum.from_pairs([(1, 5)]))
    assert not big.contains(Spectrum.from_pairs([(1, 6)]))
    assert not big.contains(Spectrum.from_pairs([(2, 1)]))
