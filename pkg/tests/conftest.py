"""Shared desk-scale grids and helpers for the test suite."""

import random

from qstar.algebra import Monomial2

# Multi-indices with up to two entries, each at most 2.
MULTI_INDICES = [
    (1,), (2,), (0, 1), (1, 1), (1, 2), (2, 1), (2, 2),
]

# Worked four-copy example inputs: alpha, beta, p, q, n.
WORKED = (
    (1, 1),
    (2, 1),
    (Monomial2(2, 1), Monomial2(3, 1)),
    (Monomial2(3, 0), Monomial2(2, 2)),
    4,
)


def combinatorial_grid(max_n=4, max_m=3):
    """(alpha, beta, n, m) points for exhaustive matrix/word checks."""
    for alpha in MULTI_INDICES:
        for beta in MULTI_INDICES:
            lo = max(sum(alpha), sum(beta), 1)
            for n in range(lo, max_n + 1):
                for m in range(max_m + 1):
                    yield alpha, beta, n, m


def small_monomials(max_exp=2):
    return [
        Monomial2(x, y)
        for x in range(max_exp + 1)
        for y in range(max_exp + 1)
    ]


def oracle_grid():
    """(alpha, beta, p, q, n) specs for the exact oracle identity.

    Exhaustive over single-entry margins with exponents up to 2, plus a
    seeded sample of two-entry shapes with exponents up to 3, plus the
    the worked four-copy example.
    """
    monos = small_monomials(2)
    for alpha in [(1,), (2,)]:
        for beta in [(1,), (2,)]:
            n = max(sum(alpha), sum(beta))
            for p in monos:
                for q in monos:
                    yield alpha, beta, (p,), (q,), n

    rng = random.Random(20250823)
    shapes = [
        ((1, 1), (1,)), ((1,), (1, 1)), ((1, 1), (1, 1)),
        ((2, 1), (1, 1)), ((1, 1), (2, 1)), ((1, 2), (2, 1)),
    ]
    for alpha, beta in shapes:
        for _ in range(5):
            n = max(sum(alpha), sum(beta))
            n = rng.randint(n, 3) if n <= 3 else n
            p = tuple(
                Monomial2(rng.randint(0, 3), rng.randint(0, 3))
                for _ in alpha
            )
            q = tuple(
                Monomial2(rng.randint(0, 3), rng.randint(0, 3))
                for _ in beta
            )
            yield alpha, beta, p, q, n

    yield WORKED
