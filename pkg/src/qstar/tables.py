"""Margin-constrained integer matrices and the classical product.

L(alpha, beta, n) is the set of (a+1) x (b+1) nonnegative integer matrices
gamma with gamma_00 = 0, total at most n, row sums alpha_i over rows 1..a
and column sums beta_j over columns 1..b.  These are the lattice points of a
transportation polytope with slack, and they index the terms of the
classical product of elementary multisymmetric functions.
"""

from __future__ import annotations

from dataclasses import dataclass


def weight(multi_index) -> int:
    return sum(multi_index)


@dataclass(frozen=True, order=True)
class MarginMatrix:
    """An (a+1) x (b+1) matrix stored as a tuple of row tuples."""

    rows: tuple

    @property
    def a(self) -> int:
        return len(self.rows) - 1

    @property
    def b(self) -> int:
        return len(self.rows[0]) - 1

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.rows[i][j]

    def total(self) -> int:
        return sum(sum(r) for r in self.rows)

    def row_margin(self, i: int) -> int:
        return sum(self.rows[i])

    def col_margin(self, j: int) -> int:
        return sum(r[j] for r in self.rows)

    def interior_sum(self) -> int:
        return sum(sum(r[1:]) for r in self.rows[1:])


def interior_support_count(gamma: MarginMatrix) -> int:
    """Number of nonzero entries outside row 0 and column 0."""
    return sum(
        1
        for row in gamma.rows[1:]
        for v in row[1:]
        if v != 0
    )


def _check_margins(alpha, beta, n):
    if weight(alpha) > n or weight(beta) > n:
        raise ValueError(
            f"margins exceed n: |alpha|={weight(alpha)}, "
            f"|beta|={weight(beta)}, n={n}"
        )
    if not alpha or not beta:
        raise ValueError("alpha and beta must be nonempty")
    if any(v < 0 for v in alpha) or any(v < 0 for v in beta):
        raise ValueError("multi-index entries must be nonnegative")


def enumerate_L(alpha, beta, n) -> list[MarginMatrix]:
    """All matrices of L(alpha, beta, n), lexicographic on row-major entries.

    Backtracks over interior entries; the boundary row and column are the
    margin residuals, so only the slack condition needs a final check.
    """
    alpha = tuple(alpha)
    beta = tuple(beta)
    _check_margins(alpha, beta, n)
    a, b = len(alpha), len(beta)
    cells = [(i, j) for i in range(1, a + 1) for j in range(1, b + 1)]
    out = []
    interior = [[0] * (b + 1) for _ in range(a + 1)]
    ra = list(alpha)
    rb = list(beta)

    def rec(idx: int):
        if idx == len(cells):
            # boundary entries are the residual margins
            total = sum(ra) + sum(rb) + sum(
                interior[i][j] for i, j in cells
            )
            if total > n:
                return
            rows = [tuple([0] + rb)]
            for i in range(1, a + 1):
                rows.append(tuple([ra[i - 1]] + interior[i][1:]))
            out.append(MarginMatrix(tuple(rows)))
            return
        i, j = cells[idx]
        for v in range(min(ra[i - 1], rb[j - 1]) + 1):
            interior[i][j] = v
            ra[i - 1] -= v
            rb[j - 1] -= v
            rec(idx + 1)
            ra[i - 1] += v
            rb[j - 1] += v
            interior[i][j] = 0

    rec(0)
    out.sort(key=lambda g: g.rows)
    return out


def classical_product(alpha, p, beta, q, n):
    """Classical product of e_alpha(p) and e_beta(q) as h^0 terms.

    One term per gamma in L(alpha, beta, n); arguments are p, q and the
    pairwise commutative products p_i * q_j with multiplicities read off
    gamma.
    """
    from .expansion import ETerm, canonical_slots

    alpha = tuple(alpha)
    beta = tuple(beta)
    p = tuple(p)
    q = tuple(q)
    if len(p) != len(alpha) or len(q) != len(beta):
        raise ValueError("monomial lists must match multi-index lengths")
    terms = []
    for gamma in enumerate_L(alpha, beta, n):
        slots = []
        for i in range(1, len(alpha) + 1):
            if gamma[i, 0]:
                slots.append((gamma[i, 0], p[i - 1]))
        for j in range(1, len(beta) + 1):
            if gamma[0, j]:
                slots.append((gamma[0, j], q[j - 1]))
        for i in range(1, len(alpha) + 1):
            for j in range(1, len(beta) + 1):
                if gamma[i, j]:
                    slots.append((gamma[i, j], p[i - 1] * q[j - 1]))
        terms.append(ETerm(0, 1, canonical_slots(slots)))
    return terms
