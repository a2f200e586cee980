"""Monomials in x, y, the monomial star kernel, and the B argument table.

The star product of two monomials x^c y^d * x^f y^g expands as a finite sum

    sum_{k=0}^{min(d,f)} C(d,k) (f)_k  x^{c+f-k} y^{d+g-k} h^k

with (f)_k the falling factorial.  The y-degree of the left factor and the
x-degree of the right factor drive the expansion length; everything here is
exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, perm


@dataclass(frozen=True, order=True)
class Monomial2:
    """A monomial x^x_exp * y^y_exp with nonnegative exponents."""

    x: int = 0
    y: int = 0

    def __post_init__(self):
        if self.x < 0 or self.y < 0:
            raise ValueError("monomial exponents must be nonnegative")

    def degree(self) -> int:
        return self.x + self.y

    def __mul__(self, other: "Monomial2") -> "Monomial2":
        # commutative (classical) product
        return Monomial2(self.x + other.x, self.y + other.y)


def monomial_key(m: Monomial2) -> tuple:
    """Canonical ordering key: total degree, then x, then y exponent."""
    return (m.degree(), m.x, m.y)


@dataclass(frozen=True)
class ScaledMonomial:
    """An integer multiple of a monomial; coeff 0 is the canonical zero."""

    coeff: int
    mono: Monomial2 = field(default_factory=Monomial2)

    def __post_init__(self):
        if self.coeff == 0 and self.mono != Monomial2():
            # zero terms compare equal regardless of the carried monomial
            object.__setattr__(self, "mono", Monomial2())

    def is_zero(self) -> bool:
        return self.coeff == 0


ZERO = ScaledMonomial(0)


def star_pair(p: Monomial2, q: Monomial2) -> list[tuple[int, ScaledMonomial]]:
    """All h-graded terms of the monomial star product p * q.

    Returns [(k, term)] for k = 0..min(p.y, q.x); the k = 0 coefficient is
    always 1 and term k has total degree deg(p) + deg(q) - 2k.
    """
    kmax = min(p.y, q.x)
    out = []
    for k in range(kmax + 1):
        coeff = comb(p.y, k) * perm(q.x, k)
        mono = Monomial2(p.x + q.x - k, p.y + q.y - k)
        out.append((k, ScaledMonomial(coeff, mono)))
    return out


def b_term(p: Monomial2, q: Monomial2, k: int) -> ScaledMonomial:
    """The h^k coefficient of p * q; zero beyond k = min(p.y, q.x)."""
    if k > min(p.y, q.x):
        return ZERO
    coeff = comb(p.y, k) * perm(q.x, k)
    return ScaledMonomial(coeff, Monomial2(p.x + q.x - k, p.y + q.y - k))


@dataclass(frozen=True)
class BTable:
    """The flattened argument table B(p, q).

    Flat order is p's, then q's, then star pairs (i, j) row-major with the
    h-grade k innermost.  star_entries maps (i, j, k), 1-based in i and j,
    to the corresponding scaled monomial.
    """

    p_args: tuple[Monomial2, ...]
    q_args: tuple[Monomial2, ...]
    star_entries: dict
    flat_order: tuple

    @property
    def a(self) -> int:
        return len(self.p_args)

    @property
    def b(self) -> int:
        return len(self.q_args)

    def k_max(self, i: int, j: int) -> int:
        """Highest h-grade with a nonzero entry for the pair (i, j)."""
        return min(self.p_args[i - 1].y, self.q_args[j - 1].x)

    def flat_entries(self) -> list[ScaledMonomial]:
        out = []
        for tag in self.flat_order:
            if tag[0] == "p":
                out.append(ScaledMonomial(1, self.p_args[tag[1] - 1]))
            elif tag[0] == "q":
                out.append(ScaledMonomial(1, self.q_args[tag[1] - 1]))
            else:
                out.append(self.star_entries[tag[1:]])
        return out

    def __len__(self) -> int:
        return len(self.flat_order)


def build_B(p, q) -> BTable:
    """Construct the B table for monomial lists p and q."""
    p = tuple(p)
    q = tuple(q)
    if not p or not q:
        raise ValueError("p and q must be nonempty")
    entries = {}
    order = [("p", i) for i in range(1, len(p) + 1)]
    order += [("q", j) for j in range(1, len(q) + 1)]
    for i, pi in enumerate(p, start=1):
        for j, qj in enumerate(q, start=1):
            for k, term in star_pair(pi, qj):
                entries[(i, j, k)] = term
                order.append(("b", i, j, k))
    return BTable(p, q, entries, tuple(order))


def b_length(p, q) -> int:
    """Flat length of B(p, q) without building the table."""
    p = tuple(p)
    q = tuple(q)
    if not p or not q:
        raise ValueError("p and q must be nonempty")
    return len(p) + len(q) + sum(
        min(pi.y, qj.x) + 1 for pi in p for qj in q
    )


class MonomialSyntaxError(ValueError):
    """Malformed monomial text; carries the byte offset of the error."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


def _scan_digits(text: str, pos: int) -> tuple[int, int]:
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise MonomialSyntaxError("expected digits", start)
    return int(text[start:pos]), pos


def parse_monomial(text: str) -> ScaledMonomial:
    """Parse compact monomial text like "x^2y", "3x^4" or "-2y^3".

    Grammar: sign? digits? xpart? ypart? with xpart = "x" ("^" digits)? and
    likewise for y; at least one of the three parts must be present.
    """
    pos = 0
    sign = 1
    if pos < len(text) and text[pos] in "+-":
        sign = -1 if text[pos] == "-" else 1
        pos += 1
    coeff = None
    if pos < len(text) and text[pos].isdigit():
        coeff, pos = _scan_digits(text, pos)
    exps = {}
    for var in "xy":
        if pos < len(text) and text[pos] == var:
            pos += 1
            if pos < len(text) and text[pos] == "^":
                pos += 1
                exps[var], pos = _scan_digits(text, pos)
            else:
                exps[var] = 1
    if pos != len(text):
        raise MonomialSyntaxError(f"unexpected character {text[pos]!r}", pos)
    if coeff is None and not exps:
        raise MonomialSyntaxError("empty monomial", 0)
    c = sign * (1 if coeff is None else coeff)
    return ScaledMonomial(c, Monomial2(exps.get("x", 0), exps.get("y", 0)))


def render_monomial(sm: ScaledMonomial) -> str:
    """Canonical text form: "1" coefficients and "^1" exponents omitted."""
    if sm.coeff == 0:
        return "0"
    parts = []
    m = sm.mono
    if m == Monomial2():
        return str(sm.coeff)
    if sm.coeff == -1:
        parts.append("-")
    elif sm.coeff != 1:
        parts.append(str(sm.coeff))
    for var, e in (("x", m.x), ("y", m.y)):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    return "".join(parts)
