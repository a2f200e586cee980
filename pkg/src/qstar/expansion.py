"""Assembly of symbolic star-product terms from cubical matrices.

Each cubical matrix contributes one elementary multisymmetric term whose
arguments are read off the B table semantically, by position (i, j, k).
Star-kernel coefficients enter the term scalar raised to the slot
multiplicity; a matrix with a unit above the pair's top grade K_ij
contributes nothing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .algebra import (
    BTable,
    Monomial2,
    ScaledMonomial,
    build_B,
    monomial_key,
    render_monomial,
)
from .cubes import (
    CubicalMatrix,
    contributing_support,
    enumerate_Q,
    lift_all,
    max_order,
)
from .tables import weight


def canonical_slots(slots) -> tuple:
    """Sort (multiplicity, monomial) slots; equal monomials stay separate."""
    return tuple(
        sorted(slots, key=lambda s: (monomial_key(s[1]), s[0]))
    )


@dataclass(frozen=True)
class ETerm:
    """scalar * e_(multiplicities)(monomials) * h^hbar."""

    hbar: int
    scalar: int
    slots: tuple  # ordered (multiplicity, Monomial2) pairs
    origin: CubicalMatrix | None = field(
        default=None, compare=False, repr=False
    )

    def multiplicities(self) -> tuple:
        return tuple(mult for mult, _ in self.slots)

    def arguments(self) -> tuple:
        return tuple(mono for _, mono in self.slots)


@dataclass(frozen=True)
class StarExpansion:
    alpha: tuple
    beta: tuple
    p: tuple
    q: tuple
    n: int
    s_bound: int
    m_bound: int
    by_order: dict  # hbar power -> list of ETerm

    def terms(self):
        for m in sorted(self.by_order):
            yield from self.by_order[m]

    def term_counts(self) -> dict:
        return {m: len(ts) for m, ts in sorted(self.by_order.items())}

    def order_slice(self, m: int) -> list:
        return list(self.by_order.get(m, ()))


def gamma_to_eterm(gamma: CubicalMatrix, btable: BTable):
    """One symbolic term per matrix, or None when the term vanishes."""
    if gamma.a != btable.a or gamma.b != btable.b:
        raise ValueError("matrix dimensions do not match the BTable")
    slots = []
    scalar = 1
    for i, j, k, v in gamma.nonzero_entries():
        if i == 0:
            slots.append((v, btable.q_args[j - 1]))
            continue
        if j == 0:
            slots.append((v, btable.p_args[i - 1]))
            continue
        if k > btable.k_max(i, j):
            return None
        entry = btable.star_entries[(i, j, k)]
        scalar *= entry.coeff ** v
        slots.append((v, entry.mono))
    return ETerm(gamma.weight(), scalar, canonical_slots(slots), gamma)


def star_product(alpha, beta, p, q, n, path: str = "enumerate") -> StarExpansion:
    """Full star product of e_alpha(p) and e_beta(q), truncated at S and M."""
    alpha = tuple(alpha)
    beta = tuple(beta)
    p = tuple(p)
    q = tuple(q)
    if len(p) != len(alpha) or len(q) != len(beta):
        raise ValueError("monomial lists must match multi-index lengths")
    if weight(alpha) > n or weight(beta) > n:
        raise ValueError("margins exceed n")
    if path not in ("enumerate", "lift"):
        raise ValueError(f"unknown path {path!r}")
    btable = build_B(p, q)
    s_bound = contributing_support(p, q)
    m_bound = max_order(alpha, beta, n, s_bound)
    enum = enumerate_Q if path == "enumerate" else lift_all
    by_order = {}
    for m in range(m_bound + 1):
        terms = []
        for gamma in enum(alpha, beta, n, m):
            if gamma.support_level() > s_bound:
                continue
            term = gamma_to_eterm(gamma, btable)
            if term is not None:
                terms.append(term)
        terms.sort(key=lambda t: (t.slots, t.scalar))
        if terms:
            by_order[m] = terms
    return StarExpansion(
        alpha, beta, p, q, n, s_bound, m_bound, by_order
    )


def _render_eterm(term: ETerm) -> str:
    mults = ",".join(str(m) for m in term.multiplicities())
    args = ",".join(
        render_monomial(ScaledMonomial(1, mono))
        for mono in term.arguments()
    )
    body = f"e_({mults})({args})"
    if term.scalar != 1:
        body = f"{term.scalar} {body}"
    if term.hbar == 1:
        body += " h"
    elif term.hbar > 1:
        body += f" h^{term.hbar}"
    return body


def render(expansion: StarExpansion, fmt: str = "text") -> str:
    """Deterministic serialization; text mirrors e_(...)(...) h^m notation."""
    if fmt == "text":
        return " + ".join(_render_eterm(t) for t in expansion.terms())
    if fmt == "json":
        doc = {
            "params": {
                "alpha": list(expansion.alpha),
                "beta": list(expansion.beta),
                "p": [
                    render_monomial(ScaledMonomial(1, mono))
                    for mono in expansion.p
                ],
                "q": [
                    render_monomial(ScaledMonomial(1, mono))
                    for mono in expansion.q
                ],
                "n": expansion.n,
            },
            "bounds": {"S": expansion.s_bound, "M": expansion.m_bound},
            "terms": [
                {
                    "m": t.hbar,
                    "scalar": t.scalar,
                    "slots": [
                        {
                            "mult": mult,
                            "monomial": {"x": mono.x, "y": mono.y},
                        }
                        for mult, mono in t.slots
                    ],
                }
                for t in expansion.terms()
            ],
        }
        return json.dumps(doc, indent=2)
    raise ValueError(f"unknown format {fmt!r}")
