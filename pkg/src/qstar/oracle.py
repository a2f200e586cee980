"""Ground-truth checks in the explicit 2n-variable polynomial ring.

NPoly is a sparse exact polynomial in x_1..x_n, y_1..y_n and h.  Elementary
multisymmetric functions are expanded straight from their generating
product, the n-particle Moyal product is applied term by term, and the main
star-product identity is verified coefficient for coefficient.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial, perm

from .algebra import Monomial2
from .expansion import ETerm, StarExpansion, star_product
from .tables import classical_product, weight


class NPoly:
    """Exact polynomial over n copies of (x, y) plus the formal h.

    Exponent keys are tuples (ex_1..ex_n, ey_1..ey_n, eh); coefficients are
    Fractions and zero coefficients are never stored.
    """

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for key, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[key] = c

    @classmethod
    def zero(cls, n: int) -> "NPoly":
        return cls(n)

    @classmethod
    def constant(cls, n: int, c) -> "NPoly":
        key = (0,) * (2 * n + 1)
        return cls(n, {key: Fraction(c)})

    @classmethod
    def from_monomial(cls, mono: Monomial2, copy: int, n: int) -> "NPoly":
        """The monomial evaluated at copy i, i.e. x_i^c y_i^d."""
        key = [0] * (2 * n + 1)
        key[copy - 1] = mono.x
        key[n + copy - 1] = mono.y
        return cls(n, {tuple(key): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NPoly)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __add__(self, other: "NPoly") -> "NPoly":
        if self.n != other.n:
            raise ValueError("mismatched number of copies")
        out = dict(self.terms)
        for key, c in other.terms.items():
            c2 = out.get(key, 0) + c
            if c2:
                out[key] = c2
            else:
                out.pop(key, None)
        return NPoly(self.n, out)

    def __sub__(self, other: "NPoly") -> "NPoly":
        return self + (other * -1)

    def __mul__(self, other):
        if not isinstance(other, NPoly):
            c = Fraction(other)
            return NPoly(
                self.n, {k: v * c for k, v in self.terms.items()}
            )
        if self.n != other.n:
            raise ValueError("mismatched number of copies")
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                c = out.get(key, 0) + c1 * c2
                if c:
                    out[key] = c
                else:
                    out.pop(key, None)
        return NPoly(self.n, out)

    __rmul__ = __mul__

    def shift_hbar(self, k: int) -> "NPoly":
        return NPoly(
            self.n,
            {key[:-1] + (key[-1] + k,): c for key, c in self.terms.items()},
        )

    def hbar_coefficient(self, k: int) -> "NPoly":
        """Coefficient of h^k, as an h-free polynomial."""
        out = {}
        for key, c in self.terms.items():
            if key[-1] == k:
                out[key[:-1] + (0,)] = c
        return NPoly(self.n, out)

    def max_hbar(self) -> int:
        return max((key[-1] for key in self.terms), default=0)

    def has_hbar(self) -> bool:
        return any(key[-1] for key in self.terms)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def permute_copies(self, perm_map) -> "NPoly":
        """Apply a permutation of copy indices; perm_map[i] is 0-based."""
        out = {}
        for key, c in self.terms.items():
            new = [0] * (2 * self.n + 1)
            for i in range(self.n):
                new[perm_map[i]] = key[i]
                new[self.n + perm_map[i]] = key[self.n + i]
            new[-1] = key[-1]
            out[tuple(new)] = c
        return NPoly(self.n, out)

    def __repr__(self) -> str:
        return f"NPoly(n={self.n}, {len(self.terms)} terms)"


def expand_elementary(alpha, p, n: int) -> NPoly:
    """Coefficient of t^alpha in prod_i (1 + sum_j p_j(i) t_j)."""
    alpha = tuple(alpha)
    p = tuple(p)
    if len(alpha) != len(p):
        raise ValueError("alpha and p must have equal length")
    if weight(alpha) > n:
        warnings.warn(
            f"|alpha|={weight(alpha)} exceeds n={n}: zero polynomial",
            stacklevel=2,
        )
        return NPoly.zero(n)
    a = len(alpha)
    zero_t = (0,) * a
    # map t-degree -> {exponent key -> coeff}
    acc = {zero_t: {(0,) * (2 * n + 1): Fraction(1)}}
    for i in range(1, n + 1):
        nxt = {}
        for tdeg, terms in acc.items():
            # skip the copy (the "1" in the factor)
            dest = nxt.setdefault(tdeg, {})
            for key, c in terms.items():
                dest[key] = dest.get(key, 0) + c
            for j in range(a):
                if tdeg[j] >= alpha[j]:
                    continue
                ndeg = tdeg[:j] + (tdeg[j] + 1,) + tdeg[j + 1:]
                dest = nxt.setdefault(ndeg, {})
                for key, c in terms.items():
                    nk = list(key)
                    nk[i - 1] += p[j].x
                    nk[n + i - 1] += p[j].y
                    nk = tuple(nk)
                    dest[nk] = dest.get(nk, 0) + c
        acc = nxt
    return NPoly(n, acc.get(alpha, {}))


def expand_eterm(term: ETerm, n: int) -> NPoly:
    """Expand one symbolic term, including its scalar and h power."""
    mults = term.multiplicities()
    if sum(mults) > n:
        warnings.warn(
            f"total multiplicity {sum(mults)} exceeds n={n}: zero polynomial",
            stacklevel=2,
        )
        return NPoly.zero(n)
    poly = expand_elementary(mults, term.arguments(), n)
    return (poly * term.scalar).shift_hbar(term.hbar)


def moyal(f: NPoly, g: NPoly) -> NPoly:
    """n-particle Moyal product: all y-derivatives act on the left factor.

    f * g = sum_kappa h^|kappa| / kappa! * d_y^kappa f * d_x^kappa g, with
    kappa running over n-vectors.  Integer inputs give integer output; this
    is asserted rather than assumed.
    """
    if f.n != g.n:
        raise ValueError("mismatched number of copies")
    n = f.n
    out = {}
    for kf, cf in f.terms.items():
        yexp = kf[n: 2 * n]
        for kg, cg in g.terms.items():
            xexp = kg[:n]
            ranges = [
                range(min(d, e) + 1) for d, e in zip(yexp, xexp)
            ]
            for kappa in product(*ranges):
                coeff = cf * cg
                for d, e, k in zip(yexp, xexp, kappa):
                    if k:
                        coeff *= Fraction(
                            perm(d, k) * perm(e, k), factorial(k)
                        )
                key = list(kf)
                for i in range(n):
                    key[i] += kg[i] - kappa[i]
                    key[n + i] += kg[n + i] - kappa[i]
                key[-1] += kg[-1] + sum(kappa)
                key = tuple(key)
                c = out.get(key, 0) + coeff
                if c:
                    out[key] = c
                else:
                    out.pop(key, None)
    result = NPoly(n, out)
    if f.is_integral() and g.is_integral():
        assert result.is_integral(), "Moyal product lost integrality"
    return result


def _derivative(f: NPoly, var: str, copy: int) -> NPoly:
    n = f.n
    pos = copy - 1 if var == "x" else n + copy - 1
    out = {}
    for key, c in f.terms.items():
        e = key[pos]
        if e:
            nk = key[:pos] + (e - 1,) + key[pos + 1:]
            out[nk] = out.get(nk, 0) + c * e
    return NPoly(n, out)


def poisson(f: NPoly, g: NPoly) -> NPoly:
    """Canonical bracket sum_i (dx_i f dy_i g - dy_i f dx_i g)."""
    if f.n != g.n:
        raise ValueError("mismatched number of copies")
    if f.has_hbar() or g.has_hbar():
        raise ValueError("poisson bracket requires h-free inputs")
    out = NPoly.zero(f.n)
    for i in range(1, f.n + 1):
        out = out + _derivative(f, "x", i) * _derivative(g, "y", i)
        out = out - _derivative(f, "y", i) * _derivative(g, "x", i)
    return out


def expand_expansion(expansion: StarExpansion, n: int) -> NPoly:
    """Sum of all expanded terms of a star expansion."""
    total = NPoly.zero(n)
    for term in expansion.terms():
        total = total + expand_eterm(term, n)
    return total


@dataclass
class VerifyReport:
    identity_ok: bool
    classical_ok: bool
    paths_ok: bool
    details: list

    @property
    def ok(self) -> bool:
        return self.identity_ok and self.classical_ok and self.paths_ok


def verify(alpha, beta, p, q, n, drop_scalars: bool = False) -> VerifyReport:
    """End-to-end check of the star expansion against the Moyal oracle.

    drop_scalars is a negative-control hook: it strips the term scalars
    before comparing, which must make the identity fail whenever a
    nontrivial kernel coefficient occurs.
    """
    alpha = tuple(alpha)
    beta = tuple(beta)
    p = tuple(p)
    q = tuple(q)
    details = []
    exp_enum = star_product(alpha, beta, p, q, n, path="enumerate")
    exp_lift = star_product(alpha, beta, p, q, n, path="lift")

    def canon(exp):
        return sorted(
            (t.hbar, t.scalar, t.slots) for t in exp.terms()
        )

    paths_ok = canon(exp_enum) == canon(exp_lift)
    if not paths_ok:
        details.append("enumerate and lift paths produced different terms")

    expansion = exp_enum
    if drop_scalars:
        expansion = StarExpansion(
            alpha, beta, p, q, n,
            exp_enum.s_bound, exp_enum.m_bound,
            {
                m: [ETerm(t.hbar, 1, t.slots, t.origin) for t in ts]
                for m, ts in exp_enum.by_order.items()
            },
        )

    lhs = expand_expansion(expansion, n)
    rhs = moyal(
        expand_elementary(alpha, p, n), expand_elementary(beta, q, n)
    )
    identity_ok = lhs == rhs
    if not identity_ok:
        diff = lhs - rhs
        details.append(
            f"expansion differs from Moyal oracle in {len(diff.terms)} "
            f"coefficient(s), e.g. {sorted(diff.terms.items())[:3]}"
        )

    classical_terms = classical_product(alpha, p, beta, q, n)
    classical_poly = NPoly.zero(n)
    for t in classical_terms:
        classical_poly = classical_poly + expand_eterm(t, n)
    slice0 = NPoly.zero(n)
    for t in expansion.order_slice(0):
        slice0 = slice0 + expand_eterm(t, n)
    classical_ok = slice0 == classical_poly
    if not classical_ok:
        details.append("h^0 slice differs from the classical product")

    return VerifyReport(identity_ok, classical_ok, paths_ok, details)
