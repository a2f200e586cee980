import random
from fractions import Fraction
from itertools import permutations

import pytest

from qstar.algebra import Monomial2, star_pair
from qstar.expansion import ETerm
from qstar.oracle import (
    NPoly,
    expand_elementary,
    expand_eterm,
    moyal,
    poisson,
    verify,
)

X = Monomial2(1, 0)
Y = Monomial2(0, 1)
XY = Monomial2(1, 1)


def var(name, i, n):
    mono = X if name == "x" else Y
    return NPoly.from_monomial(mono, i, n)


def random_poly(rng, n, max_terms=4, max_deg=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        key = tuple(
            rng.randint(0, max_deg) for _ in range(2 * n)
        ) + (0,)
        terms[key] = Fraction(rng.randint(-3, 3))
    return NPoly(n, terms)


class TestExpandElementary:
    def test_power_sum_like(self):
        got = expand_elementary((1,), (X,), 2)
        assert got == var("x", 1, 2) + var("x", 2, 2)

    def test_mixed(self):
        got = expand_elementary((1, 1), (X, Y), 2)
        want = (
            var("x", 1, 2) * var("y", 2, 2)
            + var("x", 2, 2) * var("y", 1, 2)
        )
        assert got == want

    def test_elementary_e2(self):
        assert expand_elementary((2,), (X,), 2) == var("x", 1, 2) * var("x", 2, 2)

    def test_overweight_warns_zero(self):
        with pytest.warns(UserWarning):
            got = expand_elementary((3,), (X,), 2)
        assert got.is_zero()

    def test_symmetry(self):
        poly = expand_elementary((2, 1), (XY, Monomial2(2, 0)), 3)
        for perm in permutations(range(3)):
            assert poly.permute_copies(perm) == poly


class TestExpandETerm:
    def test_constant_argument(self):
        term = ETerm(1, 1, ((1, Monomial2(0, 0)),))
        assert expand_eterm(term, 2) == NPoly.constant(2, 2).shift_hbar(1)

    def test_simple(self):
        term = ETerm(0, 1, ((1, XY),))
        assert expand_eterm(term, 1) == var("x", 1, 1) * var("y", 1, 1)

    def test_scaled_injection_count(self):
        term = ETerm(
            1, 2,
            ((1, Monomial2(3, 0)), (1, Monomial2(5, 1)), (1, Monomial2(4, 2))),
        )
        got = expand_eterm(term, 4)
        brute = NPoly.zero(4)
        monos = [Monomial2(3, 0), Monomial2(5, 1), Monomial2(4, 2)]
        for picks in permutations(range(1, 5), 3):
            prod = NPoly.constant(4, 2)
            for mono, i in zip(monos, picks):
                prod = prod * NPoly.from_monomial(mono, i, 4)
            brute = brute + prod
        # one contribution per ordered injection of copies into arguments
        assert got == brute.shift_hbar(1)


class TestMoyal:
    def test_y_star_x(self):
        f = var("y", 1, 1)
        g = var("x", 1, 1)
        want = var("x", 1, 1) * var("y", 1, 1) + NPoly.constant(1, 1).shift_hbar(1)
        assert moyal(f, g) == want

    def test_x_star_y(self):
        f = var("x", 1, 1)
        g = var("y", 1, 1)
        assert moyal(f, g) == f * g

    def test_bilinear_sum(self):
        n = 2
        f = var("y", 1, n) + var("y", 2, n)
        g = var("x", 1, n) + var("x", 2, n)
        want = f * g + NPoly.constant(n, 2).shift_hbar(1)
        assert moyal(f, g) == want

    def test_single_copy_matches_star_pair(self):
        for p in [XY, Monomial2(2, 1), Monomial2(0, 3)]:
            for q in [X, Monomial2(3, 0), Monomial2(1, 2)]:
                fp = NPoly.from_monomial(p, 1, 1)
                fq = NPoly.from_monomial(q, 1, 1)
                want = NPoly.zero(1)
                for k, term in star_pair(p, q):
                    want = want + (
                        NPoly.from_monomial(term.mono, 1, 1)
                        * term.coeff
                    ).shift_hbar(k)
                assert moyal(fp, fq) == want

    def test_associativity_randomized(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(1, 2)
            f = random_poly(rng, n)
            g = random_poly(rng, n)
            h = random_poly(rng, n)
            assert moyal(moyal(f, g), h) == moyal(f, moyal(g, h))

    def test_classical_limit(self):
        rng = random.Random(11)
        for _ in range(50):
            n = rng.randint(1, 2)
            f = random_poly(rng, n)
            g = random_poly(rng, n)
            prod = moyal(f, g)
            assert prod.hbar_coefficient(0) == (f * g).hbar_coefficient(0)

    def test_integrality(self):
        rng = random.Random(13)
        for _ in range(50):
            n = rng.randint(1, 2)
            prod = moyal(random_poly(rng, n), random_poly(rng, n))
            assert prod.is_integral()

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            moyal(NPoly.constant(1, 1), NPoly.constant(2, 1))


class TestPoisson:
    def test_canonical_pair(self):
        assert poisson(var("x", 1, 1), var("y", 1, 1)) == NPoly.constant(1, 1)

    def test_antisymmetry(self):
        rng = random.Random(17)
        f = random_poly(rng, 2)
        assert poisson(f, f).is_zero()

    def test_commutator_relation(self):
        # h^1 coefficient of f*g - g*f equals -{f, g}, with one fixed sign
        rng = random.Random(19)
        for _ in range(50):
            n = rng.randint(1, 2)
            f = random_poly(rng, n)
            g = random_poly(rng, n)
            commutator = moyal(f, g) - moyal(g, f)
            assert commutator.hbar_coefficient(1) == poisson(f, g) * -1

    def test_rejects_hbar(self):
        with pytest.raises(ValueError):
            poisson(NPoly.constant(1, 1).shift_hbar(1), NPoly.constant(1, 1))


class TestVerify:
    def test_noncommuting_minimal(self):
        report = verify((1,), (1,), (Y,), (X,), 1)
        assert report.ok

    def test_classical_case(self):
        report = verify((1,), (1,), (X,), (Y,), 2)
        assert report.ok

    def test_worked_example(self):
        from conftest import WORKED

        report = verify(*WORKED)
        assert report.ok

    def test_drop_scalar_negative_control(self):
        from conftest import WORKED

        report = verify(*WORKED, drop_scalars=True)
        assert not report.identity_ok
        assert report.details
