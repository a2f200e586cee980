import json

import pytest

from conftest import WORKED
from qstar.algebra import Monomial2, build_B
from qstar.cubes import CubicalMatrix, enumerate_Q
from qstar.expansion import (
    ETerm,
    gamma_to_eterm,
    render,
    star_product,
)
from qstar.tables import classical_product

X = Monomial2(1, 0)
Y = Monomial2(0, 1)


def mk(*levels):
    return CubicalMatrix(tuple(tuple(tuple(r) for r in lvl) for lvl in levels))


def canon(exp):
    return sorted((t.hbar, t.scalar, t.slots) for t in exp.terms())


class TestGammaToETerm:
    def test_scaled_term(self):
        btable = build_B(WORKED[2], WORKED[3])
        gamma = mk(
            [[0, 1, 0], [0, 1, 0], [0, 0, 0]],
            [[0, 0, 0], [0, 0, 0], [0, 0, 1]],
        )
        term = gamma_to_eterm(gamma, btable)
        assert term.hbar == 1
        assert term.scalar == 2
        assert term.slots == (
            (1, Monomial2(3, 0)),
            (1, Monomial2(4, 2)),
            (1, Monomial2(5, 1)),
        )

    def test_classical_term_unit_scalar(self):
        btable = build_B(WORKED[2], WORKED[3])
        gamma = mk([[0, 1, 0], [0, 1, 0], [0, 0, 1]])
        term = gamma_to_eterm(gamma, btable)
        assert term.hbar == 0
        assert term.scalar == 1

    def test_overflow_level_vanishes(self):
        btable = build_B(WORKED[2], WORKED[3])  # every K_ij is 1
        gamma = mk(
            [[0, 1, 0], [0, 1, 0], [0, 0, 0]],
            [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
            [[0, 0, 0], [0, 0, 0], [0, 0, 1]],
        )
        assert gamma_to_eterm(gamma, btable) is None

    def test_dimension_mismatch(self):
        btable = build_B((Y,), (X,))
        gamma = mk([[0, 1, 0], [0, 1, 0], [0, 0, 1]])
        with pytest.raises(ValueError):
            gamma_to_eterm(gamma, btable)


class TestStarProduct:
    def test_noncommuting_pair(self):
        exp = star_product((1,), (1,), (Y,), (X,), 1)
        assert canon(exp) == [
            (0, 1, ((1, Monomial2(1, 1)),)),
            (1, 1, ((1, Monomial2(0, 0)),)),
        ]

    def test_commuting_pair(self):
        exp = star_product((1,), (1,), (X,), (Y,), 1)
        assert exp.term_counts() == {0: 1}
        assert exp.s_bound == 0

    def test_worked_counts(self):
        exp = star_product(*WORKED)
        assert exp.term_counts() == {0: 7, 1: 10, 2: 3}
        assert (exp.s_bound, exp.m_bound) == (1, 2)

    def test_path_equivalence(self):
        for spec in [
            ((1,), (1,), (Y,), (X,), 2),
            ((1, 1), (1,), (Monomial2(1, 1), Y), (Monomial2(2, 1),), 3),
            WORKED,
        ]:
            a = star_product(*spec, path="enumerate")
            b = star_product(*spec, path="lift")
            assert canon(a) == canon(b)

    def test_classical_slice(self):
        alpha, beta, p, q, n = WORKED
        exp = star_product(alpha, beta, p, q, n)
        classical = classical_product(alpha, p, beta, q, n)
        assert sorted(
            (t.scalar, t.slots) for t in exp.order_slice(0)
        ) == sorted((t.scalar, t.slots) for t in classical)

    def test_truncation_soundness(self):
        # raw sweep without the S/M bounds reproduces the truncated result
        from qstar.expansion import gamma_to_eterm as to_term

        alpha, beta, p, q, n = WORKED
        exp = star_product(alpha, beta, p, q, n)
        btable = build_B(p, q)
        raw = []
        for m in range(exp.m_bound + 4):
            for g in enumerate_Q(alpha, beta, n, m):
                term = to_term(g, btable)
                if term is not None:
                    raw.append((term.hbar, term.scalar, term.slots))
        assert sorted(raw) == canon(exp)

    def test_margin_error(self):
        with pytest.raises(ValueError):
            star_product((3,), (1,), (X,), (Y,), 2)


class TestRender:
    def test_text_golden(self):
        exp = star_product((1,), (1,), (Y,), (X,), 1)
        assert render(exp, "text") == "e_(1)(xy) + e_(1)(1) h"

    def test_empty(self):
        exp = star_product((1,), (1,), (X,), (Y,), 1)
        no_terms = type(exp)(
            exp.alpha, exp.beta, exp.p, exp.q, exp.n,
            exp.s_bound, exp.m_bound, {},
        )
        assert render(no_terms, "text") == ""

    def test_json_schema(self):
        exp = star_product(*WORKED)
        doc = json.loads(render(exp, "json"))
        assert set(doc) == {"params", "bounds", "terms"}
        assert doc["params"] == {
            "alpha": [1, 1],
            "beta": [2, 1],
            "p": ["x^2y", "x^3y"],
            "q": ["x^3", "x^2y^2"],
            "n": 4,
        }
        assert doc["bounds"] == {"S": 1, "M": 2}
        assert len(doc["terms"]) == 20
        for term in doc["terms"]:
            assert set(term) == {"m", "scalar", "slots"}
            for slot in term["slots"]:
                assert set(slot) == {"mult", "monomial"}
                assert set(slot["monomial"]) == {"x", "y"}

    def test_scalar_and_power_rendering(self):
        from qstar.expansion import canonical_slots

        term = ETerm(
            2, 3, canonical_slots([(1, Monomial2(2, 0)), (2, Monomial2(0, 0))])
        )
        exp = star_product((1,), (1,), (Y,), (X,), 1)
        styled = type(exp)(
            exp.alpha, exp.beta, exp.p, exp.q, exp.n,
            exp.s_bound, exp.m_bound, {2: [term]},
        )
        assert render(styled, "text") == "3 e_(2,1)(1,x^2) h^2"
