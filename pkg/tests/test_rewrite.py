import random

import pytest

from conftest import random_light_scalar
from qclifford.presentations import build_glq2
from qclifford.rewrite import (
    BudgetExceeded,
    NCPolynomial,
    NonTerminating,
    RewriteSystem,
    local_confluence_check,
)
from qclifford.scalars import qinv, qvar


@pytest.fixture(scope="module")
def gl():
    return build_glq2().rs


class TestNormalForm:
    def test_single_swap_rule(self, gl):
        # a12 a11 -> q^{-1} a11 a12
        nf = gl.normal_form(NCPolynomial.word((1, 0)))
        assert nf == NCPolynomial.word((0, 1), qinv())

    def test_commuting_off_diagonal_pair(self, gl):
        assert gl.normal_form(NCPolynomial.word((2, 1))) == NCPolynomial.word((1, 2))

    def test_diagonal_pair_expands_with_correction_term(self, gl):
        q, qi = qvar(), qinv()
        nf = gl.normal_form(NCPolynomial.word((3, 0)))
        assert nf == NCPolynomial.word((0, 3)) + NCPolynomial.word((1, 2), -(q - qi))

    def test_idempotent(self, gl):
        p = NCPolynomial.word((3, 2, 1, 0))
        once = gl.normal_form(p)
        assert gl.normal_form(once) == once

    def test_budget_exceeded(self, gl):
        with pytest.raises(BudgetExceeded):
            gl.normal_form(NCPolynomial.word((3, 3, 0, 0)), budget=2)


class TestMultiply:
    def test_already_normal_product(self, gl):
        got = gl.multiply(NCPolynomial.gen(0), NCPolynomial.gen(1))
        assert got == NCPolynomial.word((0, 1))

    def test_disordered_product_rewrites(self, gl):
        got = gl.multiply(NCPolynomial.gen(1), NCPolynomial.gen(0))
        assert got == NCPolynomial.word((0, 1), qinv())

    def test_unit_is_neutral(self, gl):
        rng = random.Random(21)
        for _ in range(20):
            w = tuple(rng.randrange(4) for _ in range(rng.randint(0, 5)))
            p = gl.normal_form(NCPolynomial.word(w, random_light_scalar(rng)))
            assert gl.multiply(NCPolynomial.unit(), p) == p

    def test_multiply_equals_normal_form_of_concatenation(self, gl):
        rng = random.Random(22)
        for _ in range(200):
            w1 = tuple(rng.randrange(4) for _ in range(rng.randint(1, 4)))
            w2 = tuple(rng.randrange(4) for _ in range(rng.randint(1, 4)))
            p = NCPolynomial.word(w1, random_light_scalar(rng))
            r = NCPolynomial.word(w2, random_light_scalar(rng))
            direct = gl.multiply(p, r)
            concat = NCPolynomial(
                {
                    u + v: cu * cv
                    for u, cu in p.terms.items()
                    for v, cv in r.terms.items()
                }
            )
            assert direct == gl.normal_form(concat)

    def test_multiplication_is_associative_on_normal_forms(self, gl):
        rng = random.Random(23)
        for _ in range(50):
            ps = [
                NCPolynomial.word(
                    tuple(rng.randrange(4) for _ in range(rng.randint(1, 3)))
                )
                for _ in range(3)
            ]
            a, b, c = ps
            assert gl.multiply(gl.multiply(a, b), c) == gl.multiply(a, gl.multiply(b, c))


class TestTensorPower:
    def test_cross_slot_letters_commute(self, gl):
        t2 = gl.tensor_power(2)
        left_then_right = t2.multiply(NCPolynomial.gen(0), NCPolynomial.gen(4 + 1))
        right_then_left = t2.multiply(NCPolynomial.gen(4 + 1), NCPolynomial.gen(0))
        assert left_then_right == right_then_left == NCPolynomial.word((0, 5))

    def test_slot_keeps_original_relations(self, gl):
        t2 = gl.tensor_power(2)
        got = t2.multiply(NCPolynomial.gen(1), NCPolynomial.gen(0))
        assert got == NCPolynomial.word((0, 1), qinv())
        got_right = t2.multiply(NCPolynomial.gen(4 + 1), NCPolynomial.gen(4 + 0))
        assert got_right == NCPolynomial.word((4, 5), qinv())


class TestTermination:
    def test_rules_must_descend(self):
        with pytest.raises(NonTerminating):
            RewriteSystem(("a", "b"), {(0, 1): NCPolynomial.word((0, 1))})

    def test_degree_homogeneous_rules(self, gl):
        for variants in gl.rules.values():
            for variant in variants:
                assert all(len(w) == 2 for w in variant.terms)

    def test_every_word_to_length_six_terminates(self, gl):
        for w in gl.iter_words(6):
            gl.normal_form(NCPolynomial.word(w))


class TestLocalConfluence:
    def test_quantum_matrix_rules_are_confluent_to_length_four(self, gl):
        assert local_confluence_check(gl, 4) == []

    def test_single_rule_system_has_no_overlaps(self):
        rs = RewriteSystem(("a", "b"), {(1, 0): NCPolynomial.word((0, 1))})
        assert local_confluence_check(rs, 5) == []

    def test_conflicting_variants_are_detected(self):
        rs = RewriteSystem(
            ("a", "b"),
            {(1, 0): [NCPolynomial.word((0, 1)), NCPolynomial.word((0, 1), 2)]},
        )
        failures = local_confluence_check(rs, 2)
        assert failures
        assert failures[0].word == (1, 0)
