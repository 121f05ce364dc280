"""Tests for the brute-force symmetrization oracle and power-sum bridges."""

import random
from fractions import Fraction

import pytest

from qlab import (
    ParamSeq,
    Poly,
    eval_powersums,
    genq_expand,
    multiparam_q,
    powersum_image,
    q_lambda,
    q_lambda_sym,
    qa_sym,
    schur_q_row,
)

from conftest import RANDOM_A, rand_points

F = Fraction


def xvar(i):
    return Poly.variable(i, "v")


def test_q_lambda_sym_examples():
    assert q_lambda_sym((1,), 1) == xvar(1) * 2
    assert q_lambda_sym((1,), 2) == (xvar(1) + xvar(2)) * 2
    got = q_lambda_sym((2, 1), 3)
    assert got == powersum_image(q_lambda((2, 1)), 3)
    assert q_lambda_sym((), 3) == Poly.one("v")


def test_q_lambda_sym_validation():
    with pytest.raises(ValueError):
        q_lambda_sym((1,), 9)
    with pytest.raises(ValueError):
        q_lambda_sym((1,), 0)
    with pytest.raises(ValueError):
        q_lambda_sym((2, 2), 3)
    with pytest.raises(ValueError):
        q_lambda_sym((1, 2), 3)
    with pytest.raises(ValueError):
        q_lambda_sym((2, 0), 3)


def test_q_lambda_sym_matches_powersum_image():
    for lam in [(2,), (3,), (2, 1), (3, 1), (3, 2), (4, 1)]:
        for n_vars in (3, 4):
            assert q_lambda_sym(lam, n_vars) == powersum_image(q_lambda(lam), n_vars)


def test_q_lambda_sym_stability():
    for lam in [(1,), (2, 1), (3, 2, 1)]:
        for n_vars in (3, 4, 5):
            wider = q_lambda_sym(lam, n_vars + 1).subs_zero(n_vars + 1)
            assert wider == q_lambda_sym(lam, n_vars)


def test_qa_sym_examples():
    a = RANDOM_A
    a1 = a.get(1)
    for n_vars in (2, 3):
        expect = q_lambda_sym((2,), n_vars) - q_lambda_sym((1,), n_vars) * a1
        assert qa_sym((2,), a, n_vars) == expect
    assert qa_sym((1, 2), a, 3) == -qa_sym((2, 1), a, 3)
    assert qa_sym((2, 2), a, 3).is_zero()


def test_qa_sym_zero_params_is_classical():
    zero = ParamSeq.zeros(5)
    for lam in [(2, 1), (3,), (3, 2)]:
        assert qa_sym(lam, zero, 4) == q_lambda_sym(lam, 4)


def test_qa_sym_matches_multiparam_eval():
    rng = random.Random(79)
    a = RANDOM_A
    for alpha in [(2, 1), (3, 1), (4, 2)]:
        sym = qa_sym(alpha, a, 4)
        fast = multiparam_q(alpha, a)
        for _ in range(2):
            xs = rand_points(rng, 4)
            vals = {i + 1: x for i, x in enumerate(xs)}
            assert sym.evaluate(vals) == eval_powersums(fast, xs)


def test_genq_l1():
    table = genq_expand(1, 6)
    for k in range(1, 7):
        assert table[(k,)] == schur_q_row(k)
    assert table[(0,)] == Poly.one("p")
    assert (-1,) not in table or table[(-1,)].is_zero()


def test_genq_l2_pinned_coefficients():
    table = genq_expand(2, 4)
    q = schur_q_row
    assert table[(2, 1)] == q(2) * q(1) - q(3) * 2
    assert table[(2, 1)] == q_lambda((2, 1))
    assert table.get((1, 1), Poly.zero("p")).is_zero()


def test_genq_agrees_with_operator_route():
    table = genq_expand(2, 4)
    for vec, coeff in table.items():
        if all(abs(k) <= 4 for k in vec):
            assert coeff == q_lambda(vec)
    table3 = genq_expand(3, 3)
    for vec, coeff in table3.items():
        assert coeff == q_lambda(vec)


def test_genq_validation():
    with pytest.raises(ValueError):
        genq_expand(4, 3)
    with pytest.raises(ValueError):
        genq_expand(2, 11)
    with pytest.raises(ValueError):
        genq_expand(0, 3)


def test_eval_powersums_examples():
    p1 = Poly.variable(1)
    assert eval_powersums(p1 * 2, (1, 2)) == 6
    assert eval_powersums(schur_q_row(3), (F(1),)) == 2
    assert eval_powersums(Poly.zero("p"), (F(1, 2), F(3))) == 0
    assert eval_powersums(Poly.one("p"), ()) == 1


def test_powersum_image_roundtrip():
    rng = random.Random(83)
    from conftest import rand_poly

    for _ in range(4):
        f = rand_poly(rng, max_weight=6)
        img = powersum_image(f, 3)
        xs = rand_points(rng, 3)
        vals = {i + 1: x for i, x in enumerate(xs)}
        assert img.evaluate(vals) == eval_powersums(f, xs)
