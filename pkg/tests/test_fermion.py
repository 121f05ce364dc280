"""Tests for the neutral-fermion operators and the bilinear-identity checker."""

import random
from fractions import Fraction

import pytest

from qlab import (
    Poly,
    apply_omega,
    apply_phi,
    exp_derivation_coeffs,
    graded_monomials,
    is_bkp_tau_bilinear,
    q_lambda,
    schur_q_row,
    tensor_map,
    tensor_of,
)

from conftest import rand_fraction

F = Fraction


def test_apply_phi_examples():
    one = Poly.one("p")
    p1 = Poly.variable(1)
    q1 = p1 * 2
    assert apply_phi(1, one) == q1
    assert apply_phi(-1, q1) == Poly.const(F(-2), "p")
    assert apply_phi(0, q1) == -q1
    assert apply_phi(0, one) == one
    assert apply_phi(-1, one).is_zero()
    assert apply_phi(3, Poly.zero("p")).is_zero()


def test_apply_phi_matches_row_q():
    one = Poly.one("p")
    for m in range(9):
        assert apply_phi(m, one) == schur_q_row(m)


def test_apply_phi_weight_shift():
    rng = random.Random(53)
    for mono in graded_monomials(6):
        f = Poly.from_mono(mono, F(1), "p")
        w = sum(n * e for n, e in mono)
        for m in (-3, -1, 0, 2, 4):
            g = apply_phi(m, f)
            if g.is_zero():
                continue
            assert g.weight_part(w + m) == g


def test_q_lambda_examples():
    p1 = Poly.variable(1)
    p3 = Poly.variable(3)
    assert q_lambda((2, 1)) == p1**3 * F(4, 3) - p3 * F(4, 3)
    assert q_lambda((1, 1)).is_zero()
    assert q_lambda(()) == Poly.one("p")
    assert q_lambda((-1, 1)) == Poly.const(F(-2), "p")
    assert q_lambda((3,)) == schur_q_row(3)


def test_q_lambda_prepend_is_phi():
    rng = random.Random(59)
    vectors = [(), (1,), (2,), (2, 1), (3, 1), (4, 2, 1)]
    for lam in vectors:
        for m in (-2, -1, 0, 1, 2, 3):
            assert apply_phi(m, q_lambda(lam)) == q_lambda((m,) + lam)


def test_anticommutation_smoke():
    monos = graded_monomials(5)
    delta = {(m, -m) for m in range(-4, 5)}
    for mono in monos:
        f = Poly.from_mono(mono, F(1), "p")
        for m in range(-3, 4):
            for n in range(-3, 4):
                lhs = apply_phi(m, apply_phi(n, f)) + apply_phi(n, apply_phi(m, f))
                if (m, n) in delta:
                    scale = F(2) if m % 2 == 0 else F(-2)
                    assert lhs == f * scale
                else:
                    assert lhs.is_zero()


def test_exp_derivation_coeffs():
    p1 = Poly.variable(1)
    p3 = Poly.variable(3)
    f = p1 * p3
    gs = exp_derivation_coeffs(f, sign=-1)
    assert gs[0] == f
    assert gs[1] == -p3
    assert gs[3] == -p1
    assert gs[4] == Poly.one("p")
    assert len(gs) == 5
    with pytest.raises(ValueError):
        exp_derivation_coeffs(f, sign=2)
    with pytest.raises(ValueError):
        exp_derivation_coeffs(Poly.variable(1, "x"))


def test_exp_derivation_signs_cancel():
    # composing the sign=-1 series with the sign=+1 series gives the identity
    rng = random.Random(61)
    from conftest import rand_poly

    for _ in range(5):
        f = rand_poly(rng, max_weight=6)
        minus = exp_derivation_coeffs(f, sign=-1)
        tables = [exp_derivation_coeffs(g, sign=1) for g in minus]
        w = f.weight()
        for m in range(w + 1):
            acc = Poly.zero("p")
            for k in range(m + 1):
                plus = tables[k] if k < len(tables) else []
                if m - k < len(plus):
                    acc = acc + plus[m - k]
            if m == 0:
                assert acc == f
            else:
                assert acc.is_zero()


def test_apply_omega_examples():
    one = Poly.one("p")
    q1 = q_lambda((1,))
    t = tensor_of(one, one)
    assert apply_omega(t) == t
    t2 = tensor_of(q1, q1)
    assert apply_omega(t2) == t2
    from qlab import Tensor

    assert apply_omega(Tensor.zero()).is_zero()


def test_apply_omega_widen_invariance():
    q21 = q_lambda((2, 1))
    t = tensor_of(q21, q21)
    base = apply_omega(t)
    assert apply_omega(t, widen=3) == base


def test_is_bkp_examples():
    ok, disc = is_bkp_tau_bilinear(Poly.one("p"))
    assert ok
    assert disc.is_zero()
    ok, disc = is_bkp_tau_bilinear(q_lambda((2, 1)))
    assert ok
    assert disc.is_zero()
    ok, disc = is_bkp_tau_bilinear(Poly.zero("p"))
    assert ok


def test_is_bkp_witness_fails(witness):
    ok, disc = is_bkp_tau_bilinear(witness)
    assert not ok
    assert not disc.is_zero()


def test_is_bkp_pure_combination_passes():
    f = q_lambda((1,)) + q_lambda((3,)) * F(3, 5)
    ok, _ = is_bkp_tau_bilinear(f)
    assert ok


def test_section4_commutation_bidegree():
    # operator identity: coefficient extraction of E_j applied to row-Q products
    rng = random.Random(67)
    from conftest import rand_poly

    for _ in range(3):
        f = rand_poly(rng, max_weight=5, terms=3)
        for k in range(7):
            qk = schur_q_row(k)
            lhs = exp_derivation_coeffs(qk * f, sign=1)
            rhs_parts = exp_derivation_coeffs(f, sign=1)
            for j in range(min(len(lhs), 7)):
                acc = Poly.zero("p")
                for r in range(min(j, k) + 1):
                    c = F(1) if r == 0 else F(2)
                    if j - r < len(rhs_parts):
                        acc = acc + schur_q_row(k - r) * rhs_parts[j - r] * c
                assert lhs[j] == acc


def test_linear_fermion_square_vanishes():
    rng = random.Random(71)
    coeffs = [rand_fraction(rng) for _ in range(5)]

    def apply_x(f):
        out = Poly.zero("p")
        for n, c in enumerate(coeffs, start=1):
            out = out + apply_phi(n, f) * c
        return out

    for mono in graded_monomials(6):
        f = Poly.from_mono(mono, F(1), "p")
        assert apply_x(apply_x(f)).is_zero()


def test_omega_commutes_with_double_fermion():
    rng = random.Random(73)
    coeffs = [rand_fraction(rng) for _ in range(5)]

    def apply_x(f):
        out = Poly.zero("p")
        for n, c in enumerate(coeffs, start=1):
            out = out + apply_phi(n, f) * c
        return out

    def xx(t):
        return tensor_map(tensor_map(t, "left", apply_x), "right", apply_x)

    for lam in [(), (1,), (2, 1), (3, 1)]:
        tau = q_lambda(lam)
        t = tensor_of(tau, tau)
        lhs = apply_omega(xx(t), widen=6)
        rhs = xx(apply_omega(t))
        assert lhs == rhs
