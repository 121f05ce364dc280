"""Shared fixtures and random-input builders for the qlab test suite."""

import random
from fractions import Fraction

import pytest

from qlab import ParamSeq, Poly, q_lambda


def rand_fraction(rng, lo=-6, hi=6, den=4):
    num = rng.randint(lo, hi)
    d = rng.randint(1, den)
    return Fraction(num, d)


def rand_poly(rng, family="p", max_weight=6, terms=4):
    """Random sparse polynomial in odd-index variables of the family."""
    odd = [n for n in range(1, max_weight + 1, 2)]
    out = Poly.zero(family)
    for _ in range(terms):
        mono = {}
        budget = rng.randint(0, max_weight)
        while budget >= 1:
            n = rng.choice([m for m in odd if m <= budget])
            mono[n] = mono.get(n, 0) + 1
            budget -= n
        term = Poly.from_mono(tuple(sorted(mono.items())), rand_fraction(rng), family)
        out = out + term
    return out


def rand_points(rng, n_vars):
    """Random rational evaluation point with distinct nonzero coordinates."""
    seen = set()
    xs = []
    while len(xs) < n_vars:
        c = Fraction(rng.randint(1, 40), rng.randint(1, 7))
        if rng.random() < 0.5:
            c = -c
        if c not in seen:
            seen.add(c)
            xs.append(c)
    return tuple(xs)


RANDOM_A = ParamSeq.parse("0,1/2,-1,3,2/3,-1/4,5")
LONG_A = ParamSeq.parse("0,1/2,-1,3,2/3,-1/4,5,-7/3,1/6")


@pytest.fixture(scope="session")
def witness():
    """A perturbed combination that is not a hierarchy solution."""
    return q_lambda((1,)) + (q_lambda((3,)) + Poly.variable(3)) * Fraction(3, 5)
