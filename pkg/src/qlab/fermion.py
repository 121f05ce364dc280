"""Neutral-fermion operators on the ring of odd power sums.

The generating series of the operators phi_m is the product of
multiplication by the one-row series Q(v) = sum_j Q_j / v^j and the
substitution-exponential exp(-sum_{n odd} v^n n d/dp_n / n), so each
phi_m acts on a polynomial f as the finite sum

    phi_m f = sum_{k >= 0} Q_{m+k} * g_k(f),

where g_k(f) is the v^k coefficient of exp(-sum_{n odd} v^n d/dp_n) f.
The index m ranges over all integers; Q_j = 0 for j < 0 makes every
application a finite computation.

These operators satisfy the anticommutation rule
phi_m phi_n + phi_n phi_m = 2 (-1)^m [m + n = 0], and products
phi_{l_1} ... phi_{l_r} (1) produce the (multi-index) Schur Q-functions.
The bilinear map apply_omega and the solution test is_bkp_tau_bilinear
express the hierarchy's bilinear identity
sum_n (-1)^n phi_n tau (x) phi_{-n} tau = tau (x) tau.
"""

from __future__ import annotations

from fractions import Fraction

from .ring import Mono, Poly, Tensor, mono_weight, tensor_of
from .series import schur_q_row

_PHI_MONO_CACHE: dict[tuple[int, Mono], Poly] = {}
_Q_LAMBDA_CACHE: dict[tuple[int, ...], Poly] = {}


def exp_derivation_coeffs(f: Poly, sign: int = -1) -> list[Poly]:
    """Coefficients g_0, g_1, ..., g_w of exp(sign * sum_{n odd} v^n d/dp_n) f,
    where w = weight(f) (all higher coefficients vanish).

    Since the individual derivations commute, differentiating the
    exponential in v gives the recursion
    k g_k = sign * sum_{n odd <= k} n * d(g_{k-n})/dp_n.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if f.family != "p":
        raise ValueError("fermion operators act on power-sum polynomials")
    w = f.weight()
    out = [f]
    for k in range(1, w + 1):
        total = Poly.zero()
        for n in range(1, k + 1, 2):
            prev = out[k - n]
            if not prev:
                continue
            total = total + prev.diff(n) * n
        out.append(total * Fraction(sign, k))
    return out


def _phi_mono(m: int, mono: Mono) -> Poly:
    key = (m, mono)
    hit = _PHI_MONO_CACHE.get(key)
    if hit is None:
        f = Poly.from_mono(mono)
        gs = exp_derivation_coeffs(f, sign=-1)
        total = Poly.zero()
        for k, g in enumerate(gs):
            if m + k < 0 or not g:
                continue
            total = total + schur_q_row(m + k) * g
        _PHI_MONO_CACHE[key] = hit = total
    return hit


def apply_phi(m: int, f: Poly) -> Poly:
    """The operator phi_m applied to a power-sum polynomial."""
    if f.family != "p":
        raise ValueError("fermion operators act on power-sum polynomials")
    total = Poly.zero()
    for mono, c in f.terms.items():
        total = total + _phi_mono(m, mono) * c
    return total


def q_lambda(index: tuple[int, ...]) -> Poly:
    """The multi-index Schur Q-function phi_{l_1} ... phi_{l_r} (1).

    Entries may be arbitrary integers; for strictly decreasing positive
    indices this is the classical Schur Q-function of the partition.
    """
    vec = tuple(int(v) for v in index)
    hit = _Q_LAMBDA_CACHE.get(vec)
    if hit is None:
        if not vec:
            hit = Poly.one()
        else:
            hit = apply_phi(vec[0], q_lambda(vec[1:]))
        _Q_LAMBDA_CACHE[vec] = hit
    return hit


def apply_omega(t: Tensor, widen: int = 0) -> Tensor:
    """The bilinear Casimir-style operator
    sum_n phi_n (x) (-1)^n phi_{-n} applied to a tensor.

    For a decomposable term f (x) g only finitely many n contribute:
    phi_n f = 0 for n < -weight(f) and phi_{-n} g = 0 for n > weight(g),
    so the sum runs over -weight(f) <= n <= weight(g).  The widen
    parameter enlarges that range symmetrically; the result must not
    depend on it, which tests exercise.
    """
    if widen < 0:
        raise ValueError("widen must be nonnegative")
    out = Tensor.zero()
    for (ml, mr), c in t.terms.items():
        wl = mono_weight(ml)
        wr = mono_weight(mr)
        fl = Poly.from_mono(ml)
        fr = Poly.from_mono(mr)
        for n in range(-wl - widen, wr + widen + 1):
            left = apply_phi(n, fl)
            if not left:
                continue
            right = apply_phi(-n, fr)
            if not right:
                continue
            sign = c if n % 2 == 0 else -c
            out = out + tensor_of(left, right) * sign
    return out


def is_bkp_tau_bilinear(f: Poly) -> tuple[bool, Tensor]:
    """Whether sum_n (-1)^n phi_n f (x) phi_{-n} f equals f (x) f.

    Returns the verdict together with the discrepancy tensor
    (left side minus right side), which is zero exactly on success.
    """
    if f.family != "p":
        raise ValueError("fermion operators act on power-sum polynomials")
    w = f.weight()
    acc = Tensor.zero()
    for n in range(-w, w + 1):
        left = apply_phi(n, f)
        if not left:
            continue
        right = apply_phi(-n, f)
        if not right:
            continue
        pair = tensor_of(left, right)
        acc = acc + (pair if n % 2 == 0 else pair * Fraction(-1))
    acc = acc - tensor_of(f, f)
    return (acc.is_zero(), acc)
