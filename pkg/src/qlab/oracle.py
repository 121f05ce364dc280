"""Brute-force reference constructions in a finite variable alphabet.

Everything here is deliberately independent of the operator machinery:
Schur Q-functions are built directly from their symmetrized rational
expressions in x_1..x_N, and generating-function coefficients are
extracted by explicit series multiplication.  These serve as oracles for
the fermionic and multiparameter constructions.

The symmetrized sums run over ordered injective index tuples.  Each term
is a rational function whose denominator divides the full Vandermonde
product, so the sum is accumulated over a common denominator and the
final division is performed exactly, one linear factor at a time; a
nonzero remainder would signal a bug and raises.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .ring import Mono, Poly, Scalar, mono_mul
from .series import ParamSeq, schur_q_row

MAX_VARS = 8

_PAIR_CACHE: dict[tuple[int, tuple[int, ...]], tuple[dict, int]] = {}

_ZERO = Fraction(0)


def _mono_times_var(mono: Mono, p: int) -> Mono:
    out = []
    placed = False
    for n, e in mono:
        if n == p:
            out.append((n, e + 1))
            placed = True
        elif n > p and not placed:
            out.append((p, 1))
            out.append((n, e))
            placed = True
        else:
            out.append((n, e))
    if not placed:
        out.append((p, 1))
    return tuple(out)


def _mul_var_binomial(terms: dict, p: int, q: int, sgn: int) -> dict:
    """terms * (x_p + sgn * x_q) as sparse dicts."""
    out: dict = {}
    for mono, c in terms.items():
        mp = _mono_times_var(mono, p)
        out[mp] = out.get(mp, _ZERO) + c
        mq = _mono_times_var(mono, q)
        cq = c if sgn > 0 else -c
        v = out.get(mq, _ZERO) + cq
        if v:
            out[mq] = v
        elif mq in out:
            del out[mq]
    return {m: c for m, c in out.items() if c}


def _mul_scalar_binomial(terms: dict, p: int, shift: Fraction) -> dict:
    """terms * (x_p + shift) as sparse dicts."""
    out: dict = {}
    for mono, c in terms.items():
        mp = _mono_times_var(mono, p)
        out[mp] = out.get(mp, _ZERO) + c
        if shift:
            v = out.get(mono, _ZERO) + c * shift
            if v:
                out[mono] = v
            elif mono in out:
                del out[mono]
    return {m: c for m, c in out.items() if c}


def _pair_factor(n_vars: int, s: tuple[int, ...]) -> tuple[dict, int]:
    """The common-denominator numerator factor for an ordered tuple s.

    Returns (poly, sign) where poly is the product of all sum factors
    (x_{s_i} + x_j) over slot pairs and slot-complement pairs, times the
    complement Vandermonde differences, and sign corrects each original
    difference factor to the index-increasing orientation used by the
    global Vandermonde product.
    """
    key = (n_vars, s)
    hit = _PAIR_CACHE.get(key)
    if hit is not None:
        return hit
    in_s = set(s)
    comp = [c for c in range(1, n_vars + 1) if c not in in_s]
    terms: dict = {(): Fraction(1)}
    sign = 1
    l = len(s)
    for i in range(l):
        for j in range(i + 1, l):
            terms = _mul_var_binomial(terms, s[i], s[j], 1)
            if s[i] > s[j]:
                sign = -sign
        for c in comp:
            terms = _mul_var_binomial(terms, s[i], c, 1)
            if s[i] > c:
                sign = -sign
    for ci in range(len(comp)):
        for cj in range(ci + 1, len(comp)):
            terms = _mul_var_binomial(terms, comp[ci], comp[cj], -1)
    _PAIR_CACHE[key] = (terms, sign)
    return terms, sign


def _div_linear(terms: dict, p: int, q: int) -> dict:
    """Exact division of a sparse polynomial by (x_p - x_q)."""
    slices: dict[int, dict] = {}
    for mono, c in terms.items():
        d = 0
        rest = []
        for n, e in mono:
            if n == p:
                d = e
            else:
                rest.append((n, e))
        slices.setdefault(d, {})[tuple(rest)] = c
    if not slices:
        return {}
    dmax = max(slices)
    if dmax == 0:
        raise ArithmeticError("division by Vandermonde factor left a remainder")
    out: dict = {}
    g_cur: dict = {}
    for d in range(dmax, 0, -1):
        nxt: dict = {}
        for rest, c in g_cur.items():
            mq = _mono_times_var(rest, q)
            v = nxt.get(mq, _ZERO) + c
            if v:
                nxt[mq] = v
            elif mq in nxt:
                del nxt[mq]
        for rest, c in slices.get(d, {}).items():
            v = nxt.get(rest, _ZERO) + c
            if v:
                nxt[rest] = v
            elif rest in nxt:
                del nxt[rest]
        g_cur = nxt
        if d > 1:
            for rest, c in g_cur.items():
                mono = rest
                for _ in range(d - 1):
                    mono = _mono_times_var(mono, p)
                out[mono] = c
        else:
            for rest, c in g_cur.items():
                out[rest] = out.get(rest, _ZERO) + c
    remainder = dict(slices.get(0, {}))
    for rest, c in g_cur.items():
        mq = _mono_times_var(rest, q)
        v = remainder.get(mq, _ZERO) + c
        if v:
            remainder[mq] = v
        elif mq in remainder:
            del remainder[mq]
    if any(remainder.values()):
        raise ArithmeticError("division by Vandermonde factor left a remainder")
    return {m: c for m, c in out.items() if c}


def _sym_sum(rows: list[list[dict]], n_vars: int) -> Poly:
    """2^l times the symmetrized sum over ordered injective tuples.

    rows[i][s-1] is the sparse polynomial placed in slot i when the tuple
    assigns variable x_s to that slot.
    """
    l = len(rows)
    if l == 0:
        return Poly.one("v")
    total: dict = {}
    for s in itertools.permutations(range(1, n_vars + 1), l):
        factor, sign = _pair_factor(n_vars, s)
        term: dict = {(): Fraction(sign)}
        for i in range(l):
            row = rows[i][s[i] - 1]
            if not row:
                term = {}
                break
            new: dict = {}
            for m1, c1 in term.items():
                for m2, c2 in row.items():
                    mono = mono_mul(m1, m2)
                    v = new.get(mono, _ZERO) + c1 * c2
                    if v:
                        new[mono] = v
                    elif mono in new:
                        del new[mono]
            term = new
        if not term:
            continue
        for m1, c1 in term.items():
            for m2, c2 in factor.items():
                mono = mono_mul(m1, m2)
                v = total.get(mono, _ZERO) + c1 * c2
                if v:
                    total[mono] = v
                elif mono in total:
                    del total[mono]
    total = {m: c for m, c in total.items() if c}
    if not total:
        return Poly.zero("v")
    for p in range(1, n_vars + 1):
        for q in range(p + 1, n_vars + 1):
            total = _div_linear(total, p, q)
    scale = Fraction(2 ** l)
    return Poly({m: c * scale for m, c in total.items()}, family="v")


def _check_nvars(n_vars: int):
    if not 1 <= n_vars <= MAX_VARS:
        raise ValueError(f"number of variables must be between 1 and {MAX_VARS}")


def q_lambda_sym(lam: tuple[int, ...], n_vars: int) -> Poly:
    """The Schur Q-function of a strict partition as an explicit polynomial
    in x_1..x_N, built by symmetrizing x^lambda against the product of
    (x_i + x_j)/(x_i - x_j) factors."""
    _check_nvars(n_vars)
    lam = tuple(int(v) for v in lam)
    if any(v <= 0 for v in lam):
        raise ValueError("parts must be positive")
    if any(lam[i] <= lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("parts must be strictly decreasing")
    rows = [
        [{((s, part),): Fraction(1)} for s in range(1, n_vars + 1)]
        for part in lam
    ]
    return _sym_sum(rows, n_vars)


def qa_sym(alpha: tuple[int, ...], a: ParamSeq, n_vars: int) -> Poly:
    """The multiparameter analogue: slot i carries the falling product
    (x - a_0)(x - a_1)...(x - a_{alpha_i - 1}) instead of a plain power.

    Entries of alpha may come in any order (the result is antisymmetric
    in them) and must be nonnegative.
    """
    _check_nvars(n_vars)
    alpha = tuple(int(v) for v in alpha)
    if any(v < 0 for v in alpha):
        raise ValueError("entries must be nonnegative")
    rows = []
    for part in alpha:
        shifts = [a.get(t) for t in range(part)]
        row = []
        for s in range(1, n_vars + 1):
            terms: dict = {(): Fraction(1)}
            for t in shifts:
                terms = _mul_scalar_binomial(terms, s, -t)
            row.append(terms)
        rows.append(row)
    return _sym_sum(rows, n_vars)


def genq_expand(l: int, cutoff: int) -> dict[tuple[int, ...], Poly]:
    """Coefficients of the l-point generating function
    prod_{i<j} (u_j - u_i)/(u_j + u_i) * prod_i Q(u_i)
    on monomials u_1^{-k_1} ... u_l^{-k_l} with |k_i| <= cutoff.

    Each cross factor expands as 1 + 2 sum_{r>=1} (-1)^r (u_i/u_j)^r, so
    the coefficients are finite signed sums of products of one-row
    functions.  Zero coefficients are omitted from the returned dict.
    """
    if not 1 <= l <= 3:
        raise ValueError("only 1 to 3 generating variables supported")
    if not 0 <= cutoff <= 10:
        raise ValueError("cutoff must be between 0 and 10")

    prod_cache: dict[tuple[int, ...], Poly] = {}

    def q_prod(ks: tuple[int, ...]) -> Poly:
        if any(k < 0 for k in ks):
            return Poly.zero()
        key = tuple(sorted(ks))
        hit = prod_cache.get(key)
        if hit is None:
            hit = Poly.one()
            for k in key:
                hit = hit * schur_q_row(k)
            prod_cache[key] = hit
        return hit

    def wt(r: int) -> int:
        if r == 0:
            return 1
        return 2 if r % 2 == 0 else -2

    out: dict[tuple[int, ...], Poly] = {}
    rng = range(-cutoff, cutoff + 1)
    if l == 1:
        for k in range(cutoff + 1):
            out[(k,)] = schur_q_row(k)
        return out
    if l == 2:
        for l1 in rng:
            for l2 in rng:
                acc = Poly.zero()
                for r in range(max(0, -l1), l2 + 1):
                    acc = acc + q_prod((l1 + r, l2 - r)) * wt(r)
                if acc:
                    out[(l1, l2)] = acc
        return out
    for l1 in rng:
        for l2 in rng:
            for l3 in rng:
                acc = Poly.zero()
                for r13 in range(0, max(0, l3) + 1):
                    for r23 in range(0, l3 - r13 + 1):
                        k3 = l3 - r13 - r23
                        for r12 in range(max(0, -l1 - r13), l2 + r23 + 1):
                            k1 = l1 + r12 + r13
                            k2 = l2 + r23 - r12
                            if k1 < 0 or k2 < 0:
                                continue
                            w = wt(r12) * wt(r13) * wt(r23)
                            acc = acc + q_prod((k1, k2, k3)) * w
                if acc:
                    out[(l1, l2, l3)] = acc
    return out


def eval_powersums(f: Poly, xs: list[Scalar]) -> Fraction:
    """Evaluate a power-sum polynomial at the point p_n = sum_i xs[i]^n."""
    if f.family != "p":
        raise ValueError("expected a power-sum polynomial")
    vals = [Fraction(x) for x in xs]
    cache: dict[int, Fraction] = {}

    def psum(n: int) -> Fraction:
        hit = cache.get(n)
        if hit is None:
            hit = sum((x ** n for x in vals), _ZERO)
            cache[n] = hit
        return hit

    total = _ZERO
    for mono, c in f.terms.items():
        term = c
        for n, e in mono:
            term *= psum(n) ** e
        total += term
    return total


def powersum_image(f: Poly, n_vars: int) -> Poly:
    """Substitute p_n = x_1^n + ... + x_N^n symbolically, producing the
    image of f in the finite variable alphabet (family "v")."""
    if f.family != "p":
        raise ValueError("expected a power-sum polynomial")
    _check_nvars(n_vars)
    base: dict[int, Poly] = {}

    def psum(n: int) -> Poly:
        hit = base.get(n)
        if hit is None:
            hit = Poly(
                {((s, n),): Fraction(1) for s in range(1, n_vars + 1)},
                family="v",
            )
            base[n] = hit
        return hit

    total = Poly.zero("v")
    for mono, c in f.terms.items():
        term = Poly.const(c, family="v")
        for n, e in mono:
            term = term * psum(n) ** e
        total = total + term
    return total
