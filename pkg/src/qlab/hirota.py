"""Hirota bilinear calculus and the generated hierarchy of equations.

Tau functions live in rescaled time variables x_n = 2 p_n / n (odd n).
A Hirota symbol polynomial P(D_1, D_3, ...) acts on a pair (f, g) by

    P(D) f.g = P(d/dz) f(x + z) g(x - z) at z = 0,

which for a monomial D^gamma expands into the signed binomial sum over
derivative splittings.  Two independent evaluators are provided: the
binomial expansion (primary) and a literal doubled-variable shift
product that never forms a derivative or a binomial coefficient.

The hierarchy generator expands

    sum_{m>=1} S_m(ytilde) S_m(Dtilde) exp(sum_{n odd} y_n D_n) tau.tau = 0,

with ytilde_n = -2 y_n and Dtilde_n = 2 D_n / n, collecting the
coefficient of every monomial in the formal variables y; each
coefficient is a Hirota polynomial that must annihilate tau.tau.  Odd
total degree monomials in D act as zero on any pair (f, f), so the
canonical form of each equation keeps only the even-degree part.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .ring import (
    EMPTY_MONO,
    Mono,
    Poly,
    graded_monomials,
    mono_degree,
    mono_mul,
    mono_sort_key,
    mono_text,
    mono_weight,
)
from .series import exp_series

_RAW_CACHE: dict[int, dict[Mono, Poly]] = {}
_CANONICAL_CACHE: dict[int, dict[Mono, Poly]] = {}


def p_to_x(f: Poly) -> Poly:
    """Rewrite a power-sum polynomial in the rescaled times x_n = 2 p_n / n,
    substituting p_n = n x_n / 2."""
    if f.family != "p":
        raise ValueError("expected a power-sum polynomial")
    out = {}
    for mono, c in f.terms.items():
        for n, e in mono:
            c = c * Fraction(n, 2) ** e
        out[mono] = c
    return Poly._make(out, "x")


def x_to_p(f: Poly) -> Poly:
    """Inverse of p_to_x: substitute x_n = 2 p_n / n."""
    if f.family != "x":
        raise ValueError("expected a rescaled-time polynomial")
    out = {}
    for mono, c in f.terms.items():
        for n, e in mono:
            c = c * Fraction(2, n) ** e
        out[mono] = c
    return Poly._make(out, "p")


def _derivative(dmono: Mono, cache: dict[Mono, Poly]) -> Poly:
    hit = cache.get(dmono)
    if hit is None:
        n, e = dmono[-1]
        parent = dmono[:-1] if e == 1 else dmono[:-1] + ((n, e - 1),)
        hit = _derivative(parent, cache).diff(n)
        cache[dmono] = hit
    return hit


def _apply_cached(p: Poly, fcache: dict[Mono, Poly], gcache: dict[Mono, Poly]) -> Poly:
    total = Poly.zero("x")
    for gamma, cg in p.terms.items():
        exps = [e for _, e in gamma]
        idxs = [n for n, _ in gamma]
        for alphas in itertools.product(*(range(e + 1) for e in exps)):
            coef = cg
            left = []
            right = []
            for n, e, aa in zip(idxs, exps, alphas):
                coef *= math.comb(e, aa)
                if (e - aa) % 2 == 1:
                    coef = -coef
                if aa:
                    left.append((n, aa))
                if e - aa:
                    right.append((n, e - aa))
            lf = _derivative(tuple(left), fcache)
            if not lf:
                continue
            rg = _derivative(tuple(right), gcache)
            if not rg:
                continue
            total = total + lf * rg * coef
    return total


def hirota_apply(p: Poly, f: Poly, g: Poly) -> Poly:
    """Evaluate P(D) f.g by the signed binomial derivative expansion."""
    if p.family != "D":
        raise ValueError("expected a Hirota symbol polynomial")
    if f.family != "x" or g.family != "x":
        raise ValueError("expected rescaled-time polynomials")
    fcache = {EMPTY_MONO: f}
    gcache = fcache if g is f else {EMPTY_MONO: g}
    return _apply_cached(p, fcache, gcache)


def _doubled(f: Poly, sgn: int) -> dict[tuple[Mono, Mono], Fraction]:
    """f(x + sgn*z) as a polynomial in doubled variables, built by
    multiplying out one linear factor (x_n + sgn*z_n) at a time."""
    out: dict[tuple[Mono, Mono], Fraction] = {}
    for mono, c in f.terms.items():
        obj = {(EMPTY_MONO, EMPTY_MONO): c}
        for n, e in mono:
            unit: Mono = ((n, 1),)
            for _ in range(e):
                new: dict[tuple[Mono, Mono], Fraction] = {}
                for (zm, xm), cc in obj.items():
                    kx = (zm, mono_mul(xm, unit))
                    new[kx] = new.get(kx, Fraction(0)) + cc
                    kz = (mono_mul(zm, unit), xm)
                    cz = cc if sgn > 0 else -cc
                    v = new.get(kz, Fraction(0)) + cz
                    if v:
                        new[kz] = v
                    elif kz in new:
                        del new[kz]
                obj = new
        for key, cc in obj.items():
            v = out.get(key, Fraction(0)) + cc
            if v:
                out[key] = v
            elif key in out:
                del out[key]
    return out


def hirota_apply_taylor(p: Poly, f: Poly, g: Poly) -> Poly:
    """Evaluate P(D) f.g literally: form f(x+z) g(x-z) by explicit
    multiplication in doubled variables and read off gamma! times the
    z^gamma coefficient for each monomial of P.

    Independent of hirota_apply: no derivatives, no binomial
    coefficients.  Intended for small inputs.
    """
    if p.family != "D":
        raise ValueError("expected a Hirota symbol polynomial")
    if f.family != "x" or g.family != "x":
        raise ValueError("expected rescaled-time polynomials")
    fp = _doubled(f, 1)
    gm = _doubled(g, -1)
    wanted = set(p.terms)
    prod: dict[tuple[Mono, Mono], Fraction] = {}
    for (zm1, xm1), c1 in fp.items():
        for (zm2, xm2), c2 in gm.items():
            zm = mono_mul(zm1, zm2)
            if zm not in wanted:
                continue
            key = (zm, mono_mul(xm1, xm2))
            v = prod.get(key, Fraction(0)) + c1 * c2
            if v:
                prod[key] = v
            elif key in prod:
                del prod[key]
    out: dict[Mono, Fraction] = {}
    for gamma, cg in p.terms.items():
        fact = 1
        for _, e in gamma:
            fact *= math.factorial(e)
        scale = cg * fact
        for (zm, xm), c in prod.items():
            if zm != gamma:
                continue
            v = out.get(xm, Fraction(0)) + scale * c
            if v:
                out[xm] = v
            elif xm in out:
                del out[xm]
    return Poly._make(out, "x")


def _generate_raw(max_weight: int) -> dict[Mono, Poly]:
    hit = _RAW_CACHE.get(max_weight)
    if hit is not None:
        return hit
    xs_y = [
        Poly.variable(n, "y") * (-2) if n % 2 == 1 else Fraction(0)
        for n in range(1, max_weight + 1)
    ]
    xs_d = [
        Poly.variable(n, "D") * Fraction(2, n) if n % 2 == 1 else Fraction(0)
        for n in range(1, max_weight + 1)
    ]
    sy = exp_series(xs_y, max_weight)
    sd = exp_series(xs_d, max_weight)
    cap = max_weight - 1
    efac: dict[Mono, Poly] = {EMPTY_MONO: Poly.one("D")}
    for n in range(1, cap + 1, 2):
        new = dict(efac)
        dn = Poly.variable(n, "D")
        for mu, p in efac.items():
            base = mono_weight(mu)
            power = p
            fact = 1
            e = 1
            while base + n * e <= cap:
                power = power * dn
                fact *= e
                new[mono_mul(mu, ((n, e),))] = power * Fraction(1, fact)
                e += 1
        efac = new
    out: dict[Mono, Poly] = {}
    for m in range(1, max_weight + 1):
        sym = sy[m]
        sdm = sd[m]
        if not sym or not sdm:
            continue
        for mu, p in efac.items():
            if m + mono_weight(mu) > max_weight:
                continue
            prod = sdm * p
            for ymono, c in sym.terms.items():
                key = mono_mul(ymono, mu)
                cur = out.get(key)
                contrib = prod * c
                out[key] = contrib if cur is None else cur + contrib
    out = {k: v for k, v in out.items() if v}
    for key, val in out.items():
        w = mono_weight(key)
        assert all(mono_weight(m) == w for m in val.terms), "inhomogeneous equation"
    _RAW_CACHE[max_weight] = out
    return out


def bkp_generate(max_weight: int, canonical: bool = True) -> dict[Mono, Poly]:
    """The hierarchy equations up to a weight bound, as a map from each
    y-monomial to its Hirota polynomial coefficient.

    With canonical=True every coefficient is reduced to its even-degree
    part (the part that can act nontrivially on f.f); an equation whose
    canonical form is the zero polynomial is trivially satisfied.  Raw
    unreduced coefficients are available with canonical=False.
    """
    if max_weight < 2:
        raise ValueError("max_weight must be at least 2")
    if not canonical:
        return dict(_generate_raw(max_weight))
    hit = _CANONICAL_CACHE.get(max_weight)
    if hit is None:
        hit = {}
        for key, val in _generate_raw(max_weight).items():
            hit[key] = Poly._make(
                {m: c for m, c in val.terms.items() if mono_degree(m) % 2 == 0},
                "D",
            )
        _CANONICAL_CACHE[max_weight] = hit
    return dict(hit)


def equation_listing(max_weight: int) -> list[str]:
    """One line per formal monomial of weight <= max_weight, in canonical
    order: '<y monomial> : <canonical Hirota polynomial>'."""
    eqs = bkp_generate(max_weight, canonical=True)
    zero = Poly.zero("D")
    lines = []
    for mono in graded_monomials(max_weight):
        if not mono:
            continue
        lines.append(f"{mono_text(mono, 'y')} : {eqs.get(mono, zero).text()}")
    return lines


@dataclass
class HierarchyReport:
    """Outcome of checking one tau function against the hierarchy."""

    max_weight: int
    checked: int
    trivial: list[str] = field(default_factory=list)
    failures: dict[str, Poly] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures


def bkp_check(f: Poly, max_weight: int) -> HierarchyReport:
    """Check a power-sum polynomial against every equation of the
    hierarchy up to max_weight.

    The polynomial is rewritten in rescaled times and every nontrivial
    equation P is evaluated as P(D) tau.tau; the report records the
    equations whose residual is nonzero.
    """
    tau = p_to_x(f)
    eqs = bkp_generate(max_weight, canonical=True)
    cache = {EMPTY_MONO: tau}
    report = HierarchyReport(max_weight=max_weight, checked=0)
    for ymono in graded_monomials(max_weight):
        if not ymono:
            continue
        name = mono_text(ymono, "y")
        p = eqs.get(ymono)
        if p is None or p.is_zero():
            report.trivial.append(name)
            continue
        residual = _apply_cached(p, cache, cache)
        report.checked += 1
        if residual:
            report.failures[name] = residual
    return report
