"""Exponential and logarithmic coefficient series, one-row Schur Q-functions,
finite symmetric polynomials, and basis transitions for shifted powers.

Generating series here are indexed sequences: an S-sequence lists the
coefficients S_0, S_1, ... of a series with S_0 = 1, an X-sequence lists
X_1, X_2, ... of a series with no constant term, and exp/log convert
between them.  Entries may be exact rationals or Poly values; all
arithmetic stays exact.

The shifted-power transitions expand ordinary powers u^n (and 1/u^n) in
the basis of products (u-a_1)(u-a_2)...(u-a_k) (and their reciprocals)
built from a parameter sequence a with a_0 = 0, and back.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .ring import Poly, Scalar

_ONE = Fraction(1)
_ZERO = Fraction(0)


def _normalize_entry(value):
    return Fraction(value) if isinstance(value, int) else value


def _ring_one(values) -> Poly | Fraction:
    for v in values:
        if isinstance(v, Poly):
            return Poly.one(v.family)
    return _ONE


def exp_series(xs: Sequence, k: int, one=None) -> list:
    """Coefficients S_0..S_k of exp(sum_i X_i / u^i), with xs = [X_1, X_2, ...].

    Missing entries of xs are read as zero.  Computed as the compositional
    sum over exponent multisets, organized as a truncated product of the
    single-index exponentials exp(X_i / u^i).
    """
    if k < 0:
        raise ValueError("series order must be nonnegative")
    vals = [_normalize_entry(v) for v in xs]
    if one is None:
        one = _ring_one(vals)
    zero = one * 0
    out = [one] + [zero] * k
    for i, x in enumerate(vals, start=1):
        if i > k:
            break
        if not x:
            continue
        new = list(out)
        power = one
        fact = 1
        for e in range(1, k // i + 1):
            power = power * x
            fact *= e
            scaled = power * Fraction(1, fact)
            base = i * e
            for j in range(base, k + 1):
                prev = out[j - base]
                if not prev:
                    continue
                new[j] = new[j] + prev * scaled
        out = new
    return out


def _det(rows, one, zero):
    """Determinant by cofactor expansion with memoized minors.

    Zero entries are skipped, so the nearly triangular matrices used in
    this module stay cheap despite the generic algorithm.
    """
    n = len(rows)
    if n == 0:
        return one
    memo: dict = {}

    def minor(i: int, cols: tuple) -> object:
        if not cols:
            return one
        key = (i, cols)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = zero
        for pos, c in enumerate(cols):
            entry = rows[i][c]
            if not entry:
                continue
            sub = minor(i + 1, cols[:pos] + cols[pos + 1:])
            if not sub:
                continue
            term = entry * sub
            total = total + term if pos % 2 == 0 else total - term
        memo[key] = total
        return total

    return minor(0, tuple(range(n)))


def exp_series_det(xs: Sequence, k: int, one=None) -> list:
    """Same contract as exp_series, via the determinant formula
    S_m = (1/m!) det of the lower Hessenberg matrix with rows
    (mX_m, (m-1)X_{m-1}, ..., X_1) and superdiagonal -1, -2, ...
    """
    if k < 0:
        raise ValueError("series order must be nonnegative")
    vals = [_normalize_entry(v) for v in xs]
    if one is None:
        one = _ring_one(vals)
    zero = one * 0

    def x_at(t: int):
        return vals[t - 1] if 1 <= t <= len(vals) else zero

    out = [one]
    for m in range(1, k + 1):
        rows = []
        for i in range(m):
            row = []
            for j in range(m):
                if j == i + 1:
                    row.append(Fraction(-(i + 1)))
                elif j <= i:
                    t = i - j + 1
                    xv = x_at(t)
                    row.append(xv * t if xv else zero)
                else:
                    row.append(zero)
            rows.append(row)
        det = _det(rows, one, zero)
        out.append(det * Fraction(1, math.factorial(m)))
    return out


def _check_s0(ss: Sequence):
    s = [_normalize_entry(v) for v in ss]
    if not s or not (s[0] == 1):
        raise ValueError("an S-sequence must start with S_0 = 1")
    return s


def log_series(ss: Sequence, k: int) -> list:
    """Coefficients X_1..X_k of log(sum_i S_i / u^i), with ss = [S_0, S_1, ...].

    Uses the determinant formula
    X_m = ((-1)^(m-1)/m) det of the matrix with first column (S_1, 2S_2, ..., mS_m),
    remaining columns the shifted S-sequence, and superdiagonal 1.
    """
    if k < 0:
        raise ValueError("series order must be nonnegative")
    s = _check_s0(ss)
    one = _ring_one(s)
    zero = one * 0

    def s_at(t: int):
        if t == 0:
            return one
        return s[t] if t < len(s) else zero

    out = []
    for m in range(1, k + 1):
        rows = []
        for i in range(m):
            row = []
            for j in range(m):
                if j == 0:
                    sv = s_at(i + 1)
                    row.append(sv * (i + 1) if sv else zero)
                elif j <= i + 1:
                    row.append(s_at(i - j + 1))
                else:
                    row.append(zero)
            rows.append(row)
        det = _det(rows, one, zero)
        sign = 1 if (m - 1) % 2 == 0 else -1
        out.append(det * Fraction(sign, m))
    return out


def _series_mul(a: list, b: list, k: int, zero) -> list:
    out = [zero] * (k + 1)
    for i, av in enumerate(a):
        if i > k or not av:
            continue
        for j, bv in enumerate(b):
            if i + j > k:
                break
            if not bv:
                continue
            out[i + j] = out[i + j] + av * bv
    return out


def log_series_by_inversion(ss: Sequence, k: int) -> list:
    """Same contract as log_series, via the plain series expansion
    log(1 + T) = T - T^2/2 + T^3/3 - ... with T = S - 1.
    """
    if k < 0:
        raise ValueError("series order must be nonnegative")
    s = _check_s0(ss)
    one = _ring_one(s)
    zero = one * 0
    t = [zero] + [s[i] if i < len(s) else zero for i in range(1, k + 1)]
    acc = [zero] * (k + 1)
    cur = t
    for m in range(1, k + 1):
        coef = Fraction(1 if (m - 1) % 2 == 0 else -1, m)
        for j in range(m, k + 1):
            if cur[j]:
                acc[j] = acc[j] + cur[j] * coef
        if m < k:
            cur = _series_mul(cur, t, k, zero)
    return acc[1:]


@lru_cache(maxsize=None)
def schur_q_row(k: int) -> Poly:
    """The one-row Schur Q-function Q_k in odd power sums.

    Q(u) = sum_k Q_k/u^k = exp(sum_{n odd} 2 p_n/(n u^n)), so the
    coefficients satisfy the Newton-style recursion
    k Q_k = sum_{j odd <= k} 2 p_j Q_{k-j}.
    """
    if k < 0:
        return Poly.zero()
    if k == 0:
        return Poly.one()
    total = Poly.zero()
    for j in range(1, k + 1, 2):
        total = total + Poly.variable(j) * 2 * schur_q_row(k - j)
    return total / k


def schur_q_x_list(k: int) -> list:
    """The X-sequence [2p_1, 0, 2p_3/3, 0, ...] of length k whose exponential
    series reproduces Q_0..Q_k; used to cross-check schur_q_row."""
    out = []
    for n in range(1, k + 1):
        if n % 2 == 1:
            out.append(Poly.variable(n) * Fraction(2, n))
        else:
            out.append(Fraction(0))
    return out


def elem_sym(k: int, vals: Iterable[Scalar]) -> Fraction:
    """Elementary symmetric polynomial e_k of a finite value list."""
    if k < 0:
        return _ZERO
    vs = [Fraction(v) for v in vals]
    if k > len(vs):
        return _ZERO
    e = [_ONE] + [_ZERO] * k
    for v in vs:
        for i in range(min(k, len(e) - 1), 0, -1):
            e[i] += v * e[i - 1]
    return e[k]


def complete_sym(k: int, vals: Iterable[Scalar]) -> Fraction:
    """Complete homogeneous symmetric polynomial h_k of a finite value list."""
    if k < 0:
        return _ZERO
    if k == 0:
        return _ONE
    vs = [Fraction(v) for v in vals]
    if not vs:
        return _ZERO
    h = [_ONE] + [_ZERO] * k
    for v in vs:
        for i in range(1, k + 1):
            h[i] += v * h[i - 1]
    return h[k]


class ParamSeq:
    """A finite parameter sequence a_0, a_1, ..., a_M with a_0 = 0.

    Deliberately finite: any request past the stored length is an error
    rather than an implicit zero extension, so that zero parameters are
    never confused with missing ones.  Named infinite families are
    produced to an explicit length by the classmethods.
    """

    __slots__ = ("values",)

    def __init__(self, values: Iterable[Scalar]):
        vals = tuple(Fraction(v) for v in values)
        if not vals:
            raise ValueError("parameter sequence must provide a_0")
        if vals[0] != 0:
            raise ValueError("parameter sequence must have a_0 = 0")
        self.values = vals

    @property
    def max_index(self) -> int:
        return len(self.values) - 1

    def get(self, i: int) -> Fraction:
        if i < 0:
            raise ValueError("parameter index must be nonnegative")
        if i > self.max_index:
            raise ValueError(
                f"parameter sequence too short: a_{i} requested, "
                f"max index {self.max_index}"
            )
        return self.values[i]

    def prefix(self, m: int) -> tuple[Fraction, ...]:
        """The values (a_1, ..., a_m); empty for m = 0."""
        if m < 0:
            raise ValueError("prefix length must be nonnegative")
        if m > self.max_index:
            raise ValueError(
                f"parameter sequence too short: a_1..a_{m} requested, "
                f"max index {self.max_index}"
            )
        return self.values[1:m + 1]

    @classmethod
    def zeros(cls, max_index: int) -> "ParamSeq":
        return cls((0,) * (max_index + 1))

    @classmethod
    def factorial(cls, max_index: int) -> "ParamSeq":
        return cls(tuple(range(max_index + 1)))

    @classmethod
    def parse(cls, text: str) -> "ParamSeq":
        parts = [t.strip() for t in text.split(",")]
        if any(not t for t in parts):
            raise ValueError(f"malformed parameter sequence: {text!r}")
        try:
            return cls(Fraction(t) for t in parts)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed parameter sequence: {text!r}") from exc

    def __eq__(self, other):
        if not isinstance(other, ParamSeq):
            return NotImplemented
        return self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"ParamSeq({', '.join(str(v) for v in self.values)})"


FINITE_DIRECTIONS = ("power_to_shifted", "shifted_to_power")
INFINITE_DIRECTIONS = ("inv_power_to_shifted", "inv_shifted_to_power")


def shifted_transition(n: int, direction: str, a: ParamSeq,
                       cutoff: int | None = None) -> list[Fraction]:
    """Coefficient sequence expanding one power basis in another.

    The shifted basis consists of the products (u-a_1)(u-a_2)...(u-a_k)
    for k = 0, 1, 2, ... and, for the inverse identities, their
    reciprocals.  Entry k of the returned list is the coefficient of the
    k-th target basis element:

      power_to_shifted      u^n       = sum_k h_{n-k}(a_1..a_{k+1}) (u-a_1)..(u-a_k)
      shifted_to_power      (u-a_1)..(u-a_n) = sum_k (-1)^(n-k) e_{n-k}(a_1..a_n) u^k
      inv_shifted_to_power  1/((u-a_1)..(u-a_n)) = sum_k h_{k-n}(a_1..a_n) u^-k
      inv_power_to_shifted  1/u^n     = sum_k (-1)^(n-k) e_{k-n}(a_1..a_{k-1})
                                               / ((u-a_1)..(u-a_k))

    The first two identities are finite (length n+1, cutoff ignored); the
    last two are infinite expansions truncated at index cutoff, which must
    be at least n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if direction == "shifted_to_power":
        av = a.prefix(n)
        return [
            elem_sym(n - k, av) * (1 if (n - k) % 2 == 0 else -1)
            for k in range(n + 1)
        ]
    if direction == "power_to_shifted":
        out = [complete_sym(n - k, a.prefix(k + 1)) for k in range(n)]
        out.append(_ONE)
        return out
    if direction not in INFINITE_DIRECTIONS:
        raise ValueError(f"unknown transition direction {direction!r}")
    if cutoff is None or cutoff < n:
        raise ValueError("cutoff must be provided and at least n for the infinite expansions")
    if direction == "inv_shifted_to_power":
        av = a.prefix(n)
        return [_ZERO] * n + [complete_sym(k - n, av) for k in range(n, cutoff + 1)]
    out = [_ZERO] * (cutoff + 1)
    for k in range(n, cutoff + 1):
        ev = elem_sym(k - n, a.prefix(k - 1) if k >= 1 else ())
        out[k] = ev * (1 if (k - n) % 2 == 0 else -1)
    return out
