"""JSON interchange form for polynomials.

A polynomial serializes as {"vars": <family>, "terms": [...]} where each
term is {"mono": {"<index>": <exponent>, ...}, "coef": "<rational>"}.
Terms are emitted in the canonical monomial order and coefficients as
exact rational strings, so serialization is deterministic and parsing
followed by re-serialization is the identity.
"""

from __future__ import annotations

from fractions import Fraction

from .ring import Mono, Poly

ALLOWED_FAMILIES = ("p", "x", "y", "D")


def poly_to_json_dict(f: Poly) -> dict:
    if f.family not in ALLOWED_FAMILIES:
        raise ValueError(f"family {f.family!r} has no JSON form")
    return {
        "vars": f.family,
        "terms": [
            {"mono": {str(n): e for n, e in mono}, "coef": str(c)}
            for mono, c in f.canonical_terms()
        ],
    }


def _parse_mono(data: dict) -> Mono:
    if not isinstance(data, dict):
        raise ValueError("mono must be an object mapping index to exponent")
    pairs = []
    for key, e in data.items():
        try:
            n = int(key)
        except (TypeError, ValueError):
            raise ValueError(f"bad variable index {key!r}") from None
        if n < 1:
            raise ValueError(f"variable index must be positive, got {n}")
        if not isinstance(e, int) or e < 1:
            raise ValueError(f"exponent for index {n} must be a positive integer")
        pairs.append((n, e))
    pairs.sort()
    for i in range(1, len(pairs)):
        if pairs[i][0] == pairs[i - 1][0]:
            raise ValueError(f"repeated variable index {pairs[i][0]}")
    return tuple(pairs)


def poly_from_json_dict(data: dict) -> Poly:
    if not isinstance(data, dict):
        raise ValueError("polynomial JSON must be an object")
    family = data.get("vars")
    if family not in ALLOWED_FAMILIES:
        raise ValueError(f"unknown variable family {family!r}")
    terms = data.get("terms")
    if not isinstance(terms, list):
        raise ValueError("terms must be a list")
    out: dict[Mono, Fraction] = {}
    for item in terms:
        if not isinstance(item, dict) or set(item) - {"mono", "coef"}:
            raise ValueError(f"malformed term {item!r}")
        mono = _parse_mono(item.get("mono", {}))
        for n, _ in mono:
            if n % 2 == 0:
                raise ValueError(
                    f"family {family!r} only has odd variable indices, got {n}"
                )
        coef_text = item.get("coef")
        if not isinstance(coef_text, str):
            raise ValueError("coef must be a rational string")
        try:
            coef = Fraction(coef_text)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad rational {coef_text!r}") from None
        out[mono] = out.get(mono, Fraction(0)) + coef
    return Poly(out, family=family)
