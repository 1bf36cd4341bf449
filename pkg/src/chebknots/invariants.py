"""Kauffman bracket, Jones polynomial and knot identification.

The bracket is contracted one crossing at a time.  A partial state is a
planar matching of the arcs that still leave the processed region, mapped to
its accumulated Laurent polynomial in ``A``; crossings are taken greedily so
the open boundary stays small.

Jones polynomials are stored in ``x = t^(1/4)`` (so knots only use exponents
divisible by 4), obtained from the bracket through ``t = A^-4``.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Iterable, Optional, Union

from .diagram import PDCode, SignedGaussCode, gauss_to_pd, writhe as gauss_writhe
from .errors import TooManyCrossings

__all__ = [
    "DEFAULT_CAP",
    "LaurentPoly",
    "KnotRecord",
    "Identification",
    "kauffman_bracket",
    "jones",
    "jones_from_pd",
    "standard_torus_pd",
    "knot_table",
    "identify",
]

DEFAULT_CAP = 24


class LaurentPoly:
    """Integer Laurent polynomial ``sum(c * v**e)`` in one variable."""

    __slots__ = ("terms",)

    def __init__(self, terms: Union[dict, Iterable] = ()):
        items = terms.items() if isinstance(terms, dict) else terms
        clean = {}
        for e, c in items:
            c = int(c)
            if c:
                clean[int(e)] = clean.get(int(e), 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def mirror(self) -> "LaurentPoly":
        """Substitute ``v -> 1/v``."""
        return LaurentPoly({-e: c for e, c in self.terms.items()})

    def substitute_power(self, k: int) -> "LaurentPoly":
        """Substitute ``v -> v**k``."""
        return LaurentPoly({e * k: c for e, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_exp(self) -> int:
        return min(self.terms)

    @property
    def max_exp(self) -> int:
        return max(self.terms)

    def span(self) -> int:
        return self.max_exp - self.min_exp if self.terms else 0

    def evaluate(self, v) -> Fraction:
        v = Fraction(v)
        return sum((c * v**e for e, c in self.terms.items()), Fraction(0))

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient of an exact division over Z; raises ArithmeticError otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly()
        lo_s, lo_o = self.min_exp, other.min_exp
        num = [self.terms.get(lo_s + e, 0) for e in range(self.span() + 1)]
        den = [other.terms.get(lo_o + e, 0) for e in range(other.span() + 1)]
        if len(num) < len(den):
            raise ArithmeticError("inexact Laurent division")
        quot = [0] * (len(num) - len(den) + 1)
        for k in range(len(quot) - 1, -1, -1):
            q, r = divmod(num[k + len(den) - 1], den[-1])
            if r:
                raise ArithmeticError("inexact Laurent division")
            quot[k] = q
            if q:
                for n, dc in enumerate(den):
                    num[k + n] -= q * dc
        if any(num):
            raise ArithmeticError("inexact Laurent division")
        return LaurentPoly({lo_s - lo_o + k: c for k, c in enumerate(quot)})

    def to_string(self, var: str = "x") -> str:
        if not self.terms:
            return "0"
        out = ""
        for e in sorted(self.terms):
            c = self.terms[e]
            mag = abs(c)
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __repr__(self):
        return f"LaurentPoly({self.to_string()})"

    def to_json(self) -> dict:
        return {str(e): str(self.terms[e]) for e in sorted(self.terms)}

    @classmethod
    def from_json(cls, data: dict) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data.items()})


# -- bracket ---------------------------------------------------------------

_LOOP = {2: -1, -2: -1}  # d = -A^2 - A^-2


def _dmul(p: dict, q: dict, shift: int = 0) -> dict:
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2 + shift
            out[e] = out.get(e, 0) + c1 * c2
    return out


def _smooth(matching: frozenset, pieces) -> tuple[frozenset, int]:
    """Attach strand pieces ``(x, y)`` to the open-arc matching; count closed loops."""
    partner = {}
    for a, b in matching:
        partner[a] = b
        partner[b] = a
    loops = 0
    for x, y in pieces:
        if x == y:
            loops += 1
            continue
        xo, yo = x in partner, y in partner
        if xo and yo:
            px, py = partner.pop(x), partner.pop(y)
            if px == y:
                loops += 1
            else:
                partner[px], partner[py] = py, px
        elif xo:
            px = partner.pop(x)
            partner[px], partner[y] = y, px
        elif yo:
            py = partner.pop(y)
            partner[py], partner[x] = x, py
        else:
            partner[x], partner[y] = y, x
    return frozenset((a, b) for a, b in partner.items() if a < b), loops


def _crossing_order(crossings) -> list[int]:
    remaining = list(range(len(crossings)))
    open_arcs: dict = {}
    order = []
    while remaining:
        best = max(remaining, key=lambda n: (sum(open_arcs.get(a, 0) for a in crossings[n]), -n))
        remaining.remove(best)
        order.append(best)
        for a in crossings[best]:
            open_arcs[a] = open_arcs.get(a, 0) + 1
    return order


def kauffman_bracket(pd: PDCode, cap: int = DEFAULT_CAP) -> LaurentPoly:
    """Normalized Kauffman bracket in ``A`` (the crossingless unknot is 1).

    At ``(a, b, c, d)`` the A-smoothing joins ``a-b`` and ``c-d``, the
    B-smoothing ``a-d`` and ``b-c``; every closed loop contributes
    ``-A^2 - A^-2``.
    """
    crossings = [tuple(x) for x in pd.crossings]
    if len(crossings) > cap:
        raise TooManyCrossings(len(crossings), cap)
    if not crossings:
        return LaurentPoly({0: 1})
    loop_powers = [{0: 1}]
    states = {frozenset(): {0: 1}}
    for n in _crossing_order(crossings):
        a, b, c, d = crossings[n]
        nxt: dict = {}
        for matching, poly in states.items():
            for shift, pieces in ((1, ((a, b), (c, d))), (-1, ((a, d), (b, c)))):
                new_m, loops = _smooth(matching, pieces)
                while len(loop_powers) <= loops:
                    loop_powers.append(_dmul(loop_powers[-1], _LOOP))
                term = _dmul(poly, loop_powers[loops], shift)
                acc = nxt.setdefault(new_m, {})
                for e, cf in term.items():
                    acc[e] = acc.get(e, 0) + cf
        states = {m: {e: c for e, c in p.items() if c} for m, p in nxt.items()}
    total = LaurentPoly(states.get(frozenset(), {}))
    return total.exact_div(LaurentPoly(_LOOP))


def jones_from_pd(pd: PDCode, cap: int = DEFAULT_CAP) -> LaurentPoly:
    """Jones polynomial in ``x = t^(1/4)``: ``(-A^3)^(-w) <D>`` with ``A = x^-1``."""
    w = pd.writhe()
    bracket = kauffman_bracket(pd, cap)
    normalized = bracket.shift(-3 * w) * (-1 if w % 2 else 1)
    return normalized.mirror()


def jones(g: Union[SignedGaussCode, PDCode], cap: int = DEFAULT_CAP) -> LaurentPoly:
    if isinstance(g, SignedGaussCode):
        pd = gauss_to_pd(g)
        if pd.signs is not None and sum(pd.signs) != gauss_writhe(g):
            raise AssertionError("writhe mismatch between Gauss and PD codes")
        return jones_from_pd(pd, cap)
    return jones_from_pd(g, cap)


def standard_torus_pd(q: int) -> PDCode:
    """Closed two-strand braid ``sigma^q``: the ``(2, q)`` torus knot, ``q`` odd."""
    if q < 3 or q % 2 == 0:
        raise ValueError("q must be odd and at least 3")
    n = 2 * q

    def wrap(a):
        return (a - 1) % n + 1

    crossings = tuple((2 * m - 1, wrap(2 * m + q), 2 * m, wrap(2 * m + q - 1)) for m in range(1, q + 1))
    return PDCode(crossings, (1,) * q)


# -- identification --------------------------------------------------------


@dataclass(frozen=True)
class KnotRecord:
    name: str
    crossing_number: int
    jones: LaurentPoly

    def jones_t(self) -> str:
        """The Jones polynomial written in ``t``."""
        return LaurentPoly({e // 4: c for e, c in self.jones.terms.items()}).to_string("t")


@dataclass(frozen=True)
class Identification:
    record: KnotRecord
    mirror_matched: bool

    def to_json(self) -> dict:
        return {
            "name": self.record.name,
            "crossing_number": self.record.crossing_number,
            "mirror_matched": self.mirror_matched,
        }


_TABLE: Optional[tuple] = None


def knot_table() -> tuple:
    """The embedded table of :class:`KnotRecord`, in file order."""
    global _TABLE
    if _TABLE is None:
        text = resources.files("chebknots").joinpath("data/knot_table.json").read_text()
        data = json.loads(text)
        _TABLE = tuple(
            KnotRecord(k["name"], k["crossing_number"], LaurentPoly.from_json(k["jones"])) for k in data["knots"]
        )
    return _TABLE


def identify(v: LaurentPoly, table: Optional[Iterable[KnotRecord]] = None) -> Optional[Identification]:
    """Look ``v`` or its mirror image up in the knot table."""
    table = knot_table() if table is None else table
    mv = v.mirror()
    hits = []
    for rec in table:
        if rec.jones == v:
            hits.append(Identification(rec, False))
        elif rec.jones == mv:
            hits.append(Identification(rec, True))
    if len(hits) > 1:
        names = ", ".join(h.record.name for h in hits)
        warnings.warn(f"Jones polynomial matches several table entries: {names}")
    return hits[0] if hits else None
