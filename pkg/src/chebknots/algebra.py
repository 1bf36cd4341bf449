"""Line embeddings ``(T_i, T_j, T_k)``: embedding test, witnesses, reduction.

Parametrizations are triples of :class:`~chebknots.poly.Poly`.  An
elementary involution acts on a parametrization by substitution; each of
the nine shapes is its own inverse, so a recorded reduction can be replayed
backwards with the same steps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import InternalError, NotAnEmbedding, NoUnitComponent, NotCoprime
from .poly import Poly, compose, T

__all__ = [
    "Triple",
    "Witness",
    "InvolutionStep",
    "ReductionTrace",
    "FORMS",
    "pgcd",
    "is_embedding",
    "embedding_witness",
    "verify_witness",
    "semigroup_member",
    "frobenius",
    "remnant",
    "is_reduced",
    "reduce_triple",
    "rectify_trivial",
    "rectification",
    "apply_involution",
    "apply_involutions",
    "parametrization",
]

Param = tuple  # (Poly, Poly, Poly)


class Triple(NamedTuple):
    i: int
    j: int
    k: int

    @property
    def total(self) -> int:
        return self.i + self.j + self.k

    def __str__(self) -> str:
        return f"({self.i},{self.j},{self.k})"


def _triple(t: Iterable[int]) -> Triple:
    t = Triple(*t)
    if min(t) < 1:
        raise NotAnEmbedding(f"triple {t} must have positive entries")
    return t


def parametrization(t: Sequence[int]) -> Param:
    return tuple(T(n) for n in t)


# -- embedding criterion ---------------------------------------------------


def pgcd(i: int, j: int, k: int) -> int:
    """Pairwise greatest common divisor."""
    return max(math.gcd(i, j), math.gcd(i, k), math.gcd(j, k))


def is_embedding(t: Sequence[int]) -> bool:
    t = _triple(t)
    return 1 in t or pgcd(*t) == 1


@dataclass(frozen=True)
class Witness:
    """Integers with ``t = 2 T_a(T_j) T_b(T_k) - T_c(T_i)``.

    ``odd_slot`` is the position (0, 1 or 2) of the original triple that
    plays the odd role ``i``; ``j`` and ``k`` are the remaining entries in
    their original order, recorded in ``roles``.
    """

    a: int
    b: int
    c: int
    odd_slot: int
    roles: Triple

    def identity(self) -> str:
        i, j, k = self.roles
        return f"t = 2*T_{self.a}(T_{j})*T_{self.b}(T_{k}) - T_{self.c}(T_{i})"

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "odd_slot": self.odd_slot,
            "roles": list(self.roles),
            "identity": self.identity(),
        }


def _smallest_unimodular(j: int, k: int) -> tuple[int, int]:
    """Smallest positive ``A`` (then ``B > 0``) with ``|A j - B k| = 1``."""
    for A in range(1, k + 1):
        r = A * j % k
        if r == 1 and (A * j - 1) // k > 0:
            return A, (A * j - 1) // k
        if r == k - 1:
            return A, (A * j + 1) // k
    raise InternalError(f"no unimodular pair for ({j},{k})")


def embedding_witness(t: Sequence[int], verify: bool = True) -> Witness:
    """Constructive certificate that ``t`` lies in ``k[T_i, T_j, T_k]``.

    Solves ``|A j - B k| = 1`` by the smallest positive pair, shifts it along
    ``(A + kx, B + jx)`` so that ``a j + b k`` is divisible by the odd entry
    ``i``, and (by default) checks the resulting identity by full expansion.
    """
    t = _triple(t)
    if 1 in t or pgcd(*t) != 1:
        raise NotAnEmbedding(f"{t} needs pgcd 1 and no unit entry")
    slot = next(s for s, n in enumerate(t) if n % 2 == 1)
    i = t[slot]
    j, k = (n for s, n in enumerate(t) if s != slot)
    A, B = _smallest_unimodular(j, k)
    inv = pow(2 * j * k, -1, i)
    x = (-inv * (A * j + B * k)) % i
    a, b = A + k * x, B + j * x
    c, rem = divmod(a * j + b * k, i)
    if rem or abs(a * j - b * k) != 1:
        raise InternalError(f"witness arithmetic failed for {t}")
    w = Witness(a, b, c, slot, Triple(i, j, k))
    if verify and not verify_witness(w):
        raise InternalError(f"witness identity failed to expand for {t}")
    return w


def verify_witness(w: Witness) -> bool:
    i, j, k = w.roles
    lhs = compose(T(w.a), T(j)) * compose(T(w.b), T(k)) * 2 - compose(T(w.c), T(i))
    return lhs == Poly.t()


# -- numerical semigroup ---------------------------------------------------


def semigroup_member(i: int, j: int, k: int) -> Optional[tuple[int, int]]:
    """Positive ``(a, b)`` with ``k = a i + b j`` and ``a`` minimal, or None."""
    if math.gcd(i, j) != 1:
        raise NotCoprime(f"gcd({i},{j}) != 1")
    a = 1
    while a * i < k:
        rest = k - a * i
        if rest % j == 0:
            return a, rest // j
        a += 1
    return None


def _in_semigroup(i: int, j: int, k: int) -> bool:
    """``k`` is a non-negative, not-both-zero combination of ``i`` and ``j``."""
    return any((k - a * i) % j == 0 for a in range(0, k // i + 1)) and k > 0


def frobenius(i: int, j: int) -> int:
    if math.gcd(i, j) != 1 or min(i, j) < 2:
        raise NotCoprime(f"frobenius needs coprime i, j >= 2, got ({i},{j})")
    return i * j - i - j


def remnant(i: int, j: int) -> list[int]:
    """Sorted ``k > max(i,j)`` outside the semigroup ``<i,j>`` with pgcd 1."""
    if math.gcd(i, j) != 1 or min(i, j) < 2:
        raise NotCoprime(f"remnant needs coprime i, j >= 2, got ({i},{j})")
    lo, hi = max(i, j) + 1, frobenius(i, j)
    return [k for k in range(lo, hi + 1) if pgcd(i, j, k) == 1 and not _in_semigroup(i, j, k)]


def is_reduced(t: Sequence[int]) -> bool:
    i, j, k = t
    if 1 in t:
        return True
    return 2 <= i < j and math.gcd(i, j) == 1 and k in remnant(i, j)


# -- elementary involutions -----------------------------------------------

#: The nine shapes.  ``P`` and ``Q`` are the payload polynomials; a
#: two-variable ``f`` is carried in product form ``f(u, v) = P(u) Q(v)``.
FORMS = {
    "swap_yz": "(x, z, y)",
    "swap_xy": "(y, x, z)",
    "swap_xz": "(z, y, x)",
    "f_x": "(P(y)Q(z) - x, y, z)",
    "f_y": "(x, P(x)Q(z) - y, z)",
    "f_z": "(x, y, P(x)Q(y) - z)",
    "gh_z": "(P(z) - x, Q(z) - y, z)",
    "gh_y": "(P(y) - x, y, Q(y) - z)",
    "gh_x": "(x, P(x) - y, Q(x) - z)",
}

_SWAPS = {"swap_yz": (0, 2, 1), "swap_xy": (1, 0, 2), "swap_xz": (2, 1, 0)}


@dataclass(frozen=True)
class InvolutionStep:
    form: str
    payload: tuple = ()

    def __post_init__(self):
        if self.form not in FORMS:
            raise ValueError(f"unknown involution form {self.form!r}")
        want = 0 if self.form in _SWAPS else 2
        if len(self.payload) != want:
            raise ValueError(f"{self.form} takes {want} payload polynomials")

    def describe(self) -> str:
        text = FORMS[self.form]
        if self.payload:
            P, Q = self.payload
            text += f" with P = {P.to_string('u')}, Q = {Q.to_string('u')}"
        return text

    def to_json(self) -> dict:
        return {"form": self.form, "payload": [p.to_json() for p in self.payload]}

    @classmethod
    def from_json(cls, data: dict) -> "InvolutionStep":
        return cls(data["form"], tuple(Poly.from_json(p) for p in data["payload"]))


def apply_involution(step: InvolutionStep, p: Param) -> Param:
    x, y, z = p
    form = step.form
    if form in _SWAPS:
        return tuple(p[s] for s in _SWAPS[form])
    P, Q = step.payload
    if form == "f_x":
        return (compose(P, y) * compose(Q, z) - x, y, z)
    if form == "f_y":
        return (x, compose(P, x) * compose(Q, z) - y, z)
    if form == "f_z":
        return (x, y, compose(P, x) * compose(Q, y) - z)
    if form == "gh_z":
        return (compose(P, z) - x, compose(Q, z) - y, z)
    if form == "gh_y":
        return (compose(P, y) - x, y, compose(Q, y) - z)
    return (x, compose(P, x) - y, compose(Q, x) - z)  # gh_x


def apply_involutions(steps: Iterable[InvolutionStep], p: Param) -> Param:
    """Substitute each step into ``p`` in order."""
    for step in steps:
        p = apply_involution(step, p)
    return tuple(p)


def _swap_triple(form: str, t: Triple) -> Triple:
    return Triple(*(t[s] for s in _SWAPS[form]))


@dataclass
class ReductionTrace:
    start: Triple
    steps: list = field(default_factory=list)  # [(InvolutionStep, Triple)]
    end: Optional[Triple] = None

    @property
    def involutions(self) -> list[InvolutionStep]:
        return [s for s, _ in self.steps]

    @property
    def trivial(self) -> bool:
        return self.end is not None and 1 in self.end

    def degrees(self) -> list[int]:
        return [self.start.total] + [t.total for _, t in self.steps]

    def replay(self) -> Param:
        """Rebuild the start parametrization from the end one."""
        return apply_involutions(reversed(self.involutions), parametrization(self.end))

    def to_json(self) -> dict:
        return {
            "start": list(self.start),
            "steps": [dict(step.to_json(), triple=list(t)) for step, t in self.steps],
            "end": list(self.end),
            "trivial": self.trivial,
        }


def _sort_steps(t: Triple) -> list[tuple[InvolutionStep, Triple]]:
    out = []
    while True:
        if t.i > t.j:
            form = "swap_xy"
        elif t.j > t.k:
            form = "swap_yz"
        else:
            return out
        t = _swap_triple(form, t)
        out.append((InvolutionStep(form), t))


def reduce_triple(t: Sequence[int]) -> ReductionTrace:
    """Walk ``t`` down to a reduced triple by elementary involutions.

    The triple is kept ascending by recorded swaps.  While ``k = a i + b j``
    with positive ``a`` (smallest) and ``b``, the involution
    ``(x, y, 2 T_a(x) T_b(y) - z)`` replaces ``k`` by ``|a i - b j|``.
    """
    t = _triple(t)
    if not is_embedding(t):
        raise NotAnEmbedding(f"pgcd{t} = {pgcd(*t)}")
    trace = ReductionTrace(start=t)
    trace.steps.extend(_sort_steps(t))
    cur = trace.steps[-1][1] if trace.steps else t
    while 1 not in cur:
        i, j, k = cur
        rep = semigroup_member(i, j, k)
        if rep is None:
            break
        a, b = rep
        new_k = abs(a * i - b * j)
        if new_k == 0:
            raise InternalError(f"reduction of {cur} would produce T_0")
        step = InvolutionStep("f_z", (T(a) * 2, T(b)))
        cur = Triple(i, j, new_k)
        trace.steps.append((step, cur))
        trace.steps.extend(_sort_steps(cur))
        cur = trace.steps[-1][1]
    trace.end = cur
    return trace


def rectify_trivial(t: Sequence[int]) -> list[InvolutionStep]:
    """Involutions carrying ``(T_i, T_j, T_k)`` to ``(t, 0, 0)`` when 1 is an entry."""
    t = _triple(t)
    if 1 not in t:
        raise NoUnitComponent(f"{t} has no entry equal to 1")
    steps = []
    slot = t.index(1)
    if slot == 1:
        steps.append(InvolutionStep("swap_xy"))
        t = _swap_triple("swap_xy", t)
    elif slot == 2:
        steps.append(InvolutionStep("swap_xz"))
        t = _swap_triple("swap_xz", t)
    steps.append(InvolutionStep("gh_x", (T(t.j), T(t.k))))
    return steps


def rectification(t: Sequence[int]) -> list[InvolutionStep]:
    """Reduce ``t`` and, when the end triple has a unit entry, rectify it.

    Applying the returned steps to ``(T_i, T_j, T_k)`` yields ``(t, 0, 0)``.
    """
    trace = reduce_triple(t)
    if not trace.trivial:
        raise NoUnitComponent(f"{Triple(*t)} reduces to {trace.end}, which has no unit entry")
    return trace.involutions + rectify_trivial(trace.end)
