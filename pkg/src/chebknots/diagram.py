"""Knot diagrams from the nodal curves ``(T_i, T_j)``.

Convention: in a crossing sequence, ``+1`` at position ``m`` means the strand
through ``t_m`` passes over its partner.  The curve is traversed in the
direction of increasing ``t`` and closed by an arc outside ``[-1, 1]^2``,
which adds no crossings.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from . import intervals
from .errors import (
    InternalError,
    InvalidCrossingSequence,
    UnrealizableCode,
    ZFailsToSeparate,
)
from .geometry import (
    AngleCos,
    alternating_z,
    cheb_eval_angle,
    node_count,
    nodes,
    preimage_parameters,
    sin_multiple_sign,
)
from .poly import Poly

__all__ = [
    "ALTERNATING",
    "CrossingSequence",
    "GaussEntry",
    "SignedGaussCode",
    "PDCode",
    "alternating_sequence",
    "torus_sequence",
    "node_partner_positions",
    "z_crossing_sequence",
    "build_gauss_code",
    "gauss_to_pd",
    "writhe",
    "mirror",
    "diagram_for",
]

#: Marker for the alternating height function ``d/dt U_{ij-1}/(U_{i-1}U_{j-1})``.
ALTERNATING = "alternating"

ZSpec = Union[int, Poly, str]


@dataclass(frozen=True)
class CrossingSequence:
    values: tuple

    def __post_init__(self):
        if any(v not in (1, -1) for v in self.values):
            raise InvalidCrossingSequence("crossing sequence entries must be +1 or -1")
        if len(self.values) % 2:
            raise InvalidCrossingSequence("crossing sequence must have even length")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, m):
        return self.values[m]

    def is_valid_for(self, partners: Sequence[int]) -> bool:
        return all(self.values[m] * self.values[partners[m]] == -1 for m in range(len(self.values)))

    def is_alternating(self) -> bool:
        return all(a * b == -1 for a, b in zip(self.values, self.values[1:]))

    def to_string(self) -> str:
        return "".join("+" if v > 0 else "-" for v in self.values)


def alternating_sequence(N: int) -> CrossingSequence:
    """``a_n = (-1)^n`` for ``n = 1..2N``."""
    if N < 1:
        raise ValueError("N must be positive")
    return CrossingSequence(tuple((-1) ** n for n in range(1, 2 * N + 1)))


def torus_sequence(n: int) -> CrossingSequence:
    """Crossing sequence of length ``6n`` for the curve ``(T_3, T_{3n+1})``.

    The first ``2n`` entries start ``+1, -1, -1`` and continue by
    ``a_m = a_{m-1} a_{m-2} a_{m-3}``; the block is then repeated with the
    factor ``(-1)^(n+1)`` and finally repeated unchanged.  For ``n = 1`` the
    block is only the first two seeds.
    """
    if n < 1:
        raise ValueError("n must be positive")
    block = [1, -1, -1]
    while len(block) < 2 * n:
        block.append(block[-1] * block[-2] * block[-3])
    block = block[: 2 * n]
    sign = (-1) ** (n + 1)
    return CrossingSequence(tuple(block + [sign * a for a in block] + block))


def node_partner_positions(i: int, j: int) -> list[int]:
    """0-based partner index for each position of the sorted preimage list."""
    params = preimage_parameters(i, j)
    index = {p.k: m for m, p in enumerate(params)}
    partner = [0] * len(params)
    for nd in nodes(i, j):
        a, b = index[nd.t_low.k], index[nd.t_high.k]
        partner[a], partner[b] = b, a
    return partner


def _is_alternating_z(i: int, j: int, z) -> bool:
    if isinstance(z, str):
        if z != ALTERNATING:
            raise ValueError(f"unknown height function {z!r}")
        return True
    return isinstance(z, Poly) and 3 <= i and z == alternating_z(i, j)


def z_crossing_sequence(i: int, j: int, z: ZSpec) -> CrossingSequence:
    """Crossing sequence induced by the height function ``z`` on the nodes of ``(T_i, T_j)``.

    ``z`` may be an integer ``k`` (meaning ``T_k``, compared exactly),
    :data:`ALTERNATING` or the equal polynomial (signs from the root
    structure of the quotient), or any other :class:`Poly` (certified
    interval comparison).
    """
    params = preimage_parameters(i, j)
    partner = node_partner_positions(i, j)
    L = len(params)
    values = [0] * L

    if isinstance(z, int):
        heights = [cheb_eval_angle(z, p) for p in params]
        for m in range(L):
            hm, hp = heights[m], heights[partner[m]]
            if hm == hp:
                raise ZFailsToSeparate(f"T_{z} takes equal values at a node of (T_{i},T_{j})")
            values[m] = 1 if hm > hp else -1
        return CrossingSequence(tuple(values))

    if _is_alternating_z(i, j, z):
        # F' alternates over the sorted simple roots of F, and at the largest
        # root it has the sign of lc(F) > 0; the partner has the opposite sign.
        return CrossingSequence(tuple((-1) ** (L - m) for m in range(1, L + 1)))

    if not isinstance(z, Poly):
        raise TypeError("z must be an int, a Poly or ALTERNATING")
    for m in range(L):
        if values[m]:
            continue
        p = partner[m]
        s = intervals.compare_at_angles(z, (params[m].k, params[m].N), (params[p].k, params[p].N))
        if s is None:
            raise ZFailsToSeparate(f"z does not separate the strands at parameters {params[m]!r}, {params[p]!r}")
        values[m], values[p] = s, -s
    return CrossingSequence(tuple(values))


@dataclass(frozen=True)
class GaussEntry:
    label: int
    over: bool
    sign: int

    def to_json(self) -> dict:
        return {"label": self.label, "over": self.over, "sign": self.sign}


@dataclass(frozen=True)
class SignedGaussCode:
    entries: tuple = ()

    def __len__(self):
        return len(self.entries)

    @property
    def crossing_count(self) -> int:
        return len(self.entries) // 2

    def labels(self) -> list[int]:
        seen = []
        for e in self.entries:
            if e.label not in seen:
                seen.append(e.label)
        return seen

    def signs(self) -> dict:
        return {e.label: e.sign for e in self.entries}

    def check(self) -> None:
        """Raise :class:`UnrealizableCode` on inconsistent hand-built input."""
        counts = Counter(e.label for e in self.entries)
        if any(c != 2 for c in counts.values()):
            raise UnrealizableCode("each crossing label must appear exactly twice")
        by_label = {}
        for pos, e in enumerate(self.entries):
            by_label.setdefault(e.label, []).append((pos, e))
        for label, ((p1, e1), (p2, e2)) in by_label.items():
            if e1.over == e2.over:
                raise UnrealizableCode(f"crossing {label} must be visited once over and once under")
            if e1.sign != e2.sign or e1.sign not in (1, -1):
                raise UnrealizableCode(f"crossing {label} has inconsistent handedness")
            if (p2 - p1) % 2 == 0:
                # Gauss: a planar closed curve visits an even number of
                # crossings strictly between the two passes through a node
                raise UnrealizableCode(f"crossing {label} violates the Gauss parity condition")

    def to_string(self) -> str:
        return ",".join(f"{'O' if e.over else 'U'}{e.label}{'+' if e.sign > 0 else '-'}" for e in self.entries)

    @classmethod
    def from_string(cls, text: str) -> "SignedGaussCode":
        entries = []
        for tok in filter(None, (s.strip() for s in text.split(","))):
            entries.append(GaussEntry(int(tok[1:-1]), tok[0].upper() == "O", 1 if tok[-1] == "+" else -1))
        return cls(tuple(entries))

    def to_json(self) -> list:
        return [e.to_json() for e in self.entries]


@dataclass(frozen=True)
class PDCode:
    """Crossings as ``(a, b, c, d)``: incoming under-arc first, then counterclockwise.

    ``signs`` carries the handedness of each crossing when known.
    """

    crossings: tuple = ()
    signs: Optional[tuple] = None

    def __len__(self):
        return len(self.crossings)

    def arcs(self) -> set:
        return {a for x in self.crossings for a in x}

    def crossing_signs(self) -> tuple:
        if self.signs is not None:
            return self.signs
        # orientation read from consecutive arc labels along the knot
        n = 2 * len(self.crossings)
        out = []
        for a, b, c, d in self.crossings:
            if (b - d) % n == 1:
                out.append(1)
            elif (d - b) % n == 1:
                out.append(-1)
            else:
                raise UnrealizableCode(f"cannot orient crossing {(a, b, c, d)}")
        return tuple(out)

    def writhe(self) -> int:
        return sum(self.crossing_signs())

    def is_single_cycle(self) -> bool:
        """Arcs, joined through crossings along strands, form one closed loop."""
        if not self.crossings:
            return True
        nxt = {}
        for a, b, c, d in self.crossings:
            nxt[a] = c
        for x, s in zip(self.crossings, self.crossing_signs()):
            a, b, c, d = x
            if s > 0:
                nxt[d] = b
            else:
                nxt[b] = d
        start = next(iter(nxt))
        seen, cur = set(), start
        while cur not in seen:
            seen.add(cur)
            cur = nxt.get(cur)
            if cur is None:
                return False
        return cur == start and len(seen) == len(self.arcs()) == 2 * len(self.crossings)

    def to_json(self) -> list:
        return [list(x) for x in self.crossings]


def build_gauss_code(i: int, j: int, seq: CrossingSequence) -> SignedGaussCode:
    """Signed Gauss code of the knot over ``(T_i, T_j)`` with crossing data ``seq``.

    Handedness is the sign of ``det(v_over, v_under)`` for the tangents
    ``(i U_{i-1}, j U_{j-1})``.  At a node both preimages have
    ``|sin(i theta)|`` and ``|sin(j theta)|`` in common, so the sign of the
    determinant is decided exactly by the signs of ``U_{i-1}`` and ``U_{j-1}``.
    """
    params = preimage_parameters(i, j)
    partner = node_partner_positions(i, j)
    if len(seq) != len(params):
        raise InvalidCrossingSequence(f"need {len(params)} entries for ({i},{j}), got {len(seq)}")
    if not seq.is_valid_for(partner):
        raise InvalidCrossingSequence("paired preimages must carry opposite signs")

    def tangent_signs(a: AngleCos) -> tuple[int, int]:
        return sin_multiple_sign(i, a), sin_multiple_sign(j, a)

    labels: dict[int, int] = {}
    entries = []
    for m, p in enumerate(params):
        q = partner[m]
        key = min(m, q)
        if key not in labels:
            labels[key] = len(labels) + 1
        over_pos, under_pos = (m, q) if seq[m] > 0 else (q, m)
        ox, oy = tangent_signs(params[over_pos])
        ux, uy = tangent_signs(params[under_pos])
        det = ox * uy - oy * ux
        if det == 0:
            raise InternalError(f"tangents at node of ({i},{j}) are parallel")
        entries.append(GaussEntry(labels[key], seq[m] > 0, 1 if det > 0 else -1))
    return SignedGaussCode(tuple(entries))


def gauss_to_pd(g: SignedGaussCode) -> PDCode:
    """PD code with arcs numbered ``1..2N`` along the traversal.

    Arc ``m`` leaves the ``m``-th visit; arc ``2N`` is the closing arc.
    """
    if not g.entries:
        return PDCode((), ())
    g.check()
    L = len(g.entries)
    under_at, over_at, sign_of = {}, {}, {}
    for pos, e in enumerate(g.entries):
        (over_at if e.over else under_at)[e.label] = pos
        sign_of[e.label] = e.sign

    def arc_in(pos):
        return pos if pos > 0 else L

    crossings, signs = [], []
    for label in g.labels():
        u, o = under_at[label], over_at[label]
        u_in, u_out = arc_in(u), u + 1
        o_in, o_out = arc_in(o), o + 1
        if sign_of[label] > 0:
            crossings.append((u_in, o_out, u_out, o_in))
        else:
            crossings.append((u_in, o_in, u_out, o_out))
        signs.append(sign_of[label])
    return PDCode(tuple(crossings), tuple(signs))


def writhe(g: SignedGaussCode) -> int:
    return sum(g.signs().values())


def mirror(g: SignedGaussCode) -> SignedGaussCode:
    """Reflect through the projection plane: swap over/under, negate handedness."""
    return SignedGaussCode(tuple(GaussEntry(e.label, not e.over, -e.sign) for e in g.entries))


def diagram_for(i: int, j: int, z: ZSpec) -> tuple[CrossingSequence, SignedGaussCode]:
    """Crossing sequence and Gauss code for ``(T_i, T_j, z)``; ``z`` as in :func:`z_crossing_sequence`."""
    seq = z_crossing_sequence(i, j, z)
    return seq, build_gauss_code(i, j, seq)
