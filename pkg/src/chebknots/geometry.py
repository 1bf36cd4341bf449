"""Node geometry of the plane curve ``t -> (T_i(t), T_j(t))``.

All coordinates and parameters are numbers ``cos(k pi / N)``; they are kept
as integer pairs and compared by integer arithmetic, since cosine is
strictly decreasing on ``[0, pi]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Sequence

from .errors import BoundaryAngle, DomainError, NotCoprime
from .poly import Poly, cheb_t, cheb_u, derivative, eval_rational, exact_div

__all__ = [
    "AngleCos",
    "NodeData",
    "cheb_eval_angle",
    "sin_multiple_sign",
    "bezout",
    "nodes",
    "node_count",
    "preimage_parameters",
    "pairing_positions",
    "check_parity",
    "alternating_quotient",
    "alternating_z",
    "curve_samples",
]


@total_ordering
class AngleCos:
    """The real number ``cos(k pi / N)`` in canonical form ``0 <= k <= N``.

    The denominator is not reduced, so ``AngleCos(2, 12)`` keeps ``N = 12``;
    equality and order go through cross-multiplication.
    """

    __slots__ = ("k", "N")

    def __init__(self, k: int, N: int):
        if N <= 0:
            raise ValueError("N must be positive")
        k %= 2 * N
        if k > N:
            k = 2 * N - k
        self.k = k
        self.N = N

    def __eq__(self, other):
        if not isinstance(other, AngleCos):
            return NotImplemented
        return self.k * other.N == other.k * self.N

    def __lt__(self, other):
        if not isinstance(other, AngleCos):
            return NotImplemented
        return self.k * other.N > other.k * self.N

    def __hash__(self):
        return hash(Fraction(self.k, self.N))

    def __repr__(self):
        return f"AngleCos({self.k}, {self.N})"

    def __float__(self):
        return math.cos(math.pi * self.k / self.N)

    @property
    def interior(self) -> bool:
        return 0 < self.k < self.N

    def to_json(self) -> dict:
        return {"k": self.k, "N": self.N, "approx": float(self)}


def cheb_eval_angle(n: int, a: AngleCos) -> AngleCos:
    """``T_n(cos(k pi/N)) = cos(n k pi/N)``."""
    if n < 0:
        raise DomainError("n must be non-negative")
    return AngleCos(n * a.k, a.N)


def sin_multiple_sign(n: int, a: AngleCos) -> int:
    """Sign of ``U_{n-1}`` at ``a``, i.e. of ``sin(n theta) / sin(theta)``."""
    if not a.interior:
        raise BoundaryAngle(f"{a!r} is an endpoint of [0, pi]")
    r = (n * a.k) % (2 * a.N)
    if r == 0 or r == a.N:
        return 0
    return 1 if r < a.N else -1


def bezout(i: int, j: int) -> tuple[int, int]:
    """``(u, v)`` with ``i u + j v = 1`` and ``|v|`` minimal (ties: v > 0)."""
    if math.gcd(i, j) != 1:
        raise NotCoprime(f"gcd({i},{j}) != 1")
    v = pow(j, -1, i) if i > 1 else 0
    if v > i // 2:
        v -= i
    u = (1 - j * v) // i
    return u, v


@dataclass(frozen=True)
class NodeData:
    lam: int
    mu: int
    x: AngleCos
    y: AngleCos
    t_low: AngleCos
    t_high: AngleCos

    def to_json(self) -> dict:
        return {
            "lambda": self.lam,
            "mu": self.mu,
            "x": self.x.to_json(),
            "y": self.y.to_json(),
            "t_low": self.t_low.to_json(),
            "t_high": self.t_high.to_json(),
        }


def _check_pair(i: int, j: int) -> None:
    if math.gcd(i, j) != 1:
        raise NotCoprime(f"gcd({i},{j}) = {math.gcd(i, j)}")
    if not 2 <= i < j:
        raise DomainError(f"need 2 <= i < j, got ({i},{j})")


def node_count(i: int, j: int) -> int:
    return (i - 1) * (j - 1) // 2


def nodes(i: int, j: int) -> list[NodeData]:
    """The ``(i-1)(j-1)/2`` nodes with their two preimage parameters each."""
    _check_pair(i, j)
    u, v = bezout(i, j)
    ij = i * j
    out = []
    for lam in range(1, j):
        for mu in range(1 + (lam + 1) % 2, i, 2):  # mu == lam (mod 2)
            k1 = lam * i * u + mu * j * v
            k2 = lam * i * u - mu * j * v
            t1, t2 = sorted((AngleCos(k1, ij), AngleCos(k2, ij)))
            out.append(NodeData(lam, mu, AngleCos(lam, j), AngleCos(mu, i), t1, t2))
    return out


def preimage_parameters(i: int, j: int) -> list[AngleCos]:
    """All ``cos(k pi/ij)`` with ``i, j`` not dividing ``k``, ascending in value."""
    _check_pair(i, j)
    ij = i * j
    return [AngleCos(k, ij) for k in range(ij - 1, 0, -1) if k % i and k % j]


def pairing_positions(i: int, j: int) -> list[tuple[int, int]]:
    """1-based positions ``(a, b)``, ``a < b``, of each node's preimages."""
    index = {p.k: n for n, p in enumerate(preimage_parameters(i, j), start=1)}
    pairs = [(index[nd.t_low.k], index[nd.t_high.k]) for nd in nodes(i, j)]
    return sorted(tuple(sorted(p)) for p in pairs)


def check_parity(i: int, j: int) -> bool:
    return all((a - b) % 2 == 1 for a, b in pairing_positions(i, j))


def alternating_quotient(m: int, n: int) -> Poly:
    """``U_{mn-1} / (U_{m-1} U_{n-1})``, whose roots are the node parameters."""
    if math.gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m},{n}) != 1")
    return exact_div(cheb_u(m * n - 1), cheb_u(m - 1) * cheb_u(n - 1))


def alternating_z(m: int, n: int) -> Poly:
    """Height function whose signs alternate along the node parameters of ``(T_m, T_n)``."""
    if math.gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m},{n}) != 1")
    if not 3 <= m < n:
        raise DomainError(f"need 3 <= m < n, got ({m},{n})")
    return derivative(alternating_quotient(m, n))


def curve_samples(i: int, j: int, count: int, lo=-1, hi=1) -> list[tuple[Fraction, Fraction]]:
    """Exact points ``(T_i(t), T_j(t))`` at ``count`` equally spaced ``t`` in ``[lo, hi]``."""
    if count < 2:
        raise DomainError("count must be at least 2")
    lo, hi = Fraction(lo), Fraction(hi)
    Ti, Tj = cheb_t(i), cheb_t(j)
    step = (hi - lo) / (count - 1)
    return [(eval_rational(Ti, lo + s * step), eval_rational(Tj, lo + s * step)) for s in range(count)]
