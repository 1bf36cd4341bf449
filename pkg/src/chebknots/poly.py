"""Exact dense univariate polynomials over Q and the Chebyshev families.

A :class:`Poly` stores an integer numerator vector and one positive common
denominator, so every coefficient is an exact rational while products and
compositions run on plain integers.  Large products go through Kronecker
substitution on GMP integers.
"""

from __future__ import annotations

import math
import threading
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

import gmpy2

from .errors import NonzeroRemainder

__all__ = [
    "NEG_INF",
    "ChebKind",
    "Poly",
    "add",
    "sub",
    "mul",
    "compose",
    "derivative",
    "exact_div",
    "divmod_poly",
    "eval_rational",
    "cheb",
    "cheb_t",
    "cheb_u",
    "monic_cheb",
    "T",
    "U",
]

#: Degree of the zero polynomial.
NEG_INF = float("-inf")

_KRONECKER_THRESHOLD = 900  # len(a) * len(b) above which Kronecker wins


class ChebKind(Enum):
    FIRST = "T"
    SECOND = "U"


def _trim(num: list[int]) -> list[int]:
    while num and num[-1] == 0:
        num.pop()
    return num


class Poly:
    """Immutable polynomial ``sum(coeffs[e] * t**e)`` with rational coefficients."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        fracs = [Fraction(c) for c in coeffs]
        den = 1
        for f in fracs:
            den = den * f.denominator // math.gcd(den, f.denominator)
        num = [f.numerator * (den // f.denominator) for f in fracs]
        self._set(num, den)

    def _set(self, num: list[int], den: int) -> None:
        num = _trim(num)
        if not num:
            den = 1
        else:
            if den < 0:
                num = [-c for c in num]
                den = -den
            if den != 1:
                g = den
                for c in num:
                    g = math.gcd(g, c)
                    if g == 1:
                        break
                if g != 1:
                    num = [c // g for c in num]
                    den //= g
        self._num = tuple(num)
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, num: Sequence[int], den: int = 1) -> "Poly":
        p = cls.__new__(cls)
        p._set(list(num), den)
        return p

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, e: int, c=1) -> "Poly":
        return cls([0] * e + [c])

    @classmethod
    def t(cls) -> "Poly":
        return cls._raw([0, 1])

    # -- accessors ---------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        d = self._den
        return tuple(Fraction(c, d) for c in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    @property
    def degree(self):
        """Degree, or :data:`NEG_INF` for the zero polynomial."""
        return len(self._num) - 1 if self._num else NEG_INF

    def is_zero(self) -> bool:
        return not self._num

    def is_integral(self) -> bool:
        return self._den == 1

    def leading_coefficient(self) -> Fraction:
        if not self._num:
            return Fraction(0)
        return Fraction(self._num[-1], self._den)

    def __getitem__(self, e: int) -> Fraction:
        if 0 <= e < len(self._num):
            return Fraction(self._num[e], self._den)
        return Fraction(0)

    def __len__(self) -> int:
        return len(self._num)

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Rational)):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({self.to_string()})"

    def to_string(self, var: str = "t") -> str:
        if not self._num:
            return "0"
        parts = []
        for e in range(len(self._num) - 1, -1, -1):
            c = self[e]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Rational)):
            return Poly.constant(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Poly")

    def __add__(self, other):
        try:
            return add(self, self._coerce(other))
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        try:
            return sub(self, self._coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        try:
            return sub(self._coerce(other), self)
        except TypeError:
            return NotImplemented

    def __neg__(self):
        return Poly._raw([-c for c in self._num], self._den)

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly._raw([c * other for c in self._num], self._den)
        if isinstance(other, Rational) and not isinstance(other, Poly):
            f = Fraction(other)
            return Poly._raw([c * f.numerator for c in self._num], self._den * f.denominator)
        try:
            return mul(self, self._coerce(other))
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, x):
        """Compose with a polynomial, or evaluate at a rational."""
        if isinstance(x, Poly):
            return compose(self, x)
        return eval_rational(self, x)

    def scale_var(self, s) -> "Poly":
        """Return ``p(s*t)``."""
        s = Fraction(s)
        return Poly(c * s**e for e, c in enumerate(self.coeffs))

    def reflect(self) -> "Poly":
        """Return ``p(-t)``."""
        return Poly._raw([c if e % 2 == 0 else -c for e, c in enumerate(self._num)], self._den)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "Poly":
        return cls(Fraction(int(n), int(d)) for n, d in data["coeffs"])


# -- integer kernels -------------------------------------------------------


def _conv_school(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _pack(coeffs: Sequence[int], bits: int):
    pos = gmpy2.pack([c if c > 0 else 0 for c in coeffs], bits)
    neg = gmpy2.pack([-c if c < 0 else 0 for c in coeffs], bits)
    return pos - neg


def _conv_kronecker(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Signed Kronecker substitution: pack, one big product, unpack with a bias."""
    n = len(a) + len(b) - 1
    ma, mb = max(map(abs, a)), max(map(abs, b))
    bound = ma * mb * min(len(a), len(b))
    # 2**(bits - 1) > bound, and every input coefficient fits a slot
    bits = max(bound.bit_length() + 1, ma.bit_length(), mb.bit_length())
    half = 1 << (bits - 1)
    prod = _pack(a, bits) * _pack(b, bits)
    fields = gmpy2.unpack(prod + gmpy2.pack([half] * n, bits), bits)
    fields += [gmpy2.mpz(0)] * (n - len(fields))
    return [int(f) - half for f in fields[:n]]


def _conv(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    if len(a) * len(b) <= _KRONECKER_THRESHOLD or min(len(a), len(b)) < 4:
        return _conv_school(a, b)
    return _conv_kronecker(a, b)


# -- ring operations -------------------------------------------------------


def add(p: Poly, q: Poly) -> Poly:
    if p._den == q._den:
        dp = dq = 1
        den = p._den
    else:
        g = math.gcd(p._den, q._den)
        dp, dq = q._den // g, p._den // g
        den = p._den * dp
    a, b = p._num, q._num
    n = max(len(a), len(b))
    out = [0] * n
    for e, c in enumerate(a):
        out[e] = c * dp
    for e, c in enumerate(b):
        out[e] += c * dq
    return Poly._raw(out, den)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, -q)


def mul(p: Poly, q: Poly) -> Poly:
    return Poly._raw(_conv(p._num, q._num), p._den * q._den)


def _integral_compose(a: Sequence[int], q: Poly, powers: list[Poly]) -> Poly:
    """Evaluate the integer polynomial ``a`` at ``q`` by splitting in halves."""
    n = len(a)
    if n <= 8:
        acc = Poly()
        for c in reversed(a):
            acc = acc * q + c
        return acc
    level = (n - 1).bit_length() - 1  # 2**level < n <= 2**(level+1)
    while len(powers) <= level:
        powers.append(powers[-1] * powers[-1])
    h = 1 << level
    low = _integral_compose(a[:h], q, powers)
    high = _integral_compose(a[h:], q, powers)
    return low + high * powers[level]


def _stride(num: Sequence[int]) -> tuple[int, int]:
    """``(a, e)`` with every nonzero exponent ``= a (mod e)``, ``e`` maximal."""
    exps = [k for k, c in enumerate(num) if c]
    a = exps[0]
    e = 0
    for k in exps[1:]:
        e = math.gcd(e, k - a)
    return a, e


def _deflate(num: Sequence[int], a: int, e: int) -> list[int]:
    return list(num[a::e])


def _inflate(p: Poly, e: int) -> Poly:
    out = [0] * (e * (len(p._num) - 1) + 1)
    out[::e] = p._num
    return Poly._raw(out, p._den)


def compose(p: Poly, q: Poly) -> Poly:
    """Return ``p(q(t))``.

    Sparse exponent patterns are folded first: ``q(t) = r(t^d)`` gives
    ``p(r)(t^d)``, and ``p(x) = x^a s(x^e)`` gives ``q^a s(q^e)``.  Both
    apply to every Chebyshev polynomial of degree at least 2.
    """
    if p.is_zero():
        return Poly()
    if len(p._num) == 1:
        return p
    if len(q._num) > 1:
        a, d = _stride(q._num[1:])
        d = math.gcd(d, a + 1)
        if d > 1:
            r = Poly._raw([q._num[0]] + _deflate(q._num, d, d), q._den)
            return _inflate(compose(p, r), d)
    a, e = _stride(p._num)
    if e > 1:
        s = Poly._raw(_deflate(p._num, a, e), p._den)
        inner = compose(s, q ** e)
        return inner * (q ** a) if a else inner
    out = _integral_compose(p._num, q, [q])
    if p._den != 1:
        out = Poly._raw(list(out._num), out._den * p._den)
    return out


def derivative(p: Poly) -> Poly:
    return Poly._raw([e * c for e, c in enumerate(p._num)][1:], p._den)


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    """Euclidean division over Q: ``p = quotient * q + remainder``."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.degree < q.degree:
        return Poly(), p
    # p = P/dp, q = Q/dq; work with integer vectors scaled by powers of lc(Q)
    P = list(p._num)
    Q = q._num
    lq = Q[-1]
    m = len(Q) - 1
    nq = len(P) - m
    quot = [0] * nq
    # pseudo-division: track a common scaling of P
    scale = 1
    for k in range(nq - 1, -1, -1):
        c = P[k + m]
        if c == 0:
            continue
        g = math.gcd(c, lq)
        mult = lq // g
        f = c // g
        if mult != 1:
            P = [x * mult for x in P]
            quot = [x * mult for x in quot]
            scale *= mult
        quot[k] = f
        for i in range(m + 1):
            P[k + i] -= f * Q[i]
    # true quotient = quot * dq / (scale * dp); remainder = P / (scale * dp)
    quotient = Poly._raw(quot, scale * p._den)
    quotient = Poly._raw(list(quotient._num), quotient._den) * q._den
    remainder = Poly._raw(P[:m], scale * p._den)
    return quotient, remainder


def exact_div(p: Poly, q: Poly) -> Poly:
    """Return ``p / q``; raise :class:`NonzeroRemainder` unless ``q`` divides ``p``."""
    quotient, remainder = divmod_poly(p, q)
    if not remainder.is_zero():
        raise NonzeroRemainder(f"{q!r} does not divide {p!r}")
    return quotient


def eval_rational(p: Poly, x) -> Fraction:
    x = Fraction(x)
    if x.denominator == 1:
        xv = x.numerator
        acc = 0
        for c in reversed(p._num):
            acc = acc * xv + c
        return Fraction(acc, p._den)
    # homogenized Horner: acc = sum c_e n^e d^(deg - e)
    n, d = x.numerator, x.denominator
    acc = 0
    dpow = 1
    for c in reversed(p._num):
        acc = acc * n + c * dpow
        dpow *= d
    if not p._num:
        return Fraction(0)
    return Fraction(acc, p._den * (dpow // d))


# -- Chebyshev families ----------------------------------------------------


class _ChebRecurrence:
    """Three-term recurrence ``P_{n+1} = 2t P_n - P_{n-1}`` with a moving frontier."""

    def __init__(self, first: list[int], second: list[int], first_index: int):
        self._seed = (first, second, first_index)
        self._lock = threading.Lock()
        self._reset()

    def _reset(self):
        first, second, idx = self._seed
        self._prev, self._cur, self._n = first, second, idx + 1

    def get(self, n: int) -> tuple[int, ...]:
        with self._lock:
            first, _, idx = self._seed
            if n == idx:
                return tuple(first)
            if n < self._n - 1:
                self._reset()
            if n == self._n - 1:
                return tuple(self._prev)
            while self._n < n:
                prev, cur = self._prev, self._cur
                nxt = [0] + [2 * c for c in cur]
                for e, c in enumerate(prev):
                    nxt[e] -= c
                self._prev, self._cur, self._n = cur, _trim(nxt), self._n + 1
            return tuple(self._cur)


_T_REC = _ChebRecurrence([1], [0, 1], 0)
_U_REC = _ChebRecurrence([], [1], -1)


@lru_cache(maxsize=512)
def cheb_t(n: int) -> Poly:
    """Chebyshev polynomial of the first kind, ``T_n(cos x) = cos(n x)``."""
    if n < 0:
        raise ValueError("T_n needs n >= 0")
    return Poly._raw(_T_REC.get(n))


@lru_cache(maxsize=512)
def cheb_u(n: int) -> Poly:
    """Chebyshev polynomial of the second kind; ``U_{-1} = 0``."""
    if n < -1:
        raise ValueError("U_n needs n >= -1")
    return Poly._raw(_U_REC.get(n))


def cheb(kind: ChebKind, n: int) -> Poly:
    return cheb_t(n) if kind is ChebKind.FIRST else cheb_u(n)


T = cheb_t
U = cheb_u


def monic_cheb(n: int) -> Poly:
    """``2 T_n(t/2)``: the monic integer rescaling of ``T_n``."""
    if n < 1:
        raise ValueError("monic_cheb needs n >= 1")
    return cheb_t(n).scale_var(Fraction(1, 2)) * 2
