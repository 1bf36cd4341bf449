"""Certified sign decisions by interval evaluation with precision doubling.

Backed by mpmath's interval context, which rounds outward.
"""

from __future__ import annotations

from typing import Optional

from mpmath.ctx_iv import MPIntervalContext
from mpmath.libmp import mpf_gt, mpf_lt

from .poly import Poly

START_PREC = 64
MAX_PREC = 1 << 14


def _context(prec: int) -> MPIntervalContext:
    ctx = MPIntervalContext()
    ctx.prec = prec
    return ctx


def cos_interval(ctx: MPIntervalContext, k: int, N: int):
    return ctx.cos(ctx.pi * k / N)


def eval_numerator(ctx: MPIntervalContext, p: Poly, x):
    """Interval for ``den(p) * p(x)``; the positive denominator never changes a sign."""
    acc = ctx.mpf(0)
    for c in reversed(p.numerators):
        acc = acc * x + c
    return acc


def interval_sign(value) -> Optional[int]:
    lo, hi = value._mpi_
    if mpf_gt(lo, (0, 0, 0, 0)):
        return 1
    if mpf_lt(hi, (0, 0, 0, 0)):
        return -1
    return None


def compare_at_angles(p: Poly, a: tuple[int, int], b: tuple[int, int], max_prec: int = MAX_PREC) -> Optional[int]:
    """Sign of ``p(cos(a)) - p(cos(b))`` for angles ``k pi / N`` given as ``(k, N)``.

    Returns None when the two values cannot be separated at ``max_prec`` bits.
    """
    prec = START_PREC
    while prec <= max_prec:
        ctx = _context(prec)
        va = eval_numerator(ctx, p, cos_interval(ctx, *a))
        vb = eval_numerator(ctx, p, cos_interval(ctx, *b))
        s = interval_sign(va - vb)
        if s is not None:
            return s
        prec *= 2
    return None


def sign_at_angle(p: Poly, a: tuple[int, int], max_prec: int = MAX_PREC) -> Optional[int]:
    prec = START_PREC
    while prec <= max_prec:
        ctx = _context(prec)
        s = interval_sign(eval_numerator(ctx, p, cos_interval(ctx, *a)))
        if s is not None:
            return s
        prec *= 2
    return None
