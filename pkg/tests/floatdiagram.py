"""Floating-point knot diagrams of ``(T_i, T_j, T_k)`` for cross-checking.

Independent of the exact pipeline: crossings are found by intersecting a
polyline sampled uniformly in ``theta`` (``t = cos theta``).
"""

import math
from collections import defaultdict

from chebknots.diagram import GaussEntry, SignedGaussCode


def _seg_hit(p, q, r, s):
    d = (q[0] - p[0]) * (s[1] - r[1]) - (q[1] - p[1]) * (s[0] - r[0])
    if d == 0:
        return None
    a = ((r[0] - p[0]) * (s[1] - r[1]) - (r[1] - p[1]) * (s[0] - r[0])) / d
    b = ((r[0] - p[0]) * (q[1] - p[1]) - (r[1] - p[1]) * (q[0] - p[0])) / d
    if 0 <= a < 1 and 0 <= b < 1:
        return a, b
    return None


def float_gauss_code(i, j, k, per_unit=300):
    n = per_unit * (i + j)
    th = [math.pi * s / n for s in range(n + 1)]
    pts = [(math.cos(i * a), math.cos(j * a)) for a in th]
    h = 4 * math.pi * max(i, j) / n
    grid = defaultdict(list)
    for s in range(n):
        (x0, y0), (x1, y1) = pts[s], pts[s + 1]
        for cx in range(int(min(x0, x1) // h), int(max(x0, x1) // h) + 1):
            for cy in range(int(min(y0, y1) // h), int(max(y0, y1) // h) + 1):
                grid[(cx, cy)].append(s)
    hits = set()
    for segs in grid.values():
        for u in range(len(segs)):
            for w in range(u + 1, len(segs)):
                s, r = sorted((segs[u], segs[w]))
                if r - s < 2 or (s, r) in hits:
                    continue
                if _seg_hit(pts[s], pts[s + 1], pts[r], pts[r + 1]):
                    hits.add((s, r))
    events = []
    for label, (s, r) in enumerate(sorted(hits), 1):
        a, b = _seg_hit(pts[s], pts[s + 1], pts[r], pts[r + 1])
        ta, tb = th[s] + a * (th[s + 1] - th[s]), th[r] + b * (th[r + 1] - th[r])
        za, zb = math.cos(k * ta), math.cos(k * tb)

        def tangent(t):
            return (i * math.sin(i * t) / math.sin(t), j * math.sin(j * t) / math.sin(t))

        a_over = za > zb
        vo, vu = (tangent(ta), tangent(tb)) if a_over else (tangent(tb), tangent(ta))
        sign = 1 if vo[0] * vu[1] - vo[1] * vu[0] > 0 else -1
        # parameter t = cos(theta) increases as theta decreases
        events.append((-ta, GaussEntry(label, a_over, sign)))
        events.append((-tb, GaussEntry(label, not a_over, sign)))
    events.sort(key=lambda e: e[0])
    return SignedGaussCode(tuple(e for _, e in events)), len(hits)
