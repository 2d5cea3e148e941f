"""Pure-Python kernels on two-column paths.

A path is a tuple of heights h[0..n] with h[0] = 0 and |h[a+1] - h[a]| = 1.
Walls for modulus e sit at heights m*e - 1 with m > 0.
"""
from __future__ import annotations


def heights_from_steps(steps):
    h = [0]
    for s in steps:
        if s != 1 and s != -1:
            raise ValueError("steps must be +1 or -1")
        h.append(h[-1] + s)
    return tuple(h)


def is_dominant(h):
    return all(v >= 0 for v in h)


def on_wall(v, e):
    return v >= e - 1 and (v + 1) % e == 0


def degree2(h, e):
    """Sum of step degrees: +1 stepping down off a wall, -1 stepping down onto one."""
    d = 0
    for a in range(len(h) - 1):
        u = h[a]
        v = h[a + 1]
        if v < u:
            if u >= e - 1 and (u + 1) % e == 0:
                d += 1
            elif v >= e - 1 and (v + 1) % e == 0:
                d -= 1
    return d


def wall_hits(h, e):
    return tuple(a for a, v in enumerate(h) if v >= e - 1 and (v + 1) % e == 0)


def last_wall(h, e):
    """Position of the last wall visit, or -1."""
    for a in range(len(h) - 1, -1, -1):
        v = h[a]
        if v >= e - 1 and (v + 1) % e == 0:
            return a
    return -1


def reg(h, e):
    """Reflect the tail after the last wall visit if it ends below that wall.

    Returns (new heights, 1) when a reflection happened, else (h, 0).
    """
    a = last_wall(h, e)
    if a < 0:
        return h, 0
    w = h[a]
    if h[-1] >= w:
        return h, 0
    return h[: a + 1] + tuple(2 * w - v for v in h[a + 1 :]), 1


def arc_counts(h, e):
    """(negative arcs, positive arcs) between consecutive wall visits of equal height."""
    hits = wall_hits(h, e)
    neg = pos = 0
    for i in range(len(hits) - 1):
        r, s = hits[i], hits[i + 1]
        if h[r] == h[s]:
            if h[r + 1] > h[r]:
                pos += 1
            else:
                neg += 1
    return neg, pos


def reflect_arcs(h, e, lo, hi):
    """Reflect every arc lying inside [lo, hi] across its wall."""
    hits = wall_hits(h, e)
    out = list(h)
    for i in range(len(hits) - 1):
        r, s = hits[i], hits[i + 1]
        if r >= lo and s <= hi and h[r] == h[s]:
            w2 = 2 * h[r]
            for c in range(r + 1, s):
                out[c] = w2 - h[c]
    return tuple(out)


def dominant_paths(n, end=-1):
    """All dominant paths of length n (ending at end if end >= 0), '+' before '-'."""
    out = []
    h = [0] * (n + 1)

    def rec(a):
        cur = h[a]
        if a == n:
            if end < 0 or cur == end:
                out.append(tuple(h))
            return
        left = n - a
        for v in (cur + 1, cur - 1):
            if v < 0:
                continue
            if end >= 0 and abs(v - end) > left - 1:
                continue
            h[a + 1] = v
            rec(a + 1)

    rec(0)
    return out
