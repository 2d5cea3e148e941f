# cython: language_level=3
"""Compiled kernels on two-column paths; same contract as _pykernels."""

from libc.stdlib cimport malloc, free


cdef inline bint _on_wall(long v, long e):
    return v >= e - 1 and (v + 1) % e == 0


cdef long* _load(tuple h, Py_ssize_t* length) except NULL:
    cdef Py_ssize_t n = len(h)
    cdef long* buf = <long*> malloc((n + 1) * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = h[i]
    length[0] = n
    return buf


def heights_from_steps(steps):
    cdef long cur = 0
    out = [0]
    for s in steps:
        if s != 1 and s != -1:
            raise ValueError("steps must be +1 or -1")
        cur += s
        out.append(cur)
    return tuple(out)


def is_dominant(h):
    cdef Py_ssize_t n
    cdef long* b = _load(tuple(h), &n)
    cdef Py_ssize_t i
    cdef bint ok = True
    for i in range(n):
        if b[i] < 0:
            ok = False
            break
    free(b)
    return ok


def on_wall(long v, long e):
    return _on_wall(v, e)


def degree2(h, long e):
    cdef Py_ssize_t n
    cdef long* b = _load(tuple(h), &n)
    cdef long d = 0
    cdef Py_ssize_t a
    for a in range(n - 1):
        if b[a + 1] < b[a]:
            if _on_wall(b[a], e):
                d += 1
            elif _on_wall(b[a + 1], e):
                d -= 1
    free(b)
    return d


def wall_hits(h, long e):
    cdef Py_ssize_t n
    cdef long* b = _load(tuple(h), &n)
    cdef Py_ssize_t a
    out = []
    for a in range(n):
        if _on_wall(b[a], e):
            out.append(a)
    free(b)
    return tuple(out)


cdef Py_ssize_t _last_wall(long* b, Py_ssize_t n, long e):
    cdef Py_ssize_t a
    for a in range(n - 1, -1, -1):
        if _on_wall(b[a], e):
            return a
    return -1


def last_wall(h, long e):
    cdef Py_ssize_t n
    cdef long* b = _load(tuple(h), &n)
    cdef Py_ssize_t a = _last_wall(b, n, e)
    free(b)
    return a


def reg(h, long e):
    h = tuple(h)
    cdef Py_ssize_t n
    cdef long* b = _load(h, &n)
    cdef Py_ssize_t a = _last_wall(b, n, e)
    cdef long w
    cdef Py_ssize_t c
    if a < 0 or b[n - 1] >= b[a]:
        free(b)
        return h, 0
    w = b[a]
    out = list(h[: a + 1])
    for c in range(a + 1, n):
        out.append(2 * w - b[c])
    free(b)
    return tuple(out), 1


def arc_counts(h, long e):
    cdef Py_ssize_t n
    cdef long* b = _load(tuple(h), &n)
    cdef long neg = 0, pos = 0
    cdef Py_ssize_t a, prev = -1
    for a in range(n):
        if _on_wall(b[a], e):
            if prev >= 0 and b[prev] == b[a]:
                if b[prev + 1] > b[prev]:
                    pos += 1
                else:
                    neg += 1
            prev = a
    free(b)
    return neg, pos


def reflect_arcs(h, long e, Py_ssize_t lo, Py_ssize_t hi):
    cdef Py_ssize_t n
    cdef long* b = _load(tuple(h), &n)
    cdef long* o = <long*> malloc((n + 1) * sizeof(long))
    cdef Py_ssize_t a, c, prev = -1
    for a in range(n):
        o[a] = b[a]
    for a in range(n):
        if _on_wall(b[a], e):
            if prev >= 0 and prev >= lo and a <= hi and b[prev] == b[a]:
                for c in range(prev + 1, a):
                    o[c] = 2 * b[a] - b[c]
            prev = a
    out = tuple([o[a] for a in range(n)])
    free(b)
    free(o)
    return out


def dominant_paths(int n, long end=-1):
    cdef long* h = <long*> malloc((n + 1) * sizeof(long))
    cdef int a = 0
    cdef signed char* choice = <signed char*> malloc((n + 1) * sizeof(signed char))
    cdef long v
    out = []
    h[0] = 0
    if n == 0:
        if end < 0 or end == 0:
            out.append((0,))
        free(h)
        free(choice)
        return out
    # iterative depth-first search; choice[a] is 0 (untried), 1 (tried up), 2 (tried both)
    choice[0] = 0
    while a >= 0:
        if a == n:
            if end < 0 or h[n] == end:
                out.append(tuple([h[i] for i in range(n + 1)]))
            a -= 1
            continue
        if choice[a] == 0:
            choice[a] = 1
            v = h[a] + 1
        elif choice[a] == 1:
            choice[a] = 2
            v = h[a] - 1
        else:
            a -= 1
            continue
        if v < 0:
            continue
        if end >= 0 and abs(v - end) > n - a - 1:
            continue
        h[a + 1] = v
        a += 1
        if a < n:
            choice[a] = 0
    free(h)
    free(choice)
    return out
