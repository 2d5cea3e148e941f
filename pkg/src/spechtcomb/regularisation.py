"""Regularisation maps on two-column paths and tableaux.

reg_e reflects the tail of a path after its last wall visit when the path ends
below that wall.  reg_{e,p} applies reg_{e p^z} for the largest z that still
moves the path, repeatedly, until nothing moves.  All maps accept either a
Path2 or a two-column StandardTableau and return the same kind of object.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from . import kernels
from .paths import Path2, arc_degree, deg_path, path2_from_tableau, render_ascii, tableau_from_path
from .partitions import Partition, StandardTableau, enumerate_std


def ep_compatible(e: int, p: int) -> bool:
    """Whether (e, p) satisfies p = 0, p = e, or gcd(p, e) = 1 (with p >= 2)."""
    if e < 2 or p < 0 or p == 1:
        return False
    return p == 0 or p == e or gcd(p, e) == 1


def _check_ep(e: int, p: int) -> None:
    if e < 2:
        raise ValueError("e must be at least 2")
    if p < 0 or p == 1:
        raise ValueError("p must be 0 or at least 2")


def _to_path(obj) -> tuple[Path2, bool]:
    if isinstance(obj, Path2):
        return obj, False
    if isinstance(obj, StandardTableau):
        return path2_from_tableau(obj), True
    raise TypeError("expected a Path2 or a StandardTableau")


def _back(path: Path2, was_tableau: bool):
    if was_tableau:
        t = tableau_from_path(path)
        if not isinstance(t, StandardTableau):
            raise ValueError("result is not a standard tableau")
        return t
    return path


@dataclass(frozen=True)
class RegResult:
    """Outcome of a single reg_e: the output, the flag r_e, and where it reflected."""

    output: Path2
    r: int
    position: int | None
    wall: int | None


def reg_e(obj, e: int) -> RegResult:
    """reg_e of a path (or of a tableau's path), with its flag and reflection wall."""
    if e < 2:
        raise ValueError("e must be at least 2")
    pi, _ = _to_path(obj)
    if not pi.is_dominant():
        raise ValueError("regularisation is defined on dominant paths")
    h, r = kernels.reg(pi.heights, e)
    if not r:
        return RegResult(pi, 0, None, None)
    a = kernels.last_wall(pi.heights, e)
    return RegResult(Path2(h), 1, a, (pi[a] + 1) // e)


def apply_reg_e(obj, e: int):
    """reg_e returning the same kind of object it was given."""
    pi, was_tab = _to_path(obj)
    return _back(reg_e(pi, e).output, was_tab)


def r_e(obj, e: int) -> int:
    """1 if reg_e moves the path, else 0."""
    return reg_e(obj, e).r


@dataclass(frozen=True)
class RegStage:
    z: int
    path: Path2

    def to_json(self, e: int) -> dict:
        return {
            "z": self.z,
            "step_word": self.path.word(),
            "endpoint": self.path.end,
            "degree": deg_path(self.path, e),
        }


@dataclass(frozen=True)
class RegChain:
    """The sequence of reg_{e p^z} stages taken by reg_{e,p}."""

    source: Path2
    e: int
    p: int
    stages: tuple[RegStage, ...] = field(default=())

    @property
    def output(self) -> Path2:
        return self.stages[-1].path if self.stages else self.source

    @property
    def zset(self) -> tuple[int, ...]:
        """The regularisation set Z, strictly decreasing."""
        return tuple(st.z for st in self.stages)

    @property
    def r(self) -> int:
        """r_e of the source path."""
        return kernels.reg(self.source.heights, self.e)[1]

    @property
    def extrapolated(self) -> bool:
        return not ep_compatible(self.e, self.p)

    def to_json(self) -> list[dict]:
        return [st.to_json(self.e) for st in self.stages]


def _max_z(h: tuple[int, ...], e: int, p: int) -> int:
    """Largest z whose first wall e p^z - 1 is at most max(h); -1 if none."""
    top = max(h)
    if top < e - 1:
        return -1
    z, mod = 0, e
    while mod * p - 1 <= top:
        mod *= p
        z += 1
    return z


def reg_ep_heights(h: tuple[int, ...], e: int, p: int) -> tuple[tuple[int, ...], tuple[tuple[int, tuple[int, ...]], ...]]:
    """Core of reg_{e,p} on raw heights: (output, ((z, heights after stage), ...))."""
    if p == 0:
        out, r = kernels.reg(h, e)
        return out, (((0, out),) if r else ())
    stages = []
    while True:
        zmax = _max_z(h, e, p)
        moved = False
        for z in range(zmax, -1, -1):
            new, r = kernels.reg(h, e * p**z)
            if r:
                h = new
                stages.append((z, h))
                moved = True
                break
        if not moved:
            return h, tuple(stages)


def reg_ep(obj, e: int, p: int) -> RegChain:
    """reg_{e,p} of a path (or of a tableau's path) as the chain of its stages."""
    _check_ep(e, p)
    pi, _ = _to_path(obj)
    if not pi.is_dominant():
        raise ValueError("regularisation is defined on dominant paths")
    _, stages = reg_ep_heights(pi.heights, e, p)
    return RegChain(pi, e, p, tuple(RegStage(z, Path2(h)) for z, h in stages))


def apply_reg_ep(obj, e: int, p: int):
    """reg_{e,p} returning the same kind of object it was given."""
    pi, was_tab = _to_path(obj)
    return _back(reg_ep(pi, e, p).output, was_tab)


def is_regular(obj, e: int, p: int) -> bool:
    pi, _ = _to_path(obj)
    return reg_ep_heights(pi.heights, e, p)[0] == pi.heights


def dstd(lam: Partition, e: int, p: int) -> list[StandardTableau]:
    """DStd_{e,p}(lam): tableaux fixed by reg_{e,p}, in column-word order."""
    _check_ep(e, p)
    return [t for t in enumerate_std(lam) if is_regular(t, e, p)]


def std_by_target(lam: Partition, e: int, p: int) -> dict[Partition, list[StandardTableau]]:
    """Std_{e,p,mu}(lam) for every mu, keyed by the shape of reg_{e,p}(t)."""
    _check_ep(e, p)
    out: dict[Partition, list[StandardTableau]] = {}
    for t in enumerate_std(lam):
        mu = apply_reg_ep(t, e, p).shape
        out.setdefault(mu, []).append(t)
    return out


def preimage_reg_e(s, e: int) -> list:
    """All dominant paths (or tableaux) t of the same length with reg_e(t) = s."""
    pi, was_tab = _to_path(s)
    if not pi.is_dominant():
        raise ValueError("expected a dominant path")
    if reg_e(pi, e).r:
        return []
    out = [pi]
    y = pi.end
    m, j = (y + 1) // e, (y + 1) % e
    if y >= e and j > 0:
        a = kernels.last_wall(pi.heights, e)
        w = pi[a]
        out.append(Path2(pi.heights[: a + 1] + tuple(2 * w - v for v in pi.heights[a + 1 :])))
    return [_back(x, was_tab) for x in out]


def w_tuple(zset: tuple[int, ...], eta, e: int, p: int) -> tuple[int, ...]:
    """w_i: the last position where eta visits a wall of modulus e p^{z_i} (0 if none)."""
    path, _ = _to_path(eta)
    out = []
    for z in zset:
        a = kernels.last_wall(path.heights, e * p**z)
        out.append(max(a, 0))
    return tuple(out)


def rho_Z(eta, zset: tuple[int, ...], e: int, p: int):
    """Reflect the arcs of eta lying in [w_i, w_{i+1}] for odd i.

    Here w_0 = 0 and w_{h+1} is the last wall visit of eta.  For p = 0 this is
    the identity.
    """
    path, was_tab = _to_path(eta)
    if p == 0 or not zset:
        return _back(path, was_tab)
    hits = kernels.wall_hits(path.heights, e)
    w = (0,) + w_tuple(zset, path, e, p) + ((hits[-1] if hits else 0),)
    h = path.heights
    for i in range(1, len(w) - 1, 2):
        h = kernels.reflect_arcs(h, e, w[i], w[i + 1])
    return _back(Path2(h), was_tab)


def reg_prime(obj, e: int, p: int):
    """rho_Z composed with reg_{e,p}, where Z is the regularisation set of the input."""
    pi, was_tab = _to_path(obj)
    chain = reg_ep(pi, e, p)
    return _back(rho_Z(chain.output, chain.zset, e, p), was_tab)


def iota(obj, e: int):
    """Reflect every arc across its wall."""
    pi, was_tab = _to_path(obj)
    return _back(Path2(kernels.reflect_arcs(pi.heights, e, 0, pi.n)), was_tab)


def arc_formula_degree(obj, e: int) -> int:
    """Degree from arcs: |negative| - |positive| + r_e."""
    pi, _ = _to_path(obj)
    return arc_degree(pi, e, kernels.reg(pi.heights, e)[1])


@lru_cache(maxsize=256)
def regularised_paths(n: int, e: int, p: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]:
    """For every dominant path of length n: (heights, reg_{e,p} heights, r_e)."""
    _check_ep(e, p)
    out = []
    for h in kernels.dominant_paths(n):
        reg_h, _ = reg_ep_heights(h, e, p)
        out.append((h, reg_h, kernels.reg(h, e)[1]))
    return tuple(out)


def render_chain(chain: RegChain) -> str:
    """ASCII drawings of each stage of a regularisation chain."""
    e, p = chain.e, chain.p
    width = max(max(st.path.heights) for st in chain.stages) + 2 if chain.stages else None
    if width is not None:
        width = max(width, max(chain.source.heights) + 2)
    blocks = [f"input  deg={deg_path(chain.source, e)}\n" + render_ascii(chain.source, e, p, width)]
    for st in chain.stages:
        blocks.append(
            f"after reg at modulus {e * (p**st.z if p else 1)} (z={st.z})  deg={deg_path(st.path, e)}\n"
            + render_ascii(st.path, e, p, width)
        )
    return "\n\n".join(blocks)
