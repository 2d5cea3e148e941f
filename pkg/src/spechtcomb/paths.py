"""Lattice paths attached to column tableaux, their degrees, walls and arcs.

A path with k columns records, after each step a, the vector of column counts
c_a = (c_{a,1}, ..., c_{a,k}).  In the weight lattice this is sum_j c_{a,j} eps_j,
and for a root alpha = eps_r - eps_t (r < t) the shifted pairing is
(c + rho, alpha) = c_r - c_t + t - r.  A wall is a level set of this pairing at a
positive multiple of e.

For two columns a path is stored by its heights pi(a) = c_{a,1} - c_{a,2}; the
walls then sit at heights m*e - 1 for m > 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from . import kernels
from .algebra import ResidueSequence
from .partitions import ColumnTableau, Partition, StandardTableau

CountVector = tuple[int, ...]


def _pairing(c: CountVector, r: int, t: int) -> int:
    """(c + rho, eps_r - eps_t) for 1-based columns r < t."""
    return c[r - 1] - c[t - 1] + t - r


@dataclass(frozen=True)
class PathK:
    """A path in the k-column weight lattice, given by its column-index steps."""

    k: int
    steps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(int(s) for s in self.steps))
        if self.k < 1:
            raise ValueError("k must be positive")
        if any(not 1 <= s <= self.k for s in self.steps):
            raise ValueError(f"steps must be column indices in 1..{self.k}")

    @property
    def n(self) -> int:
        return len(self.steps)

    @cached_property
    def counts(self) -> tuple[CountVector, ...]:
        """c_0, ..., c_n."""
        cur = [0] * self.k
        out = [tuple(cur)]
        for s in self.steps:
            cur[s - 1] += 1
            out.append(tuple(cur))
        return tuple(out)

    def __getitem__(self, a: int) -> CountVector:
        return self.counts[a]

    def is_dominant(self) -> bool:
        return all(c[j] >= c[j + 1] for c in self.counts for j in range(self.k - 1))

    def residues(self, e: int) -> ResidueSequence:
        """i_a = j - c_{a,j} mod e where step a goes into column j."""
        return ResidueSequence(
            tuple((j - self.counts[a][j - 1]) % e for a, j in enumerate(self.steps, 1)), e
        )

    def to_path2(self) -> Path2:
        if self.k > 2:
            raise ValueError("only paths with at most two columns convert to Path2")
        return Path2.from_steps(tuple(1 if s == 1 else -1 for s in self.steps))

    def to_json(self) -> dict:
        return {"k": self.k, "steps": list(self.steps)}


@dataclass(frozen=True)
class Path2:
    """A two-column path stored by its heights pi(0) = 0, pi(1), ..., pi(n)."""

    heights: tuple[int, ...]

    def __post_init__(self):
        h = tuple(int(v) for v in self.heights)
        if not h or h[0] != 0:
            raise ValueError("a path starts at height 0")
        if any(abs(h[a + 1] - h[a]) != 1 for a in range(len(h) - 1)):
            raise ValueError("consecutive heights must differ by one")
        object.__setattr__(self, "heights", h)

    @classmethod
    def from_steps(cls, steps) -> Path2:
        return cls(kernels.heights_from_steps(tuple(steps)))

    @classmethod
    def from_word(cls, word: str) -> Path2:
        """Parse a step word over {+,-} or over {1,2} (column indices)."""
        word = word.strip().replace(" ", "")
        table = {"+": 1, "-": -1, "1": 1, "2": -1}
        try:
            return cls.from_steps(tuple(table[ch] for ch in word))
        except KeyError as exc:
            raise ValueError(f"bad step character {exc.args[0]!r}; use +/- or 1/2") from None

    @property
    def n(self) -> int:
        return len(self.heights) - 1

    @property
    def end(self) -> int:
        return self.heights[-1]

    def __getitem__(self, a: int) -> int:
        return self.heights[a]

    def __len__(self) -> int:
        return len(self.heights)

    @property
    def steps(self) -> tuple[int, ...]:
        h = self.heights
        return tuple(h[a + 1] - h[a] for a in range(len(h) - 1))

    def word(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.steps)

    def column_word(self) -> str:
        return "".join("1" if s > 0 else "2" for s in self.steps)

    def is_dominant(self) -> bool:
        return kernels.is_dominant(self.heights)

    def shape(self) -> Partition:
        """(2^x, 1^y) with y = pi(n); defined for dominant paths."""
        if (self.n - self.end) % 2 or self.end < 0:
            raise ValueError("endpoint does not determine a partition")
        return Partition.two_column((self.n - self.end) // 2, self.end)

    def to_pathk(self) -> PathK:
        return PathK(2, tuple(1 if s > 0 else 2 for s in self.steps))

    def residues(self, e: int) -> ResidueSequence:
        return self.to_pathk().residues(e)

    def segment(self, r: int, s: int) -> Segment:
        return Segment(self, r, s)

    def to_json(self) -> dict:
        return {"step_word": self.word(), "heights": list(self.heights), "endpoint": self.end}


@dataclass(frozen=True)
class Segment:
    """The restriction pi[r, s] of a two-column path."""

    path: Path2
    r: int
    s: int

    def __post_init__(self):
        if not 0 <= self.r <= self.s <= self.path.n:
            raise ValueError("segment bounds out of range")

    @property
    def heights(self) -> tuple[int, ...]:
        return self.path.heights[self.r : self.s + 1]

    def degree(self, e: int) -> int:
        return kernels.degree2(self.heights, e)


def path_from_tableau(t: ColumnTableau, k: int | None = None) -> PathK:
    """The path whose a-th step goes into the column containing a."""
    if k is None:
        k = max(t.cols, default=1)
    return PathK(k, t.cols)


def path2_from_tableau(t: ColumnTableau) -> Path2:
    if any(c > 2 for c in t.cols):
        raise ValueError("tableau has more than two columns")
    return Path2.from_steps(tuple(1 if c == 1 else -1 for c in t.cols))


def tableau_from_path(pi: PathK | Path2) -> ColumnTableau:
    """The column tableau with a in column j when step a goes into column j."""
    cols = pi.to_pathk().steps if isinstance(pi, Path2) else pi.steps
    if isinstance(pi, Path2) and not pi.is_dominant():
        return ColumnTableau(cols)
    if isinstance(pi, PathK) and not pi.is_dominant():
        return ColumnTableau(cols)
    return StandardTableau(cols)


def _as_counts_pair(u, v) -> tuple[CountVector, CountVector]:
    """Count vectors for a step; integers are read as two-column heights."""
    if isinstance(u, int) and isinstance(v, int):
        if v == u + 1:
            return (u, 0), (v, 0)
        if v == u - 1:
            return (u, 0), (u, 1)
        raise ValueError("heights of a step must differ by one")
    return tuple(u), tuple(v)


def deg_step(u, v, e: int) -> int:
    """Degree of a single step u -> v between dominant weights.

    u and v are column-count vectors, or integers read as two-column heights.
    Each root alpha contributes +1 when u is on a wall of alpha and v is on its
    lower side, and -1 when v is on the wall and u is above it.
    """
    u, v = _as_counts_pair(u, v)
    if len(u) != len(v):
        raise ValueError("weights must have the same number of columns")
    k = len(u)
    diff = sorted(b - a for a, b in zip(u, v))
    if diff != [0] * (k - 1) + [1]:
        raise ValueError("v - u must be a single basis vector")
    for c in (u, v):
        if any(c[j] < c[j + 1] for j in range(k - 1)):
            raise ValueError("weights must be dominant")
    total = 0
    for r, t in combinations(range(1, k + 1), 2):
        pu, pv = _pairing(u, r, t), _pairing(v, r, t)
        if pu > 0 and pu % e == 0 and pv < pu:
            total += 1
        elif pv > 0 and pv % e == 0 and pu > pv:
            total -= 1
    return total


def deg_path(pi: PathK | Path2, e: int) -> int:
    """Degree of a dominant path: the sum of its step degrees."""
    if isinstance(pi, Path2):
        if not pi.is_dominant():
            raise ValueError("degree is defined only for dominant paths")
        return kernels.degree2(pi.heights, e)
    if not pi.is_dominant():
        raise ValueError("degree is defined only for dominant paths")
    counts = pi.counts
    return sum(deg_step(counts[a], counts[a + 1], e) for a in range(pi.n))


def reflect_tail(
    pi: PathK | Path2,
    a: int,
    alpha: tuple[int, int] = (1, 2),
    m: int | None = None,
    e: int | None = None,
):
    """Reflect the steps after position a across the wall of alpha through pi(a).

    alpha = (r, t) stands for eps_r - eps_t.  When m and e are both given, pi(a)
    must lie on the wall (c + rho, alpha) = m*e.  Reflecting swaps the columns r
    and t in every later step, which keeps the residue sequence unchanged.
    """
    r, t = alpha
    if not 1 <= r < t:
        raise ValueError("alpha must be (r, t) with r < t")
    if not 0 <= a <= len(pi.steps):
        raise ValueError("position out of range")
    k = 2 if isinstance(pi, Path2) else pi.k
    if t > k:
        raise ValueError("root does not fit the number of columns")
    kpath = pi.to_pathk() if isinstance(pi, Path2) else pi
    if m is not None and e is not None and _pairing(kpath.counts[a], r, t) != m * e:
        raise ValueError("pi(a) is not on the requested wall")
    swap = {r: t, t: r}
    out = PathK(kpath.k, kpath.steps[:a] + tuple(swap.get(s, s) for s in kpath.steps[a:]))
    return out.to_path2() if isinstance(pi, Path2) else out


def wall_level(height: int, e: int) -> int:
    """m when height = m*e - 1 with m > 0, else 0."""
    return (height + 1) // e if kernels.on_wall(height, e) else 0


def wall_hits(pi: Path2, e: int) -> tuple[int, ...]:
    """B(pi): positions a with pi(a) on a wall."""
    return kernels.wall_hits(pi.heights, e)


@dataclass(frozen=True)
class Arc:
    """A segment between consecutive wall visits at the same wall."""

    r: int
    s: int
    wall: int
    sign: int

    def to_json(self) -> dict:
        return {"r": self.r, "s": self.s, "wall": self.wall, "sign": "+" if self.sign > 0 else "-"}


def arcs(pi: Path2, e: int) -> list[Arc]:
    """Positive arcs lie above their wall, negative arcs below."""
    hits = wall_hits(pi, e)
    out = []
    for r, s in zip(hits, hits[1:]):
        if pi[r] == pi[s]:
            out.append(Arc(r, s, wall_level(pi[r], e), 1 if pi[r + 1] > pi[r] else -1))
    return out


def arc_degree(pi: Path2, e: int, r_flag: int) -> int:
    """|negative arcs| - |positive arcs| + r_flag, the degree of a path whose regularisation flag is r_flag."""
    neg, pos = kernels.arc_counts(pi.heights, e)
    return neg - pos + r_flag


def _valuation(m: int, p: int) -> int:
    if p < 2 or m == 0:
        return 0
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def render_ascii(pi: Path2, e: int, p: int = 0, width: int | None = None) -> str:
    """Draw the path one step per line with walls as vertical rules.

    Wall m is drawn as ':' for p-adic valuation 0 of m, '|' for 1 and '#' beyond
    (all '|' when p = 0).  Each line ends with the step degree mark.
    """
    if width is None:
        width = max(pi.heights) + 2
    wall_char = {}
    for h in range(width):
        m = wall_level(h, e)
        if m:
            v = _valuation(m, p)
            wall_char[h] = "|" if p == 0 else (":" if v == 0 else "|" if v == 1 else "#")
    lines = []
    axis = "".join(wall_char.get(h, " ") for h in range(width))
    lines.append(f"{'a':>3} {axis}")
    for a, v in enumerate(pi.heights):
        row = [wall_char.get(h, " ") for h in range(width)]
        row[v] = "o"
        mark = ""
        if a > 0:
            d = kernels.degree2(pi.heights[a - 1 : a + 1], e)
            mark = {1: " +", -1: " -"}.get(d, "")
        lines.append(f"{a:>3} {''.join(row)}{mark}")
    return "\n".join(lines)


def residue_sequence_from_path(pi: PathK | Path2, e: int) -> ResidueSequence:
    """i_a = j - c_{a,j} mod e where step a goes into column j."""
    return pi.residues(e)
