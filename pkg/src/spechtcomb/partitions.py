"""Partitions, nodes, standard tableaux, residues and the tableau degree function."""
from __future__ import annotations

import re
from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import cached_property

from .algebra import Residue, ResidueSequence

Node = tuple[int, int]


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            parts = tuple(p for p in parts if p != 0)
            if any(p < 0 for p in parts):
                raise ValueError("partition parts must be non-negative")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def two_column(cls, x: int, y: int) -> Partition:
        """The partition (2^x, 1^y)."""
        if x < 0 or y < 0:
            raise ValueError("x and y must be non-negative")
        return cls((2,) * x + (1,) * y)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse "2^4,1^21", "4,3,1" or "()" style input."""
        text = text.strip().strip("()[]").replace(" ", "")
        if text in ("", "0", "-"):
            return cls(())
        parts: list[int] = []
        for token in text.split(","):
            if not token:
                continue
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", token)
            if m is None:
                raise ValueError(f"cannot parse partition token {token!r}")
            part, mult = int(m.group(1)), int(m.group(2) or 1)
            parts.extend([part] * mult)
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, idx: int) -> int:
        return self.parts[idx]

    def part(self, row: int) -> int:
        """lambda_row with 1-based rows, zero beyond the last row."""
        return self.parts[row - 1] if 1 <= row <= len(self.parts) else 0

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= c) for c in range(1, self.parts[0] + 1)))

    def nodes(self) -> list[Node]:
        return [(a, b) for a, p in enumerate(self.parts, 1) for b in range(1, p + 1)]

    def addable_nodes(self) -> list[Node]:
        out = []
        for a in range(1, len(self.parts) + 2):
            b = self.part(a) + 1
            if a == 1 or self.part(a - 1) >= b:
                out.append((a, b))
        return out

    def removable_nodes(self) -> list[Node]:
        return [(a, p) for a, p in enumerate(self.parts, 1) if self.part(a + 1) < p]

    def add_node(self, row: int) -> Partition:
        parts = list(self.parts) + [0]
        parts[row - 1] += 1
        return Partition(tuple(parts))

    def remove_node(self, row: int) -> Partition:
        parts = list(self.parts)
        parts[row - 1] -= 1
        return Partition(tuple(parts))

    def is_two_column(self) -> bool:
        return all(p <= 2 for p in self.parts)

    @property
    def xy(self) -> tuple[int, int]:
        """(x, y) with self = (2^x, 1^y); only for two-column partitions."""
        if not self.is_two_column():
            raise ValueError(f"{self} has more than two columns")
        x = sum(1 for p in self.parts if p == 2)
        return x, len(self.parts) - x

    def dominates(self, other: Partition) -> bool:
        """True when other is dominated by self (partial sums of self are >= those of other)."""
        if self.n != other.n:
            return False
        s1 = s2 = 0
        for i in range(max(len(self), len(other))):
            s1 += self.part(i + 1)
            s2 += other.part(i + 1)
            if s1 < s2:
                return False
        return True

    def is_e_restricted(self, e: int) -> bool:
        return all(self.part(r) - self.part(r + 1) < e for r in range(1, len(self.parts) + 1))

    def __str__(self) -> str:
        if not self.parts:
            return "()"
        groups: list[str] = []
        i = 0
        while i < len(self.parts):
            j = i
            while j < len(self.parts) and self.parts[j] == self.parts[i]:
                j += 1
            groups.append(str(self.parts[i]) if j - i == 1 else f"{self.parts[i]}^{j - i}")
            i = j
        return ",".join(groups)

    def __repr__(self) -> str:
        return f"Partition({self})"


def residue(node: Node, e: int) -> Residue:
    """Residue (b - a) mod e of the node in row a, column b."""
    a, b = node
    return Residue((b - a) % e, e)


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for part in range(min(rest, cap), 0, -1):
            for tail in rec(rest - part, part):
                yield (part,) + tail

    for parts in rec(n, max_part):
        yield Partition(parts)


def partitions_two_column(n: int) -> list[Partition]:
    """Par_{<=2}(n) ordered by descending number of twos."""
    return [Partition.two_column(x, n - 2 * x) for x in range(n // 2, -1, -1)]


def restricted_two_column(n: int, e: int) -> list[Partition]:
    return [lam for lam in partitions_two_column(n) if lam.is_e_restricted(e)]


@dataclass(frozen=True)
class ColumnTableau:
    """A filling of columns by 1..n, increasing down each column.

    It is encoded by its column word: entry a sits in column cols[a-1], directly
    below the earlier entries of that column.
    """

    cols: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cols", tuple(int(c) for c in self.cols))
        if any(c < 1 for c in self.cols):
            raise ValueError("column indices are 1-based")

    @property
    def n(self) -> int:
        return len(self.cols)

    @cached_property
    def positions(self) -> tuple[Node, ...]:
        """Node (row, column) of each entry 1..n."""
        depth: dict[int, int] = {}
        out = []
        for c in self.cols:
            depth[c] = depth.get(c, 0) + 1
            out.append((depth[c], c))
        return tuple(out)

    def column_contents(self) -> tuple[tuple[int, ...], ...]:
        k = max(self.cols, default=0)
        return tuple(tuple(a for a, c in enumerate(self.cols, 1) if c == j) for j in range(1, k + 1))

    def is_standard(self) -> bool:
        depth: dict[int, int] = {}
        for c in self.cols:
            if c > 1 and depth.get(c - 1, 0) <= depth.get(c, 0):
                return False
            depth[c] = depth.get(c, 0) + 1
        return True

    def column_word(self) -> str:
        if max(self.cols, default=0) > 9:
            return ",".join(map(str, self.cols))
        return "".join(map(str, self.cols))


@dataclass(frozen=True)
class StandardTableau(ColumnTableau):
    """A standard tableau, rows and columns increasing."""

    shape: Partition = field(init=False, compare=False)

    def __post_init__(self):
        super().__post_init__()
        if not self.is_standard():
            raise ValueError(f"column word {self.cols} is not standard")
        depth: dict[int, int] = {}
        for c in self.cols:
            depth[c] = depth.get(c, 0) + 1
        conj = tuple(depth.get(j, 0) for j in range(1, max(depth, default=0) + 1))
        if any(v == 0 for v in conj):
            raise ValueError("column word skips a column")
        object.__setattr__(self, "shape", Partition(conj).conjugate())

    @classmethod
    def from_rows(cls, rows) -> StandardTableau:
        """Build from a list of rows of entries."""
        n = sum(len(r) for r in rows)
        cols = [0] * n
        for row in rows:
            for b, entry in enumerate(row, 1):
                cols[entry - 1] = b
        if sorted(sum((list(r) for r in rows), [])) != list(range(1, n + 1)):
            raise ValueError("rows must contain 1..n exactly once")
        t = cls(tuple(cols))
        if t.rows() != tuple(tuple(r) for r in rows):
            raise ValueError("rows are not a standard tableau")
        return t

    def rows(self) -> tuple[tuple[int, ...], ...]:
        grid: dict[int, list[tuple[int, int]]] = {}
        for entry, (a, b) in enumerate(self.positions, 1):
            grid.setdefault(a, []).append((b, entry))
        return tuple(tuple(e for _, e in sorted(grid[a])) for a in sorted(grid))

    def node(self, entry: int) -> Node:
        return self.positions[entry - 1]

    def restrict(self, m: int) -> StandardTableau:
        """The subtableau t|m containing the entries 1..m."""
        return StandardTableau(self.cols[:m])

    def reading_entries(self) -> tuple[int, ...]:
        return tuple(e for row in self.rows() for e in row)

    def to_json(self) -> dict:
        out = {"shape": list(self.shape.parts), "entries": list(self.reading_entries())}
        if self.shape.is_two_column():
            out["column_word"] = self.column_word()
        return out

    def __str__(self) -> str:
        return "/".join(",".join(map(str, r)) for r in self.rows())


def enumerate_std(lam: Partition) -> Iterator[StandardTableau]:
    """Std(lam) in lexicographic order of the column word."""
    conj = lam.conjugate().parts
    k = len(conj)
    n = lam.n
    depth = [0] * (k + 1)
    word: list[int] = []

    def rec() -> Iterator[StandardTableau]:
        if len(word) == n:
            yield StandardTableau(tuple(word))
            return
        for c in range(1, k + 1):
            if depth[c] < conj[c - 1] and (c == 1 or depth[c - 1] > depth[c]):
                depth[c] += 1
                word.append(c)
                yield from rec()
                word.pop()
                depth[c] -= 1

    yield from rec()


def residue_sequence(t: ColumnTableau, e: int) -> ResidueSequence:
    return ResidueSequence(tuple((b - a) % e for a, b in t.positions), e)


def enumerate_std_by_residue(lam: Partition, seq: ResidueSequence) -> list[StandardTableau]:
    """Std(lam, i): tableaux of shape lam whose residue sequence is seq."""
    return [t for t in enumerate_std(lam) if residue_sequence(t, seq.e) == seq]


def node_degree(lam: Partition, node: Node, e: int) -> int:
    """d_A(lam) for a removable node A: addable minus removable nodes of the same residue below A."""
    a, _ = node
    i = residue(node, e).value
    add = sum(1 for nd in lam.addable_nodes() if nd[0] > a and residue(nd, e).value == i)
    rem = sum(1 for nd in lam.removable_nodes() if nd[0] > a and residue(nd, e).value == i)
    return add - rem


def degree(t: ColumnTableau, e: int) -> int:
    """Graded degree of a standard tableau.

    Adds the nodes of 1, 2, ..., n in turn; each contributes the number of
    addable minus removable nodes of its residue strictly below it in the shape
    reached so far.  The empty tableau has degree 0.
    """
    parts: list[int] = []
    total = 0
    for a, b in t.positions:
        if a == len(parts) + 1:
            parts.append(0)
        parts[a - 1] += 1
        if parts[a - 1] != b or (a > 1 and parts[a - 2] < b):
            raise ValueError("column word is not standard")
        i = (b - a) % e
        rows = len(parts)
        for r in range(a + 1, rows + 2):
            pr = parts[r - 1] if r <= rows else 0
            if parts[r - 2] > pr and (pr + 1 - r) % e == i:
                total += 1
            nxt = parts[r] if r < rows else 0
            if pr > nxt and (pr - r) % e == i:
                total -= 1
    return total


def dominates(t: StandardTableau, s: StandardTableau) -> bool:
    """t dominates s: Shape(t|m) dominates Shape(s|m) for every m."""
    if t.n != s.n:
        raise ValueError("tableaux must have the same size")
    if t.shape != s.shape:
        raise ValueError("tableaux must have the same shape")
    return all(t.restrict(m).shape.dominates(s.restrict(m).shape) for m in range(1, t.n + 1))


def canonical_tableaux(lam: Partition) -> tuple[StandardTableau, StandardTableau]:
    """(t^lam, t_lam): rows filled in order, and columns filled in order."""
    rows = []
    nxt = 1
    for p in lam.parts:
        rows.append(tuple(range(nxt, nxt + p)))
        nxt += p
    t_row = StandardTableau.from_rows(rows)
    conj = lam.conjugate().parts
    t_col = StandardTableau(tuple(c for c, h in enumerate(conj, 1) for _ in range(h)))
    return t_row, t_col


def is_e_restricted(lam: Partition, e: int) -> bool:
    return lam.is_e_restricted(e)


def enumerate_std_with_residue(lam: Partition, e: int, seq) -> list[StandardTableau]:
    """Std(lam, i) for a residue sequence given as a ResidueSequence, digit string or tuple."""
    if isinstance(seq, str):
        seq = ResidueSequence.parse(seq, e)
    elif not isinstance(seq, ResidueSequence):
        seq = ResidueSequence(tuple(seq), e)
    if len(seq) != lam.n:
        raise ValueError("residue sequence length must equal the size of the partition")
    return enumerate_std_by_residue(lam, seq)
