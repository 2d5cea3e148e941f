"""Graded decomposition numbers for two-column partitions.

The closed form is f^q_{e,p}(y, u - x) for lambda = (2^u, 1^v) and
mu = (2^x, 1^y).  It is only asserted when p = 0, p = e, or gcd(p, e) = 1;
other pairs raise HypothesisError.  The combinatorial count (summing q^{r_e}
over tableaux regularising onto a fixed regular tableau) is defined for every
(e, p) and is reported as extrapolated outside that range.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra import ONE, ZERO, LaurentPoly, q
from .partitions import Partition, partitions_two_column, restricted_two_column
from .paths import Path2
from .regularisation import ep_compatible, reg_ep_heights, regularised_paths


class HypothesisError(ValueError):
    """Raised when (e, p) lies outside the range where the closed form holds."""


def check_hypothesis(e: int, p: int) -> None:
    if e < 2:
        raise ValueError("e must be at least 2")
    if p < 0 or p == 1:
        raise ValueError("p must be 0 or at least 2")
    if not ep_compatible(e, p):
        raise HypothesisError(f"(e, p) = ({e}, {p}) needs p = 0, p = e or gcd(p, e) = 1")


def base_p_digits(a: int, p: int) -> tuple[int, ...]:
    """Digits of a in base p, least significant first; () for a = 0."""
    if p < 2:
        raise ValueError("base must be at least 2")
    if a < 0:
        raise ValueError("digits are defined for non-negative integers")
    out = []
    while a:
        a, d = divmod(a, p)
        out.append(d)
    return tuple(out)


def base_p_contains(b: int, a: int, p: int) -> bool:
    """b is contained in a: every base-p digit of b is 0 or the matching digit of a.

    For p = 0 only b = 0 is contained in a.
    """
    if a < 0 or b < 0:
        return False
    if p == 0:
        return b == 0
    da, db = base_p_digits(a, p), base_p_digits(b, p)
    if len(db) > len(da):
        return False
    return all(d == 0 or d == da[i] for i, d in enumerate(db))


def f_ep(l: int, s: int, e: int, p: int) -> int:
    """Ungraded indicator: s_e contained in (l+1)_e, and e divides s or l+1-s."""
    if s < 0:
        return 0
    if not base_p_contains(s // e, (l + 1) // e, p):
        return 0
    return 1 if s % e == 0 or (l + 1 - s) % e == 0 else 0


def f_q(l: int, s: int, e: int, p: int) -> LaurentPoly:
    """Graded indicator: 1 if e | s, q if e | l+1-s but not s, else 0 (given digit containment)."""
    if s < 0:
        return ZERO
    if not base_p_contains(s // e, (l + 1) // e, p):
        return ZERO
    if s % e == 0:
        return ONE
    if (l + 1 - s) % e == 0:
        return q
    return ZERO


@dataclass(frozen=True)
class EPExpansion:
    """y = (sum a_i p^i) e + l - 1 with 0 <= l < e; digits least significant first."""

    y: int
    e: int
    p: int
    digits: tuple[int, ...]
    l: int

    @property
    def s(self) -> int:
        return len(self.digits) - 1


def ep_expansion(y: int, e: int, p: int) -> EPExpansion:
    if y < 0 or e < 2 or p < 2:
        raise ValueError("need y >= 0, e >= 2 and p >= 2")
    a, l = divmod(y + 1, e)
    return EPExpansion(y, e, p, base_p_digits(a, p), l)


def signed_values(exp: EPExpansion) -> dict[int, LaurentPoly]:
    """All v = (a_s p^s +- ... +- a_0) e +- l - 1 with their values 1 or q.

    The leading digit always carries a plus sign.  A plus sign on l (or l = 0)
    gives 1, a minus sign on a nonzero l gives q.
    """
    e, p, l = exp.e, exp.p, exp.l
    terms = [d * p**i for i, d in enumerate(exp.digits) if d]
    lead, rest = (terms[-1], terms[:-1]) if terms else (0, [])
    out: dict[int, LaurentPoly] = {}
    for signs in product((1, -1), repeat=len(rest)):
        base = (lead + sum(sg * t for sg, t in zip(signs, rest))) * e
        out[base + l - 1] = ONE
        if l:
            out.setdefault(base - l - 1, q)
    return out


def f_q_sign_form(exp: EPExpansion, v: int) -> LaurentPoly:
    """The graded indicator read off from signed expansions of y."""
    return signed_values(exp).get(v, ZERO)


def f_q_p0_alt(y: int, d: int, e: int) -> LaurentPoly:
    """Characteristic-zero form: 1 if d = 0, q if 0 < d < e <= y + 1 and e | y + 1 - d."""
    if d == 0:
        return ONE
    if 0 < d < e <= y + 1 and (y + 1 - d) % e == 0:
        return q
    return ZERO


def decomp_entry(lam: Partition, mu: Partition, e: int, p: int) -> LaurentPoly:
    """[S^lam : D^mu]_q from the closed form."""
    check_hypothesis(e, p)
    if lam.n != mu.n:
        raise ValueError("partitions must have the same size")
    if not mu.is_e_restricted(e):
        raise ValueError(f"{mu} is not {e}-restricted")
    u, _ = lam.xy
    x, y = mu.xy
    if u < x:
        return ZERO
    return f_q(y, u - x, e, p)


def decomp_entry_combinatorial(
    lam: Partition, mu: Partition, e: int, p: int, s: Path2 | None = None
) -> LaurentPoly:
    """Sum of q^{r_e(t)} over t in Std(lam) with reg_{e,p}(t) = s, for s in DStd_{e,p}(mu).

    s defaults to the first regular tableau of shape mu in column-word order.
    """
    if lam.n != mu.n:
        raise ValueError("partitions must have the same size")
    lam_y, mu_y = lam.xy[1], mu.xy[1]
    table = regularised_paths(lam.n, e, p)
    if s is None:
        regular = [h for h, reg_h, _ in table if h[-1] == mu_y and h == reg_h]
        if not regular:
            raise ValueError(f"no {e},{p}-regular tableaux of shape {mu}")
        target = regular[0]
    else:
        target = s.heights
        if reg_ep_heights(target, e, p)[0] != target or target[-1] != mu_y:
            raise ValueError("s must be a regular path of shape mu")
    total: dict[int, int] = {}
    for h, reg_h, r in table:
        if h[-1] == lam_y and reg_h == target:
            total[r] = total.get(r, 0) + 1
    return LaurentPoly(total)


@dataclass(frozen=True)
class DecompMatrix:
    """Rows and columns are listed by ascending number of twos, so entries vanish above the diagonal."""

    n: int
    e: int
    p: int
    rows: tuple[Partition, ...]
    cols: tuple[Partition, ...]
    entries: tuple[tuple[LaurentPoly, ...], ...]
    extrapolated: bool = False

    def entry(self, lam: Partition, mu: Partition) -> LaurentPoly:
        return self.entries[self.rows.index(lam)][self.cols.index(mu)]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "e": self.e,
            "p": self.p,
            "extrapolated": self.extrapolated,
            "rows": [str(r) for r in self.rows],
            "cols": [str(c) for c in self.cols],
            "entries": [[c.to_entry() for c in row] for row in self.entries],
        }

    def to_csv(self) -> str:
        lines = [",".join(['""'] + [f'"{c}"' for c in self.cols])]
        for lam, row in zip(self.rows, self.entries):
            lines.append(",".join([f'"{lam}"'] + [c.to_entry() for c in row]))
        return "\n".join(lines) + "\n"

    def pretty(self) -> str:
        head = [""] + [f"({c})" for c in self.cols]
        body = [[f"({r})"] + [c.to_entry() if c else "." for c in row] for r, row in zip(self.rows, self.entries)]
        widths = [max(len(line[i]) for line in [head] + body) for i in range(len(head))]
        fmt = lambda line: "  ".join(cell.rjust(w) for cell, w in zip(line, widths))
        return "\n".join([fmt(head)] + [fmt(line) for line in body])


def _ascending(parts: list[Partition]) -> tuple[Partition, ...]:
    return tuple(reversed(parts))


def decomp_matrix(n: int, e: int, p: int) -> DecompMatrix:
    """D^p(q) from the closed form."""
    check_hypothesis(e, p)
    rows = _ascending(partitions_two_column(n))
    cols = _ascending(restricted_two_column(n, e))
    entries = tuple(tuple(decomp_entry(lam, mu, e, p) for mu in cols) for lam in rows)
    return DecompMatrix(n, e, p, rows, cols, entries)


def combinatorial_decomp_matrix(n: int, e: int, p: int) -> DecompMatrix:
    """D^p(q) from counting regularisations; flagged extrapolated outside the proven range."""
    rows = _ascending(partitions_two_column(n))
    cols = _ascending(restricted_two_column(n, e))
    entries = tuple(tuple(decomp_entry_combinatorial(lam, mu, e, p) for mu in cols) for lam in rows)
    return DecompMatrix(n, e, p, rows, cols, entries, extrapolated=not ep_compatible(e, p))


def adjustment_entry(lam: Partition, mu: Partition, e: int, p: int) -> LaurentPoly:
    """1 when v = (a_s p^s +- ... +- a_0) e + l - 1 for the expansion of y, else 0."""
    u, v = lam.xy
    x, y = mu.xy
    if u < x:
        return ZERO
    exp = ep_expansion(y, e, p)
    terms = [d * p**i for i, d in enumerate(exp.digits) if d]
    lead, rest = (terms[-1], terms[:-1]) if terms else (0, [])
    for signs in product((1, -1), repeat=len(rest)):
        if (lead + sum(sg * t for sg, t in zip(signs, rest))) * e + exp.l - 1 == v:
            return ONE
    return ZERO


def adjustment_matrix(n: int, e: int, p: int) -> DecompMatrix:
    """The adjustment matrix, rows and columns both e-restricted two-column partitions."""
    check_hypothesis(e, p)
    if p == 0:
        raise ValueError("the adjustment matrix needs p > 0")
    cols = _ascending(restricted_two_column(n, e))
    entries = tuple(tuple(adjustment_entry(lam, mu, e, p) for mu in cols) for lam in cols)
    return DecompMatrix(n, e, p, cols, cols, entries)


def matmul(a: DecompMatrix, b: DecompMatrix) -> tuple[tuple[LaurentPoly, ...], ...]:
    if a.cols != b.rows:
        raise ValueError("matrix dimensions do not match")
    out = []
    for row in a.entries:
        out.append(
            tuple(
                sum((row[k] * b.entries[k][j] for k in range(len(b.rows))), ZERO)
                for j in range(len(b.cols))
            )
        )
    return tuple(out)


def verify_adjustment(n: int, e: int, p: int) -> bool:
    """Check D^p(q) = D^0(q) times the adjustment matrix."""
    return decomp_matrix(n, e, p).entries == matmul(decomp_matrix(n, e, 0), adjustment_matrix(n, e, p))
