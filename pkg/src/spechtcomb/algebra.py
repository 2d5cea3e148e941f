"""Laurent polynomials in q, residue sequences and graded characters."""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from typing import NamedTuple, Union

Coefficient = Union[int, "LaurentPoly"]


class LaurentPoly:
    """An immutable element of Z[q, q^-1], stored as a sparse exponent map."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        if terms:
            for exp, coeff in terms.items():
                if not isinstance(exp, int) or not isinstance(coeff, int):
                    raise TypeError("exponents and coefficients must be integers")
                if coeff:
                    clean[exp] = clean.get(exp, 0) + coeff
                    if clean[exp] == 0:
                        del clean[exp]
        self._terms = dict(sorted(clean.items()))
        self._hash: int | None = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def coerce(cls, value: Coefficient) -> LaurentPoly:
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return cls.constant(value)
        raise TypeError(f"cannot interpret {value!r} as a Laurent polynomial")

    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def bar(self) -> LaurentPoly:
        """The ring involution q -> q^-1."""
        return LaurentPoly({-k: c for k, c in self._terms.items()})

    def evaluate(self, q: int | float = 1) -> int | float:
        return sum(c * q**k for k, c in self._terms.items())

    def degree_range(self) -> tuple[int, int] | None:
        if not self._terms:
            return None
        exps = list(self._terms)
        return exps[0], exps[-1]

    def __add__(self, other: Coefficient) -> LaurentPoly:
        other = LaurentPoly.coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Coefficient) -> LaurentPoly:
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other: Coefficient) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Coefficient) -> LaurentPoly:
        other = LaurentPoly.coerce(other)
        out: dict[int, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPoly:
        if exponent < 0:
            if not self.is_monomial():
                raise ValueError("only monomials can be inverted")
            ((k, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials can be inverted")
            return LaurentPoly({k * exponent: c ** -exponent})
        result = LaurentPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self._terms!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for k, c in self._terms.items():
            if k == 0:
                body = str(abs(c))
            else:
                mono = "q" if k == 1 else f"q^{k}"
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> dict[str, int]:
        return {str(k): c for k, c in self._terms.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> LaurentPoly:
        return cls({int(k): int(c) for k, c in data.items()})

    def to_entry(self) -> str:
        """Compact matrix-cell form: "0", "1", "q", "q^2", or the full expansion."""
        return str(self).replace(" ", "")

    @classmethod
    def parse_entry(cls, text: str) -> LaurentPoly:
        """Inverse of :meth:`to_entry` for sums of monomials like "1+q^-2"."""
        text = text.replace(" ", "")
        if text in ("", "0"):
            return cls()
        total = cls()
        token = ""
        for ch in text + "+":
            if ch in "+-" and token and not token.endswith("^"):
                total = total + _parse_monomial(token)
                token = ch if ch == "-" else ""
            else:
                token += ch
        return total


def _parse_monomial(token: str) -> LaurentPoly:
    sign = 1
    if token.startswith("-"):
        sign, token = -1, token[1:]
    if "q" not in token:
        return LaurentPoly.constant(sign * int(token))
    coeff_text, _, rest = token.partition("q")
    coeff = int(coeff_text) if coeff_text else 1
    exp = int(rest[1:]) if rest.startswith("^") else 1
    return LaurentPoly.monomial(exp, sign * coeff)


q = LaurentPoly.monomial(1)
ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)


class Residue(NamedTuple):
    """A residue class value in [0, e) together with its modulus."""

    value: int
    e: int

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True, order=True)
class ResidueSequence:
    """A sequence of residues modulo e, ordered lexicographically."""

    entries: tuple[int, ...]
    e: int

    def __post_init__(self):
        if self.e < 2:
            raise ValueError("e must be at least 2")
        if any(not 0 <= i < self.e for i in self.entries):
            raise ValueError(f"residues must lie in [0, {self.e})")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, idx):
        return self.entries[idx]

    def __str__(self) -> str:
        if self.e <= 10:
            return "".join(str(i) for i in self.entries)
        return ",".join(str(i) for i in self.entries)

    @classmethod
    def parse(cls, text: str, e: int) -> ResidueSequence:
        text = text.strip()
        if "," in text or e > 10:
            entries = tuple(int(tok) for tok in text.split(",") if tok)
        else:
            entries = tuple(int(ch) for ch in text)
        return cls(entries, e)


class Character(Mapping):
    """A graded character: a finite sum of Laurent polynomials times residue sequences."""

    __slots__ = ("e", "_terms")

    def __init__(self, e: int, terms: Mapping[ResidueSequence, Coefficient] | None = None):
        self.e = e
        clean: dict[ResidueSequence, LaurentPoly] = {}
        for seq, coeff in (terms or {}).items():
            if seq.e != e:
                raise ValueError("residue sequence modulus does not match character")
            coeff = LaurentPoly.coerce(coeff)
            if seq in clean:
                coeff = clean[seq] + coeff
            if coeff:
                clean[seq] = coeff
            else:
                clean.pop(seq, None)
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def from_pairs(cls, e: int, pairs: Iterable[tuple[tuple[int, ...], int]]) -> Character:
        """Build sum of q^deg * i from (residue tuple, degree) pairs."""
        acc: dict[tuple[int, ...], dict[int, int]] = {}
        for res, deg in pairs:
            slot = acc.setdefault(res, {})
            slot[deg] = slot.get(deg, 0) + 1
        return cls(e, {ResidueSequence(r, e): LaurentPoly(d) for r, d in acc.items()})

    def __getitem__(self, key: ResidueSequence) -> LaurentPoly:
        return self._terms.get(key, ZERO)

    def __iter__(self) -> Iterator[ResidueSequence]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, key: object) -> bool:
        return key in self._terms

    def __add__(self, other: Character) -> Character:
        if not isinstance(other, Character):
            return NotImplemented
        if other.e != self.e:
            raise ValueError("cannot add characters with different e")
        merged = dict(self._terms)
        for seq, coeff in other._terms.items():
            merged[seq] = merged.get(seq, ZERO) + coeff
        return Character(self.e, merged)

    def scale(self, factor: Coefficient) -> Character:
        factor = LaurentPoly.coerce(factor)
        return Character(self.e, {s: c * factor for s, c in self._terms.items()})

    def bar(self) -> Character:
        return Character(self.e, {s: c.bar() for s, c in self._terms.items()})

    def is_bar_invariant(self) -> bool:
        return self == self.bar()

    def dimension(self) -> int:
        """Ungraded size: the sum of all coefficients at q = 1."""
        return sum(c.evaluate(1) for c in self._terms.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.e == other.e and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.e, tuple(self._terms.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{s}: {c}" for s, c in self._terms.items())
        return f"Character(e={self.e}, {{{body}}})"

    def to_json(self) -> dict[str, dict[str, int]]:
        return {str(s): c.to_json() for s, c in self._terms.items()}

    @classmethod
    def from_json(cls, e: int, data: Mapping[str, Mapping[str, int]]) -> Character:
        return cls(e, {ResidueSequence.parse(k, e): LaurentPoly.from_json(v) for k, v in data.items()})


def laurent_bar(f: LaurentPoly) -> LaurentPoly:
    return f.bar()


def character_bar(c: Character) -> Character:
    return c.bar()


def character_add(c: Character, d: Character) -> Character:
    return c + d


def character_scale(c: Character, f: Coefficient) -> Character:
    return c.scale(f)
