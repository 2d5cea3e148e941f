"""Graded characters of tableau sets, Specht modules and simple modules.

Everything here is computed by enumerating tableaux and reading off residue
sequences and degrees; no closed forms are used.
"""
from __future__ import annotations

from collections.abc import Iterable

from .algebra import Character, LaurentPoly, q
from .partitions import ColumnTableau, Partition, degree, enumerate_std, partitions_two_column, residue_sequence
from .regularisation import dstd, r_e, std_by_target


def ch_q_set(tableaux: Iterable[ColumnTableau], e: int) -> Character:
    """Sum of q^deg(t) times the residue sequence of t."""
    return Character.from_pairs(e, ((residue_sequence(t, e).entries, degree(t, e)) for t in tableaux))


def ch_q_specht(lam: Partition, e: int) -> Character:
    return ch_q_set(enumerate_std(lam), e)


def ch_q_simple(lam: Partition, e: int, p: int) -> Character:
    """Graded character of D^lam, the character of the regular tableaux."""
    if not lam.is_two_column():
        raise ValueError("simple characters are only available for two-column partitions")
    if not lam.is_e_restricted(e):
        raise ValueError(f"{lam} is not {e}-restricted, so D^lam is zero")
    return ch_q_set(dstd(lam, e, p), e)


def simple_characters(n: int, e: int, p: int) -> dict[Partition, Character]:
    """ch_q DStd_{e,p}(mu) for every e-restricted two-column mu of size n."""
    out = {}
    for mu in partitions_two_column(n):
        if mu.is_e_restricted(e):
            out[mu] = ch_q_simple(mu, e, p)
    return out


def char_decomposition(lam: Partition, e: int, p: int) -> dict[Partition, tuple[LaurentPoly, Character]]:
    """For each mu: (q^{r}, ch_q Std_{e,p,mu}(lam)) where r = r_e of any tableau in that set."""
    out = {}
    for mu, tabs in std_by_target(lam, e, p).items():
        out[mu] = (q ** r_e(tabs[0], e), ch_q_set(tabs, e))
    return out


def verify_char_sum(lam: Partition, e: int, p: int) -> bool:
    """ch_q Std(lam) equals sum over mu of q^{r} ch_q DStd_{e,p}(mu), piece by piece."""
    total = Character(e)
    for mu, (factor, piece) in char_decomposition(lam, e, p).items():
        simple = ch_q_simple(mu, e, p)
        if piece != simple.scale(factor):
            return False
        total = total + simple.scale(factor)
    return total == ch_q_specht(lam, e)
