"""Slope-indexed relator words and their block sequences.

For a slope q/p in (0, 1] the group of the corresponding link has a
one-relator presentation <a, b | u> whose relator u is produced by
Riley's sign formula: with eps_i = (-1)^floor(i*q/p),

    u = a * h * b^((-1)^q) * h^{-1}   (p odd),   h = b^eps1 a^eps2 ... a^eps_{p-1}
    u = a * h * a^{-1}    * h^{-1}    (p even),  h = b^eps1 a^eps2 ... b^eps_{p-1}

The block sequence of u has length 2q and a closed form in terms of the
"strict floor" floor_star(x) = greatest integer strictly below x.  It
always splits as (S1, S2, S1, S2) with both halves symmetric; that split
is found by search here and then verified against all of its defining
properties, since a failed verification would mean a bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .farey import Slope, ZERO, ONE, INFINITY, cf_expand, fundamental_intervals
from .words import (CyclicSequence, cyclic_s_sequence, inverse_word,
                    s_sequence)


class VerificationError(RuntimeError):
    """An internally recomputed identity failed; indicates a bug."""


def floor_star(t):
    """Greatest integer strictly smaller than t (exact input only).

    >>> floor_star(0)
    -1
    >>> floor_star(Fraction(5, 2))
    2
    """
    t = _exact(t)
    if t.denominator == 1:
        return t.numerator - 1
    return t.numerator // t.denominator


def ceil_star(t):
    """Smallest integer strictly greater than t (exact input only).

    >>> ceil_star(3)
    4
    """
    t = _exact(t)
    if t.denominator == 1:
        return t.numerator + 1
    return -((-t.numerator) // t.denominator)


def _exact(t) -> Fraction:
    if isinstance(t, float):
        raise TypeError("floor_star/ceil_star take exact rationals, not floats")
    return Fraction(t)


@dataclass(frozen=True)
class RelatorBundle:
    """A relator word together with its middle word and block sequences."""

    slope: Slope
    word: str
    hat_word: str
    s_seq: tuple[int, ...]
    cyclic_s_seq: CyclicSequence | None


def riley_word(r: Slope) -> RelatorBundle:
    """Relator of a slope in (0, 1], plus the conventions u_0 = ab, u_inf = 1.

    >>> riley_word(Slope(1, 2)).word
    'abAB'
    >>> riley_word(Slope(2, 5)).word
    'abaBAbabAB'
    """
    if r == INFINITY:
        return RelatorBundle(r, "", "", (), None)
    if r.numerator < 0:
        raise ValueError(f"negative slope {r} has no relator")
    if r == ZERO:
        return RelatorBundle(r, "ab", "", (2,), CyclicSequence((2,)))
    if r > ONE:
        raise ValueError(f"slope {r} lies outside (0, 1]")
    q, p = r.numerator, r.denominator
    hat = []
    for i in range(1, p):
        gen = "b" if i % 2 == 1 else "a"
        if (i * q // p) % 2 == 1:
            gen = gen.upper()
        hat.append(gen)
    hat_word = "".join(hat)
    middle = "B" if (p % 2 == 1 and q % 2 == 1) else ("b" if p % 2 == 1 else "A")
    word = "a" + hat_word + middle + inverse_word(hat_word)
    return RelatorBundle(r, word, hat_word, s_sequence(word),
                         cyclic_s_sequence(word))


def s_of_slope(r: Slope) -> tuple[int, ...]:
    """Closed-form block sequence of the relator of q/p: 2q terms, the
    j-th being floor_star(j*p/q) - floor_star((j-1)*p/q).

    >>> s_of_slope(Slope(2, 5))
    (3, 2, 3, 2)
    """
    if r == ZERO:
        return (2,)
    if r.is_infinity or r.numerator < 0 or r > ONE:
        raise ValueError(f"slope {r} lies outside (0, 1]")
    q, p = r.numerator, r.denominator
    # floor_star(j*p/q) == (j*p - 1) // q for positive integers.
    marks = [(j * p - 1) // q for j in range(0, 2 * q + 1)]
    marks[0] = -1
    return tuple(marks[j] - marks[j - 1] for j in range(1, 2 * q + 1))


@dataclass(frozen=True)
class Decomposition:
    """The split S = (s1, s2, s1, s2) of a relator block sequence."""

    slope: Slope
    s1: tuple[int, ...]
    s2: tuple[int, ...]


def decompose(r: Slope) -> Decomposition:
    """Find and verify the (S1, S2, S1, S2) split for 0 < r <= 1.

    Requirements checked by brute force: the four-fold concatenation
    reproduces the block sequence, both parts are palindromic, S1 is
    empty exactly when the continued fraction has a single quotient,
    S1 starts/ends with m1+1 and S2 with m1, and each nonempty part
    occurs exactly twice as a contiguous cyclic run.
    """
    if r.is_infinity or not ZERO < r <= ONE:
        raise ValueError(f"slope {r} lies outside (0, 1]")
    seq = s_of_slope(r)
    q = r.numerator
    half = seq[:q]
    m = cf_expand(r).quotients[0]
    single_quotient = len(cf_expand(r).quotients) == 1
    cyclic = CyclicSequence(seq)
    for cut in range(0, q):
        s1, s2 = half[:cut], half[cut:]
        if (cut == 0) != single_quotient:
            continue
        if s1 != tuple(reversed(s1)) or s2 != tuple(reversed(s2)):
            continue
        if s1 and (s1[0] != m + 1 or s1[-1] != m + 1):
            continue
        if s2[0] != m or s2[-1] != m:
            continue
        if s1 and cyclic.count_contiguous(s1) != 2:
            continue
        if cyclic.count_contiguous(s2) != 2:
            continue
        if (s1 + s2) * 2 != seq:
            continue
        return Decomposition(r, s1, s2)
    raise VerificationError(f"no valid block split exists for {r}")


@dataclass(frozen=True)
class ConnectionReport:
    """Facts checked about the cyclic block sequence of an interval slope."""

    p: int
    s: Slope
    cyclic_seq: CyclicSequence
    max_entry: int
    forbidden: tuple[tuple[int, ...], tuple[int, ...]]


def check_connection(p: int, s: Slope) -> ConnectionReport:
    """Assert the two interval-slope facts for r = 1/p.

    For s in [0, r1] ∪ [r2, 1] (s = 0 only allowed when p > 2), the
    cyclic block sequence of the relator of s contains neither (S1, S2)
    nor (S2, S1) of the base relator contiguously, and every entry stays
    below p.  Violations raise, since they would indicate a bug.
    """
    if p < 2:
        raise ValueError("need p >= 2")
    r = Slope(1, p)
    fd = fundamental_intervals(r)
    if s == ZERO:
        if p == 2:
            raise ValueError("s = 0 is excluded when p = 2")
    elif s.is_infinity or not fd.contains(s):
        raise ValueError(f"slope {s} is not in the fundamental intervals of 1/{p}")
    dec = decompose(r)
    cyclic = CyclicSequence(s_of_slope(s))
    forbidden = (dec.s1 + dec.s2, dec.s2 + dec.s1)
    for pattern in forbidden:
        if cyclic.contains_contiguous(pattern):
            raise VerificationError(
                f"cyclic sequence {cyclic} of {s} contains forbidden run {pattern}")
    top = max(cyclic.entries)
    if top >= p:
        raise VerificationError(
            f"cyclic sequence {cyclic} of {s} has an entry >= {p}")
    return ConnectionReport(p=p, s=s, cyclic_seq=cyclic, max_entry=top,
                            forbidden=forbidden)
