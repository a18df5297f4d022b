"""The homotopy decision procedure for simple loops at slope 1/p.

Two slopes are compared by reducing each to its fundamental-interval
representative.  The loops are homotopic exactly when both reduce into
{inf, 1/p} (both null-homotopic), the representatives agree, or they are
exchanged by the involution s -> num/(num*p - den).  In the last case
the verdict carries an explicit one-ring annular diagram whose outer
label is the relator of one representative and whose inner label has the
complementary cyclic block sequence, realising the partner relator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import AnnularDiagram, build_fan
from .farey import INFINITY, ZERO, Slope, fundamental_intervals, \
    reduce_to_fundamental, tau
from .relator import VerificationError, ceil_star, s_of_slope
from .words import CyclicSequence


def partner_slope(p: int, s: Slope) -> Slope:
    """q1/(p*q1 - p1) for s = q1/p1; agrees with the tau involution.

    >>> partner_slope(5, Slope(2, 3))
    Slope(2, 7)
    """
    if p < 2:
        raise ValueError("need p >= 2")
    if s.is_infinity or s.numerator < 1:
        raise ValueError(f"partner slope needs a finite positive slope, got {s}")
    q1, p1 = s.numerator, s.denominator
    if p * q1 == p1:
        raise ValueError(f"slope {s} equals 1/{p}; its partner is the infinity class")
    return Slope(q1, p * q1 - p1)


def complement_cs(p: int, cs) -> CyclicSequence:
    """Entrywise complement ((p - b_1, ..., p - b_n)); self-inverse.

    >>> complement_cs(5, CyclicSequence((2, 1, 2, 1)))
    CyclicSequence((3, 4, 3, 4))
    """
    entries = tuple(cs)
    if any(b >= p for b in entries):
        raise ValueError(f"entries {entries} are not all below {p}")
    return CyclicSequence(tuple(p - b for b in entries))


@dataclass(frozen=True)
class HomotopyVerdict:
    homotopic: bool
    reason: str  # same-reduced-slope | tau-partner | both-null-homotopic | distinct
    reduced_s: Slope
    reduced_s2: Slope
    certificate: AnnularDiagram | None = None


def decide_homotopic(p: int, s: Slope, s2: Slope) -> HomotopyVerdict:
    """Decide whether the loops of s and s2 are homotopic at parameter p.

    >>> decide_homotopic(3, Slope(1, 2), Slope(1, 1)).reason
    'tau-partner'
    """
    if p < 2:
        raise ValueError("need p >= 2")
    r = Slope(1, p)
    a = reduce_to_fundamental(r, s)
    b = reduce_to_fundamental(r, s2)
    special = (INFINITY, r)
    if a in special and b in special:
        return HomotopyVerdict(True, "both-null-homotopic", a, b)
    if a == b:
        return HomotopyVerdict(True, "same-reduced-slope", a, b)
    if tau(p, a) == b:
        certificate = None
        if a != ZERO and b != ZERO:
            certificate = build_fan(p, a)
        return HomotopyVerdict(True, "tau-partner", a, b, certificate)
    return HomotopyVerdict(False, "distinct", a, b)


@dataclass(frozen=True)
class PartnerTermsReport:
    """Cross-checked block data for a slope and its partner."""

    p: int
    s: Slope
    partner: Slope
    s_blocks: tuple[int, ...]
    partner_blocks: tuple[int, ...]
    complement_display: CyclicSequence


def partner_terms_check(p: int, s: Slope) -> PartnerTermsReport:
    """Recompute the partner's block sequence two independent ways.

    The direct route evaluates the closed-form block formula at the
    partner slope.  The indirect route expands it term by term via the
    strict ceiling: the j-th partner block is
    p - ceil_star(j*p1/q1) + ceil_star((j-1)*p1/q1), which specialises
    to p - a_j in the middle, p - a_1 at the front and p - a_q1 - 1 at
    the back, where a_1 = s_1(s) - 1 and a_j = s_j(s).  Reversing via
    the palindromic (a_j) must give the complement display
    ((p - s_1(s), ..., p - s_q1(s))) twice over, matching the partner's
    cyclic block sequence.  Any mismatch raises.
    """
    if p < 2:
        raise ValueError("need p >= 2")
    fd = fundamental_intervals(Slope(1, p))
    if s == ZERO or s.is_infinity or not fd.contains(s):
        raise ValueError(f"slope {s} is not a nonzero fundamental representative")
    q1, p1 = s.numerator, s.denominator
    partner = partner_slope(p, s)
    s_blocks = s_of_slope(s)
    partner_blocks = s_of_slope(partner)
    half = s_blocks[:q1]

    from fractions import Fraction
    chain = tuple(
        p - ceil_star(Fraction(j * p1, q1)) + ceil_star(Fraction((j - 1) * p1, q1))
        for j in range(1, q1 + 1))
    if chain != partner_blocks[:q1]:
        raise VerificationError(
            f"term chain {chain} disagrees with direct blocks {partner_blocks[:q1]}")

    a = (half[0] - 1,) + half[1:]
    if a != tuple(reversed(a)):
        raise VerificationError(f"middle-word blocks {a} are not palindromic")
    if q1 >= 2:
        expected = (p - a[0],) + tuple(p - a[j] for j in range(1, q1 - 1)) \
            + (p - a[q1 - 1] - 1,)
        if chain != expected:
            raise VerificationError(
                f"endpoint corrections fail: {chain} != {expected}")
    display_half = tuple(p - x for x in half)
    if tuple(reversed(chain)) != display_half:
        raise VerificationError(
            f"palindromic flip fails: {tuple(reversed(chain))} != {display_half}")
    display = CyclicSequence(display_half * 2)
    if display != CyclicSequence(partner_blocks):
        raise VerificationError(
            f"complement display {display} is not the partner sequence "
            f"{CyclicSequence(partner_blocks)}")
    return PartnerTermsReport(p=p, s=s, partner=partner, s_blocks=s_blocks,
                              partner_blocks=partner_blocks,
                              complement_display=display)
