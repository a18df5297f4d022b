"""Exact slope arithmetic on the Farey tessellation.

A slope is an element of Q ∪ {inf}, stored as a reduced integer fraction
with infinity = 1/0.  The reflection group generated by the Farey-edge
reflections at a slope r together with those at infinity acts on slopes;
this module computes continued fractions, the two fundamental intervals
of that action, the reduction of an arbitrary slope to its interval
representative, and the denominator-flip involution c/d -> c/(c*p - d).

All arithmetic is exact; reflections are integer 2x2 matrices of
determinant -1 acting projectively on (numerator, denominator) columns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class ReductionError(RuntimeError):
    """Fundamental-domain reduction exceeded its step budget (a bug)."""


@dataclass(frozen=True)
class Slope:
    """A reduced fraction with non-negative denominator; 1/0 is infinity.

    >>> Slope(2, -4)
    Slope(-1, 2)
    >>> str(Slope(-3, 0))
    'inf'
    """

    numerator: int
    denominator: int

    def __post_init__(self):
        num, den = self.numerator, self.denominator
        if not isinstance(num, int) or not isinstance(den, int):
            raise TypeError("slope entries must be integers")
        if den == 0:
            if num == 0:
                raise ValueError("0/0 is not a slope")
            num = 1
        else:
            if den < 0:
                num, den = -num, -den
            g = gcd(num, den)
            num //= g
            den //= g
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @property
    def is_infinity(self) -> bool:
        return self.denominator == 0

    def as_fraction(self) -> Fraction:
        if self.is_infinity:
            raise ValueError("infinity has no fraction value")
        return Fraction(self.numerator, self.denominator)

    @classmethod
    def from_fraction(cls, value) -> "Slope":
        f = Fraction(value)
        return cls(f.numerator, f.denominator)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Parse 'q/p', an integer string, or 'inf'."""
        t = text.strip()
        if t in ("inf", "Inf", "INF", "1/0", "-1/0"):
            return INFINITY
        if "/" in t:
            num_s, den_s = t.split("/", 1)
            return cls(int(num_s), int(den_s))
        return cls(int(t), 1)

    def __str__(self) -> str:
        if self.is_infinity:
            return "inf"
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"

    def _cmp_key(self) -> Fraction:
        if self.is_infinity:
            raise ValueError("cannot order infinity against finite slopes")
        return self.as_fraction()

    def __lt__(self, other: "Slope") -> bool:
        return self._cmp_key() < other._cmp_key()

    def __le__(self, other: "Slope") -> bool:
        return self._cmp_key() <= other._cmp_key()

    def __gt__(self, other: "Slope") -> bool:
        return self._cmp_key() > other._cmp_key()

    def __ge__(self, other: "Slope") -> bool:
        return self._cmp_key() >= other._cmp_key()


INFINITY = Slope(1, 0)
ZERO = Slope(0, 1)
ONE = Slope(1, 1)

# Row-major integer 2x2 matrix (a, b, c, d) = [[a, b], [c, d]].
Matrix = tuple[int, int, int, int]


def apply_matrix(m: Matrix, s: Slope) -> Slope:
    """Projective action of an invertible integer matrix on a slope."""
    a, b, c, d = m
    return Slope(a * s.numerator + b * s.denominator,
                 c * s.numerator + d * s.denominator)


def matrix_product(m1: Matrix, m2: Matrix) -> Matrix:
    a, b, c, d = m1
    e, f, g, h = m2
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def is_farey_edge(x: Slope, y: Slope) -> bool:
    return abs(x.numerator * y.denominator - y.numerator * x.denominator) == 1


def reflection_in_edge(x: Slope, y: Slope) -> Matrix:
    """Determinant -1 integer matrix fixing both endpoints of a Farey edge.

    The matrix acts as the hyperbolic reflection in the geodesic with ideal
    endpoints x and y; on slopes it swaps the two complementary arcs.
    """
    a, c = x.numerator, x.denominator
    b, d = y.numerator, y.denominator
    det = a * d - b * c
    if abs(det) != 1:
        raise ValueError(f"<{x}, {y}> is not a Farey edge")
    # U diag(1,-1) U^{-1} for U = [[a, b], [c, d]], scaled by 1/det.
    return (det * (a * d + b * c), det * (-2 * a * b),
            det * (2 * c * d), det * (-(a * d + b * c)))


@dataclass(frozen=True)
class ContinuedFraction:
    """Positive partial quotients [m1, ..., mk] of a slope in (0, 1].

    The last quotient is at least 2 unless there is only one quotient.

    >>> ContinuedFraction((3, 2, 2)).value()
    Fraction(5, 17)
    """

    quotients: tuple[int, ...]

    def __post_init__(self):
        q = tuple(int(m) for m in self.quotients)
        if not q:
            raise ValueError("a continued fraction needs at least one quotient")
        if any(m < 1 for m in q):
            raise ValueError("partial quotients must be positive")
        if len(q) > 1 and q[-1] < 2:
            raise ValueError("the final quotient must be at least 2")
        object.__setattr__(self, "quotients", q)

    def value(self) -> Fraction:
        return _cf_value(self.quotients)

    def slope(self) -> Slope:
        return Slope.from_fraction(self.value())

    @classmethod
    def parse(cls, text: str) -> "ContinuedFraction":
        t = text.strip()
        if not (t.startswith("[") and t.endswith("]")):
            raise ValueError(f"bad continued fraction literal: {text!r}")
        return cls(tuple(int(part) for part in t[1:-1].split(",")))

    def __str__(self) -> str:
        return "[" + ",".join(str(m) for m in self.quotients) + "]"


def _cf_value(quotients) -> Fraction:
    # Empty lists evaluate to 0; used for the degenerate interval endpoint.
    value = Fraction(0)
    for m in reversed(quotients):
        value = Fraction(1, m + value)
    return value


def cf_expand(s) -> ContinuedFraction:
    """Continued fraction of a slope in (0, 1].

    >>> cf_expand(Slope(5, 17)).quotients
    (3, 2, 2)
    """
    if isinstance(s, Slope):
        if s.is_infinity:
            raise ValueError("cannot expand infinity")
        f = s.as_fraction()
    else:
        f = Fraction(s)
    if not 0 < f <= 1:
        raise ValueError(f"slope {f} is not in (0, 1]")
    quotients = []
    num, den = f.denominator, f.numerator  # start from 1/f >= 1
    while den:
        q, rem = divmod(num, den)
        quotients.append(q)
        num, den = den, rem
    return ContinuedFraction(tuple(quotients))


def cf_value(cf: ContinuedFraction) -> Slope:
    return cf.slope()


@dataclass(frozen=True)
class FundamentalDomain:
    """The two closed intervals [0, r1] and [r2, 1] attached to a slope r.

    r1 and r2 are the Farey neighbours of r cut off by the edges bounding
    the fundamental region; either interval may degenerate to a point.
    """

    r: Slope
    i1: tuple[Slope, Slope]
    i2: tuple[Slope, Slope]

    def contains(self, s: Slope) -> bool:
        if s.is_infinity:
            return False
        return (self.i1[0] <= s <= self.i1[1]) or (self.i2[0] <= s <= self.i2[1])

    def representatives(self) -> tuple[Slope, Slope, Slope, Slope]:
        """Interval endpoints plus the two exceptional representatives."""
        return (self.i1[1], self.i2[0], INFINITY, self.r)


def fundamental_intervals(r: Slope) -> FundamentalDomain:
    """Intervals [0, r1] and [r2, 1] for 0 < r < 1.

    With r = [m1, ..., mk], one endpoint is [m1, ..., m_{k-1}] and the
    other [m1, ..., m_{k-1}, mk - 1]; which is which depends on the parity
    of k.  For r = 1/p the first interval degenerates to {0}, and for
    r = (p-1)/p the second degenerates to {1}.
    """
    if r.is_infinity or not ZERO < r < ONE:
        raise ValueError(f"slope {r} is not strictly between 0 and 1")
    ms = cf_expand(r).quotients
    head = Slope.from_fraction(_cf_value(ms[:-1]))
    decremented = list(ms[:-1]) + [ms[-1] - 1]
    if decremented[-1] == 0:
        decremented = decremented[:-1]
    dec = Slope.from_fraction(_cf_value(decremented))
    if len(ms) % 2 == 1:
        r1, r2 = head, dec
    else:
        r1, r2 = dec, head
    return FundamentalDomain(r=r, i1=(ZERO, r1), i2=(r2, ONE))


def gamma_hat_generators(r: Slope) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """The four bounding reflections of the fundamental region at r.

    Two fix infinity (edges <0, inf> and <1, inf>), two fix r (edges
    <r1, r> and <r, r2>).
    """
    fd = fundamental_intervals(r)
    return (reflection_in_edge(ZERO, INFINITY),
            reflection_in_edge(ONE, INFINITY),
            reflection_in_edge(fd.i1[1], r),
            reflection_in_edge(r, fd.i2[0]))


def reduce_to_fundamental(r: Slope, s: Slope) -> Slope:
    """The unique representative of s in [0, r1] ∪ [r2, 1] ∪ {inf, r}.

    Reduction alternates translation/flip normalisation of s into
    [0, 1] ∪ {inf} with one bounding reflection at r whenever s lies
    strictly between r1 and r2 but is not r itself.  Each reflection
    crosses a wall separating s from the fundamental region, so the
    walk terminates; the step cap only guards against bugs.
    """
    fd = fundamental_intervals(r)
    if s.is_infinity:
        return INFINITY
    r_frac = r.as_fraction()
    r1 = fd.i1[1].as_fraction()
    r2 = fd.i2[0].as_fraction()
    g1 = reflection_in_edge(fd.i1[1], r)
    g2 = reflection_in_edge(r, fd.i2[0])
    x = s.as_fraction()
    budget = 10 * (abs(s.numerator).bit_length() + s.denominator.bit_length()
                   + r.numerator.bit_length() + r.denominator.bit_length()) + 64
    for _ in range(budget):
        # Translations s -> s + 2n and the flip s -> -s land x in [0, 1].
        x -= 2 * math.floor(x / 2)
        if x > 1:
            x = 2 - x
        if x == r_frac:
            return r
        if x <= r1 or x >= r2:
            return Slope.from_fraction(x)
        g = g1 if x < r_frac else g2
        image = apply_matrix(g, Slope.from_fraction(x))
        if image.is_infinity:
            return INFINITY
        x = image.as_fraction()
    raise ReductionError(f"reduction of {s} at r={r} did not terminate")


def null_homotopic(r: Slope, s: Slope) -> bool:
    """True when s reduces to infinity or to r itself."""
    reduced = reduce_to_fundamental(r, s)
    return reduced == INFINITY or reduced == r


def tau(p: int, s: Slope) -> Slope:
    """The involution c/d -> c/(c*p - d); swaps infinity with 1/p.

    >>> tau(3, Slope(1, 2))
    Slope(1, 1)
    """
    if p < 2:
        raise ValueError("tau needs p >= 2")
    c, d = s.numerator, s.denominator
    return Slope(c, c * p - d)


def orbit_equivalent_extended(p: int, s: Slope, s2: Slope) -> bool:
    """Same orbit under the reflection group at 1/p extended by tau."""
    r = Slope(1, p)
    a = reduce_to_fundamental(r, s)
    b = reduce_to_fundamental(r, s2)
    return a == b or tau(p, a) == b
