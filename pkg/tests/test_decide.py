from math import gcd

import pytest

from twobridge.decide import (HomotopyVerdict, complement_cs, decide_homotopic,
                              partner_slope, partner_terms_check)
from twobridge.diagram import (inner_cyclic_blocks, is_reduced_diagram,
                               validate_structure)
from twobridge.cancel import symmetrize
from twobridge.farey import (INFINITY, ZERO, Slope, fundamental_intervals,
                             null_homotopic, orbit_equivalent_extended, tau)
from twobridge.relator import VerificationError, riley_word, s_of_slope
from twobridge.words import CyclicSequence


def test_partner_slope_examples():
    assert partner_slope(3, Slope(1, 2)) == Slope(1, 1)
    assert partner_slope(5, Slope(2, 3)) == Slope(2, 7)
    assert partner_slope(4, Slope(1, 3)) == Slope(1, 1)
    with pytest.raises(ValueError):
        partner_slope(5, Slope(1, 5))
    with pytest.raises(ValueError):
        partner_slope(5, ZERO)
    with pytest.raises(ValueError):
        partner_slope(5, INFINITY)


def test_partner_slope_agrees_with_tau():
    for p in range(2, 8):
        for den in range(1, 20):
            for num in range(1, 6):
                if gcd(num, den) != 1 or Slope(num, den) == Slope(1, p):
                    continue
                s = Slope(num, den)
                assert partner_slope(p, s) == tau(p, s)


def test_complement_cs():
    assert complement_cs(5, CyclicSequence((2, 1, 2, 1))) == CyclicSequence((3, 4, 3, 4))
    assert complement_cs(4, CyclicSequence((3, 3))) == CyclicSequence((1, 1))
    assert complement_cs(3, (2, 2)) == CyclicSequence((1, 1))
    seq = CyclicSequence((2, 1, 2, 1))
    assert complement_cs(5, complement_cs(5, seq)) == seq
    with pytest.raises(ValueError):
        complement_cs(3, CyclicSequence((3, 1)))


def test_decide_tau_partner_with_certificate():
    verdict = decide_homotopic(3, Slope(1, 2), Slope(1, 1))
    assert verdict.homotopic and verdict.reason == "tau-partner"
    fan = verdict.certificate
    assert fan is not None and fan.map.face_count == 1
    assert validate_structure(fan).ok
    assert is_reduced_diagram(fan, symmetrize(riley_word(Slope(1, 3)).word))
    assert inner_cyclic_blocks(fan) == CyclicSequence(s_of_slope(Slope(1, 1)))


def test_decide_examples():
    verdict = decide_homotopic(2, ZERO, Slope(1, 1))
    assert not verdict.homotopic and verdict.reason == "distinct"
    verdict = decide_homotopic(5, INFINITY, Slope(1, 5))
    assert verdict.homotopic and verdict.reason == "both-null-homotopic"
    verdict = decide_homotopic(3, Slope(1, 2), Slope(1, 2))
    assert verdict.homotopic and verdict.reason == "same-reduced-slope"
    with pytest.raises(ValueError):
        decide_homotopic(1, ZERO, ZERO)


def test_decide_tau_partner_invariant():
    # q1 = q2 and q1/(p1+p2) = 1/p for the reduced representatives.
    for p in (3, 4, 5):
        for den in range(1, 13):
            for num in range(1, 5):
                if gcd(num, den) != 1:
                    continue
                verdict = decide_homotopic(p, Slope(num, den),
                                           tau(p, Slope(num, den)))
                assert verdict.homotopic
                if verdict.reason == "tau-partner":
                    a, b = verdict.reduced_s, verdict.reduced_s2
                    assert a.numerator == b.numerator
                    assert Slope(a.numerator, a.denominator + b.denominator) \
                        == Slope(1, p)


def test_decide_symmetric_and_reflexive():
    slopes = [ZERO, Slope(1, 1), Slope(1, 2), Slope(2, 3), Slope(-1, 2),
              Slope(5, 3), INFINITY, Slope(3, 4)]
    for p in (2, 3, 5):
        for s in slopes:
            assert decide_homotopic(p, s, s).homotopic
            for s2 in slopes:
                one = decide_homotopic(p, s, s2)
                two = decide_homotopic(p, s2, s)
                assert one.homotopic == two.homotopic


def test_decide_matches_orbit_formulation():
    slopes = [ZERO, Slope(1, 1), Slope(1, 2), Slope(1, 3), Slope(2, 3),
              Slope(2, 5), Slope(-2, 3), Slope(4, 3), INFINITY]
    for p in (2, 3, 4):
        r = Slope(1, p)
        for s in slopes:
            for s2 in slopes:
                expected = orbit_equivalent_extended(p, s, s2) or (
                    null_homotopic(r, s) and null_homotopic(r, s2))
                assert decide_homotopic(p, s, s2).homotopic == expected


def test_certificate_entry_sum_law():
    # First half of the outer blocks sums to p1, of the inner to p*q1 - p1.
    for p in (3, 5, 7):
        fd = fundamental_intervals(Slope(1, p))
        for den in range(1, 11):
            for num in range(1, den + 1):
                s = Slope(num, den)
                if gcd(num, den) != 1 or not fd.contains(s) or s == ZERO:
                    continue
                partner = partner_slope(p, s)
                if partner == s:
                    continue
                verdict = decide_homotopic(p, s, partner)
                assert verdict.reason == "tau-partner"
                fan = verdict.certificate
                outer = s_of_slope(s)
                inner = inner_cyclic_blocks(fan)
                q1 = s.numerator
                assert sum(outer[:q1]) == s.denominator
                assert inner.total() // 2 == p * q1 - s.denominator
                assert inner == complement_cs(p, CyclicSequence(outer))
                assert inner == CyclicSequence(s_of_slope(partner))


def test_partner_terms_check():
    for p, s in ((5, Slope(2, 3)), (3, Slope(1, 2)), (7, Slope(3, 4)),
                 (2, Slope(1, 1)), (9, Slope(4, 7)), (4, Slope(3, 4))):
        report = partner_terms_check(p, s)
        assert report.partner == partner_slope(p, s)
        assert report.complement_display \
            == CyclicSequence(s_of_slope(report.partner))
    with pytest.raises(ValueError):
        partner_terms_check(5, ZERO)
    with pytest.raises(ValueError):
        partner_terms_check(5, Slope(1, 9))


def test_verdict_shape():
    verdict = decide_homotopic(4, Slope(1, 3), Slope(1, 1))
    assert isinstance(verdict, HomotopyVerdict)
    assert verdict.reason == "tau-partner"
    assert str(verdict.reduced_s) == "1/3"
    assert str(verdict.reduced_s2) == "1"
