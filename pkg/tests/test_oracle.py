import pytest

from twobridge.farey import Slope
from twobridge.oracle import (OracleVerdict, SearchBudget, abelian_image,
                              abelianization_separates, cross_examine,
                              cycle_type, finite_quotient_separates,
                              permutation_image, relator_homs, replay_trace,
                              witness_search)
from twobridge.relator import riley_word
from twobridge.words import canonical_rotation, inverse_word, reconstruct


def test_witness_zero_steps():
    verdict = witness_search(3, "abAB", "abAB")
    assert verdict.status == "conjugate-witnessed"
    assert verdict.witness["trace_from_w1"] == []
    # cyclic rotations and inverses count as reached
    verdict = witness_search(3, "abAB", "ABab")
    assert verdict.status == "conjugate-witnessed"
    verdict = witness_search(3, "abAB", inverse_word("abAB"))
    assert verdict.status == "conjugate-witnessed"


def test_witness_partner_pair_trefoil():
    w1 = reconstruct("a", (2, 2))
    w2 = reconstruct("a", (1, 1))
    verdict = witness_search(3, w1, w2)
    assert verdict.status == "conjugate-witnessed"
    witness = verdict.witness
    end_a = replay_trace(3, w1, witness["trace_from_w1"])
    end_b = replay_trace(3, witness["seed"], witness["trace_from_w2"])
    assert end_a == end_b == witness["meet"]


def test_witness_two_ring_pair():
    w1 = riley_word(Slope(2, 3)).word
    w2 = riley_word(Slope(2, 7)).word
    verdict = witness_search(5, w1, w2)
    assert verdict.status == "conjugate-witnessed"
    total = len(verdict.witness["trace_from_w1"]) \
        + len(verdict.witness["trace_from_w2"])
    assert total == 2  # one insertion per ring face


def test_witness_unknown_under_small_budget():
    verdict = witness_search(2, "ab", "aB", SearchBudget(max_steps=200))
    assert verdict.status == "unknown"


def test_witness_validates_input():
    with pytest.raises(ValueError):
        witness_search(3, "abA", "ab")
    with pytest.raises(ValueError):
        witness_search(1, "ab", "ab")


def test_replay_rejects_non_relator_insertions():
    with pytest.raises(ValueError):
        replay_trace(3, "abAB", [{"rotate": 0, "insert": "ab"}])


def test_exponent_flip_is_already_a_rotation():
    # Flipping every exponent preserves the block sequence, so the result
    # is a rotation of the word or of its inverse: a zero-step witness.
    for p, s in ((2, Slope(1, 1)), (3, Slope(1, 2)), (3, Slope(2, 3)),
                 (5, Slope(2, 3))):
        w = riley_word(s).word
        flipped = w.swapcase()
        verdict = witness_search(p, w, flipped)
        assert verdict.status == "conjugate-witnessed"
        assert verdict.witness["trace_from_w1"] == []
        assert verdict.witness["trace_from_w2"] == []


def test_abelian_images():
    assert abelian_image(2, "ab") == (1, 1)
    assert abelian_image(2, "aB") == (1, -1)
    assert abelian_image(3, "abaBAB") == 0
    assert abelian_image(3, "ab") == 2


def test_abelianization_separates_examples():
    assert abelianization_separates(2, "ab", "aB")
    assert not abelianization_separates(3, "abAB", "aB")  # conjugate pair
    assert not abelianization_separates(3, "ab", "ab")


def test_cycle_type_and_images():
    assert cycle_type((1, 2, 0, 3)) == (3, 1)
    sigma_a = (1, 0, 2)  # (01)
    sigma_b = (0, 2, 1)  # (12)
    relator = riley_word(Slope(1, 3)).word
    assert permutation_image(relator, sigma_a, sigma_b) == (0, 1, 2)
    assert (sigma_a, sigma_b) in relator_homs(3, 3)


def test_finite_quotient_separates():
    verdict = finite_quotient_separates(2, "ab", "aB", max_degree=4)
    assert verdict.status == "separated"
    assert verdict.witness["degree"] <= 4
    # identical words can never be separated
    assert finite_quotient_separates(3, "ab", "ab").status == "unknown"
    # conjugates can never be separated (soundness)
    assert finite_quotient_separates(3, "abAB", "aB", 5).status == "unknown"


def test_cross_examine_pipeline():
    assert cross_examine(3, "abAB", "aB").status == "conjugate-witnessed"
    assert cross_examine(2, "ab", "aB").status == "separated"
    verdict = cross_examine(3, "ab", "ab", SearchBudget(max_steps=10))
    assert verdict.status == "conjugate-witnessed"


def test_verdicts_never_contradict():
    pairs = [(3, "ab", "abAB"), (3, "abAB", "aB"), (2, "ab", "aB"),
             (5, riley_word(Slope(2, 3)).word, riley_word(Slope(2, 7)).word)]
    for p, w1, w2 in pairs:
        witnessed = witness_search(p, w1, w2).status == "conjugate-witnessed"
        separated = abelianization_separates(p, w1, w2) or \
            finite_quotient_separates(p, w1, w2, 5).status == "separated"
        assert not (witnessed and separated)
