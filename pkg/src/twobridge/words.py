"""Words and cyclic words in two generators.

Lowercase a, b are the generators; uppercase A, B are their inverses.
Words are plain strings over "abAB".  A cyclic word is a cyclically
reduced word considered up to rotation; two cyclic words are equal
exactly when one is a rotation of the other, and we store the
lexicographically least rotation as the canonical representative.

The block sequence of a reduced word lists the lengths of its maximal
runs of constant sign (all-positive or all-negative letters); the cyclic
variant merges the first and last run when they share a sign.
"""

from __future__ import annotations

LETTERS = "abAB"


def check_word(w):
    if not isinstance(w, str):
        raise TypeError("words are strings over 'abAB'")
    for ch in w:
        if ch not in LETTERS:
            raise ValueError(f"bad letter {ch!r} in word {w!r}")
    return w


def invert_letter(x):
    return x.swapcase()


def inverse_word(w):
    """Formal inverse: reverse the word and invert every letter.

    >>> inverse_word("abAB")
    'baBA'
    """
    return w.swapcase()[::-1]


def letter_sign(x):
    return 1 if x.islower() else -1


def generator_of(x):
    return x.lower()


def free_reduce(w):
    """Cancel adjacent inverse pairs until none remain.

    >>> free_reduce("aBbaB")
    'aaB'
    >>> free_reduce("abBA")
    ''
    """
    check_word(w)
    out = []
    for ch in w:
        if out and out[-1] == invert_letter(ch):
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def is_reduced(w):
    return all(w[i + 1] != invert_letter(w[i]) for i in range(len(w) - 1))


def cyclic_reduce(w):
    """Freely reduce, then strip cancelling first/last letters."""
    w = free_reduce(w)
    while len(w) > 1 and w[0] == invert_letter(w[-1]):
        w = w[1:-1]
    return w


def is_cyclically_reduced(w):
    if not is_reduced(w):
        return False
    return len(w) < 2 or w[0] != invert_letter(w[-1])


def rotations(w):
    return [w[i:] + w[:i] for i in range(len(w))] if w else [""]


def canonical_rotation(w):
    return min(rotations(w))


def cyclic_words_equal(u, v):
    """Visual equality of cyclic words: v is a rotation of u."""
    return len(u) == len(v) and (u == v or v in u + u)


def is_alternating(w, cyclic=False):
    """True when the two generators strictly alternate along w.

    >>> is_alternating("abAB")
    True
    >>> is_alternating("aba", cyclic=True)
    False
    """
    check_word(w)
    n = len(w)
    span = n if cyclic else n - 1
    for i in range(span):
        if generator_of(w[i]) == generator_of(w[(i + 1) % n]):
            return False
    return True


def s_sequence(w):
    """Lengths of the maximal constant-sign runs of a reduced word.

    >>> s_sequence("abaBAB")
    (3, 3)
    """
    check_word(w)
    if not w:
        raise ValueError("the empty word has no block sequence")
    if not is_reduced(w):
        raise ValueError(f"word {w!r} is not reduced")
    runs = []
    current = 1
    for i in range(1, len(w)):
        if letter_sign(w[i]) == letter_sign(w[i - 1]):
            current += 1
        else:
            runs.append(current)
            current = 1
    runs.append(current)
    return tuple(runs)


def cyclic_s_sequence(w):
    """Cyclic block sequence of a cyclically reduced word.

    >>> cyclic_s_sequence("aBa")
    CyclicSequence((1, 2))
    """
    if not is_cyclically_reduced(w):
        raise ValueError(f"word {w!r} is not cyclically reduced")
    runs = list(s_sequence(w))
    if len(runs) > 1 and letter_sign(w[0]) == letter_sign(w[-1]):
        runs[0] += runs.pop()
    return CyclicSequence(tuple(runs))


def reconstruct(initial, sseq):
    """The alternating word with the given initial letter and run lengths.

    Generators strictly alternate along the whole word; the sign is
    constant within each run and flips between runs.

    >>> reconstruct("a", (3, 3))
    'abaBAB'
    >>> reconstruct("A", (1, 1))
    'Ab'
    """
    if initial not in LETTERS:
        raise ValueError(f"bad initial letter {initial!r}")
    runs = tuple(int(n) for n in sseq)
    if not runs or any(n < 1 for n in runs):
        raise ValueError("run lengths must be positive")
    first_gen = generator_of(initial)
    other = "b" if first_gen == "a" else "a"
    sign = letter_sign(initial)
    out = []
    pos = 0
    for block, length in enumerate(runs):
        block_sign = sign if block % 2 == 0 else -sign
        for _ in range(length):
            gen = first_gen if pos % 2 == 0 else other
            out.append(gen if block_sign > 0 else gen.upper())
            pos += 1
    return "".join(out)


def format_sseq(seq):
    return "(" + ",".join(str(n) for n in seq) + ")"


class CyclicSequence:
    """A sequence of positive integers up to cyclic rotation."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        entries = tuple(int(n) for n in entries)
        if not entries:
            raise ValueError("cyclic sequences are nonempty")
        if any(n < 1 for n in entries):
            raise ValueError("cyclic sequence entries must be positive")
        self.entries = min(entries[i:] + entries[:i] for i in range(len(entries)))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if isinstance(other, CyclicSequence):
            return self.entries == other.entries
        if isinstance(other, tuple):
            return self == CyclicSequence(other)
        return NotImplemented

    def __hash__(self):
        return hash(("CyclicSequence", self.entries))

    def __repr__(self):
        return f"CyclicSequence({self.entries!r})"

    def __str__(self):
        return "(" + format_sseq(self.entries) + ")"

    def total(self):
        return sum(self.entries)

    def reversed_(self):
        return CyclicSequence(tuple(reversed(self.entries)))

    def is_reversal_symmetric(self):
        return self == self.reversed_()

    def count_contiguous(self, pattern):
        """Occurrences of pattern as a contiguous cyclic run (no wrapping
        past a full period: patterns longer than the sequence never occur)."""
        pattern = tuple(pattern)
        n, k = len(self.entries), len(pattern)
        if k == 0 or k > n:
            return 0
        doubled = self.entries + self.entries
        return sum(1 for i in range(n) if doubled[i:i + k] == pattern)

    def contains_contiguous(self, pattern):
        return self.count_contiguous(pattern) > 0


class CyclicWord:
    """A cyclically reduced word up to rotation (canonical rotation kept)."""

    __slots__ = ("word",)

    def __init__(self, w):
        check_word(w)
        if not w:
            raise ValueError("cyclic words are nonempty")
        if not is_cyclically_reduced(w):
            raise ValueError(f"word {w!r} is not cyclically reduced")
        self.word = canonical_rotation(w)

    def __len__(self):
        return len(self.word)

    def __eq__(self, other):
        if isinstance(other, CyclicWord):
            return self.word == other.word
        if isinstance(other, str):
            return cyclic_words_equal(self.word, other)
        return NotImplemented

    def __hash__(self):
        return hash(("CyclicWord", self.word))

    def __repr__(self):
        return f"CyclicWord({self.word!r})"

    def __str__(self):
        return f"({self.word})"

    def inverse(self):
        return CyclicWord(inverse_word(self.word))

    def s_sequence(self):
        return cyclic_s_sequence(self.word)

    def is_alternating(self):
        return is_alternating(self.word, cyclic=True)

    def rotations(self):
        return rotations(self.word)
