"""Symmetrized relator sets, pieces, and small-cancellation checks.

A symmetrized set R holds every rotation of a cyclically reduced word
and of its inverse.  A piece is a nonempty common prefix of two distinct
elements of R; pieces are closed under taking prefixes, which makes
minimal piece decompositions a jump problem: from position i of a word
one may consume any 1..L(i) letters, where L(i) is the longest piece
starting there.

Condition C(p) requires every element of R to need at least p pieces;
condition T(4) excludes cancellation around short cycles of elements:
for chains of length two and three with no adjacent inverse pair, some
adjacent product must multiply without cancellation.
"""

from __future__ import annotations

from .words import (canonical_rotation, check_word, inverse_word,
                    invert_letter, is_cyclically_reduced, rotations)


class SymmetrizedSet:
    """All rotations of a cyclically reduced base word and its inverse."""

    def __init__(self, base):
        check_word(base)
        if not base:
            raise ValueError("cannot symmetrize the empty word")
        if not is_cyclically_reduced(base):
            raise ValueError(f"word {base!r} is not cyclically reduced")
        self.base = base
        self.elements = frozenset(rotations(base)) | frozenset(
            rotations(inverse_word(base)))
        self._sorted = tuple(sorted(self.elements))
        self._pieces = None
        self._trie = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self._sorted)

    def __contains__(self, w):
        return w in self.elements

    def __eq__(self, other):
        if isinstance(other, SymmetrizedSet):
            return self.elements == other.elements
        return NotImplemented

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"SymmetrizedSet({self.base!r})"

    @property
    def pieces(self):
        if self._pieces is None:
            self._pieces = enumerate_pieces(self)
        return self._pieces

    @property
    def _piece_trie(self):
        if self._trie is None:
            root = {}
            for piece in self.pieces:
                node = root
                for ch in piece:
                    node = node.setdefault(ch, {})
            self._trie = root
        return self._trie

    def longest_piece_prefix(self, text, start=0):
        """Length of the longest piece that is a prefix of text[start:]."""
        node = self._piece_trie
        depth = 0
        for i in range(start, len(text)):
            node = node.get(text[i])
            if node is None:
                break
            depth += 1
        return depth


def symmetrize(u) -> SymmetrizedSet:
    return SymmetrizedSet(u)


def enumerate_pieces(R: SymmetrizedSet) -> frozenset:
    """All pieces of R: nonempty common prefixes of distinct elements.

    Every pairwise common prefix is a prefix of the common prefix of
    two *sorted-adjacent* elements, so scanning adjacent pairs suffices.
    """
    elements = R._sorted
    pieces = set()
    for first, second in zip(elements, elements[1:]):
        common = 0
        for x, y in zip(first, second):
            if x != y:
                break
            common += 1
        for length in range(1, common + 1):
            pieces.add(first[:length])
    return frozenset(pieces)


def _jump_lengths(R, w):
    return [R.longest_piece_prefix(w, i) for i in range(len(w))]


def min_piece_count(R: SymmetrizedSet, w) -> int | None:
    """Minimal number of pieces of R concatenating to w, or None.

    Pieces are prefix-closed, so from position i any stretch of
    1..L(i) letters is a piece and a greedy interval sweep is optimal.
    """
    check_word(w)
    if not w:
        return 0
    jumps = _jump_lengths(R, w)
    n = len(w)
    end = 0
    furthest = 0
    count = 0
    i = 0
    while end < n:
        while i <= end:
            if i + jumps[i] > furthest:
                furthest = i + jumps[i]
            i += 1
        if furthest == end:
            return None
        count += 1
        end = furthest
    return count


def min_piece_decomposition(R: SymmetrizedSet, w):
    """One minimal decomposition of w into pieces, or None."""
    count = min_piece_count(R, w)
    if count is None:
        return None
    if count == 0:
        return []
    jumps = _jump_lengths(R, w)
    n = len(w)
    # best[i] = minimal pieces to cover w[:i]; walk back greedily.
    best = [None] * (n + 1)
    best[0] = 0
    for i in range(n):
        if best[i] is None:
            continue
        for step in range(1, jumps[i] + 1):
            j = i + step
            if best[j] is None or best[j] > best[i] + 1:
                best[j] = best[i] + 1
    cut = n
    parts = []
    while cut > 0:
        for i in range(cut - 1, -1, -1):
            if best[i] is not None and best[i] == best[cut] - 1 \
                    and cut - i <= jumps[i]:
                parts.append(w[i:cut])
                cut = i
                break
        else:
            raise AssertionError("decomposition backtrack failed")
    parts.reverse()
    return parts


def check_C(R: SymmetrizedSet, p: int) -> bool:
    """Every element of R that decomposes into pieces needs >= p of them."""
    if p < 2:
        raise ValueError("need p >= 2")
    for w in R:
        count = min_piece_count(R, w)
        if count is not None and count < p:
            return False
    return True


def check_T(R: SymmetrizedSet, q: int) -> bool:
    """No all-cancelling chain of n elements of R for any 3 <= n < q.

    A chain w_1, ..., w_n (indices cyclic) is admissible when no
    neighbour pair is mutually inverse; it violates T(q) if every
    product w_i w_{i+1} cancels.  Chains shorter than 3 are not part of
    the condition (they correspond to interior vertices of degree < 3,
    which do not occur), so T(3) always holds and T(4) is exactly the
    absence of a violating triple.
    """
    if q not in (3, 4):
        raise ValueError("only T(3) and T(4) are supported")
    return t_violation(R, q) is None


def _t_chain_of_three(R, by_first):
    for w1 in R:
        inv_w1 = inverse_word(w1)
        want_last = invert_letter(w1[0])
        for w2 in by_first.get(invert_letter(w1[-1]), ()):
            if w2 == inv_w1:
                continue
            inv_w2 = inverse_word(w2)
            for w3 in by_first.get(invert_letter(w2[-1]), ()):
                if w3[-1] != want_last:
                    continue
                if w3 == inv_w2 or w3 == inv_w1:
                    continue
                return (w1, w2, w3)
    return None


def t_violation(R: SymmetrizedSet, q: int):
    """A violating chain for T(q), or None (witness form of check_T)."""
    if q not in (3, 4):
        raise ValueError("only T(3) and T(4) are supported")
    if q == 3:
        return None
    by_first = {}
    for w in R:
        by_first.setdefault(w[0], []).append(w)
    return _t_chain_of_three(R, by_first)


def maximal_n_pieces(R: SymmetrizedSet, u, n: int):
    """Maximal products of at most n pieces inside the cyclic word (u).

    A qualifying subword is maximal when it is not properly contained,
    as a subword of the cyclic word, in another qualifying subword.
    Results are ordered by the position of their first occurrence.
    """
    check_word(u)
    if n < 1:
        raise ValueError("need n >= 1")
    if not is_cyclically_reduced(u):
        raise ValueError(f"word {u!r} is not cyclically reduced")
    if canonical_rotation(u) != canonical_rotation(R.base) and \
            canonical_rotation(u) != canonical_rotation(inverse_word(R.base)):
        raise ValueError("u must be the base cyclic word of R")
    size = len(u)
    doubled = u + u
    first_seen = {}
    for start in range(size):
        window = doubled[start:start + size]
        jumps = _jump_lengths(R, window)
        # Positions reachable with <= n piece-jumps form an interval.
        reach = 0
        for _ in range(n):
            nxt = reach
            for x in range(reach + 1):
                if x + jumps[x] > nxt:
                    nxt = x + jumps[x]
            if nxt == reach:
                break
            reach = min(nxt, size)
        for length in range(1, reach + 1):
            first_seen.setdefault(window[:length], start)
    candidates = sorted(first_seen, key=lambda w: (first_seen[w], len(w), w))
    maximal = []
    for w in candidates:
        if any(w != other and w in other for other in first_seen):
            continue
        maximal.append(w)
    return maximal
