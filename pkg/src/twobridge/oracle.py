"""Independent conjugacy cross-examination for the groups <a, b | u_{1/p}>.

Three one-sided tools, each sound and none complete:

* witness_search: bidirectional breadth-first search over cyclic words,
  where one move rotates the word and appends an element of the
  symmetrized relator set, then reduces cyclically.  Reaching the target
  (or its inverse) proves conjugacy; the verdict carries two replayable
  insertion traces meeting at a common cyclic word.
* abelianization_separates: exponent-sum images.  The relator kills
  a*b^{-1} for odd p (quotient Z) and abelianizes freely for even p
  (quotient Z x Z); distinct images of conjugation-invariant data prove
  non-conjugacy.
* finite_quotient_separates: permutation representations up to a degree
  bound.  If some assignment (a, b) -> S_d kills the relator and the two
  words land in different S_d conjugacy classes (cycle types), the pair
  is separated.

"unknown" is an honest outcome when budgets run out.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .cancel import symmetrize
from .farey import Slope
from .relator import riley_word
from .words import (canonical_rotation, check_word, cyclic_reduce,
                    free_reduce, inverse_word, is_cyclically_reduced)


@dataclass(frozen=True)
class SearchBudget:
    max_steps: int = 200_000
    max_len: int | None = None
    max_insertions: int | None = None
    timeout: float | None = None


@dataclass(frozen=True)
class OracleVerdict:
    status: str  # conjugate-witnessed | separated | unknown
    witness: dict | None = None


def _canon(w):
    return canonical_rotation(cyclic_reduce(free_reduce(w)))


def _append_cyclic(x, y):
    """Canonical cyclic reduction of x*y for already-reduced x and y.

    Cancellation can only happen at the two junctions, which is much
    cheaper than a full scan inside the search loop.
    """
    i, j = len(x), 0
    while i > 0 and j < len(y) and x[i - 1] == y[j].swapcase():
        i -= 1
        j += 1
    merged = x[:i] + y[j:]
    while len(merged) > 1 and merged[0] == merged[-1].swapcase():
        merged = merged[1:-1]
    return canonical_rotation(merged)


def _apply_move(state, shift, rho):
    rotated = state[shift:] + state[:shift]
    return _canon(rotated + rho)


def replay_trace(p: int, start, trace):
    """Re-run an insertion trace, checking every inserted word is a relator."""
    relators = symmetrize(riley_word(Slope(1, p)).word)
    state = _canon(start)
    for step in trace:
        rho = step["insert"]
        if rho not in relators:
            raise ValueError(f"trace inserts non-relator {rho!r}")
        state = _apply_move(state, step["rotate"], rho)
    return state


def witness_search(p: int, w1, w2, budget: SearchBudget | None = None) -> OracleVerdict:
    """Search for a conjugacy witness between w1 and w2 (or its inverse).

    Both ends grow breadth-first; a meeting cyclic word yields two
    traces which replay_trace can verify independently.  Exhausting the
    budget returns "unknown", never an error.
    """
    check_word(w1)
    check_word(w2)
    if not (is_cyclically_reduced(w1) and is_cyclically_reduced(w2)):
        raise ValueError("witness search expects cyclically reduced words")
    if p < 2:
        raise ValueError("need p >= 2")
    base = riley_word(Slope(1, p)).word
    relators = sorted(symmetrize(base).elements)
    budget = budget or SearchBudget()
    relator_len = len(base)
    max_len = budget.max_len
    if max_len is None:
        max_len = max(len(w1), len(w2)) + 2 * relator_len + 2
    max_ins = budget.max_insertions
    if max_ins is None:
        max_ins = (4 * relator_len + len(w1) + len(w2)) // max(1, relator_len)
    deadline = None if budget.timeout is None else time.monotonic() + budget.timeout

    start = _canon(w1)
    goals = {_canon(w2): w2, _canon(inverse_word(w2)): inverse_word(w2)}
    if start in goals:
        return OracleVerdict("conjugate-witnessed", {
            "meet": start, "seed": goals[start],
            "trace_from_w1": [], "trace_from_w2": []})

    # visited: state -> (parent_state, (shift, rho)) with None at the roots.
    sides = [
        {"visited": {start: None}, "frontier": [start], "depth": 0,
         "root": {start: w1}},
        {"visited": {goal: None for goal in goals},
         "frontier": list(goals), "depth": 0,
         "root": dict(goals)},
    ]
    per_side = (max_ins + 1) // 2
    steps = 0

    def expand(index):
        nonlocal steps
        side = sides[index]
        other = sides[1 - index]
        new_frontier = []
        for state in side["frontier"]:
            for shift in range(len(state)):
                rotated = state[shift:] + state[:shift]
                for rho in relators:
                    steps += 1
                    if steps > budget.max_steps:
                        return None, True
                    if deadline is not None and time.monotonic() > deadline:
                        return None, True
                    child = _append_cyclic(rotated, rho)
                    if not child or len(child) > max_len:
                        continue
                    if len(child) == len(rotated) + len(rho):
                        continue  # no cancellation: never on a witness path
                    if child in side["visited"]:
                        continue
                    side["visited"][child] = (state, (shift, rho))
                    new_frontier.append(child)
                    if child in other["visited"]:
                        return child, False
        side["frontier"] = new_frontier
        side["depth"] += 1
        return None, False

    meet = None
    exhausted = False
    while not exhausted:
        options = [i for i in (0, 1)
                   if sides[i]["frontier"] and sides[i]["depth"] < per_side]
        if not options:
            # Let the forward side keep going if total depth allows.
            if (sides[0]["frontier"]
                    and sides[0]["depth"] + sides[1]["depth"] < max_ins):
                options = [0]
            else:
                break
        index = min(options, key=lambda i: len(sides[i]["frontier"]))
        meet, exhausted = expand(index)
        if meet is not None:
            break
    if meet is None:
        return OracleVerdict("unknown", {"steps": steps})

    trace_a = _walk_back(sides[0], meet if meet in sides[0]["visited"] else None)
    trace_b = _walk_back(sides[1], meet if meet in sides[1]["visited"] else None)
    root_b = _root_of(sides[1], meet)
    witness = {"meet": meet, "seed": root_b,
               "trace_from_w1": trace_a, "trace_from_w2": trace_b}
    if replay_trace(p, w1, trace_a) != meet or replay_trace(p, root_b, trace_b) != meet:
        raise RuntimeError("witness trace failed to replay")  # search bug
    return OracleVerdict("conjugate-witnessed", witness)


def _walk_back(side, state):
    if state is None:
        raise RuntimeError("meeting state missing from search side")
    moves = []
    while side["visited"][state] is not None:
        state, (shift, rho) = side["visited"][state]
        moves.append({"rotate": shift, "insert": rho})
    moves.reverse()
    return moves


def _root_of(side, state):
    while side["visited"][state] is not None:
        state, _ = side["visited"][state]
    return side["root"][state]


# -- abelian and finite quotients ----------------------------------------


def abelian_image(p: int, w):
    """Image of w in the abelianized group: an integer for odd p (a = b
    there), an exponent pair for even p."""
    check_word(w)
    ea = w.count("a") - w.count("A")
    eb = w.count("b") - w.count("B")
    if p % 2 == 1:
        return ea + eb
    return (ea, eb)


def abelianization_separates(p: int, w1, w2) -> bool:
    """True when exponent sums distinguish w1 from both w2 and w2^{-1}."""
    if p < 2:
        raise ValueError("need p >= 2")
    img1 = abelian_image(p, w1)
    img2 = abelian_image(p, w2)
    img2_inv = abelian_image(p, inverse_word(w2))
    return img1 != img2 and img1 != img2_inv


def _perm_mul(p1, p2):
    # (p1 * p2)(i) = p1(p2(i))
    return tuple(p1[p2[i]] for i in range(len(p1)))


def _perm_inv(perm):
    out = [0] * len(perm)
    for i, v in enumerate(perm):
        out[v] = i
    return tuple(out)


def cycle_type(perm):
    n = len(perm)
    seen = [False] * n
    sizes = []
    for i in range(n):
        if seen[i]:
            continue
        size = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            size += 1
        sizes.append(size)
    return tuple(sorted(sizes, reverse=True))


def permutation_image(w, perm_a, perm_b):
    n = len(perm_a)
    images = {"a": perm_a, "b": perm_b,
              "A": _perm_inv(perm_a), "B": _perm_inv(perm_b)}
    out = tuple(range(n))
    for ch in w:
        out = _perm_mul(out, images[ch])
    return out


def _partitions(n):
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in _partitions(n - first):
            if not rest or rest[0] <= first:
                yield (first,) + rest


def _partition_rep(partition, n):
    perm = list(range(n))
    at = 0
    for size in partition:
        for k in range(size):
            perm[at + k] = at + (k + 1) % size
        at += size
    return tuple(perm)


_HOM_CACHE = {}
_HOM_CAP = 4000


def relator_homs(p: int, degree: int):
    """Assignments (a, b) -> S_degree killing the relator of 1/p.

    The image of a is normalised to one cycle-type representative per
    class (conjugating a homomorphism changes nothing we test).  For odd
    p the generators are conjugate in the group, so b may range over the
    class of a only; for even p it ranges over all of S_degree.  The
    list is capped for speed; separation stays sound, only less complete.
    """
    key = (p, degree)
    if key in _HOM_CACHE:
        return _HOM_CACHE[key]
    relator = riley_word(Slope(1, p)).word
    identity = tuple(range(degree))
    homs = []
    for partition in _partitions(degree):
        perm_a = _partition_rep(partition, degree)
        type_a = cycle_type(perm_a)
        for perm_b in itertools.permutations(range(degree)):
            if p % 2 == 1 and cycle_type(perm_b) != type_a:
                continue
            if permutation_image(relator, perm_a, perm_b) == identity:
                homs.append((perm_a, perm_b))
                if len(homs) >= _HOM_CAP:
                    _HOM_CACHE[key] = tuple(homs)
                    return _HOM_CACHE[key]
    _HOM_CACHE[key] = tuple(homs)
    return _HOM_CACHE[key]


def finite_quotient_separates(p: int, w1, w2, max_degree: int = 7) -> OracleVerdict:
    """Look for a permutation quotient whose cycle types split the pair.

    Cycle types are conjugation-invariant in the full symmetric group,
    so a type mismatch soundly rules out conjugacy in the quotient and
    hence in the group.  A permutation shares its type with its inverse,
    which makes the w2 and w2^{-1} comparisons coincide.
    """
    check_word(w1)
    check_word(w2)
    if p < 2:
        raise ValueError("need p >= 2")
    for degree in range(2, max_degree + 1):
        for perm_a, perm_b in relator_homs(p, degree):
            t1 = cycle_type(permutation_image(w1, perm_a, perm_b))
            t2 = cycle_type(permutation_image(w2, perm_a, perm_b))
            if t1 != t2:
                return OracleVerdict("separated", {
                    "degree": degree,
                    "perm_a": list(perm_a), "perm_b": list(perm_b),
                    "cycle_type_w1": list(t1), "cycle_type_w2": list(t2)})
    return OracleVerdict("unknown", None)


def cross_examine(p: int, w1, w2, budget: SearchBudget | None = None,
                  max_degree: int = 7) -> OracleVerdict:
    """Witness search first, then separation; unknown when both fail."""
    found = witness_search(p, w1, w2, budget)
    if found.status == "conjugate-witnessed":
        return found
    if abelianization_separates(p, w1, w2):
        return OracleVerdict("separated", {"by": "abelianization",
                                           "image_w1": abelian_image(p, w1),
                                           "image_w2": abelian_image(p, w2)})
    split = finite_quotient_separates(p, w1, w2, max_degree)
    if split.status == "separated":
        return split
    return OracleVerdict("unknown", None)
