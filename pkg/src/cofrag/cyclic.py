"""The admissible class of unary cyclic automata [0], [1], [2], ...

An index ``g >= 1`` stands for the ``g``-state cycle and ``g = 0`` for the
infinite chain, which is never built as an automaton. Divisibility uses
``d | n  <=>  n = k*d`` for some ``k >= 0``: every ``d`` divides 0 and 0
divides only 0. The order is "is a fragment of": ``le(a, b)  <=>  b | a``, so
[1] is the top, [0] the bottom, join is gcd and meet is lcm.

Python integers are unbounded, so lcm never overflows here.
"""

from __future__ import annotations

import math
from functools import reduce
from typing import Iterable

from .automata import AlphabetError, Automaton, make_cyclic_automaton
from .congruence import RelationSet

CyclicIndex = int


def _check(g: int) -> int:
    if g < 0:
        raise ValueError(f"cyclic index must be non-negative, got {g}")
    return g


def divides(d: int, n: int) -> bool:
    if d == 0:
        return n == 0
    return n % d == 0


def closure_unary(rel: RelationSet) -> CyclicIndex:
    """Index of the automaton whose congruence is the closure of ``rel``.

    This is the gcd of ``|n - m|`` over all pairs; an empty or purely
    reflexive relation closes to [0].
    """
    if not rel.is_unary:
        raise AlphabetError(f"unary alphabet expected, got {list(rel.alphabet)}")
    return reduce(math.gcd, (abs(n - m) for n, m in rel.lengths()), 0)


def accepts(g: CyclicIndex, k: int) -> bool:
    """Whether [g] accepts ``a^k`` (state 0 is accepting)."""
    _check(g)
    if k < 0:
        raise ValueError("word length must be non-negative")
    return divides(g, k)


def le(a: CyclicIndex, b: CyclicIndex) -> bool:
    """[a] <= [b]: the congruence of [a] is contained in that of [b]."""
    return divides(_check(b), _check(a))


def join(a: CyclicIndex, b: CyclicIndex) -> CyclicIndex:
    return math.gcd(_check(a), _check(b))


def meet(a: CyclicIndex, b: CyclicIndex) -> CyclicIndex:
    return math.lcm(_check(a), _check(b))


def sup_set(items: Iterable[CyclicIndex]) -> CyclicIndex:
    return reduce(join, items, 0)


def inf_set(items: Iterable[CyclicIndex]) -> CyclicIndex:
    return reduce(meet, items, 1)


def compose_sup(r1: RelationSet, r2: RelationSet) -> RelationSet:
    """Composite fragment: union of the pair sets.

    Its closure is the join of the two closures.
    """
    return r1.union(r2)


def compose_inf(r1: RelationSet, r2: RelationSet) -> RelationSet:
    """Composite cofragment: a defining relation of the meet of both closures."""
    if r1.alphabet != r2.alphabet:
        raise AlphabetError(f"alphabets differ: {list(r1.alphabet)} vs {list(r2.alphabet)}")
    g = meet(closure_unary(r1), closure_unary(r2))
    return RelationSet.unary([(g, 0)], r1.alphabet[0])


def defining_relation(g: CyclicIndex) -> RelationSet:
    """``{(a^g, e)}``, whose closure is [g]; for g = 0 this is the identity."""
    return RelationSet.unary([(_check(g), 0)])


def automaton(g: CyclicIndex) -> Automaton:
    """Materialise [g]; refuses the infinite chain [0]."""
    return make_cyclic_automaton(_check(g))


def describe(g: CyclicIndex) -> str:
    return "[0] (infinite chain)" if g == 0 else f"[{g}]"
