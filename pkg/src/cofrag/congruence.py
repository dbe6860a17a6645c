"""Defining relations, right-congruence closure by folding, and a rule-saturation oracle.

Relation text format, one relation per line (``;`` also separates)::

    # comment
    alphabet: a b
    ab = e
    6 = 0

A bare integer ``n`` is the unary word ``a^n`` and ``e`` is the empty word.
Without an ``alphabet:`` header the alphabet is ``{a}``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from . import _kernels
from .automata import (
    UNARY,
    AlphabetError,
    PartialAutomaton,
    check_alphabet,
    check_word,
    congruent,
)

RuleSet = Literal["four-rule", "five-rule-unary"]

#: the saturation oracle works on a dense pair matrix over all short words
MAX_SATURATION_WORDS = 4096


class RelationSyntaxError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class RelationSet:
    """A finite, deduplicated set of ordered word pairs over an alphabet."""

    pairs: frozenset = frozenset()
    alphabet: tuple[str, ...] = UNARY

    def __post_init__(self):
        alphabet = check_alphabet(self.alphabet)
        object.__setattr__(self, "alphabet", alphabet)
        pairs = frozenset((str(u), str(v)) for u, v in self.pairs)
        for u, v in pairs:
            check_word(u, alphabet)
            check_word(v, alphabet)
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def unary(cls, pairs, symbol="a"):
        """Build from pairs of word lengths, e.g. ``RelationSet.unary([(6, 0)])``."""
        return cls(frozenset((symbol * n, symbol * m) for n, m in pairs), (symbol,))

    @property
    def is_unary(self) -> bool:
        return len(self.alphabet) == 1

    def lengths(self) -> list[tuple[int, int]]:
        return sorted((len(u), len(v)) for u, v in self.pairs)

    def words(self) -> list[str]:
        return sorted({w for p in self.pairs for w in p}, key=lambda w: (len(w), w))

    def union(self, other: RelationSet) -> RelationSet:
        if self.alphabet != other.alphabet:
            raise AlphabetError(f"alphabets differ: {list(self.alphabet)} vs {list(other.alphabet)}")
        return RelationSet(self.pairs | other.pairs, self.alphabet)

    __or__ = union

    def __iter__(self):
        return iter(sorted(self.pairs, key=lambda p: (len(p[0]), p[0], len(p[1]), p[1])))

    def __len__(self):
        return len(self.pairs)

    def __str__(self):
        return format_relations(self)


def _format_word(w: str, alphabet) -> str:
    if w == "":
        return "0" if len(alphabet) == 1 else "e"
    if len(alphabet) == 1 and alphabet[0] == "a":
        return str(len(w))
    return w


def format_relations(rel: RelationSet) -> str:
    lines = []
    if rel.alphabet != UNARY:
        lines.append(f"alphabet: {' '.join(rel.alphabet)}")
    for u, v in rel:
        lines.append(f"{_format_word(u, rel.alphabet)} = {_format_word(v, rel.alphabet)}")
    return "\n".join(lines) + ("\n" if lines else "")


def _parse_side(token: str, alphabet, line) -> str:
    if not token:
        raise RelationSyntaxError("missing word", line)
    if token.isdigit():
        if "a" not in alphabet:
            raise RelationSyntaxError(f"unary shorthand {token} needs symbol 'a' in the alphabet", line)
        return "a" * int(token)
    if token == "e":
        return ""
    if any(c.isspace() for c in token):
        raise RelationSyntaxError(f"unexpected whitespace in word {token!r}", line)
    try:
        return check_word(token, alphabet)
    except AlphabetError as exc:
        raise RelationSyntaxError(str(exc), line) from None


def parse_relations(text: str, alphabet=None) -> RelationSet:
    """Parse relation text into a :class:`RelationSet`."""
    alphabet = UNARY if alphabet is None else check_alphabet(alphabet)
    pairs = set()
    seen_relation = False
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if body.startswith("alphabet"):
            head, sep, rest = body.partition(":")
            if head.strip() != "alphabet" or not sep:
                raise RelationSyntaxError("expected 'alphabet: SYMBOLS'", no)
            if seen_relation:
                raise RelationSyntaxError("alphabet header must precede the relations", no)
            try:
                alphabet = check_alphabet(c for c in rest if not c.isspace() and c != ",")
            except AlphabetError as exc:
                raise RelationSyntaxError(str(exc), no) from None
            continue
        for item in body.split(";"):
            item = item.strip()
            if not item:
                continue
            if item.count("=") != 1:
                raise RelationSyntaxError(f"expected 'LHS = RHS', got {item!r}", no)
            lhs, rhs = (s.strip() for s in item.split("="))
            pairs.add((_parse_side(lhs, alphabet, no), _parse_side(rhs, alphabet, no)))
            seen_relation = True
    return RelationSet(frozenset(pairs), alphabet)


# -- folding -----------------------------------------------------------------


class _Folder:
    """Prefix tree of the relation's words, quotiented with union-find."""

    def __init__(self, alphabet):
        self.alphabet = alphabet
        self.children = [{}]  # per tree node; for roots, the class's children
        self.parent = [0]
        self.size = [1]

    def insert(self, w: str) -> int:
        node = 0
        for symbol in w:
            nxt = self.children[node].get(symbol)
            if nxt is None:
                nxt = len(self.parent)
                self.children[node][symbol] = nxt
                self.children.append({})
                self.parent.append(nxt)
                self.size.append(1)
            node = nxt
        return node

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def merge(self, x: int, y: int):
        work = [(x, y)]
        while work:
            a, b = (self.find(n) for n in work.pop())
            if a == b:
                continue
            if self.size[a] < self.size[b]:
                a, b = b, a
            self.parent[b] = a
            self.size[a] += self.size[b]
            kids = self.children[a]
            for symbol, node in self.children[b].items():
                if symbol in kids:
                    work.append((kids[symbol], node))
                else:
                    kids[symbol] = node

    def quotient(self) -> PartialAutomaton:
        start = self.find(0)
        number = {start: 0}
        order = [start]
        for cls in order:
            for symbol in self.alphabet:
                node = self.children[cls].get(symbol)
                if node is not None:
                    c = self.find(node)
                    if c not in number:
                        number[c] = len(order)
                        order.append(c)
        delta = []
        for cls in order:
            kids = self.children[cls]
            delta.append(
                tuple(number[self.find(kids[s])] if s in kids else -1 for s in self.alphabet)
            )
        return PartialAutomaton(self.alphabet, tuple(delta))


def fold_closure(rel: RelationSet) -> PartialAutomaton:
    """Quotient of the prefix tree of ``rel`` by its right-congruence closure.

    States are numbered breadth-first from the class of the empty word.
    The result is partial in general; two words are related by the closure
    iff :meth:`PartialAutomaton.trace` gives them the same state and suffix.
    """
    folder = _Folder(rel.alphabet)
    ends = [(folder.insert(u), folder.insert(v)) for u, v in rel]
    for x, y in ends:
        folder.merge(x, y)
    return folder.quotient()


def same_class(quotient: PartialAutomaton, u: str, v: str) -> bool:
    """Whether ``u`` and ``v`` are related by the closure ``quotient`` encodes."""
    return quotient.trace(u) == quotient.trace(v)


# -- saturation oracle -------------------------------------------------------


def words_upto(alphabet, bound: int) -> list[str]:
    """All words of length <= bound in shortlex order."""
    out = []
    for n in range(bound + 1):
        out.extend("".join(t) for t in itertools.product(alphabet, repeat=n))
    return out


@functools.lru_cache(maxsize=32)
def _word_table(alphabet, bound):
    words = tuple(words_upto(alphabet, bound))
    index = {w: i for i, w in enumerate(words)}
    child = np.full((len(words), len(alphabet)), -1, dtype=np.int64)
    for w, i in index.items():
        if len(w) < bound:
            for a, s in enumerate(alphabet):
                child[i, a] = index[w + s]
    child.flags.writeable = False
    return words, index, child


@dataclass(frozen=True)
class DerivationSet:
    """Pairs derived by rule saturation over the words of length <= bound."""

    alphabet: tuple[str, ...]
    bound: int
    words: tuple[str, ...]
    matrix: np.ndarray = field(repr=False, compare=False)

    def _index(self, w):
        if len(w) > self.bound:
            return None
        # shortlex rank of w
        k = len(self.alphabet)
        pos = {s: i for i, s in enumerate(self.alphabet)}
        offset = sum(k**i for i in range(len(w)))
        rank = 0
        for c in w:
            if c not in pos:
                return None
            rank = rank * k + pos[c]
        return offset + rank

    def __contains__(self, pair) -> bool:
        i, j = (self._index(w) for w in pair)
        return i is not None and j is not None and bool(self.matrix[i, j])

    def __len__(self):
        return int(self.matrix.sum())

    @property
    def pairs(self) -> frozenset:
        i, j = np.nonzero(self.matrix)
        return frozenset((self.words[a], self.words[b]) for a, b in zip(i, j))

    def period(self) -> int:
        """Least p > 0 with (a^p, e) derived, or 0 if there is none (unary only)."""
        if len(self.alphabet) != 1:
            raise AlphabetError("period is defined for unary derivations only")
        hits = np.nonzero(self.matrix[1:, 0])[0]
        return int(hits[0]) + 1 if hits.size else 0


def saturate_rules(rel: RelationSet, length_bound: int, rule_set: RuleSet = "four-rule") -> DerivationSet:
    """Least fixpoint of the closure rules on pairs of words of length <= bound.

    ``four-rule``: reflexivity, symmetry, transitivity and right extension
    ``u=v => ua=va``. ``five-rule-unary`` adds ``n=m => |n-m|=0`` and needs a
    unary alphabet. Seed pairs with a word longer than the bound are dropped.
    """
    if rule_set not in ("four-rule", "five-rule-unary"):
        raise ValueError(f"unknown rule set {rule_set!r}")
    unary_diff = rule_set == "five-rule-unary"
    if unary_diff and not rel.is_unary:
        raise AlphabetError("five-rule-unary saturation needs a unary alphabet")
    if length_bound < 0:
        raise ValueError("length bound must be non-negative")
    k = len(rel.alphabet)
    n_words = sum(k**i for i in range(length_bound + 1))
    if n_words > MAX_SATURATION_WORDS:
        raise ValueError(f"{n_words} words up to length {length_bound}; limit is {MAX_SATURATION_WORDS}")
    words, index, child = _word_table(rel.alphabet, length_bound)
    seeds = [(index[u], index[v]) for u, v in rel if u in index and v in index]
    matrix = _kernels.saturate(child, np.array(seeds, dtype=np.int64).reshape(-1, 2), unary_diff)
    matrix.flags.writeable = False
    return DerivationSet(rel.alphabet, length_bound, words, matrix)


def relations_hold(A: PartialAutomaton, rel: RelationSet) -> bool:
    """Whether every pair of ``rel`` is in the right congruence of ``A``."""
    if A.alphabet != rel.alphabet:
        raise AlphabetError(f"alphabets differ: {list(A.alphabet)} vs {list(rel.alphabet)}")
    return all(congruent(A, u, v) for u, v in rel.pairs)


def class_matrix(quotient: PartialAutomaton, words) -> np.ndarray:
    """Boolean matrix of :func:`same_class` over ``words``."""
    ids = {}
    keys = np.array([ids.setdefault(quotient.trace(w), len(ids)) for w in words], dtype=np.int64)
    return keys[:, None] == keys[None, :]
