"""Deterministic connected initial automata without output.

Words are plain strings whose characters are the symbols of the alphabet;
``word(n)`` builds the unary word ``a^n``. State 0 is always the initial
state. Everything here is immutable once constructed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import _kernels

#: characters that have a meaning in the text formats and cannot be symbols
RESERVED = frozenset("e=#;()&|!@:,")

UNARY = ("a",)


class AlphabetError(ValueError):
    pass


class AutomatonError(ValueError):
    pass


def check_alphabet(symbols) -> tuple[str, ...]:
    """Validate and normalise an alphabet to a sorted tuple of symbols."""
    symbols = tuple(symbols)
    for s in symbols:
        if not isinstance(s, str) or len(s) != 1:
            raise AlphabetError(f"symbol {s!r} is not a single character")
        if s in RESERVED or s.isdigit() or s.isspace():
            raise AlphabetError(f"symbol {s!r} is reserved")
    if len(set(symbols)) != len(symbols):
        raise AlphabetError(f"duplicate symbols in {symbols!r}")
    if not symbols:
        raise AlphabetError("alphabet is empty")
    return tuple(sorted(symbols))


def check_word(w: str, alphabet) -> str:
    bad = set(w) - set(alphabet)
    if bad:
        raise AlphabetError(f"word {w!r} uses symbols {sorted(bad)} outside {list(alphabet)}")
    return w


def word(n: int, symbol: str = "a") -> str:
    """The unary word ``symbol^n``."""
    if n < 0:
        raise ValueError("word length must be non-negative")
    return symbol * n


@dataclass(frozen=True)
class PartialAutomaton:
    """Automaton whose transition map may be partial.

    ``delta[s][i]`` is the target of state ``s`` on ``alphabet[i]``, or -1 if
    undefined. All states must be reachable from state 0.
    """

    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    accepting: int | None = None
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        alphabet = check_alphabet(self.alphabet)
        if alphabet != tuple(self.alphabet):
            raise AlphabetError("alphabet must be given in sorted order")
        delta = tuple(tuple(int(t) for t in row) for row in self.delta)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(alphabet)})
        n = len(delta)
        if n == 0:
            raise AutomatonError("an automaton needs at least one state")
        for s, row in enumerate(delta):
            if len(row) != len(alphabet):
                raise AutomatonError(f"state {s} has {len(row)} transitions, expected {len(alphabet)}")
            for t in row:
                if not -1 <= t < n:
                    raise AutomatonError(f"state {s} has a transition to unknown state {t}")
        if self.accepting is not None and not 0 <= self.accepting < n:
            raise AutomatonError(f"accepting state {self.accepting} out of range")
        if len(_reachable(delta)) != n:
            raise AutomatonError("automaton is not connected from its initial state")

    @property
    def state_count(self) -> int:
        return len(self.delta)

    @property
    def complete(self) -> bool:
        return all(t >= 0 for row in self.delta for t in row)

    @property
    def table(self) -> np.ndarray:
        t = np.array(self.delta, dtype=np.int64).reshape(self.state_count, len(self.alphabet))
        t.flags.writeable = False
        return t

    def step(self, state: int, symbol: str) -> int:
        try:
            return self.delta[state][self._index[symbol]]
        except KeyError:
            raise AlphabetError(f"symbol {symbol!r} not in alphabet {list(self.alphabet)}") from None

    def trace(self, w: str) -> tuple[int, str]:
        """Run ``w`` as far as transitions are defined.

        Returns the state reached and the unread suffix (empty when the whole
        word was consumed).
        """
        state = 0
        for pos, symbol in enumerate(w):
            nxt = self.step(state, symbol)
            if nxt < 0:
                check_word(w[pos:], self.alphabet)
                return state, w[pos:]
            state = nxt
        return state, ""

    def accepts(self, w: str) -> bool:
        if self.accepting is None:
            raise AutomatonError("automaton has no accepting state")
        state, rest = self.trace(w)
        return not rest and state == self.accepting


@dataclass(frozen=True)
class Automaton(PartialAutomaton):
    """Complete deterministic connected initial automaton."""

    def __post_init__(self):
        super().__post_init__()
        if not self.complete:
            raise AutomatonError("transition map is not total")


def _reachable(delta) -> list[int]:
    order = [0]
    seen = {0}
    queue = deque([0])
    while queue:
        s = queue.popleft()
        for t in delta[s]:
            if t >= 0 and t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def make_cyclic_automaton(g: int) -> Automaton:
    """The unary ``g``-state cycle ``[g]``; initial and accepting state 0."""
    if g < 1:
        raise ValueError("cyclic automaton needs g >= 1; [0] is infinite and only symbolic")
    return Automaton(UNARY, tuple(((i + 1) % g,) for i in range(g)), accepting=0)


def run(A: PartialAutomaton, w: str) -> int:
    """State reached from the initial state by ``w``."""
    state, rest = A.trace(w)
    if rest:
        raise AutomatonError(f"no transition from state {state} on {rest[0]!r}")
    return state


def congruent(A: PartialAutomaton, u: str, v: str) -> bool:
    """Whether ``(u, v)`` belongs to the right congruence of ``A``."""
    return run(A, u) == run(A, v)


def _same_alphabet(A, B):
    if A.alphabet != B.alphabet:
        raise AlphabetError(f"alphabets differ: {list(A.alphabet)} vs {list(B.alphabet)}")


def rho_subset(A: Automaton, B: Automaton) -> bool:
    """Whether the right congruence of ``A`` is contained in that of ``B``.

    Explores reachable state pairs (run(A, w), run(B, w)); containment fails
    iff some state of ``A`` gets paired with two different states of ``B``.
    """
    _same_alphabet(A, B)
    ok, _ = _kernels.hom_map(A.table, B.table)
    return ok


def find_homomorphism(A: Automaton, B: Automaton) -> dict[int, int] | None:
    """An initial-state-preserving, transition-preserving map from A to B, if any."""
    _same_alphabet(A, B)
    h = {0: 0}
    for p in _reachable(A.delta):
        for i in range(len(A.alphabet)):
            p2, q2 = A.delta[p][i], B.delta[h[p]][i]
            if h.setdefault(p2, q2) != q2:
                return None
    for p, q in h.items():
        if any(h[A.delta[p][i]] != B.delta[q][i] for i in range(len(A.alphabet))):
            return None
    return h


def hom_exists(A: Automaton, B: Automaton) -> bool:
    return find_homomorphism(A, B) is not None


def canonical_form(A: PartialAutomaton):
    """Renumber states in breadth-first order with the alphabet's symbol order."""
    order = _reachable(A.delta)
    rename = {s: i for i, s in enumerate(order)}
    rename[-1] = -1
    delta = tuple(tuple(rename[t] for t in A.delta[s]) for s in order)
    accepting = None if A.accepting is None else rename[A.accepting]
    return A.alphabet, delta, accepting


def canonicalize(A: PartialAutomaton) -> PartialAutomaton:
    alphabet, delta, accepting = canonical_form(A)
    cls = Automaton if A.complete else PartialAutomaton
    return cls(alphabet, delta, accepting)


def isomorphic(A: PartialAutomaton, B: PartialAutomaton) -> bool:
    """Isomorphism of transition structure (accepting states are ignored)."""
    return canonical_form(A)[:2] == canonical_form(B)[:2]


def relabel(A: PartialAutomaton, perm) -> PartialAutomaton:
    """Rename states by ``perm`` (``perm[0]`` must be 0) and return the copy."""
    perm = list(perm)
    if sorted(perm) != list(range(A.state_count)) or perm[0] != 0:
        raise ValueError("perm must be a permutation fixing 0")
    inv = {new: old for old, new in enumerate(perm)}
    delta = tuple(
        tuple(-1 if t < 0 else perm[t] for t in A.delta[inv[s]]) for s in range(A.state_count)
    )
    accepting = None if A.accepting is None else perm[A.accepting]
    return type(A)(A.alphabet, delta, accepting)


# -- text format -------------------------------------------------------------


def dumps(A: PartialAutomaton) -> str:
    lines = [f"states {A.state_count} alphabet {' '.join(A.alphabet)}"]
    for s, row in enumerate(A.delta):
        for symbol, t in zip(A.alphabet, row):
            if t >= 0:
                lines.append(f"{s} {symbol} {t}")
    if A.accepting is not None:
        lines.append(f"accept {A.accepting}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> PartialAutomaton:
    """Parse the text format written by :func:`dumps`.

    Returns an :class:`Automaton` when the transition map is total.
    """
    lines = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    lines = [(no, ln) for no, ln in enumerate(lines, 1) if ln]
    if not lines:
        raise AutomatonError("empty automaton description")
    no, head = lines[0]
    if len(head) < 4 or head[0] != "states" or head[2] != "alphabet":
        raise AutomatonError(f"line {no}: expected 'states K alphabet SYMBOLS'")
    try:
        k = int(head[1])
    except ValueError:
        raise AutomatonError(f"line {no}: bad state count {head[1]!r}") from None
    alphabet = check_alphabet(head[3:])
    index = {s: i for i, s in enumerate(alphabet)}
    delta = [[-1] * len(alphabet) for _ in range(k)]
    accepting = None
    for no, parts in lines[1:]:
        if parts[0] == "accept" and len(parts) == 2:
            accepting = int(parts[1])
            continue
        if len(parts) != 3 or parts[1] not in index:
            raise AutomatonError(f"line {no}: expected 'SRC SYMBOL DST'")
        try:
            src, dst = int(parts[0]), int(parts[2])
        except ValueError:
            raise AutomatonError(f"line {no}: state indices must be integers") from None
        if not (0 <= src < k and 0 <= dst < k):
            raise AutomatonError(f"line {no}: state index out of range")
        if delta[src][index[parts[1]]] not in (-1, dst):
            raise AutomatonError(f"line {no}: conflicting transition")
        delta[src][index[parts[1]]] = dst
    A = PartialAutomaton(alphabet, tuple(map(tuple, delta)), accepting)
    return Automaton(A.alphabet, A.delta, A.accepting) if A.complete else A
