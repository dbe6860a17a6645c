"""Classes of cyclic automata represented by (co)(counter)fragments.

For a unary relation with closure index ``g`` the four atoms are

* ``Fr``          -- automata [m] with m | g (the relation is a fragment),
* ``coFr``        -- automata [m] with g | m (a cofragment),
* ``contraFr``    -- complement of ``Fr``,
* ``cocontraFr``  -- complement of ``coFr``,

with the divisibility convention of :mod:`cofrag.cyclic`, so [0] lies in
every ``coFr`` and in ``Fr`` only for g = 0. Expressions combine atoms with
``&``, ``|`` and ``!``; complements are taken inside the whole class.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from functools import reduce
from pathlib import Path
from typing import Literal, Union

import numpy as np

from . import _kernels
from .congruence import RelationSet, RelationSyntaxError, parse_relations
from .cyclic import closure_unary, divides

KINDS = ("Fr", "coFr", "contraFr", "cocontraFr")
_ALIASES = {
    "Fr": "Fr",
    "coFr": "coFr",
    "co-Fr": "coFr",
    "contraFr": "contraFr",
    "contra-Fr": "contraFr",
    "cocontraFr": "cocontraFr",
    "co-contra-Fr": "cocontraFr",
}
_NEGATE = {"Fr": "contraFr", "contraFr": "Fr", "coFr": "cocontraFr", "cocontraFr": "coFr"}


class ExprSyntaxError(ValueError):
    def __init__(self, message, pos):
        self.pos = pos
        super().__init__(f"at position {pos}: {message}")


# -- expression tree ---------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    kind: str
    rel: RelationSet
    g: int = field(init=False)
    source: str = field(default="", compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown atom kind {self.kind!r}")
        object.__setattr__(self, "g", closure_unary(self.rel))

    @classmethod
    def of(cls, kind: str, g: int) -> Atom:
        """Atom over the defining relation ``g = 0``."""
        return cls(kind, RelationSet.unary([(g, 0)]), source=f"{g}=0")

    def negated(self) -> Atom:
        return Atom(_NEGATE[self.kind], self.rel, source=self.source)

    def __str__(self):
        src = self.source or "; ".join(f"{n}={m}" for n, m in self.rel.lengths())
        return f"{self.kind}({src})"


@dataclass(frozen=True)
class Not:
    arg: "Expr"

    def __str__(self):
        return f"!{_wrap(self.arg)}"


@dataclass(frozen=True)
class And:
    args: tuple

    def __str__(self):
        return " & ".join(_wrap(a) for a in self.args)


@dataclass(frozen=True)
class Or:
    args: tuple

    def __str__(self):
        return " | ".join(_wrap(a) for a in self.args)


Expr = Union[Atom, Not, And, Or]


def _wrap(e) -> str:
    return str(e) if isinstance(e, (Atom, Not)) else f"({e})"


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z][A-Za-z-]*)|(?P<op>[()&|!]))")


class _Parser:
    def __init__(self, text: str, base: Path | None):
        self.text = text
        self.pos = 0
        self.base = base

    def peek(self):
        m = _TOKEN.match(self.text, self.pos)
        if m is None:
            rest = self.text[self.pos:]
            if rest.strip():
                raise ExprSyntaxError(f"unexpected character {rest.strip()[0]!r}", self.pos + len(rest) - len(rest.lstrip()))
            return None, None, len(self.text)
        return m.group("name"), m.group("op"), m.end()

    def take(self, op):
        _, got, end = self.peek()
        if got != op:
            raise ExprSyntaxError(f"expected {op!r}", self._skip_ws())
        self.pos = end

    def _skip_ws(self):
        return len(self.text) - len(self.text[self.pos:].lstrip())

    def expr(self):
        args = [self.term()]
        while self.peek()[1] == "|":
            self.take("|")
            args.append(self.term())
        return args[0] if len(args) == 1 else Or(tuple(args))

    def term(self):
        args = [self.factor()]
        while self.peek()[1] == "&":
            self.take("&")
            args.append(self.factor())
        return args[0] if len(args) == 1 else And(tuple(args))

    def factor(self):
        name, op, end = self.peek()
        if op == "!":
            self.pos = end
            return Not(self.factor())
        if op == "(":
            self.pos = end
            inner = self.expr()
            self.take(")")
            return inner
        if name is not None:
            return self.atom(name, end)
        raise ExprSyntaxError("expected an atom, '!' or '('", self._skip_ws())

    def atom(self, name, end):
        start = self._skip_ws()
        if name not in _ALIASES:
            raise ExprSyntaxError(f"unknown atom {name!r}; expected one of {', '.join(KINDS)}", start)
        self.pos = end
        self.take("(")
        close = self.text.find(")", self.pos)
        if close < 0:
            raise ExprSyntaxError("unterminated atom, missing ')'", len(self.text))
        body = self.text[self.pos:close].strip()
        body_pos = self.pos
        self.pos = close + 1
        if body.startswith("@"):
            path = Path(body[1:].strip())
            if self.base is not None and not path.is_absolute():
                path = self.base / path
            try:
                rel = parse_relations(path.read_text())
            except OSError as exc:
                raise ExprSyntaxError(f"cannot read {path}: {exc.strerror}", body_pos) from None
        else:
            rel = parse_relations(body.replace(";", "\n"))
        if not rel.is_unary:
            raise ExprSyntaxError(f"atom {name} needs a unary relation", start)
        return Atom(_ALIASES[name], rel, source=body)


def parse_expr(text: str, base: Path | str | None = None) -> Expr:
    """Parse an expression such as ``coFr(1=0) & !Fr(6=0; 4=2)``.

    ``@path`` inside an atom reads a relation file, relative to ``base`` if
    given. Relation syntax errors inside atoms propagate as
    :class:`~cofrag.congruence.RelationSyntaxError`.
    """
    p = _Parser(text, Path(base) if base is not None else None)
    try:
        tree = p.expr()
    except RelationSyntaxError as exc:
        raise ExprSyntaxError(f"bad relation: {exc}", p.pos) from None
    name, op, _ = p.peek()
    if name is not None or op is not None:
        raise ExprSyntaxError("unexpected trailing input", p._skip_ws())
    return tree


# -- evaluation --------------------------------------------------------------


def member_mask(expr: Expr, values) -> np.ndarray:
    """Exact membership of [v] in the class for every v in ``values``."""
    values = np.asarray(values, dtype=np.int64)
    if isinstance(expr, Atom):
        if expr.kind in ("Fr", "contraFr"):
            mask = _kernels.divisor_mask(values, expr.g)
        else:
            mask = _kernels.multiple_mask(expr.g, values)
        return mask if expr.kind in ("Fr", "coFr") else ~mask
    if isinstance(expr, Not):
        return ~member_mask(expr.arg, values)
    if isinstance(expr, And):
        return reduce(np.logical_and, (member_mask(a, values) for a in expr.args))
    if isinstance(expr, Or):
        return reduce(np.logical_or, (member_mask(a, values) for a in expr.args))
    raise TypeError(f"not an expression: {expr!r}")


@dataclass(frozen=True, eq=False)
class ClassSet:
    """Members of a class among [0], ..., [bound].

    ``exact`` is set when the listed members are known to be the whole class.
    """

    bound: int
    members: np.ndarray
    exact: bool = False

    def indices(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.members)]

    def __contains__(self, m) -> bool:
        return 0 <= m <= self.bound and bool(self.members[m])

    def __len__(self):
        return int(self.members.sum())

    def __eq__(self, other):
        if not isinstance(other, ClassSet):
            return NotImplemented
        return (
            self.bound == other.bound
            and self.exact == other.exact
            and np.array_equal(self.members, other.members)
        )

    def to_dict(self) -> dict:
        return {"bound": self.bound, "members": self.indices(), "exact": self.exact}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_indices(cls, bound: int, indices, exact=False) -> ClassSet:
        members = np.zeros(bound + 1, dtype=bool)
        idx = np.asarray(list(indices), dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() > bound):
            raise ValueError("member index outside 0..bound")
        members[idx] = True
        return cls(bound, members, exact)

    @classmethod
    def from_dict(cls, d: dict) -> ClassSet:
        return cls.from_indices(int(d["bound"]), d["members"], bool(d["exact"]))

    @classmethod
    def from_json(cls, text: str) -> ClassSet:
        return cls.from_dict(json.loads(text))


def _universe(N: int) -> np.ndarray:
    if N < 0:
        raise ValueError("bound must be non-negative")
    return np.arange(N + 1, dtype=np.int64)


def atom_members(atom: Atom, N: int) -> ClassSet:
    return ClassSet(N, member_mask(atom, _universe(N)), exact=_finite_within(atom, N))


def eval_expr(expr: Expr, N: int) -> ClassSet:
    return ClassSet(N, member_mask(expr, _universe(N)), exact=_finite_within(expr, N))


# -- exact classification ----------------------------------------------------


def conjunctive_atoms(expr: Expr) -> list[Atom] | None:
    """Rewrite to a flat conjunction of atoms, or None if that is impossible.

    Negations are pushed inward; a negated atom becomes its dual kind.
    """

    def walk(e, neg):
        if isinstance(e, Atom):
            return [e.negated() if neg else e]
        if isinstance(e, Not):
            return walk(e.arg, not neg)
        if isinstance(e, (And, Or)):
            if isinstance(e, Or) != neg:
                if len(e.args) == 1:
                    return walk(e.args[0], neg)
                return None
            out = []
            for a in e.args:
                sub = walk(a, neg)
                if sub is None:
                    return None
                out.extend(sub)
            return out
        raise TypeError(f"not an expression: {e!r}")

    return walk(expr, False)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _holds(atom: Atom, m: int) -> bool:
    if atom.kind == "Fr":
        return divides(m, atom.g)
    if atom.kind == "coFr":
        return divides(atom.g, m)
    if atom.kind == "contraFr":
        return not divides(m, atom.g)
    return not divides(atom.g, m)


def exact_volume(atoms: list[Atom]) -> list[int] | None:
    """All members of a conjunction of atoms, or None if there are infinitely many.

    A positive ``Fr`` atom with g >= 1 confines members to divisors of g.
    Otherwise positive members are the multiples of L = lcm of the ``coFr``
    indices, minus finitely many divisors excluded by ``contraFr`` atoms, and
    minus everything if some ``cocontraFr`` index divides L (since then it
    divides every multiple). Multiples L*k with k = 1 mod every such index
    avoid all ``cocontraFr`` atoms, so in the remaining case the volume is
    infinite.
    """
    zero = [0] if all(_holds(a, 0) for a in atoms) else []
    bounds = [a.g for a in atoms if a.kind == "Fr" and a.g >= 1]
    if bounds:
        g = reduce(math.gcd, bounds)
        return zero + [d for d in _divisors(g) if all(_holds(a, d) for a in atoms)]
    L = reduce(math.lcm, (a.g for a in atoms if a.kind == "coFr"), 1)
    if L == 0:
        return zero
    if any(a.kind == "contraFr" and a.g == 0 for a in atoms):
        return zero
    if any(a.kind == "cocontraFr" and divides(a.g, L) for a in atoms):
        return zero
    return None


def _finite_within(expr: Expr, N: int) -> bool:
    atoms = conjunctive_atoms(expr)
    if atoms is None:
        return False
    vol = exact_volume(atoms)
    return vol is not None and all(m <= N for m in vol)


Kind = Literal["Contradictory", "Complete", "Ambiguous"]


@dataclass(frozen=True)
class Verdict:
    """Classification of a representation by the size of its volume.

    ``exactness`` is ``"exact"`` when decided over the whole class and
    ``"bounded"`` when only [0]..[N] were examined. ``examples`` lists
    members found within the bound (all of them for a finite exact volume);
    ``infinite`` is true only when the volume is known to be infinite.
    """

    kind: Kind
    exactness: Literal["exact", "bounded"]
    witness: int | None = None
    examples: tuple[int, ...] = ()
    infinite: bool = False

    def to_dict(self) -> dict:
        d = {"kind": self.kind}
        if self.kind == "Complete":
            d["witness"] = self.witness
        if self.kind == "Ambiguous":
            d["examples"] = list(self.examples)
            d["infinite"] = self.infinite
        d["exactness"] = self.exactness
        return d

    def __str__(self):
        if self.kind == "Complete":
            body = f"Complete([{self.witness}])"
        elif self.kind == "Ambiguous":
            tail = ", ..." if self.infinite else ""
            body = f"Ambiguous({{{', '.join(map(str, self.examples))}{tail}}})"
        else:
            body = "Contradictory"
        return f"{body} {self.exactness}"


def _verdict(members: list[int], exactness, infinite=False) -> Verdict:
    if infinite or len(members) > 1:
        return Verdict("Ambiguous", exactness, examples=tuple(members), infinite=infinite)
    if members:
        return Verdict("Complete", exactness, witness=members[0])
    return Verdict("Contradictory", exactness)


def classify(expr: Expr, N: int = 100) -> Verdict:
    """Contradictory / Complete / Ambiguous verdict for a representation."""
    atoms = conjunctive_atoms(expr)
    if atoms is not None:
        vol = exact_volume(atoms)
        if vol is not None:
            return _verdict(sorted(vol), "exact")
        return _verdict(eval_expr(expr, N).indices(), "exact", infinite=True)
    return _verdict(eval_expr(expr, N).indices(), "bounded")


# -- lattice closure ---------------------------------------------------------

_BLOCK = 1 << 22


def check_closure_property(expr: Expr, N: int, op: Literal["join", "meet"]) -> tuple[int, int] | None:
    """First member pair (a, b), a <= b <= N, whose join/meet leaves the class.

    Returns None when the members up to N are closed under ``op``. The
    result of gcd/lcm is tested with exact membership, even beyond N.
    """
    if N < 1:
        raise ValueError("bound must be at least 1")
    outer = {"join": _kernels.gcd_outer, "meet": _kernels.lcm_outer}[op]
    members = np.flatnonzero(member_mask(expr, _universe(N))).astype(np.int64)
    n = members.size
    rows = max(1, _BLOCK // max(n, 1))
    for start in range(0, n, rows):
        block = members[start:start + rows]
        vals = outer(block, members)
        bad = ~member_mask(expr, vals)
        bad &= members[None, :] >= block[:, None]
        hits = np.flatnonzero(bad)
        if hits.size:
            i, j = divmod(int(hits[0]), n)
            return int(block[i]), int(members[j])
    return None
