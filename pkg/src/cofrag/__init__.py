"""Synthesis of automata from defining relations and the algebra of
fragment / cofragment / counter-fragment classes over cyclic unary automata."""

from ._kernels import BACKEND
from .automata import (
    AlphabetError,
    Automaton,
    AutomatonError,
    PartialAutomaton,
    congruent,
    dumps,
    find_homomorphism,
    hom_exists,
    isomorphic,
    loads,
    make_cyclic_automaton,
    rho_subset,
    run,
    word,
)
from .classes import (
    Atom,
    ClassSet,
    ExprSyntaxError,
    Verdict,
    atom_members,
    check_closure_property,
    classify,
    eval_expr,
    parse_expr,
)
from .congruence import (
    DerivationSet,
    RelationSet,
    RelationSyntaxError,
    fold_closure,
    parse_relations,
    relations_hold,
    same_class,
    saturate_rules,
)
from .cyclic import (
    accepts,
    closure_unary,
    compose_inf,
    compose_sup,
    inf_set,
    join,
    le,
    meet,
    sup_set,
)

__version__ = "0.1.0"
