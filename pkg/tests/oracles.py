"""Brute-force oracles that avoid the code paths they check.

They simulate automata symbol by symbol on explicitly enumerated words and
never use the pair-exploration kernel, the folding engine or gcd arithmetic.
"""

import itertools
import math


def simulate(delta, alphabet, w):
    index = {s: i for i, s in enumerate(alphabet)}
    state = 0
    for c in w:
        state = delta[state][index[c]]
    return state


def all_words(alphabet, max_len):
    for n in range(max_len + 1):
        for t in itertools.product(alphabet, repeat=n):
            yield "".join(t)


def brute_rho_subset(A, B, max_len=None):
    """rho_A <= rho_B by checking every word pair up to ``max_len``.

    Default length bound is |A|*|B|. Pairs are checked through the A-state
    they reach: all words sharing an A-state must share one B-state, which
    is the same condition as testing every pair of them.
    """
    if max_len is None:
        max_len = A.state_count * B.state_count
    seen = {}
    for w in all_words(A.alphabet, max_len):
        a = simulate(A.delta, A.alphabet, w)
        b = simulate(B.delta, B.alphabet, w)
        if seen.setdefault(a, b) != b:
            return False
    return True


def cycle_delta(n):
    return tuple(((i + 1) % n,) for i in range(n))


def unary_rho_subset(m, g):
    """Whether the congruence of [m] is contained in that of [g], by enumeration.

    [0] is the infinite chain whose congruence is the identity; it is handled
    symbolically: identity <= anything, and a cycle's congruence relates
    a^0 and a^k, so it is never inside the identity.
    """
    if m == 0:
        return True
    if g == 0:
        return False
    L = 2 * (m * g // math.gcd(m, g))
    sm = [simulate(cycle_delta(m), "a", "a" * p) for p in range(L + 1)]
    sg = [simulate(cycle_delta(g), "a", "a" * p) for p in range(L + 1)]
    for p in range(L + 1):
        for q in range(L + 1):
            if sm[p] == sm[q] and sg[p] != sg[q]:
                return False
    return True


def brute_atom_member(kind, g, m):
    """Membership of [m] in an atom whose relation closes to [g], from the definitions."""
    if kind == "Fr":
        return unary_rho_subset(g, m)
    if kind == "coFr":
        return unary_rho_subset(m, g)
    if kind == "contraFr":
        return not unary_rho_subset(g, m)
    if kind == "cocontraFr":
        return not unary_rho_subset(m, g)
    raise ValueError(kind)
