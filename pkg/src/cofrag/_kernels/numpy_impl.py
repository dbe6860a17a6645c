"""Pure-numpy kernels. Same signatures and results as the numba backend."""

import numpy as np


def gcd_outer(x, y):
    return np.gcd.outer(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64))


def lcm_outer(x, y):
    # np.lcm already gives lcm(0, n) == 0
    return np.lcm.outer(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64))


def divisor_mask(values, n):
    """``values[i] | n`` elementwise, with ``0 | n`` only for ``n == 0``."""
    values = np.asarray(values, dtype=np.int64)
    safe = np.where(values == 0, 1, values)
    return np.where(values == 0, n == 0, n % safe == 0)


def multiple_mask(d, values):
    """``d | values[i]`` elementwise."""
    values = np.asarray(values, dtype=np.int64)
    if d == 0:
        return values == 0
    return values % d == 0


def hom_map(ta, tb):
    """Follow reachable state pairs of two complete tables from (0, 0).

    Returns ``(ok, mapping)``; ``ok`` is False as soon as one state of the
    first table is paired with two different states of the second.
    """
    ta = np.asarray(ta, dtype=np.int64)
    tb = np.asarray(tb, dtype=np.int64)
    mapping = np.full(ta.shape[0], -1, dtype=np.int64)
    mapping[0] = 0
    frontier = np.array([0], dtype=np.int64)
    while frontier.size:
        a_next = ta[frontier].ravel()
        b_next = tb[mapping[frontier]].ravel()
        known = mapping[a_next]
        seen = known >= 0
        if np.any(known[seen] != b_next[seen]):
            return False, mapping
        a_new, b_new = a_next[~seen], b_next[~seen]
        if a_new.size == 0:
            break
        order = np.lexsort((b_new, a_new))
        a_new, b_new = a_new[order], b_new[order]
        first = np.ones(a_new.size, dtype=bool)
        first[1:] = a_new[1:] != a_new[:-1]
        # within one group every b must equal the group's first b
        group_b = b_new[first][np.cumsum(first) - 1]
        if np.any(group_b != b_new):
            return False, mapping
        mapping[a_new[first]] = b_new[first]
        frontier = a_new[first]
    return True, mapping


def saturate(child, init, unary_diff):
    """Least relation on word indices closed under the congruence rules.

    ``child[w, a]`` is the index of ``w`` extended by symbol ``a`` (or -1 if
    that word is past the length bound). ``init`` holds the seed pairs. With
    ``unary_diff`` the word index is the word length and ``(n, m)`` also
    yields ``(|n - m|, 0)``.
    """
    child = np.asarray(child, dtype=np.int64)
    n, k = child.shape
    rel = np.eye(n, dtype=bool)
    init = np.asarray(init, dtype=np.int64).reshape(-1, 2)
    rel[init[:, 0], init[:, 1]] = True
    rows = [np.nonzero(child[:, a] >= 0)[0] for a in range(k)]
    while True:
        before = rel.copy()
        rel |= rel.T
        f = rel.astype(np.float32)
        rel |= (f @ f) > 0
        for a in range(k):
            r = rows[a]
            c = child[r, a]
            rel[np.ix_(c, c)] |= rel[np.ix_(r, r)]
        if unary_diff:
            i, j = np.nonzero(rel)
            d = np.abs(i - j)
            rel[d, 0] = True
            rel[0, d] = True
        if np.array_equal(before, rel):
            return rel
