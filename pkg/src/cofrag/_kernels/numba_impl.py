"""Numba-compiled kernels.

Every function here mirrors one in ``numpy_impl``; the public wrappers at the
bottom coerce inputs so both backends accept the same arguments.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True)
def _gcd_outer(x, y):
    out = np.empty((x.size, y.size), dtype=np.int64)
    for i in range(x.size):
        for j in range(y.size):
            out[i, j] = _gcd(x[i], y[j])
    return out


@njit(cache=True)
def _lcm_outer(x, y):
    out = np.empty((x.size, y.size), dtype=np.int64)
    for i in range(x.size):
        for j in range(y.size):
            a, b = x[i], y[j]
            if a == 0 or b == 0:
                out[i, j] = 0
            else:
                out[i, j] = a // _gcd(a, b) * b
    return out


@njit(cache=True)
def _divisor_mask(values, n):
    out = np.empty(values.size, dtype=np.bool_)
    for i in range(values.size):
        v = values[i]
        out[i] = (n == 0) if v == 0 else (n % v == 0)
    return out


@njit(cache=True)
def _multiple_mask(d, values):
    out = np.empty(values.size, dtype=np.bool_)
    for i in range(values.size):
        out[i] = (values[i] == 0) if d == 0 else (values[i] % d == 0)
    return out


@njit(cache=True)
def _hom_map(ta, tb):
    n, k = ta.shape
    mapping = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    mapping[0] = 0
    queue[0] = 0
    head, tail = 0, 1
    while head < tail:
        p = queue[head]
        head += 1
        q = mapping[p]
        for a in range(k):
            p2 = ta[p, a]
            q2 = tb[q, a]
            if mapping[p2] == -1:
                mapping[p2] = q2
                queue[tail] = p2
                tail += 1
            elif mapping[p2] != q2:
                return False, mapping
    return True, mapping


@njit(cache=True)
def _saturate(child, init, unary_diff):
    n, k = child.shape
    rel = np.zeros((n, n), dtype=np.bool_)
    # each pair is pushed at most once
    stack = np.empty((n * n, 2), dtype=np.int64)
    top = 0
    for i in range(n):
        rel[i, i] = True
        stack[top, 0] = i
        stack[top, 1] = i
        top += 1
    for r in range(init.shape[0]):
        i, j = init[r, 0], init[r, 1]
        if not rel[i, j]:
            rel[i, j] = True
            stack[top, 0] = i
            stack[top, 1] = j
            top += 1
    while top > 0:
        top -= 1
        i = stack[top, 0]
        j = stack[top, 1]
        # symmetry
        if not rel[j, i]:
            rel[j, i] = True
            stack[top, 0] = j
            stack[top, 1] = i
            top += 1
        # transitivity on both sides
        for m in range(n):
            if rel[j, m] and not rel[i, m]:
                rel[i, m] = True
                stack[top, 0] = i
                stack[top, 1] = m
                top += 1
            if rel[m, i] and not rel[m, j]:
                rel[m, j] = True
                stack[top, 0] = m
                stack[top, 1] = j
                top += 1
        # right extension
        for a in range(k):
            ci = child[i, a]
            cj = child[j, a]
            if ci >= 0 and cj >= 0 and not rel[ci, cj]:
                rel[ci, cj] = True
                stack[top, 0] = ci
                stack[top, 1] = cj
                top += 1
        if unary_diff:
            d = i - j if i >= j else j - i
            if not rel[d, 0]:
                rel[d, 0] = True
                stack[top, 0] = d
                stack[top, 1] = 0
                top += 1
    return rel


def _i64(a):
    return np.ascontiguousarray(a, dtype=np.int64)


def gcd_outer(x, y):
    return _gcd_outer(_i64(x).ravel(), _i64(y).ravel())


def lcm_outer(x, y):
    return _lcm_outer(_i64(x).ravel(), _i64(y).ravel())


def divisor_mask(values, n):
    values = _i64(values)
    return _divisor_mask(values.ravel(), np.int64(n)).reshape(values.shape)


def multiple_mask(d, values):
    values = _i64(values)
    return _multiple_mask(np.int64(d), values.ravel()).reshape(values.shape)


def hom_map(ta, tb):
    ok, mapping = _hom_map(_i64(ta), _i64(tb))
    return bool(ok), mapping


def saturate(child, init, unary_diff):
    return _saturate(_i64(child), _i64(init).reshape(-1, 2), bool(unary_diff))
