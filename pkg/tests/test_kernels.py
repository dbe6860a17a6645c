import math

import numpy as np
import pytest
from hypothesis import given
import hypothesis.strategies as st
from hypothesis.extra.numpy import arrays

from cofrag._kernels import numpy_impl

numba_impl = pytest.importorskip("cofrag._kernels.numba_impl")

BACKENDS = [numpy_impl, numba_impl]
ints = arrays(np.int64, st.integers(0, 30), elements=st.integers(0, 10_000))


@pytest.mark.parametrize("impl", BACKENDS, ids=["numpy", "numba"])
@given(x=ints, y=ints)
def test_gcd_lcm_outer_match_math(impl, x, y):
    g = impl.gcd_outer(x, y)
    m = impl.lcm_outer(x, y)
    assert g.shape == m.shape == (x.size, y.size)
    for i, a in enumerate(x.tolist()):
        for j, b in enumerate(y.tolist()):
            assert g[i, j] == math.gcd(a, b)
            assert m[i, j] == math.lcm(a, b)


@pytest.mark.parametrize("impl", BACKENDS, ids=["numpy", "numba"])
@given(values=ints, n=st.integers(0, 200))
def test_masks(impl, values, n):
    div = impl.divisor_mask(values, n)
    mul = impl.multiple_mask(n, values)
    for i, v in enumerate(values.tolist()):
        assert div[i] == (n == 0 if v == 0 else n % v == 0)
        assert mul[i] == (v == 0 if n == 0 else v % n == 0)


def test_masks_keep_shape():
    v = np.arange(12).reshape(3, 4)
    for impl in BACKENDS:
        assert impl.divisor_mask(v, 6).shape == (3, 4)
        assert impl.multiple_mask(3, v).shape == (3, 4)


@st.composite
def tables(draw):
    k = draw(st.integers(1, 3))
    na, nb = draw(st.integers(1, 12)), draw(st.integers(1, 12))
    ta = draw(arrays(np.int64, (na, k), elements=st.integers(0, na - 1)))
    tb = draw(arrays(np.int64, (nb, k), elements=st.integers(0, nb - 1)))
    return ta, tb


@given(tables())
def test_hom_map_backends_agree(pair):
    ta, tb = pair
    ok_np, map_np = numpy_impl.hom_map(ta, tb)
    ok_nb, map_nb = numba_impl.hom_map(ta, tb)
    assert ok_np == ok_nb
    if ok_np:
        assert np.array_equal(map_np, map_nb)


@st.composite
def saturation_inputs(draw):
    k = draw(st.integers(1, 2))
    bound = draw(st.integers(0, 5 if k == 2 else 12))
    n = sum(k**i for i in range(bound + 1))
    # shortlex children: word i of length L has children at offset(L+1)+k*rank+a
    child = np.full((n, k), -1, dtype=np.int64)
    start = 0
    for L in range(bound):
        size = k**L
        nxt = start + size
        for r in range(size):
            for a in range(k):
                child[start + r, a] = nxt + k * r + a
        start = nxt
    init = draw(arrays(np.int64, (draw(st.integers(0, 4)), 2), elements=st.integers(0, n - 1)))
    unary_diff = k == 1 and draw(st.booleans())
    return child, init, unary_diff


@given(saturation_inputs())
def test_saturate_backends_agree(case):
    child, init, unary_diff = case
    a = numpy_impl.saturate(child, init, unary_diff)
    b = numba_impl.saturate(child, init, unary_diff)
    assert np.array_equal(a, b)
    # result is an equivalence relation
    assert a.diagonal().all()
    assert np.array_equal(a, a.T)
    f = a.astype(np.int64)
    assert np.array_equal((f @ f) > 0, a)
