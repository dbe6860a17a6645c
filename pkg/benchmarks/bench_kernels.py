"""Time the numba kernels against the pure-numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Both backends are imported directly, so the COFRAG_NO_NUMBA flag is not
needed here. Results are checked for equality before timing.
"""

import argparse
import timeit

import numpy as np

from cofrag._kernels import numpy_impl
from cofrag.automata import make_cyclic_automaton
from cofrag.congruence import _word_table

try:
    from cofrag._kernels import numba_impl
except ImportError:  # numba not installed
    numba_impl = None


def cases():
    u = np.arange(2001, dtype=np.int64)
    yield "gcd_outer 2001x2001", "gcd_outer", (u, u)
    yield "lcm_outer 1000x1000", "lcm_outer", (u[:1000], u[:1000])
    vals = np.arange(10**6, dtype=np.int64)
    yield "divisor_mask 1e6", "divisor_mask", (vals, 720720)
    yield "multiple_mask 1e6", "multiple_mask", (12, vals)
    A, B = make_cyclic_automaton(997), make_cyclic_automaton(991)
    yield "hom_map [997]->[991]", "hom_map", (A.table, B.table)
    A, B = make_cyclic_automaton(1994), make_cyclic_automaton(997)
    yield "hom_map [1994]->[997]", "hom_map", (A.table, B.table)
    for alphabet, bound, pairs in ((("a",), 60, [("a" * 7, "a" * 3)]), (("a", "b"), 7, [("ab", ""), ("bbb", "b")])):
        words, index, child = _word_table(alphabet, bound)
        seeds = np.array([(index[u], index[v]) for u, v in pairs], dtype=np.int64)
        yield f"saturate {len(words)} words", "saturate", (child, seeds, len(alphabet) == 1)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = [("numpy", numpy_impl)] + ([("numba", numba_impl)] if numba_impl else [])
    print(f"{'kernel':28}" + "".join(f"{name:>12}" for name, _ in backends) + ("     speedup" if numba_impl else ""))
    for label, fn, argv in cases():
        results, times = [], []
        for _, mod in backends:
            f = getattr(mod, fn)
            results.append(f(*argv))  # also warms up the jit
            times.append(min(timeit.repeat(lambda: f(*argv), number=1, repeat=args.repeat)))
        for r in results[1:]:
            same = all(np.array_equal(x, y) for x, y in zip(r, results[0])) if isinstance(r, tuple) else np.array_equal(r, results[0])
            assert same, f"{label}: backends disagree"
        row = f"{label:28}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
        if numba_impl:
            row += f"{times[0] / times[1]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
