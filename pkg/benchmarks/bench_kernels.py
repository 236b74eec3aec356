"""Compare the compiled subset-image kernel against the numpy fallback.

The workload is the hot loop of the package: running full witness
traces over reduction automata of increasing size.

    python3 benchmarks/bench_kernels.py
"""

import itertools
import time

from synchro import _fallback
from synchro.automaton import word_to_codes
from synchro.cnf import Literal, brute_force_sat, formula_from_literals, literal_from_kappa
from synchro.reduction import reduce_formula
from synchro.witness import build_witness

try:
    from synchro import _kernels
except ImportError:
    _kernels = None


def workloads():
    import random

    rng = random.Random(7)

    def rand_formula(n, m):
        clauses = []
        for _ in range(m):
            codes = rng.sample(range(2 * n), 3)
            clauses.append([literal_from_kappa(c, n) for c in codes])
        return formula_from_literals(n, clauses)

    def contradiction(n):
        clauses = []
        for signs in itertools.product((False, True), repeat=3):
            clauses.append([Literal(v + 1, s) for v, s in enumerate(signs)])
        return formula_from_literals(n, clauses)

    for label, formula in [
        ("n=2 m=1", rand_formula(2, 1)),
        ("n=4 m=3", rand_formula(4, 3)),
        ("n=4 m=8", contradiction(4)),
    ]:
        red = reduce_formula(formula)
        xi = brute_force_sat(formula)
        force = xi is None
        if force:
            xi = tuple(0 for _ in range(formula.n))
        word = build_witness(red, formula, xi, force=force)
        yield label, red, word


def bench(impl, red, word, repeats):
    da, db = red.dfa.arrays()
    n = red.dfa.state_count
    mask = ((1 << n) - 1).to_bytes((n + 7) // 8, "little")
    codes = word_to_codes(word)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        impl.trace_word(da, db, mask, codes)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    if _kernels is None:
        print("compiled kernel not available; benchmarking fallback only")
    print("%-10s %8s %6s %12s %12s %8s" % ("case", "states", "|w|", "numpy", "cython", "speedup"))
    for label, red, word in workloads():
        t_np = bench(_fallback, red, word, repeats=5)
        row = "%-10s %8d %6d %10.2fms" % (label, red.dfa.state_count, len(word), t_np * 1e3)
        if _kernels is not None:
            t_cy = bench(_kernels, red, word, repeats=5)
            row += " %10.2fms %7.1fx" % (t_cy * 1e3, t_np / t_cy)
        print(row)


if __name__ == "__main__":
    main()
