"""Time the compiled kernels against the pure-Python ones.

    python benchmarks/bench_kernels.py [--repeat N] [--seed S]

Every case runs on both backends; results must agree or the script exits 1.
"""

import argparse
from itertools import product
import random
import sys
import time

from finalg import kernels
from finalg.algebra import FinAlgebra, Signature, cyclic_group
from finalg.congruence import all_congruences, generated_congruence
from finalg.continuous import ContRelation, cont_compatible_op
from finalg.relations import BinaryRelation, FiniteOperation, compatible_op


def semilattice(n):
    # max, which has many congruences (every convex partition)
    return FinAlgebra.from_functions(f"Max{n}", Signature.of(j=2), n, {"j": max})


def random_unary(rng, n):
    return FinAlgebra("U", Signature.of(s=1, t=1), n,
                      tuple(FiniteOperation(n, 1, [rng.randrange(n) for _ in range(n)]) for _ in range(2)))


def cases(rng):
    n = 16
    eq = BinaryRelation.from_predicate(n, lambda x, y: x % 4 == y % 4)
    add = FiniteOperation.from_function(n, 3, lambda x, y, z: (x + y + z) % n)
    cont = ContRelation.of(6, 3, [t for t in product(range(6), repeat=3) if sum(t) % 6 == 0])
    op6 = FiniteOperation.from_function(6, 3, lambda x, y, z: (x + 2 * y + z) % 6)
    u9 = random_unary(rng, 9)
    return [
        ("all_congruences Z9", lambda: len(all_congruences(cyclic_group(9)))),
        ("all_congruences Max9", lambda: len(all_congruences(semilattice(9)))),
        ("all_congruences random unary n=9", lambda: len(all_congruences(u9))),
        ("generated_congruence Z60", lambda: generated_congruence(cyclic_group(60), [(0, 12)], max_size=60).blocks),
        ("compatible_op ternary n=16", lambda: compatible_op(add, eq)),
        ("cont_compatible_op 3x3 n=6", lambda: cont_compatible_op(op6, cont)),
    ]


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    backends = kernels.available()
    if "c" not in backends:
        print("compiled kernels not built; only the Python backend will be timed")
    prev = kernels.backend()
    rows, mismatch = [], False
    for name, fn in cases(random.Random(args.seed)):
        times, outs = {}, {}
        for b in backends:
            kernels.use(b)
            times[b], outs[b] = timed(fn, args.repeat)
        mismatch |= len({repr(o) for o in outs.values()}) > 1
        rows.append((name, times))
    kernels.use(prev)

    print(f"{'case':40} {'python':>10} {'c':>10} {'speedup':>8}")
    for name, t in rows:
        py, c = t["python"], t.get("c")
        cs = f"{c * 1e3:9.2f}ms" if c is not None else f"{'-':>10}"
        sp = f"{py / c:7.1f}x" if c else f"{'-':>8}"
        print(f"{name:40} {py * 1e3:9.2f}ms {cs} {sp}")
    if mismatch:
        print("backends disagree", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
