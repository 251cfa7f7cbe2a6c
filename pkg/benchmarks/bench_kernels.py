"""Compare the compiled enumeration kernels with the NumPy fallback.

    python benchmarks/bench_kernels.py [--repeat N] [--quick | --full]
"""

import argparse
import time

import numpy as np

from wpcount import _kernels, oracle

CASES = [
    ((1, 2, 3, 5), 9),
    ((1, 2, 3, 5), 27),
    ((2, 4, 6, 10), 49),
]
QUICK = CASES[:2]
FULL = CASES + [((1, 6, 14, 21), 64)]  # the NumPy fallback needs minutes here


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench(cases, repeat):
    backends = _kernels.backends()
    names = sorted(backends)
    rows = []
    for w, q in cases:
        F = oracle.field_for(q)
        exp, log = F.log_tables
        tasks = {
            "orbit reps": lambda k: k.orbit_rep_support_counts(q, list(w), exp, log, None),
            "fixed points": lambda k: k.fixed_counts(q, list(w), exp, log, None),
        }
        # a hypersurface cone mask x0^a + x1 = 0 with a chosen to make it homogeneous
        if w[1] % w[0] == 0:
            exps = np.array([[w[1] // w[0]] + [0] * (len(w) - 1), [0, 1] + [0] * (len(w) - 2)], dtype=np.int64)
            coefs = np.array([log[1], log[1]], dtype=np.int64)
            tasks["zero mask"] = lambda k: k.zero_mask(q, F.p, len(w), exp, log, exps, coefs)
        for label, task in tasks.items():
            t = {n: best_of(lambda: task(backends[n]), repeat) for n in names}
            rows.append((label, ",".join(map(str, w)), q, q ** len(w), t))
    return names, rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=1)
    size = ap.add_mutually_exclusive_group()
    size.add_argument("--quick", action="store_true")
    size.add_argument("--full", action="store_true")
    args = ap.parse_args()
    cases = QUICK if args.quick else FULL if args.full else CASES
    names, rows = bench(cases, args.repeat)
    head = f"{'kernel':<13}{'w':<12}{'q':>4}{'tuples':>11}" + "".join(f"{n + ' (s)':>14}" for n in names)
    if "cython" in names:
        head += f"{'speedup':>10}"
    print(head)
    for label, w, q, m, t in rows:
        line = f"{label:<13}{w:<12}{q:>4}{m:>11}" + "".join(f"{t[n]:>14.4f}" for n in names)
        if "cython" in names:
            line += f"{t['numpy'] / t['cython']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
