"""Compare the compiled and pure-Python polynomial kernels.

    python3 benchmarks/bench_kernels.py [--degree 40] [--repeat 5]

Also times one end-to-end table build under each implementation, in a
fresh interpreter so that no cache is shared.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from crystal_sl2 import _pykernels as py

try:
    from crystal_sl2 import _ckernels as ck
except ImportError:
    ck = None


def random_poly(rng, degree, bound=1000):
    p = [rng.randint(-bound, bound) for _ in range(degree + 1)]
    p[-1] = p[-1] or 1
    return p


def cases(degree, seed=0):
    rng = random.Random(seed)
    a, b, c = (random_poly(rng, degree) for _ in range(3))
    ac, bc = py.mul(a, c), py.mul(b, c)
    return {
        "mul": lambda k: k.mul(a, b),
        "divexact": lambda k: k.divexact(ac, c),
        "gcd_poly": lambda k: k.gcd_poly(ac, bc),
        "add": lambda k: k.add(a, b),
    }


END_TO_END = ("import time; from crystal_sl2.qcg import cg_table; t = time.perf_counter(); "
              "cg_table('5/2', '2'); print(time.perf_counter() - t)")


def end_to_end(pure):
    env = dict(os.environ)
    if pure:
        env["CRYSTAL_SL2_PURE"] = "1"
    else:
        env.pop("CRYSTAL_SL2_PURE", None)
    out = subprocess.run([sys.executable, "-c", END_TO_END], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--degree", type=int, default=40)
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--number", type=int, default=200)
    args = p.parse_args(argv)

    if ck is None:
        print("compiled kernels not built; only the Python path is available")
    print(f"{'kernel':<10} {'python us':>10} {'cython us':>10} {'speedup':>8}")
    for name, fn in cases(args.degree).items():
        t_py = min(timeit.repeat(lambda: fn(py), number=args.number, repeat=args.repeat))
        line = f"{name:<10} {1e6 * t_py / args.number:>10.1f}"
        if ck is not None:
            assert fn(ck) == fn(py)
            t_c = min(timeit.repeat(lambda: fn(ck), number=args.number, repeat=args.repeat))
            line += f" {1e6 * t_c / args.number:>10.1f} {t_py / t_c:>7.1f}x"
        print(line)

    t_py = end_to_end(pure=True)
    print(f"\ncg_table(5/2, 2): python {t_py:.2f} s", end="")
    if ck is not None:
        t_c = end_to_end(pure=False)
        print(f", cython {t_c:.2f} s ({t_py / t_c:.1f}x)")
    else:
        print()


if __name__ == "__main__":
    main()
