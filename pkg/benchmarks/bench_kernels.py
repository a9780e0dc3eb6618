"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json]
"""

from __future__ import annotations

import argparse
import json
import timeit

from cycpres.freeword import parse_word, shift
from cycpres.kernels import available_backends

HEAWOOD_WORD = parse_word("x0 x1 x10 x7 x8 x3", 14)
F_WORD = parse_word("x0 x2^-1 x4 x7 x2 x1 x7^-1 x8^-1 x1^-1 x10^-1 x8 x6^-1", 12)


def _cases(impl):
    relators = [shift(F_WORD, i).codes for i in range(12)]
    heawood = impl.star_edges([shift(HEAWOOD_WORD, i).codes for i in range(14)], 14)
    big = impl.star_edges([shift(F_WORD, i).codes for i in range(12)], 12)
    return {
        "enumerate n=6 k=6 canonical": lambda: impl.enumerate_prefix(6, 6, (0,), True, True),
        "enumerate n=14 k=5 positive": lambda: impl.enumerate_prefix(14, 5, (0,), True, True, True),
        "canonical_form x1000": lambda: [impl.canonical_form(F_WORD.codes, 12) for _ in range(1000)],
        "star_edges P_12(f)": lambda: impl.star_edges(relators, 12),
        "girth heawood x100": lambda: [impl.girth(28, heawood) for _ in range(100)],
        "eccentricities P_12(f) x100": lambda: [impl.eccentricities(24, big) for _ in range(100)],
    }


def run(repeat: int) -> list[dict]:
    backends = available_backends()
    rows = []
    for name in _cases(backends["python"]):
        row = {"case": name}
        for bname, impl in sorted(backends.items()):
            fn = _cases(impl)[name]
            row[bname] = min(timeit.repeat(fn, number=1, repeat=repeat))
        if "cython" in row:
            row["speedup"] = row["python"] / row["cython"]
        rows.append(row)
    return rows


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args(argv)
    rows = run(args.repeat)
    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    print(f"{'case':34} {'python':>10} {'cython':>10} {'speedup':>8}")
    for r in rows:
        cy = f"{r['cython'] * 1e3:9.2f}ms" if "cython" in r else "       n/a"
        sp = f"{r['speedup']:7.1f}x" if "speedup" in r else "     n/a"
        print(f"{r['case']:34} {r['python'] * 1e3:9.2f}ms {cy} {sp}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
