#!/usr/bin/env python3
"""Run the bundled golden corpus and print the pass/fail matrix.

Equivalent to `nonproper examples` but with per-check detail lines.
"""

import sys
import time

from nonproper.corpus import run_corpus


def main():
    names = sys.argv[1].split(",") if len(sys.argv) > 1 else None
    t0 = time.perf_counter()
    failures = 0
    for entry, checks in run_corpus(names):
        ok = all(c.ok for c in checks)
        failures += 0 if ok else 1
        print(f"{entry.name:30s} {'PASS' if ok else 'FAIL'}  ({len(checks)} checks)")
        for c in checks:
            mark = "ok " if c.ok else "!! "
            detail = f"  {c.detail}" if c.detail and not c.ok else ""
            print(f"    {mark}{c.name}{detail}")
    print(f"\n{failures} failing entries, {time.perf_counter() - t0:.2f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
