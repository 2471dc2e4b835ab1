#!/usr/bin/env python3
"""Sweep the magic-value probe over state bounds and seeds.

For each n_max in the range, draws random binary permutation automata and,
for those with asc >= 2, reports how the reverse asc values distribute; a
reverse asc of 1 anywhere would be a counterexample to the expected
spectrum. Draws are counted, not accepted samples, so small state bounds
(where asc >= 2 is rare or impossible) just produce fewer checked rows.
"""

import argparse
import random
import sys
from collections import Counter
from pathlib import Path

try:
    import permrev  # noqa: F401
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from permrev.minimize import asc
from permrev.reversal import reverse_dfa
from permrev.spectrum import DEFAULT_SEED, random_pfa


def sweep_once(n_max: int, draws: int, seed: int) -> tuple[int, Counter]:
    rng = random.Random(seed)
    histogram: Counter = Counter()
    checked = 0
    for _ in range(draws):
        pfa = random_pfa(rng, rng.randint(1, n_max))
        forward = asc(pfa)
        if forward < 2:
            continue
        checked += 1
        histogram[(forward, asc(reverse_dfa(pfa)))] += 1
    return checked, histogram


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-min", type=int, default=2)
    parser.add_argument("--n-max", type=int, default=6)
    parser.add_argument("--draws", type=int, default=2000)
    parser.add_argument("--seeds", type=int, nargs="+", default=[DEFAULT_SEED])
    args = parser.parse_args()

    hit_magic_one = False
    for n_max in range(args.n_min, args.n_max + 1):
        for seed in args.seeds:
            checked, histogram = sweep_once(n_max, args.draws, seed)
            reverse_values = Counter()
            for (_, reverse), count in histogram.items():
                reverse_values[reverse] += count
            line = " ".join(
                f"{value}:{count}" for value, count in sorted(reverse_values.items())
            )
            print(
                f"n_max={n_max} seed={seed} checked={checked} "
                f"reverse-asc histogram: {line or '(none)'}"
            )
            if reverse_values.get(1):
                hit_magic_one = True
                print("  !! reverse asc 1 observed — counterexample")
    print("overall:", "FAIL" if hit_magic_one else "PASS (no reverse asc 1)")
    return 2 if hit_magic_one else 0


if __name__ == "__main__":
    sys.exit(main())
