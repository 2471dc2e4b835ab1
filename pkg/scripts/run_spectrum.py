#!/usr/bin/env python3
"""Run the full desk-scale verification: witness grid, trivial rows, probe.

Prints one line per grid row plus a probe summary and exits nonzero if any
check fails. Useful as a quick end-to-end health check of the toolkit.
"""

import argparse
import sys
from pathlib import Path

try:
    import permrev  # noqa: F401
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from permrev.spectrum import DEFAULT_SEED, magic_one_probe, spectrum_table
from permrev.textio import report_to_json


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m-max", type=int, default=5)
    parser.add_argument("--alpha-max", type=int, default=5)
    parser.add_argument("--probe-n-max", type=int, default=6)
    parser.add_argument("--probe-samples", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--json", type=Path, default=None,
                        help="also write the combined report as JSON")
    args = parser.parse_args()

    probe = magic_one_probe(
        args.probe_n_max, args.probe_samples, seed=args.seed,
        count_checked_only=True,
    )
    report = spectrum_table(args.m_max, args.alpha_max, probe=probe)

    for row in report.rows:
        pair = (
            "skipped"
            if row.asc_forward is None
            else f"({row.asc_forward},{row.asc_reverse})"
        )
        print(f"m={row.m:>2} alpha={row.alpha:>2}  asc={pair:<10} {row.verdict}")
    print(
        f"probe: n_max={probe.n_max} checked={probe.checked} "
        f"counterexamples={len(probe.counterexamples)}"
    )
    for note in report.notes:
        print(f"note: {note}")
    print("overall:", "PASS" if report.passed else "FAIL")

    if args.json is not None:
        args.json.write_text(report_to_json(report))
    return 0 if report.passed else 2


if __name__ == "__main__":
    sys.exit(main())
