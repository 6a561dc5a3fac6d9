#!/usr/bin/env python3
"""Scan random perturbations of the maximally mixed state and report how often
they are real- vs complex-entangled at each radius.

Usage: python3 scripts/near_mixed_scan.py [--samples N] [--seed N]
"""

import argparse

from rebits.cli import main as cli_main


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=200)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--epsilons", default="0.5,0.1,0.01,0.001")
    args = parser.parse_args()
    raise SystemExit(
        cli_main(
            [
                "scan",
                "--epsilons",
                args.epsilons,
                "--samples",
                str(args.samples),
                "--seed",
                str(args.seed),
            ]
        )
    )


if __name__ == "__main__":
    main()
