"""Compare the string predicates with the rank oracle on every catalog algebra.

    python3 scripts/oracle_sweep.py [--max-len 12] [--literal-range]

``--literal-range`` drops index-0 coincidences from the rigidity test, which
shows the disagreements that motivate including them.
"""
import argparse
import sys
import time

from stringtau import RigidityConfig, oracle_cross_check
from stringtau.catalog import NAMES, catalog_algebra


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-len", type=int, default=12)
    parser.add_argument("--literal-range", action="store_true")
    args = parser.parse_args()
    config = RigidityConfig(include_index_zero=not args.literal_range)
    total = 0
    for name in NAMES:
        start = time.perf_counter()
        rep = oracle_cross_check(catalog_algebra(name), args.max_len, fields=(2, 3), config=config)
        total += len(rep.failures)
        print(f"{rep.summary()}  {time.perf_counter() - start:.1f}s")
        for line in rep.failures[:10]:
            print("    " + line)
    print(f"total discrepancies: {total}")
    return 1 if total else 0


if __name__ == "__main__":
    sys.exit(main())
