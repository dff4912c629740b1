"""Recompute every built-in algebra, write the structured reports and diff them against the reference data.

    python3 scripts/run_catalog.py [--out DIR]
"""
import argparse
import pathlib
import sys
import time

from stringtau import build_hasse
from stringtau.catalog import NAMES, SLUGS, catalog_algebra, compare_with_golden, golden_results
from stringtau.report import build_report, to_dot, to_json


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=pathlib.Path, default=None, help="directory for .json and .dot reports")
    args = parser.parse_args()
    if args.out:
        args.out.mkdir(parents=True, exist_ok=True)
    failed = 0
    for name in NAMES:
        start = time.perf_counter()
        algebra, golden = catalog_algebra(name), golden_results(name)
        poset = build_hasse(algebra)
        report = build_report(algebra, poset, golden.names_by_g())
        diff = compare_with_golden(algebra, report, golden)
        failed += bool(diff)
        rigid = sum(not o.is_shifted for o in poset.objects)
        print(f"{name:<12} pairs {report['pairCount']:>3}  rigid strings {rigid:>3}  "
              f"edges {len(poset.edges):>3}  length {poset.max_len:>3}  "
              f"{'ok' if not diff else f'{len(diff)} differences'}  {time.perf_counter() - start:.2f}s")
        for line in diff:
            print("    " + line)
        if args.out:
            (args.out / f"{SLUGS[name]}.json").write_text(to_json(report), encoding="utf-8")
            (args.out / f"{SLUGS[name]}.dot").write_text(to_dot(report), encoding="utf-8")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
