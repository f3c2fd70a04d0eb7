"""Run every named verification and write a JSON report.

    python3 scripts/run_suite.py [--out report.json]
"""
import argparse
import json
import sys

from dialg import suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    reports = suite.run_all()
    for r in reports:
        print(f"{'PASS' if r.verdict else 'FAIL'} {r.name:28s} {r.elapsed_ms:8.1f} ms  {r.summary}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump({"schema": 1, "reports": [r.to_json() for r in reports]}, fh, indent=1, ensure_ascii=False)
    return 0 if all(r.verdict for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
