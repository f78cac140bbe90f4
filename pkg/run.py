"""
run.py
------
This script coordinates the whole verification pipeline.

Workflow:
- Runs every check in verify.py and writes the report.
- Dumps every object (vertices, labels, array, lines, planes, lattice) as
  canonical JSON into $H4_DUMP_DIR (default `dumps`).

Usage:
- Run script directly to execute pipeline: `python run.py`
"""

import os
import sys
from pathlib import Path

from dotenv import load_dotenv

import dump
import verify
from utils import color, setup_logging

load_dotenv()


def main() -> int:
    setup_logging()
    report_path = os.getenv("H4_REPORT_PATH", "report.json")
    dump_dir = Path(os.getenv("H4_DUMP_DIR", "dumps"))

    print("Running every verification check...")
    try:
        reports = verify.run("*", report_path)
    except OSError as exc:
        print(color.RED + f"could not write {report_path}: {exc}" + color.END, file=sys.stderr)
        return 2
    print(verify.summarize(reports))
    failed = [r.id for r in reports if not r.passed]
    print(f"Report written to {report_path}.")

    print(f"Dumping canonical objects into {dump_dir}/...")
    try:
        for name in dump.OBJECTS:
            dump.dump(name, dump_dir / f"{name}.json")
            print(f"  {name}.json")
    except OSError as exc:
        print(color.RED + f"could not write dumps: {exc}" + color.END, file=sys.stderr)
        return 2

    if failed:
        print(color.RED + f"Failed checks: {', '.join(failed)}" + color.END)
        return 1
    print(color.GREEN + "All checks passed and all objects dumped." + color.END)
    return 0


if __name__ == "__main__":
    sys.exit(main())
