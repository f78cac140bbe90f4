"""
dump.py
-------
This script exports one built object as canonical JSON: sorted keys, a fixed
indent, golden numbers as [a, b] and rationals as "p/q". Two dumps of the same
object are byte-identical.

Objects:
- vertices: the 120 icosians in key order with their pair index.
- labels: the 25 cell duads and the 60 vertex-pair labels.
- array: g and the 5x5 array of 24-cells.
- lines: the 357 lines of the F4 geometry with type tags and certificates.
- planes: the 85 planes with their poles and compositions.
- lattice: the certified E8 basis and Gram matrix, plus the lattice L.

Usage:
- Print to stdout: `python dump.py labels`
- Write to a file: `python dump.py lines --out dumps/lines.json`
"""

from __future__ import annotations

import argparse
import sys

from dotenv import load_dotenv

from embed import e8_lattice, lattice_L
from mod2 import lines_json, planes_json
from polytopes import array_json, labels_json, vertices_json
from utils import Loader, color, dumps, setup_logging, write_json

load_dotenv()


def lattice_json() -> dict:
    return {"e8": e8_lattice().to_json(), "L": lattice_L().to_json()}


OBJECTS = {
    "vertices": vertices_json,
    "labels": labels_json,
    "array": array_json,
    "lines": lines_json,
    "planes": planes_json,
    "lattice": lattice_json,
}


def dump(name: str, out=None) -> str:
    """Build `name` and return its canonical text; also write it to `out` when given."""
    if name not in OBJECTS:
        raise KeyError(f"unknown object {name!r}; choose from {', '.join(OBJECTS)}")
    data = OBJECTS[name]()
    if out is not None:
        write_json(data, out)
    return dumps(data)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Dump a built object as canonical JSON.")
    parser.add_argument("object", choices=sorted(OBJECTS))
    parser.add_argument("--out", help="output path (default: stdout)")
    args = parser.parse_args(argv)
    setup_logging()

    try:
        if args.out is None:
            print(dump(args.object))
            return 0
        loader = Loader(f"Building {args.object}...", end=f"Wrote {args.out}.").start()
        try:
            dump(args.object, args.out)
        finally:
            loader.stop()
    except OSError as exc:
        print(color.RED + f"could not write {args.out}: {exc}" + color.END, file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
