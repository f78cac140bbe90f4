"""
utils.py
--------
This file includes utility functions and classes used elsewhere in the project.

Includes:
- Loader: A class to display a spinner in the command line interface during long builds.
          Uses threading to manage the spinner without blocking main program execution.
- color: A class providing terminal color codes for the CLI summaries.
- setup_logging(): installs coloredlogs on the root logger.
- jsonable() / dumps() / write_json(): the canonical JSON encoding shared by
  the report and every dump (golden numbers as [a, b], rationals as "p/q",
  sets sorted, keys sorted, fixed indent).
"""

import json
import logging
import os
import sys
from enum import Enum
from fractions import Fraction
from itertools import cycle
from pathlib import Path
from shutil import get_terminal_size
from threading import Thread, Event

import coloredlogs

LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"


class Loader:
    def __init__(self, desc="Loading...", end="{task} complete.", timeout=0.1, stream=None):
        self._desc = desc
        self.end = end
        self.timeout = timeout
        self.stream = stream or sys.stdout

        self._thread = Thread(target=self._animate, daemon=True)
        self.steps = cycle(["⢿", "⣻", "⣽", "⣾", "⣷", "⣯", "⣟", "⡿"])
        self.stopped = Event()
        self.update_desc_event = Event()

    @property
    def desc(self):
        return self._desc

    @desc.setter
    def desc(self, value):
        self._desc = value
        self.update_desc_event.set()

    def _write(self, text):
        print(text, end="", flush=True, file=self.stream)

    def _clear(self):
        cols = get_terminal_size((80, 20)).columns
        self._write("\r" + " " * cols)

    def start(self):
        self._clear()
        self._thread.start()
        return self

    def _animate(self):
        while not self.stopped.wait(timeout=self.timeout):
            if self.update_desc_event.is_set():
                self.update_desc_event.clear()
                self._clear()
            self._write(f"\r{next(self.steps)} {self.desc}")

    def stop(self):
        self.stopped.set()
        self._thread.join(timeout=1)
        self._clear()
        self._write(f"\r{self.end.format(task=self.desc)}\n")

    def __enter__(self):
        return self.start()

    def __exit__(self, exc_type, exc_value, tb):
        self.stop()


# For fancy CLI formatting.
# Access with color.<attribute> + "string" + color.END
class color:
    GREEN = "\033[92m"
    RED = "\033[91m"
    BOLD = "\033[1m"
    END = "\033[0m"


def setup_logging(level=None):
    """Install coloredlogs on the root logger; level defaults to $H4_LOG_LEVEL or INFO."""
    level = level or os.getenv("H4_LOG_LEVEL", "INFO")
    coloredlogs.install(level=level.upper(), fmt=LOG_FORMAT, stream=sys.stderr)
    return logging.getLogger()


# Canonical JSON


def jsonable(obj):
    """Recursively convert built objects into plain JSON values with a fixed order."""
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json())
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, float):
        raise TypeError(f"refusing to encode float {obj!r}")
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        items = [jsonable(x) for x in obj]
        try:
            return sorted(items)
        except TypeError:
            return sorted(items, key=dumps)
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2, separators=(",", ": "), ensure_ascii=False)


def write_json(obj, path) -> Path:
    path = Path(path)
    if path.parent != Path("."):
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(obj) + "\n", encoding="utf-8")
    return path
