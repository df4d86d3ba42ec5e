"""Persistent JSON-lines cache for kernel coefficients.

File layout: a header line {"schema_version": 1} followed by one entry per
line: {"key": [kind, K, ell, D, char_label, n], "value": <Cyclotomic JSON>}.
Corrupt lines are skipped with a warning on stderr and the value is
recomputed.  Rationals are serialized as "p/q" strings, never floats.
"""

import json
import os
import sys

from .exact import Cyclotomic

SCHEMA_VERSION = 1
ENV_CACHE_PATH = "EISTRACE_CACHE"


def default_cache_path():
    return os.environ.get(ENV_CACHE_PATH)


class CoefficientCache:
    """Append-only coefficient store keyed by (kind, K, ell, D, char, n)."""

    def __init__(self, path):
        self.path = path
        self.entries = {}
        self._load()

    def _load(self):
        if not os.path.exists(self.path):
            with open(self.path, "w") as fh:
                fh.write(json.dumps({"schema_version": SCHEMA_VERSION}) + "\n")
            return
        with open(self.path) as fh:
            for i, line in enumerate(fh):
                line = line.strip()
                if not line:
                    continue
                try:
                    obj = json.loads(line)
                    if i == 0 and "schema_version" in obj:
                        if obj["schema_version"] != SCHEMA_VERSION:
                            print(
                                f"cache {self.path}: schema version "
                                f"{obj['schema_version']} != {SCHEMA_VERSION}, ignoring file",
                                file=sys.stderr,
                            )
                            return
                        continue
                    key = tuple(obj["key"])
                    self.entries[key] = Cyclotomic.from_json(obj["value"])
                except (ValueError, KeyError, TypeError) as exc:
                    print(
                        f"cache {self.path}: skipping corrupt line {i + 1} ({exc})",
                        file=sys.stderr,
                    )

    def get_or_compute(self, key, compute):
        key = tuple(key)
        if key in self.entries:
            return self.entries[key]
        value = compute()
        self.entries[key] = value
        with open(self.path, "a") as fh:
            fh.write(json.dumps({"key": list(key), "value": value.to_json()}) + "\n")
        return value
